#include <algorithm>

#include "vsqe/frontend.hpp"

namespace vsqe {

namespace {

class SmtParser {
 public:
  Problem parse(std::string_view text, std::string name) {
    Problem problem;
    problem.name = std::move(name);
    problem.format = SourceFormat::SmtLib;

    std::vector<Formula> assertions;
    bool seen_check_sat = false;
    for (const auto& cmd : read_sexprs(text)) {
      if (!cmd.is_list() || cmd.head().empty()) cmd.fail("expected a command");
      const std::string_view h = cmd.head();
      if (h == "exit") break;
      if (seen_check_sat) cmd.fail("commands after check-sat are not supported");
      if (h == "set-logic" || h == "set-option") continue;
      if (h == "set-info") {
        if (cmd.items.size() == 3 && cmd.items[1].is_symbol(":status") && cmd.items[2].is_symbol()) {
          if (cmd.items[2].text == "sat") problem.expected = true;
          if (cmd.items[2].text == "unsat") problem.expected = false;
        }
        continue;
      }
      if (h == "declare-const") {
        if (cmd.items.size() != 3 || !cmd.items[1].is_symbol()) cmd.fail("malformed declare-const");
        declare(cmd.items[1], cmd.items[2]);
        continue;
      }
      if (h == "declare-fun") {
        if (cmd.items.size() != 4 || !cmd.items[1].is_symbol()) cmd.fail("malformed declare-fun");
        if (!cmd.items[2].is_list() || !cmd.items[2].items.empty())
          cmd.items[2].fail("only nullary functions (constants) are supported");
        declare(cmd.items[1], cmd.items[3]);
        continue;
      }
      if (h == "assert") {
        if (cmd.items.size() != 2) cmd.fail("assert expects one term");
        assertions.push_back(formula(cmd.items[1]));
        assertion_scope_.push_back(constants_.size());
        continue;
      }
      if (h == "check-sat") {
        seen_check_sat = true;
        continue;
      }
      cmd.fail("unsupported command '" + std::string(h) + "'");
    }

    // An assertion parsed with k constants in scope refers to constant i
    // (declaration order) as index k-1-i. Under the full closure of n
    // constants it must read n-1-i, i.e. shift every free index by n-k.
    const std::size_t n = constants_.size();
    for (std::size_t i = 0; i < assertions.size(); ++i)
      assertions[i] = lift_formula(assertions[i], 0, n - assertion_scope_[i]);

    Formula body = Formula::conj_all(assertions);
    for (std::size_t i = 0; i < n; ++i) body = Formula::exists(std::move(body));
    problem.formula = std::move(body);
    return problem;
  }

 private:
  static void require_real(const SExpr& sort) {
    if (!sort.is_symbol("Real"))
      sort.fail("unsupported sort" + (sort.is_symbol() ? " '" + sort.text + "'" : std::string()) +
                ": only Real is supported");
  }

  void declare(const SExpr& name, const SExpr& sort) {
    require_real(sort);
    if (std::find(constants_.begin(), constants_.end(), name.text) != constants_.end())
      name.fail("constant '" + name.text + "' declared twice");
    constants_.push_back(name.text);
  }

  // De Bruijn index of name: innermost binder first, then constants in
  // reverse declaration order.
  std::optional<Var> lookup(const std::string& name) const {
    for (std::size_t i = bound_.size(); i-- > 0;)
      if (bound_[i] == name) return bound_.size() - 1 - i;
    for (std::size_t i = constants_.size(); i-- > 0;)
      if (constants_[i] == name) return bound_.size() + (constants_.size() - 1 - i);
    return std::nullopt;
  }

  static bool is_numeral(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    bool dot = false;
    for (; i < s.size(); ++i) {
      if (s[i] == '.') {
        if (dot) return false;
        dot = true;
      } else if (s[i] < '0' || s[i] > '9') {
        return false;
      }
    }
    return s.back() != '.';
  }

  [[noreturn]] static void reject(const SExpr& e, std::string_view op) {
    if (op == "^")
      e.fail("power operator '^' is not supported; expand powers into multiplications");
    if (op == "/" || op == "div")
      e.fail("division is not supported; rewrite the problem without '" + std::string(op) + "'");
    e.fail("unsupported construct '" + std::string(op) + "'");
  }

  Polynomial term(const SExpr& e) {
    if (e.kind == SExpr::Kind::String) e.fail("string literals are not supported");
    if (e.is_symbol()) {
      if (is_numeral(e.text)) return Polynomial(parse_rational(e.text));
      if (auto v = lookup(e.text)) return Polynomial::var(*v);
      if (e.text == "true" || e.text == "false") e.fail("expected a Real term, got a Boolean");
      e.fail("unknown symbol '" + e.text + "'");
    }
    if (e.head().empty()) e.fail("expected a Real term");
    const std::string_view h = e.head();
    const std::size_t nargs = e.items.size() - 1;
    if (h == "+" || h == "*") {
      if (nargs == 0) e.fail("'" + std::string(h) + "' expects arguments");
      Polynomial acc = term(e.items[1]);
      for (std::size_t i = 2; i <= nargs; ++i) {
        if (h == "+")
          acc += term(e.items[i]);
        else
          acc *= term(e.items[i]);
      }
      return acc;
    }
    if (h == "-") {
      if (nargs == 0) e.fail("'-' expects arguments");
      if (nargs == 1) return -term(e.items[1]);
      Polynomial acc = term(e.items[1]);
      for (std::size_t i = 2; i <= nargs; ++i) acc -= term(e.items[i]);
      return acc;
    }
    reject(e, h);
  }

  // Chained comparison (op t1 ... tn) as the conjunction over neighbours.
  Formula comparison(const SExpr& e, std::string_view op) {
    if (e.items.size() < 3) e.fail("'" + std::string(op) + "' expects at least two arguments");
    std::vector<Polynomial> args;
    for (std::size_t i = 1; i < e.items.size(); ++i) args.push_back(term(e.items[i]));
    std::vector<Formula> parts;
    if (op == "distinct") {
      for (std::size_t i = 0; i < args.size(); ++i)
        for (std::size_t j = i + 1; j < args.size(); ++j)
          parts.push_back(Formula::atom(Atom::neq(args[i] - args[j])));
      return Formula::conj_all(parts);
    }
    for (std::size_t i = 0; i + 1 < args.size(); ++i) {
      const Polynomial& l = args[i];
      const Polynomial& r = args[i + 1];
      Atom at = op == "<"    ? Atom::less(l - r)
                : op == "<=" ? Atom::leq(l - r)
                : op == ">"  ? Atom::less(r - l)
                : op == ">=" ? Atom::leq(r - l)
                             : Atom::eq(l - r);
      parts.push_back(Formula::atom(std::move(at)));
    }
    return Formula::conj_all(parts);
  }

  Formula quantifier(const SExpr& e, bool existential) {
    if (e.items.size() != 3 || !e.items[1].is_list() || e.items[1].items.empty())
      e.fail("malformed quantifier");
    const auto& vars = e.items[1].items;
    for (const auto& binding : vars) {
      if (!binding.is_list() || binding.items.size() != 2 || !binding.items[0].is_symbol())
        binding.fail("expected (name Real)");
      require_real(binding.items[1]);
      bound_.push_back(binding.items[0].text);
    }
    Formula body = formula(e.items[2]);
    for (std::size_t i = 0; i < vars.size(); ++i) {
      bound_.pop_back();
      body = existential ? Formula::exists(std::move(body)) : Formula::forall(std::move(body));
    }
    return body;
  }

  Formula formula(const SExpr& e) {
    if (e.is_symbol()) {
      if (e.text == "true") return Formula::top();
      if (e.text == "false") return Formula::bottom();
      if (lookup(e.text)) e.fail("expected a Boolean term, got Real '" + e.text + "'");
      e.fail("unknown Boolean symbol '" + e.text + "'");
    }
    if (e.head().empty()) e.fail("expected a Boolean term");
    const std::string_view h = e.head();
    const std::size_t nargs = e.items.size() - 1;
    if (h == "and" || h == "or") {
      std::vector<Formula> parts;
      for (std::size_t i = 1; i <= nargs; ++i) parts.push_back(formula(e.items[i]));
      return h == "and" ? Formula::conj_all(parts) : Formula::disj_all(parts);
    }
    if (h == "not") {
      if (nargs != 1) e.fail("'not' expects one argument");
      return Formula::neg(formula(e.items[1]));
    }
    if (h == "=>") {
      if (nargs < 2) e.fail("'=>' expects at least two arguments");
      // Right associative: a => b => c is a => (b => c).
      Formula acc = formula(e.items[nargs]);
      for (std::size_t i = nargs - 1; i >= 1; --i)
        acc = Formula::disj(Formula::neg(formula(e.items[i])), std::move(acc));
      return acc;
    }
    if (h == "=" || h == "<" || h == "<=" || h == ">" || h == ">=" || h == "distinct")
      return comparison(e, h);
    if (h == "exists") return quantifier(e, true);
    if (h == "forall") return quantifier(e, false);
    reject(e, h);
  }

  std::vector<std::string> constants_;
  std::vector<std::string> bound_;
  std::vector<std::size_t> assertion_scope_;
};

}  // namespace

Problem parse_smtlib(std::string_view text, std::string name) {
  return SmtParser().parse(text, std::move(name));
}

}  // namespace vsqe
