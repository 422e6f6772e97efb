#include <fstream>
#include <sstream>

#include "vsqe/frontend.hpp"

namespace vsqe {

namespace {

using K = Formula::Kind;

void expect_arity(const SExpr& e, std::size_t n) {
  if (e.items.size() != n + 1)
    e.fail("'" + std::string(e.head()) + "' expects " + std::to_string(n) + " argument(s)");
}

unsigned long parse_index(const SExpr& e) {
  if (!e.is_symbol() || e.text.empty() ||
      e.text.find_first_not_of("0123456789") != std::string::npos)
    e.fail("expected a non-negative integer, got '" + e.text + "'");
  try {
    return std::stoul(e.text);
  } catch (const std::out_of_range&) {
    e.fail("integer out of range: " + e.text);
  }
}

Polynomial parse_poly(const SExpr& e) {
  if (!e.is_list() || e.head().empty()) e.fail("expected a polynomial term");
  const std::string_view h = e.head();
  if (h == "Var") {
    expect_arity(e, 1);
    return Polynomial::var(parse_index(e.items[1]));
  }
  if (h == "Const") {
    expect_arity(e, 1);
    if (!e.items[1].is_symbol()) e.items[1].fail("expected a rational literal");
    try {
      return Polynomial(parse_rational(e.items[1].text));
    } catch (const std::invalid_argument&) {
      e.items[1].fail("malformed rational '" + e.items[1].text + "'");
    }
  }
  if (h == "^") {
    expect_arity(e, 2);
    return pow(parse_poly(e.items[1]), static_cast<unsigned>(parse_index(e.items[2])));
  }
  if (h == "+" || h == "*") {
    Polynomial acc = h == "+" ? Polynomial() : Polynomial(1);
    for (std::size_t i = 1; i < e.items.size(); ++i) {
      if (h == "+")
        acc += parse_poly(e.items[i]);
      else
        acc *= parse_poly(e.items[i]);
    }
    return acc;
  }
  if (h == "-") {
    if (e.items.size() < 2) e.fail("'-' expects at least one argument");
    if (e.items.size() == 2) return -parse_poly(e.items[1]);
    Polynomial acc = parse_poly(e.items[1]);
    for (std::size_t i = 2; i < e.items.size(); ++i) acc -= parse_poly(e.items[i]);
    return acc;
  }
  e.fail("unknown polynomial constructor '" + std::string(h) + "'");
}

Atom parse_atom(const SExpr& e) {
  static const std::pair<const char*, Rel> rels[] = {
      {"Less", Rel::Less}, {"Eq", Rel::Eq}, {"Leq", Rel::Leq}, {"Neq", Rel::Neq}};
  if (e.is_list())
    for (const auto& [name, rel] : rels)
      if (e.head() == name) {
        expect_arity(e, 1);
        return Atom{rel, parse_poly(e.items[1])};
      }
  e.fail("expected (Less p), (Eq p), (Leq p) or (Neq p)");
}

Formula parse_formula(const SExpr& e) {
  if (!e.is_list() || e.head().empty()) e.fail("expected a formula");
  const std::string_view h = e.head();
  if (h == "TrueF") return expect_arity(e, 0), Formula::top();
  if (h == "FalseF") return expect_arity(e, 0), Formula::bottom();
  if (h == "Atom") return expect_arity(e, 1), Formula::atom(parse_atom(e.items[1]));
  if (h == "And" || h == "Or") {
    expect_arity(e, 2);
    Formula l = parse_formula(e.items[1]);
    Formula r = parse_formula(e.items[2]);
    return h == "And" ? Formula::conj(std::move(l), std::move(r))
                      : Formula::disj(std::move(l), std::move(r));
  }
  if (h == "Neg") return expect_arity(e, 1), Formula::neg(parse_formula(e.items[1]));
  if (h == "ExQ") return expect_arity(e, 1), Formula::exists(parse_formula(e.items[1]));
  if (h == "AllQ") return expect_arity(e, 1), Formula::forall(parse_formula(e.items[1]));
  e.fail("unknown formula constructor '" + std::string(h) + "'");
}

std::optional<bool> parse_status(const SExpr& e) {
  if (e.items.size() != 3 || !e.items[1].is_symbol(":status") || !e.items[2].is_symbol())
    return std::nullopt;
  if (e.items[2].text == "sat") return true;
  if (e.items[2].text == "unsat") return false;
  return std::nullopt;
}

void print_monomial_term(std::ostringstream& out, const Monomial& m, const Rational& c) {
  std::vector<std::string> factors;
  if (c != 1 || m.is_one()) factors.push_back("(Const " + to_string(c) + ")");
  for (const auto& [v, e] : m.factors()) {
    std::string var = "(Var " + std::to_string(v) + ")";
    factors.push_back(e == 1 ? var : "(^ " + var + " " + std::to_string(e) + ")");
  }
  if (factors.size() == 1) {
    out << factors.front();
    return;
  }
  out << "(*";
  for (const auto& f : factors) out << ' ' << f;
  out << ')';
}

void print_formula(std::ostringstream& out, const Formula& f) {
  switch (f.kind()) {
    case K::True: out << "(TrueF)"; return;
    case K::False: out << "(FalseF)"; return;
    case K::Atom:
      out << "(Atom (" << rel_name(f.atom().rel) << ' ' << print_native(f.atom().poly) << "))";
      return;
    case K::And:
    case K::Or:
      out << (f.kind() == K::And ? "(And " : "(Or ");
      print_formula(out, f.lhs());
      out << ' ';
      print_formula(out, f.rhs());
      out << ')';
      return;
    case K::Neg:
    case K::ExQ:
    case K::AllQ:
      out << (f.kind() == K::Neg ? "(Neg " : f.kind() == K::ExQ ? "(ExQ " : "(AllQ ");
      print_formula(out, f.body());
      out << ')';
      return;
  }
}

}  // namespace

std::string print_native(const Polynomial& p) {
  std::ostringstream out;
  if (p.is_zero()) return "(Const 0)";
  if (p.size() > 1) out << "(+";
  for (const auto& [m, c] : p.terms()) {
    if (p.size() > 1) out << ' ';
    print_monomial_term(out, m, c);
  }
  if (p.size() > 1) out << ')';
  return out.str();
}

std::string print_native(const Formula& f) {
  std::ostringstream out;
  print_formula(out, f);
  return out.str();
}

Formula parse_native_formula(std::string_view text) {
  return parse_native(text).formula;
}

Problem parse_native(std::string_view text, std::string name) {
  Problem problem;
  problem.name = std::move(name);
  problem.format = SourceFormat::Native;
  const auto exprs = read_sexprs(text);
  std::optional<Formula> formula;
  for (const auto& e : exprs) {
    if (e.head() == "set-info") {
      if (auto st = parse_status(e)) problem.expected = st;
      continue;
    }
    if (formula) e.fail("more than one formula");
    formula = parse_formula(e);
  }
  if (!formula) throw ParseError("no formula found", 1, 1);
  problem.formula = *formula;
  return problem;
}

SourceFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".smt2" ? SourceFormat::SmtLib : SourceFormat::Native;
}

Problem load_problem(const std::filesystem::path& path, std::optional<SourceFormat> format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string name = path.stem().string();
  const SourceFormat fmt = format.value_or(format_for_path(path));
  return fmt == SourceFormat::SmtLib ? parse_smtlib(buf.str(), name) : parse_native(buf.str(), name);
}

}  // namespace vsqe
