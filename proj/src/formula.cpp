#include "vsqe/formula.hpp"

#include <stdexcept>

namespace vsqe {

const char* rel_name(Rel rel) {
  switch (rel) {
    case Rel::Less: return "Less";
    case Rel::Eq: return "Eq";
    case Rel::Leq: return "Leq";
    case Rel::Neq: return "Neq";
  }
  return "?";
}

Atom negate(const Atom& at) {
  switch (at.rel) {
    case Rel::Less: return Atom::leq(-at.poly);
    case Rel::Eq: return Atom::neq(at.poly);
    case Rel::Leq: return Atom::less(-at.poly);
    case Rel::Neq: return Atom::eq(at.poly);
  }
  throw std::logic_error("negate: bad relation");
}

Atom to_atom(const UniAtom& at, Var var) {
  Polynomial x = Polynomial::var(var);
  return {at.rel, Polynomial(at.a) * x * x + Polynomial(at.b) * x + Polynomial(at.c)};
}

bool rel_holds(Rel rel, int sign) {
  switch (rel) {
    case Rel::Less: return sign < 0;
    case Rel::Eq: return sign == 0;
    case Rel::Leq: return sign <= 0;
    case Rel::Neq: return sign != 0;
  }
  return false;
}

// ----------------------------------------------------------------- Formula

struct Formula::Node {
  Kind kind;
  Atom atom{Rel::Eq, {}};
  Formula lhs{nullptr};
  Formula rhs{nullptr};
};

Formula Formula::top() {
  static const auto node = std::make_shared<const Node>(Node{Kind::True});
  return Formula(node);
}

Formula Formula::bottom() {
  static const auto node = std::make_shared<const Node>(Node{Kind::False});
  return Formula(node);
}

Formula::Formula() : Formula(top()) {}

Formula Formula::atom(Atom at) {
  return Formula(std::make_shared<const Node>(Node{Kind::Atom, std::move(at)}));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::And, Atom{Rel::Eq, {}}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::Or, Atom{Rel::Eq, {}}, std::move(lhs), std::move(rhs)}));
}

Formula Formula::neg(Formula body) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::Neg, Atom{Rel::Eq, {}}, std::move(body)}));
}

Formula Formula::exists(Formula body) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::ExQ, Atom{Rel::Eq, {}}, std::move(body)}));
}

Formula Formula::forall(Formula body) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::AllQ, Atom{Rel::Eq, {}}, std::move(body)}));
}

Formula Formula::conj_all(std::span<const Formula> parts) {
  if (parts.empty()) return top();
  Formula out = parts.back();
  for (auto i = parts.size() - 1; i-- > 0;) out = conj(parts[i], out);
  return out;
}

Formula Formula::disj_all(std::span<const Formula> parts) {
  if (parts.empty()) return bottom();
  Formula out = parts.back();
  for (auto i = parts.size() - 1; i-- > 0;) out = disj(parts[i], out);
  return out;
}

Formula::Kind Formula::kind() const { return node_->kind; }

const Atom& Formula::atom() const {
  if (kind() != Kind::Atom) throw std::logic_error("Formula::atom on non-atom");
  return node_->atom;
}

const Formula& Formula::lhs() const {
  if (kind() != Kind::And && kind() != Kind::Or) throw std::logic_error("Formula::lhs");
  return node_->lhs;
}

const Formula& Formula::rhs() const {
  if (kind() != Kind::And && kind() != Kind::Or) throw std::logic_error("Formula::rhs");
  return node_->rhs;
}

const Formula& Formula::body() const {
  if (kind() != Kind::Neg && !is_quantifier()) throw std::logic_error("Formula::body");
  return node_->lhs;
}

bool operator==(const Formula& f, const Formula& g) {
  if (f.node_ == g.node_) return true;
  if (f.kind() != g.kind()) return false;
  switch (f.kind()) {
    case Formula::Kind::True:
    case Formula::Kind::False: return true;
    case Formula::Kind::Atom: return f.atom() == g.atom();
    case Formula::Kind::And:
    case Formula::Kind::Or: return f.lhs() == g.lhs() && f.rhs() == g.rhs();
    case Formula::Kind::Neg:
    case Formula::Kind::ExQ:
    case Formula::Kind::AllQ: return f.body() == g.body();
  }
  return false;
}

// --------------------------------------------------------------- semantics

bool aeval(const Atom& at, const Valuation& v) {
  return rel_holds(at.rel, sign(insertion(v, at.poly)));
}

bool eval_qf(const Formula& f, const Valuation& v) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return true;
    case K::False: return false;
    case K::Atom: return aeval(f.atom(), v);
    case K::And: return eval_qf(f.lhs(), v) && eval_qf(f.rhs(), v);
    case K::Or: return eval_qf(f.lhs(), v) || eval_qf(f.rhs(), v);
    case K::Neg: return !eval_qf(f.body(), v);
    case K::ExQ:
    case K::AllQ: throw std::invalid_argument("eval_qf: formula has a quantifier");
  }
  return false;
}

bool is_quantifier_free(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::And:
    case K::Or: return is_quantifier_free(f.lhs()) && is_quantifier_free(f.rhs());
    case K::Neg: return is_quantifier_free(f.body());
    case K::ExQ:
    case K::AllQ: return false;
    default: return true;
  }
}

namespace {

Formula nnf_impl(const Formula& f, bool negated) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return negated ? Formula::bottom() : f;
    case K::False: return negated ? Formula::top() : f;
    case K::Atom: return negated ? Formula::atom(negate(f.atom())) : f;
    case K::And: {
      auto l = nnf_impl(f.lhs(), negated);
      auto r = nnf_impl(f.rhs(), negated);
      return negated ? Formula::disj(l, r) : Formula::conj(l, r);
    }
    case K::Or: {
      auto l = nnf_impl(f.lhs(), negated);
      auto r = nnf_impl(f.rhs(), negated);
      return negated ? Formula::conj(l, r) : Formula::disj(l, r);
    }
    case K::Neg: return nnf_impl(f.body(), !negated);
    case K::ExQ: {
      auto b = nnf_impl(f.body(), negated);
      return negated ? Formula::forall(b) : Formula::exists(b);
    }
    case K::AllQ: {
      auto b = nnf_impl(f.body(), negated);
      return negated ? Formula::exists(b) : Formula::forall(b);
    }
  }
  return f;
}

Formula map_atoms_impl(const Formula& f, Var depth,
                       const std::function<Formula(const Atom&, Var)>& fn) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True:
    case K::False: return f;
    case K::Atom: return fn(f.atom(), depth);
    case K::And:
      return Formula::conj(map_atoms_impl(f.lhs(), depth, fn), map_atoms_impl(f.rhs(), depth, fn));
    case K::Or:
      return Formula::disj(map_atoms_impl(f.lhs(), depth, fn), map_atoms_impl(f.rhs(), depth, fn));
    case K::Neg: return Formula::neg(map_atoms_impl(f.body(), depth, fn));
    case K::ExQ: return Formula::exists(map_atoms_impl(f.body(), depth + 1, fn));
    case K::AllQ: return Formula::forall(map_atoms_impl(f.body(), depth + 1, fn));
  }
  return f;
}

void for_each_atom_impl(const Formula& f, Var depth,
                        const std::function<void(const Atom&, Var)>& fn) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::Atom: fn(f.atom(), depth); break;
    case K::And:
    case K::Or:
      for_each_atom_impl(f.lhs(), depth, fn);
      for_each_atom_impl(f.rhs(), depth, fn);
      break;
    case K::Neg: for_each_atom_impl(f.body(), depth, fn); break;
    case K::ExQ:
    case K::AllQ: for_each_atom_impl(f.body(), depth + 1, fn); break;
    default: break;
  }
}

}  // namespace

Formula nnf(const Formula& f) { return nnf_impl(f, false); }

Formula map_atoms(const Formula& f, const std::function<Formula(const Atom&, Var)>& fn) {
  return map_atoms_impl(f, 0, fn);
}

void for_each_atom(const Formula& f, const std::function<void(const Atom&, Var)>& fn) {
  for_each_atom_impl(f, 0, fn);
}

Formula rename_free_vars(const Formula& f, const std::function<Var(Var)>& rename) {
  return map_atoms(f, [&](const Atom& at, Var depth) {
    auto shifted = [&](Var v) { return v < depth ? v : rename(v - depth) + depth; };
    return Formula::atom({at.rel, rename_vars(at.poly, shifted)});
  });
}

Formula lift_formula(const Formula& f, Var d, Var a) {
  if (a == 0) return f;
  return map_atoms(f, [&](const Atom& at, Var depth) {
    return Formula::atom({at.rel, lift_poly(d + depth, a, at.poly)});
  });
}

Formula lower_formula(const Formula& f, Var d, Var a) {
  if (a == 0) return f;
  return map_atoms(f, [&](const Atom& at, Var depth) {
    return Formula::atom({at.rel, lower_poly(d + depth, a, at.poly)});
  });
}

bool mentions_var(const Formula& f, Var var) {
  bool found = false;
  for_each_atom(f, [&](const Atom& at, Var depth) {
    if (!found && at.poly.mentions(var + depth)) found = true;
  });
  return found;
}

std::size_t node_count(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::And:
    case K::Or: return 1 + node_count(f.lhs()) + node_count(f.rhs());
    case K::Neg:
    case K::ExQ:
    case K::AllQ: return 1 + node_count(f.body());
    default: return 1;
  }
}

std::size_t quantifier_count(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::And:
    case K::Or: return quantifier_count(f.lhs()) + quantifier_count(f.rhs());
    case K::Neg: return quantifier_count(f.body());
    case K::ExQ:
    case K::AllQ: return 1 + quantifier_count(f.body());
    default: return 0;
  }
}

std::string to_display_string(const Atom& at) {
  return std::string(rel_name(at.rel)) + " (" + to_display_string(at.poly) + ")";
}

std::string to_display_string(const Formula& f) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return "TrueF";
    case K::False: return "FalseF";
    case K::Atom: return "Atom (" + to_display_string(f.atom()) + ")";
    case K::And: return "And (" + to_display_string(f.lhs()) + ") (" + to_display_string(f.rhs()) + ")";
    case K::Or: return "Or (" + to_display_string(f.lhs()) + ") (" + to_display_string(f.rhs()) + ")";
    case K::Neg: return "Neg (" + to_display_string(f.body()) + ")";
    case K::ExQ: return "ExQ (" + to_display_string(f.body()) + ")";
    case K::AllQ: return "AllQ (" + to_display_string(f.body()) + ")";
  }
  return "?";
}

}  // namespace vsqe
