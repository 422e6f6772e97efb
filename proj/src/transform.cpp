#include "vsqe/transform.hpp"

#include <utility>

namespace vsqe {

namespace {

using K = Formula::Kind;

void flatten(const Formula& f, K kind, std::vector<Formula>& out) {
  if (f.kind() == kind) {
    flatten(f.lhs(), kind, out);
    flatten(f.rhs(), kind, out);
  } else {
    out.push_back(f);
  }
}

struct Clause {
  std::vector<Atom> atoms;
  std::vector<Formula> ctx;
};

std::vector<Clause> dnf(const Formula& f, const std::function<void()>& on_clause) {
  switch (f.kind()) {
    case K::True: return {Clause{}};
    case K::False: return {};
    case K::Atom: return {Clause{{f.atom()}, {}}};
    case K::Or: {
      auto out = dnf(f.lhs(), on_clause);
      auto rhs = dnf(f.rhs(), on_clause);
      out.insert(out.end(), std::make_move_iterator(rhs.begin()), std::make_move_iterator(rhs.end()));
      return out;
    }
    case K::And: {
      const auto lhs = dnf(f.lhs(), on_clause);
      if (lhs.empty()) return {};
      const auto rhs = dnf(f.rhs(), on_clause);
      std::vector<Clause> out;
      out.reserve(lhs.size() * rhs.size());
      for (const auto& l : lhs) {
        for (const auto& r : rhs) {
          if (on_clause) on_clause();
          Clause c = l;
          c.atoms.insert(c.atoms.end(), r.atoms.begin(), r.atoms.end());
          c.ctx.insert(c.ctx.end(), r.ctx.begin(), r.ctx.end());
          out.push_back(std::move(c));
        }
      }
      return out;
    }
    default:  // quantifiers (and stray negations) are opaque conjuncts
      return {Clause{{}, {f}}};
  }
}

bool is_constant_atom(const Atom& at) { return at.poly.is_constant(); }

bool fold_constant(const Atom& at) { return rel_holds(at.rel, sign(at.poly.constant_value())); }

// Equivalent of AllQ(body) with the quantifier pushed as far in as possible.
Formula push_one(const Formula& body) {
  if (!mentions_var(body, 0)) return lower_formula(body, 0, 1);
  if (body.kind() == K::And) {
    std::vector<Formula> parts;
    flatten(body, K::And, parts);
    for (auto& p : parts) p = push_one(p);
    return Formula::conj_all(parts);
  }
  if (body.kind() == K::Or) {
    std::vector<Formula> parts;
    flatten(body, K::Or, parts);
    std::vector<Formula> free;
    std::vector<Formula> bound;
    for (auto& p : parts) (mentions_var(p, 0) ? bound : free).push_back(p);
    if (!free.empty()) {
      for (auto& p : free) p = lower_formula(p, 0, 1);
      free.push_back(push_one(Formula::disj_all(bound)));
      return Formula::disj_all(free);
    }
  }
  return Formula::forall(body);
}

Formula push_pass(const Formula& f) {
  switch (f.kind()) {
    case K::And: return Formula::conj(push_pass(f.lhs()), push_pass(f.rhs()));
    case K::Or: return Formula::disj(push_pass(f.lhs()), push_pass(f.rhs()));
    case K::Neg: return Formula::neg(push_pass(f.body()));
    case K::ExQ: return Formula::exists(push_pass(f.body()));
    case K::AllQ: return push_one(push_pass(f.body()));
    default: return f;
  }
}

}  // namespace

Formula Disjunct::body() const {
  std::vector<Formula> parts;
  parts.reserve(atoms.size() + ctx.size());
  for (const auto& at : atoms) parts.push_back(Formula::atom(at));
  parts.insert(parts.end(), ctx.begin(), ctx.end());
  return Formula::conj_all(parts);
}

Formula Disjunct::closure() const {
  Formula out = body();
  for (std::size_t i = 0; i <= n_pulled; ++i) out = Formula::exists(out);
  return out;
}

std::vector<Disjunct> to_modified_dnf(const Formula& body, const std::function<void()>& on_clause) {
  std::vector<Disjunct> out;
  for (auto& clause : dnf(body, on_clause))
    out.push_back(Disjunct{0, std::move(clause.atoms), std::move(clause.ctx)});
  return out;
}

Formula rejoin(std::span<const Disjunct> disjuncts) {
  std::vector<Formula> parts;
  for (const auto& d : disjuncts) parts.push_back(d.closure());
  return Formula::disj_all(parts);
}

Disjunct reach_under(const Disjunct& d) {
  Disjunct out = d;
  for (;;) {
    std::size_t pos = 0;
    while (pos < out.ctx.size() && out.ctx[pos].kind() != K::ExQ) ++pos;
    if (pos == out.ctx.size()) return out;

    // A /\ exists. G  <->  exists. (A lifted /\ G)
    const Formula hoisted = out.ctx[pos].body();
    out.ctx.erase(out.ctx.begin() + static_cast<std::ptrdiff_t>(pos));
    for (auto& at : out.atoms) at.poly = lift_poly(0, 1, at.poly);
    for (auto& g : out.ctx) g = lift_formula(g, 0, 1);
    ++out.n_pulled;

    std::vector<Formula> parts;
    flatten(hoisted, K::And, parts);
    for (auto& p : parts) {
      if (p.kind() == K::Atom)
        out.atoms.push_back(p.atom());
      else if (!p.is_true())
        out.ctx.push_back(std::move(p));
    }
  }
}

Formula push_forall(const Formula& f) {
  Formula current = f;
  for (;;) {
    Formula next = push_pass(current);
    if (next == current) return next;
    current = std::move(next);
  }
}

Formula unpower(Var var, const Atom& at) {
  const Exponent n = min_exponent(at.poly, var);
  if (n == 0) return Formula::atom(at);
  const Polynomial p = divide_by_power(at.poly, var, n);
  const Polynomial x = Polynomial::var(var);
  auto atom = [](Rel rel, Polynomial q) { return Formula::atom({rel, std::move(q)}); };
  const bool even = n % 2 == 0;
  switch (at.rel) {
    case Rel::Eq:
      return Formula::disj(atom(Rel::Eq, x), atom(Rel::Eq, p));
    case Rel::Neq:
      return Formula::conj(atom(Rel::Neq, x), atom(Rel::Neq, p));
    case Rel::Less:
      if (even) return Formula::conj(atom(Rel::Less, p), atom(Rel::Neq, x));
      // (p < 0 /\ x > 0) \/ (p > 0 /\ x < 0)
      return Formula::disj(Formula::conj(atom(Rel::Less, p), atom(Rel::Less, -x)),
                           Formula::conj(atom(Rel::Less, -p), atom(Rel::Less, x)));
    case Rel::Leq:
      if (even) return Formula::disj(atom(Rel::Leq, p), atom(Rel::Eq, x));
      // p = 0 \/ (p < 0 /\ x >= 0) \/ (p > 0 /\ x <= 0)
      return Formula::disj(atom(Rel::Eq, p),
                           Formula::disj(Formula::conj(atom(Rel::Less, p), atom(Rel::Leq, -x)),
                                         Formula::conj(atom(Rel::Less, -p), atom(Rel::Leq, x))));
  }
  return Formula::atom(at);
}

Formula unpower_all(Var var, const Formula& f) {
  return map_atoms(f, [var](const Atom& at, Var depth) { return unpower(var + depth, at); });
}

Formula simpfm(const Formula& f) {
  switch (f.kind()) {
    case K::True:
    case K::False: return f;
    case K::Atom:
      if (!is_constant_atom(f.atom())) return f;
      return fold_constant(f.atom()) ? Formula::top() : Formula::bottom();
    case K::And: {
      Formula l = simpfm(f.lhs());
      if (l.is_false()) return l;
      Formula r = simpfm(f.rhs());
      if (r.is_false()) return r;
      if (l.is_true()) return r;
      if (r.is_true() || l == r) return l;
      return Formula::conj(std::move(l), std::move(r));
    }
    case K::Or: {
      Formula l = simpfm(f.lhs());
      if (l.is_true()) return l;
      Formula r = simpfm(f.rhs());
      if (r.is_true()) return r;
      if (l.is_false()) return r;
      if (r.is_false() || l == r) return l;
      return Formula::disj(std::move(l), std::move(r));
    }
    case K::Neg: {
      Formula b = simpfm(f.body());
      if (b.is_true()) return Formula::bottom();
      if (b.is_false()) return Formula::top();
      if (b.kind() == K::Neg) return b.body();
      return Formula::neg(std::move(b));
    }
    case K::ExQ:
    case K::AllQ: {
      Formula b = simpfm(f.body());
      if (b.is_true() || b.is_false()) return b;
      return f.kind() == K::ExQ ? Formula::exists(std::move(b)) : Formula::forall(std::move(b));
    }
  }
  return f;
}

std::optional<std::size_t> find_lucky(Var var, std::span<const Atom> atoms) {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    const Atom& at = atoms[i];
    if (at.rel != Rel::Eq || degree_in(at.poly, var) > 2) continue;
    for (Exponent k = 0; k <= 2; ++k) {
      const Polynomial coeff = isolate_coefficient(at.poly, var, k);
      if (!coeff.is_zero() && coeff.is_constant()) return i;
    }
  }
  return std::nullopt;
}

}  // namespace vsqe
