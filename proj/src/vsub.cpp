#include "vsqe/vsub.hpp"

#include "vsqe/transform.hpp"

namespace vsqe {

namespace {

Formula atom(Rel rel, Polynomial p) { return Formula::atom({rel, std::move(p)}); }
Formula conj(Formula a, Formula b) { return Formula::conj(std::move(a), std::move(b)); }
Formula disj(Formula a, Formula b) { return Formula::disj(std::move(a), std::move(b)); }

struct Quadratic {
  Polynomial a, b, c;
};

Quadratic coefficients(const Atom& at, Var var) {
  if (degree_in(at.poly, var) > 2)
    throw DegreeError("atom " + to_display_string(at) + " is above quadratic in Var " +
                      std::to_string(var));
  return {isolate_coefficient(at.poly, var, 2), isolate_coefficient(at.poly, var, 1),
          isolate_coefficient(at.poly, var, 0)};
}

// sum_i c_i * num^i * den^(d - i), times den^(d mod 2) for < and <= so the
// multiplier is an even power. num may mention var (coefficients are taken
// before composing).
Polynomial clear_denominator(Var var, const Polynomial& num, const Polynomial& den, const Atom& at) {
  const auto coeffs = nested_decompose(at.poly, var);
  const auto d = static_cast<unsigned>(coeffs.size() - 1);
  Polynomial out;
  Polynomial num_power(1);
  for (unsigned i = 0; i <= d; ++i) {
    if (!coeffs[i].is_zero()) out += coeffs[i] * num_power * pow(den, d - i);
    if (i < d) num_power = num_power * num;
  }
  if ((at.rel == Rel::Less || at.rel == Rel::Leq) && d % 2 == 1) out = out * den;
  return out;
}

Formula guarded(Formula guard, Formula body) {
  guard = simpfm(guard);
  if (guard.is_false()) return Formula::bottom();
  return simpfm(conj(std::move(guard), std::move(body)));
}

Formula eq_zero_form(const Quadratic& q) {
  return conj(atom(Rel::Eq, q.a), conj(atom(Rel::Eq, q.b), atom(Rel::Eq, q.c)));
}

Formula neq_zero_form(const Quadratic& q) {
  return disj(atom(Rel::Neq, q.a), disj(atom(Rel::Neq, q.b), atom(Rel::Neq, q.c)));
}

Formula less_at_neg_infinity(const Quadratic& q) {
  // a < 0 \/ (a = 0 /\ (b > 0 \/ (b = 0 /\ c < 0)))
  return disj(atom(Rel::Less, q.a),
              conj(atom(Rel::Eq, q.a),
                   disj(atom(Rel::Less, -q.b), conj(atom(Rel::Eq, q.b), atom(Rel::Less, q.c)))));
}

Formula less_at_epsilon(Var var, const Root& r, const Polynomial& p) {
  if (degree_in(p, var) == 0) return atom(Rel::Less, p);
  return disj(substitute_root(var, r, Atom::less(p)),
              conj(substitute_root(var, r, Atom::eq(p)),
                   less_at_epsilon(var, r, derivative(p, var))));
}

Root lift_root(const Root& r, Var by) {
  if (by == 0) return r;
  if (const auto* lin = std::get_if<LinRoot>(&r))
    return LinRoot{lift_poly(0, by, lin->num), lift_poly(0, by, lin->den)};
  const auto& q = std::get<QuadRoot>(r);
  return QuadRoot{lift_poly(0, by, q.a), lift_poly(0, by, q.b), lift_poly(0, by, q.c),
                  lift_poly(0, by, q.d)};
}

// Conjunction of atoms (minus `skip`) and ctx with each atom rewritten.
template <typename AtomFn>
Formula map_conjunction(std::span<const Atom> atoms, std::span<const Formula> ctx,
                        std::size_t skip, AtomFn&& fn) {
  std::vector<Formula> parts;
  parts.reserve(atoms.size() + ctx.size());
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if (i == skip) continue;
    auto f = simpfm(fn(atoms[i], 0));
    if (f.is_false()) return Formula::bottom();
    parts.push_back(std::move(f));
  }
  for (const auto& g : ctx) {
    auto f = simpfm(map_atoms(g, fn));
    if (f.is_false()) return Formula::bottom();
    parts.push_back(std::move(f));
  }
  return simpfm(Formula::conj_all(parts));
}

Formula substitute_all(Var var, const Root& r, std::span<const Atom> atoms,
                       std::span<const Formula> ctx, std::size_t skip) {
  return map_conjunction(atoms, ctx, skip, [&](const Atom& at, Var depth) {
    return substitute_root(var + depth, lift_root(r, depth), at);
  });
}

QuadRoot quad_root(const Quadratic& q, bool plus) {
  Polynomial disc = q.b * q.b - Polynomial(4) * q.a * q.c;
  return QuadRoot{-q.b, Polynomial(plus ? 1 : -1), std::move(disc), Polynomial(2) * q.a};
}

Formula discriminant_nonneg(const Quadratic& q) {
  return atom(Rel::Leq, Polynomial(4) * q.a * q.c - q.b * q.b);
}

// Linear and quadratic branches shared by the equality and lucky drivers.
Formula root_branches(Var var, const Quadratic& q, std::span<const Atom> atoms,
                      std::span<const Formula> ctx, std::size_t target) {
  std::vector<Formula> branches;
  if (!q.b.is_zero()) {
    Formula guard = conj(atom(Rel::Eq, q.a), atom(Rel::Neq, q.b));
    if (!simpfm(guard).is_false())
      branches.push_back(
          guarded(guard, substitute_all(var, LinRoot{-q.c, q.b}, atoms, ctx, target)));
  }
  if (!q.a.is_zero()) {
    Formula guard = conj(atom(Rel::Neq, q.a), discriminant_nonneg(q));
    if (!simpfm(guard).is_false()) {
      Formula plus = substitute_all(var, quad_root(q, true), atoms, ctx, target);
      Formula minus = substitute_all(var, quad_root(q, false), atoms, ctx, target);
      branches.push_back(guarded(guard, disj(plus, minus)));
    }
  }
  return simpfm(Formula::disj_all(branches));
}

}  // namespace

Formula linear_substitution(Var var, const Polynomial& a, const Polynomial& b, const Atom& at) {
  if (degree_in(at.poly, var) == 0) return Formula::atom(at);
  return atom(at.rel, clear_denominator(var, a, b, at));
}

Formula sqrt_case_split(const Polynomial& A, const Polynomial& B, const Polynomial& c, Rel rel) {
  const Polynomial a2 = A * A;
  const Polynomial b2c = B * B * c;
  switch (rel) {
    case Rel::Eq:
      return conj(atom(Rel::Leq, A * B), atom(Rel::Eq, a2 - b2c));
    case Rel::Less:
      return disj(conj(atom(Rel::Less, A), atom(Rel::Less, b2c - a2)),
                  conj(atom(Rel::Leq, B), disj(atom(Rel::Less, A), atom(Rel::Less, a2 - b2c))));
    case Rel::Leq:
      return disj(conj(atom(Rel::Leq, A), atom(Rel::Leq, b2c - a2)),
                  conj(atom(Rel::Leq, B), atom(Rel::Leq, a2 - b2c)));
    case Rel::Neq:
      return disj(atom(Rel::Less, -(A * B)), atom(Rel::Neq, a2 - b2c));
  }
  throw std::logic_error("sqrt_case_split: bad relation");
}

Formula quadratic_sub(Var var, const Polynomial& a, const Polynomial& b, const Polynomial& c,
                      const Polynomial& d, const Atom& at) {
  if (degree_in(at.poly, var) == 0) return Formula::atom(at);
  // Stage 1: var := (a + b*y) / d, reusing var as y.
  const Polynomial staged =
      clear_denominator(var, a + b * Polynomial::var(var), d, at);
  // Stage 2: y := sqrt(c). Even powers of y become powers of c (A), odd ones
  // keep a single sqrt(c) factor (B).
  const auto coeffs = nested_decompose(staged, var);
  Polynomial even;
  Polynomial odd;
  Polynomial c_power(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i % 2 == 0) {
      even += coeffs[i] * c_power;
    } else {
      odd += coeffs[i] * c_power;
      c_power = c_power * c;
    }
  }
  return sqrt_case_split(even, odd, c, at.rel);
}

Formula substitute_root(Var var, const Root& r, const Atom& at) {
  if (const auto* lin = std::get_if<LinRoot>(&r)) return linear_substitution(var, lin->num, lin->den, at);
  const auto& q = std::get<QuadRoot>(r);
  return quadratic_sub(var, q.a, q.b, q.c, q.d, at);
}

Formula substitute_root(Var var, const Root& r, const Formula& f) {
  return map_atoms(f, [&](const Atom& at, Var depth) {
    return substitute_root(var + depth, lift_root(r, depth), at);
  });
}

Formula subst_neg_infinity(Var var, const Atom& at) {
  const Quadratic q = coefficients(at, var);
  switch (at.rel) {
    case Rel::Eq: return eq_zero_form(q);
    case Rel::Neq: return neq_zero_form(q);
    case Rel::Less: return less_at_neg_infinity(q);
    case Rel::Leq: return disj(eq_zero_form(q), less_at_neg_infinity(q));
  }
  throw std::logic_error("subst_neg_infinity: bad relation");
}

Formula subst_epsilon(Var var, const Root& r, const Atom& at) {
  const Quadratic q = coefficients(at, var);
  switch (at.rel) {
    case Rel::Eq: return eq_zero_form(q);
    case Rel::Neq: return neq_zero_form(q);
    case Rel::Less: return less_at_epsilon(var, r, at.poly);
    case Rel::Leq: return disj(eq_zero_form(q), less_at_epsilon(var, r, at.poly));
  }
  throw std::logic_error("subst_epsilon: bad relation");
}

RootSets collect_roots(Var var, std::span<const Atom> atoms) {
  RootSets sets;
  for (const auto& at : atoms) {
    const Quadratic q = coefficients(at, var);
    auto& bucket = (at.rel == Rel::Eq || at.rel == Rel::Leq) ? sets.exact : sets.eps;
    const auto kind = (&bucket == &sets.exact) ? SamplePoint::Kind::Exact : SamplePoint::Kind::Epsilon;
    if (!q.b.is_zero()) {
      Formula guard = simpfm(conj(atom(Rel::Eq, q.a), atom(Rel::Neq, q.b)));
      if (!guard.is_false()) bucket.push_back({kind, LinRoot{-q.c, q.b}, guard});
    }
    if (!q.a.is_zero()) {
      Formula guard = simpfm(conj(atom(Rel::Neq, q.a), discriminant_nonneg(q)));
      if (!guard.is_false()) {
        bucket.push_back({kind, quad_root(q, true), guard});
        bucket.push_back({kind, quad_root(q, false), guard});
      }
    }
  }
  return sets;
}

Formula elim_var(Var var, std::span<const Atom> atoms, std::span<const Formula> ctx) {
  std::vector<Atom> all(atoms.begin(), atoms.end());
  for (const auto& g : ctx) {
    if (!is_quantifier_free(g))
      throw std::invalid_argument("elim_var: context formulas must be quantifier free");
    for_each_atom(g, [&](const Atom& at, Var) { all.push_back(at); });
  }
  const RootSets roots = collect_roots(var, all);
  constexpr auto kNoSkip = static_cast<std::size_t>(-1);

  std::vector<Formula> branches;
  branches.push_back(map_conjunction(atoms, ctx, kNoSkip, [&](const Atom& at, Var) {
    return subst_neg_infinity(var, at);
  }));
  for (const auto& point : roots.exact) {
    auto f = guarded(point.guard, substitute_all(var, point.root, atoms, ctx, kNoSkip));
    if (f.is_true()) return f;
    branches.push_back(std::move(f));
  }
  for (const auto& point : roots.eps) {
    auto f = guarded(point.guard, map_conjunction(atoms, ctx, kNoSkip, [&](const Atom& at, Var) {
      return subst_epsilon(var, point.root, at);
    }));
    if (f.is_true()) return f;
    branches.push_back(std::move(f));
  }
  return simpfm(Formula::disj_all(branches));
}

Formula elim_var_equality(Var var, std::span<const Atom> atoms, std::span<const Formula> ctx,
                          std::size_t target) {
  const Quadratic q = coefficients(atoms[target], var);
  Formula zero_case = simpfm(eq_zero_form(q));
  if (!zero_case.is_false()) {
    std::vector<Formula> rest;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (i != target) rest.push_back(Formula::atom(atoms[i]));
    rest.insert(rest.end(), ctx.begin(), ctx.end());
    Formula residual = simpfm(Formula::conj_all(rest));
    if (mentions_var(residual, var)) {
      // Re-bind var as index 0 of a fresh existential; every other free
      // variable moves up by one under the new binder.
      residual = Formula::exists(
          rename_free_vars(residual, [var](Var v) { return v == var ? Var{0} : v + 1; }));
    }
    zero_case = simpfm(conj(zero_case, residual));
  }
  return simpfm(disj(zero_case, root_branches(var, q, atoms, ctx, target)));
}

Formula elim_var_lucky(Var var, std::span<const Atom> atoms, std::span<const Formula> ctx,
                       std::size_t target) {
  const Quadratic q = coefficients(atoms[target], var);
  return root_branches(var, q, atoms, ctx, target);
}

}  // namespace vsqe
