#pragma once

// Virtual substitution of fractions, quadratic roots, -infinity and
// infinitesimal off-roots, plus the single-variable elimination drivers.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "vsqe/formula.hpp"
#include "vsqe/polynomial.hpp"

namespace vsqe {

/// Raised when an atom is above quadratic in the variable being eliminated.
class DegreeError : public std::domain_error {
 public:
  explicit DegreeError(const std::string& what) : std::domain_error(what) {}
};

/// num / den. Neither polynomial mentions the eliminated variable.
struct LinRoot {
  Polynomial num;
  Polynomial den;
};

/// (a + b * sqrt(c)) / d. None of the polynomials mention the eliminated
/// variable; users guard with c >= 0 and d != 0.
struct QuadRoot {
  Polynomial a;
  Polynomial b;
  Polynomial c;
  Polynomial d;
};

using Root = std::variant<LinRoot, QuadRoot>;

/// A candidate point together with the side condition under which it is a
/// real root of its source atom.
struct SamplePoint {
  enum class Kind { NegInfinity, Exact, Epsilon };
  Kind kind = Kind::NegInfinity;
  Root root;
  Formula guard;
};

struct RootSets {
  std::vector<SamplePoint> exact;  // roots of = and <= atoms
  std::vector<SamplePoint> eps;    // off-roots of < and != atoms
};

/// `at` with var := a / b, valid wherever b != 0.
Formula linear_substitution(Var var, const Polynomial& a, const Polynomial& b, const Atom& at);

/// (A + B * sqrt(c)) rel 0, valid wherever c >= 0.
Formula sqrt_case_split(const Polynomial& A, const Polynomial& B, const Polynomial& c, Rel rel);

/// `at` with var := (a + b * sqrt(c)) / d, valid wherever d != 0 and c >= 0.
Formula quadratic_sub(Var var, const Polynomial& a, const Polynomial& b, const Polynomial& c,
                      const Polynomial& d, const Atom& at);

/// Dispatches to linear_substitution or quadratic_sub.
Formula substitute_root(Var var, const Root& r, const Atom& at);

/// Exact-root substitution into every atom of f, including atoms under
/// binders (var and the root are shifted per binder).
Formula substitute_root(Var var, const Root& r, const Formula& f);

/// "at holds for all sufficiently negative var". Throws DegreeError above
/// degree 2.
Formula subst_neg_infinity(Var var, const Atom& at);

/// "at holds on (r, r + delta] for some delta > 0". Throws DegreeError above
/// degree 2.
Formula subst_epsilon(Var var, const Root& r, const Atom& at);

/// Guarded candidate roots of each atom in var. Throws DegreeError above
/// degree 2.
RootSets collect_roots(Var var, std::span<const Atom> atoms);

/// General virtual substitution for exists var. (atoms /\ ctx):
///   F[-inf] \/ OR_exact (guard /\ F[r]) \/ OR_eps (guard /\ F[r + eps]).
/// ctx entries must be quantifier free (their atoms contribute candidate
/// roots too); throws std::invalid_argument otherwise. The result does not
/// mention var; indices are not lowered.
Formula elim_var(Var var, std::span<const Atom> atoms, std::span<const Formula> ctx);

/// Equality elimination on atoms[target] = a*var^2 + b*var + c:
///   (a=0 /\ b=0 /\ c=0 /\ exists var. rest)
///   \/ (a=0 /\ b!=0 /\ F[-c/b])
///   \/ (a!=0 /\ b^2-4ac>=0 /\ (F[r+] \/ F[r-])).
/// The degenerate branch re-binds var; everywhere else var is eliminated.
Formula elim_var_equality(Var var, std::span<const Atom> atoms, std::span<const Formula> ctx,
                          std::size_t target);

/// Same as elim_var_equality without the all-zero branch. Only valid when
/// atoms[target] is known to be a nonzero polynomial in var.
Formula elim_var_lucky(Var var, std::span<const Atom> atoms, std::span<const Formula> ctx,
                       std::size_t target);

}  // namespace vsqe
