#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "vsqe/polynomial.hpp"

namespace vsqe {

/// Sign condition against zero. `>` and `>=` never appear: they are
/// normalized away by negating the polynomial.
enum class Rel { Less, Eq, Leq, Neq };

const char* rel_name(Rel rel);

/// `poly rel 0`.
struct Atom {
  Rel rel;
  Polynomial poly;

  static Atom less(Polynomial p) { return {Rel::Less, std::move(p)}; }
  static Atom eq(Polynomial p) { return {Rel::Eq, std::move(p)}; }
  static Atom leq(Polynomial p) { return {Rel::Leq, std::move(p)}; }
  static Atom neq(Polynomial p) { return {Rel::Neq, std::move(p)}; }

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Logical complement of an atom, still in normalized form.
Atom negate(const Atom& at);

/// Sign condition on a univariate quadratic a*x^2 + b*x + c with plain
/// rational coefficients.
struct UniAtom {
  Rel rel;
  Rational a, b, c;
};

/// The UniAtom as a polynomial atom in variable var.
Atom to_atom(const UniAtom& at, Var var = 0);

bool rel_holds(Rel rel, int sign);

/// Immutable De Bruijn-indexed formula. Copies share structure.
class Formula {
 public:
  enum class Kind { True, False, Atom, And, Or, Neg, ExQ, AllQ };

  static Formula top();
  static Formula bottom();
  static Formula atom(Atom at);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula neg(Formula body);
  static Formula exists(Formula body);
  static Formula forall(Formula body);

  // Right-nested folds; the empty conjunction is TrueF, the empty
  // disjunction is FalseF.
  static Formula conj_all(std::span<const Formula> parts);
  static Formula disj_all(std::span<const Formula> parts);

  Formula();  // TrueF

  Kind kind() const;
  bool is_true() const { return kind() == Kind::True; }
  bool is_false() const { return kind() == Kind::False; }
  bool is_quantifier() const { return kind() == Kind::ExQ || kind() == Kind::AllQ; }

  const Atom& atom() const;       // Kind::Atom
  const Formula& lhs() const;     // And/Or
  const Formula& rhs() const;     // And/Or
  const Formula& body() const;    // Neg/ExQ/AllQ

  friend bool operator==(const Formula& f, const Formula& g);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Evaluates `at` at valuation v.
bool aeval(const Atom& at, const Valuation& v);

/// Boolean semantics of a quantifier-free formula. Throws
/// std::invalid_argument on ExQ/AllQ.
bool eval_qf(const Formula& f, const Valuation& v);

bool is_quantifier_free(const Formula& f);

/// Negation normal form: negations are absorbed into atoms and pushed
/// through quantifiers.
Formula nnf(const Formula& f);

/// Shifts free variables >= d up by a (the cutoff grows under binders).
Formula lift_formula(const Formula& f, Var d, Var a);

/// Inverse of lift_formula. Throws std::invalid_argument if a free variable
/// lies in [d, d + a).
Formula lower_formula(const Formula& f, Var d, Var a);

/// True iff the free variable var occurs in some polynomial of f.
bool mentions_var(const Formula& f, Var var);

/// Rewrites every atom; the callback receives the binder depth.
Formula map_atoms(const Formula& f, const std::function<Formula(const Atom&, Var depth)>& fn);

/// Visits every atom with its binder depth.
void for_each_atom(const Formula& f, const std::function<void(const Atom&, Var depth)>& fn);

/// Applies a renaming of free variables (bound ones are left alone).
Formula rename_free_vars(const Formula& f, const std::function<Var(Var)>& rename);

std::size_t node_count(const Formula& f);
std::size_t quantifier_count(const Formula& f);

/// Debug rendering in constructor notation, e.g.
/// `AllQ (And (ExQ (Atom (Eq (Var 1 * Var 2 - ...)))) ...)`.
std::string to_display_string(const Formula& f);
std::string to_display_string(const Atom& at);

}  // namespace vsqe
