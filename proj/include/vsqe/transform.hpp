#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "vsqe/formula.hpp"

namespace vsqe {

/// One disjunct of the modified DNF:
///   exists z_0 ... z_{n-1} x. (/\ atoms /\ /\ ctx)
/// The pulled binders occupy indices 0..n_pulled-1, the target variable is
/// index n_pulled, and free variables follow.
struct Disjunct {
  std::size_t n_pulled = 0;
  std::vector<Atom> atoms;
  std::vector<Formula> ctx;

  Var target() const { return n_pulled; }
  Formula body() const;
  // The body under its n_pulled + 1 existential binders.
  Formula closure() const;
};

/// Modified DNF of the body of an existential quantifier (in NNF).
/// Quantified subformulas are treated as atomic conjuncts. The optional
/// callback is invoked once per produced clause (used for deadlines).
std::vector<Disjunct> to_modified_dnf(const Formula& body,
                                      const std::function<void()>& on_clause = {});

/// Or over the existential closures of the disjuncts.
Formula rejoin(std::span<const Disjunct> disjuncts);

/// Hoists existential quantifiers found among ctx entries in front of the
/// target, exposing their atoms.
Disjunct reach_under(const Disjunct& d);

/// Pushes universal quantifiers inwards (over conjunctions, past disjuncts
/// that do not mention the bound variable, and drops vacuous ones).
Formula push_forall(const Formula& f);

/// Factors the largest common power of var out of the atom.
Formula unpower(Var var, const Atom& at);

/// unpower on every atom of f w.r.t. the free variable var.
Formula unpower_all(Var var, const Formula& f);

/// Folds constant atoms and Boolean units/absorbers.
Formula simpfm(const Formula& f);

/// Index of the first equality atom of degree <= 2 in var with a nonzero
/// constant coefficient.
std::optional<std::size_t> find_lucky(Var var, std::span<const Atom> atoms);

}  // namespace vsqe
