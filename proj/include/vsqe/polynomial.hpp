#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vsqe/rational.hpp"

namespace vsqe {

// De Bruijn variable index: 0 is the innermost binder.
using Var = std::size_t;
using Exponent = std::uint32_t;

/// A power product x_{v1}^{e1} * ... * x_{vk}^{ek}, stored sparsely with
/// strictly increasing variable indices and no zero exponents.
class Monomial {
 public:
  using Factor = std::pair<Var, Exponent>;

  Monomial() = default;
  // Factors may come in any order; repeated variables are merged and zero
  // exponents dropped.
  Monomial(std::initializer_list<Factor> factors);
  explicit Monomial(std::vector<Factor> factors);

  static Monomial variable(Var v, Exponent e = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  Exponent exponent(Var v) const;
  Exponent total_degree() const;

  Monomial operator*(const Monomial& other) const;
  // Removes v entirely from the power product.
  Monomial without(Var v) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

// Graded lexicographic order: total degree first, then the exponent of x0,
// then x1, ... The polynomial map iterates in descending order.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial with exact rational coefficients.
/// Invariant: no stored coefficient is zero; the zero polynomial is empty.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GrlexGreater>;

  Polynomial() = default;
  Polynomial(const Rational& constant);  // NOLINT: implicit on purpose
  Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
  Polynomial(int constant) : Polynomial(Rational(constant)) {}   // NOLINT
  Polynomial(const Monomial& m, const Rational& coeff);

  static Polynomial var(Var v);
  static Polynomial constant(const Rational& c) { return Polynomial(c); }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term when is_constant(), 0 for the zero polynomial.
  Rational constant_value() const;
  Rational coefficient(const Monomial& m) const;
  // Sorted, duplicate-free variable indices that occur in the polynomial.
  std::vector<Var> variables() const;
  bool mentions(Var v) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& q);
  Polynomial& operator-=(const Polynomial& q);
  Polynomial& operator*=(const Polynomial& q);
  friend Polynomial operator+(Polynomial p, const Polynomial& q) { return p += q; }
  friend Polynomial operator-(Polynomial p, const Polynomial& q) { return p -= q; }
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);

  friend bool operator==(const Polynomial& p, const Polynomial& q) {
    return p.terms_ == q.terms_;
  }

 private:
  void add_term(const Monomial& m, const Rational& c);

  Terms terms_;
};

/// Values for variables 0, 1, ...; indices past the end read as 0.
class Valuation {
 public:
  Valuation() = default;
  Valuation(std::initializer_list<Rational> values) : values_(values) {}
  explicit Valuation(std::vector<Rational> values) : values_(std::move(values)) {}

  Rational operator[](Var v) const { return v < values_.size() ? values_[v] : Rational(0); }
  std::size_t size() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }

  // Valuation for the body of a binder whose variable takes value x.
  Valuation prepend(const Rational& x) const;

 private:
  std::vector<Rational> values_;
};

Polynomial add(const Polynomial& p, const Polynomial& q);
Polynomial mul(const Polynomial& p, const Polynomial& q);
Polynomial pow(const Polynomial& p, unsigned n);

/// Largest exponent of var over all monomials; 0 for the zero polynomial.
Exponent degree_in(const Polynomial& p, Var var);

/// Coefficient c_i in p = sum_i c_i * var^i. Never mentions var; 0 for i
/// above the degree.
Polynomial isolate_coefficient(const Polynomial& p, Var var, Exponent i);

/// [c_0, ..., c_d] with d = degree_in(p, var).
std::vector<Polynomial> nested_decompose(const Polynomial& p, Var var);

/// Formal partial derivative dp/dvar.
Polynomial derivative(const Polynomial& p, Var var);

/// Exact value of p at v (monomial-sum evaluation).
Rational insertion(const Valuation& v, const Polynomial& p);

/// Replaces every variable except keep by its value in v.
Polynomial partial_insertion(const Valuation& v, const Polynomial& p, Var keep);

/// Substitutes q for var (plain composition, var may occur in q).
Polynomial substitute(const Polynomial& p, Var var, const Polynomial& q);

/// Applies an injective variable renaming.
Polynomial rename_vars(const Polynomial& p, const std::function<Var(Var)>& rename);

/// Every variable v >= d becomes v + a.
Polynomial lift_poly(Var d, Var a, const Polynomial& p);

/// Every variable v >= d + a becomes v - a. Throws std::invalid_argument
/// if p mentions a variable in [d, d + a).
Polynomial lower_poly(Var d, Var a, const Polynomial& p);

/// Smallest exponent of var over all monomials (0 for the zero polynomial).
Exponent min_exponent(const Polynomial& p, Var var);

/// Divides every monomial by var^n. Requires n <= min_exponent(p, var).
Polynomial divide_by_power(const Polynomial& p, Var var, Exponent n);

/// Debug rendering in the `Var i` / `Const c` notation, e.g.
/// "Var 1 * Var 2 - (Var 0)^2 * Var 3".
std::string to_display_string(const Polynomial& p);

}  // namespace vsqe
