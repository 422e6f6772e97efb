#pragma once

// Ground truth for univariate problems of degree <= 2, computed without any
// virtual substitution: exact arithmetic in Q(sqrt c), root bounds and sign
// tables.

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "vsqe/formula.hpp"
#include "vsqe/rational.hpp"

namespace vsqe::oracle {

/// (a + b * sqrt(c)) / d with c >= 0 and d > 0. When c is the square of a
/// rational the radical is folded into a, leaving b = c = 0.
class QuadNum {
 public:
  QuadNum() : QuadNum(0) {}
  QuadNum(const Rational& q);  // NOLINT: implicit on purpose
  QuadNum(int q) : QuadNum(Rational(q)) {}  // NOLINT
  // Throws std::invalid_argument if c < 0 or d == 0.
  QuadNum(Rational a, Rational b, Rational c, Rational d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& c() const { return c_; }
  const Rational& d() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  // The value when is_rational().
  Rational rational() const { return a_ / d_; }

  QuadNum operator+(const Rational& q) const;

  // Rational bounds lo <= *this <= hi with hi - lo <= width.
  std::pair<Rational, Rational> enclose(const Rational& width) const;
  double to_double() const;
  std::string to_string() const;

 private:
  Rational a_, b_, c_, d_;
};

/// Exact comparison.
std::strong_ordering quad_compare(const QuadNum& x, const QuadNum& y);

inline bool operator==(const QuadNum& x, const QuadNum& y) { return quad_compare(x, y) == 0; }
inline std::strong_ordering operator<=>(const QuadNum& x, const QuadNum& y) {
  return quad_compare(x, y);
}

/// Sign of u + v * sqrt(w) for rationals with w >= 0.
int sign_of(const Rational& u, const Rational& v, const Rational& w);

/// Dense univariate polynomial, coefficient i belongs to x^i.
using UniPoly = std::vector<Rational>;

UniPoly trim(UniPoly p);
int degree(const UniPoly& p);  // -1 for the zero polynomial
UniPoly uni_poly(const UniAtom& at);

/// Sign of p at x (degree <= 2).
int sign_at(const UniPoly& p, const QuadNum& x);
bool holds_at(const UniAtom& at, const QuadNum& x);

/// Distinct real roots of p (degree <= 2), ascending. Throws
/// std::domain_error above degree 2 and std::invalid_argument on zero.
std::vector<QuadNum> real_roots(const UniPoly& p);

/// A rational strictly below every real root of every polynomial:
/// the least of -(1 + max|c_i| / |lead|) - 1. Constant polynomials
/// contribute a bound of 1, so the empty list gives -2. Throws
/// std::invalid_argument on the zero polynomial.
Rational below_all_roots(std::span<const UniPoly> polys);

/// A rational strictly between x < y.
Rational rational_between(const QuadNum& x, const QuadNum& y);

/// Whether some real x satisfies every atom, by testing each root and one
/// rational sample in each gap between consecutive roots (plus both ends).
/// Throws std::domain_error on degree > 2 (impossible for UniAtom).
bool decide_closed_conjunction(std::span<const UniAtom> atoms);

/// A rational delta > 0 such that no polynomial has a root in (r, r + delta].
/// Half the distance to the nearest greater root when that is rational,
/// otherwise a rational minorant of it found by bisection to a relative
/// precision of 2^-20; 1 if there is no greater root.
Rational epsilon_witness(const QuadNum& r, std::span<const UniPoly> polys);

}  // namespace vsqe::oracle
