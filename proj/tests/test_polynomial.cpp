#include <gtest/gtest.h>

#include "gen.hpp"
#include "vsqe/polynomial.hpp"

using namespace vsqe;
using vsqe::testing::Gen;

namespace {

const Polynomial x = Polynomial::var(0);
const Polynomial y = Polynomial::var(1);

Polynomial reconstruct(const std::vector<Polynomial>& coeffs, Var var) {
  Polynomial out;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    out += coeffs[i] * pow(Polynomial::var(var), static_cast<unsigned>(i));
  return out;
}

bool canonical(const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    if (c == 0) return false;
    for (const auto& [v, e] : m.factors())
      if (e == 0) return false;
  }
  return true;
}

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

TEST(Polynomial, AddExamples) {
  EXPECT_EQ((x + 1) + (-x), Polynomial(1));
  EXPECT_EQ(Polynomial() + x * y, x * y);
  EXPECT_EQ(x * x * y + x * x * y, Polynomial(Monomial{{0, 2}, {1, 1}}, 2));
}

TEST(Polynomial, MulExamples) {
  EXPECT_EQ((x + 1) * (x - 1), x * x - 1);
  EXPECT_EQ((x + y) * Polynomial(), Polynomial());
  EXPECT_EQ((x + y) * Polynomial(1), x + y);
}

TEST(Polynomial, PowExamples) {
  EXPECT_EQ(pow(x + 1, 2), x * x + 2 * x + 1);
  EXPECT_EQ(pow(x + y, 0), Polynomial(1));
  EXPECT_EQ(pow(Polynomial(), 3), Polynomial());
}

TEST(Polynomial, DegreeIn) {
  const Polynomial p = x * x * y + x;
  EXPECT_EQ(degree_in(p, 0), 2u);
  EXPECT_EQ(degree_in(p, 1), 1u);
  EXPECT_EQ(degree_in(Polynomial(), 0), 0u);
}

TEST(Polynomial, IsolateCoefficient) {
  const Polynomial p = 3 * x * x * y + 2 * x + y;
  EXPECT_EQ(isolate_coefficient(p, 0, 2), 3 * y);
  EXPECT_EQ(isolate_coefficient(p, 0, 1), Polynomial(2));
  EXPECT_EQ(isolate_coefficient(p, 0, 0), y);
  EXPECT_EQ(isolate_coefficient(p, 0, 7), Polynomial());
  EXPECT_EQ(isolate_coefficient(Polynomial(), 0, 1), Polynomial());
}

TEST(Polynomial, NestedDecompose) {
  EXPECT_EQ(nested_decompose(x * x * y + x + 1, 0), (std::vector<Polynomial>{1, 1, y}));
  EXPECT_EQ(nested_decompose(Polynomial(), 0), (std::vector<Polynomial>{0}));
  EXPECT_EQ(nested_decompose(y, 0), (std::vector<Polynomial>{y}));
}

TEST(Polynomial, Derivative) {
  EXPECT_EQ(derivative(x * x + x * y + 3, 0), 2 * x + y);
  EXPECT_EQ(derivative(y * y + 7, 0), Polynomial());
  EXPECT_EQ(derivative(x, 0), Polynomial(1));
}

TEST(Polynomial, Insertion) {
  EXPECT_EQ(insertion({1, 2}, x + y * y), 5);
  EXPECT_EQ(insertion({}, Polynomial::var(3)), 0);
  EXPECT_EQ(insertion({4, 5}, Polynomial(7)), 7);
}

TEST(Polynomial, PartialInsertion) {
  EXPECT_EQ(partial_insertion({99, 3}, x * x * y + y, 0), 3 * x * x + 3);
  EXPECT_EQ(partial_insertion({5, 6}, x * x + x, 0), x * x + x);
  EXPECT_EQ(partial_insertion({0, 0}, x * y, 1), Polynomial());
}

TEST(Polynomial, LiftLower) {
  const Polynomial z = Polynomial::var(2);
  const Polynomial w = Polynomial::var(3);
  EXPECT_EQ(lift_poly(1, 1, x * y), x * z);
  EXPECT_EQ(lift_poly(3, 0, x * y + 1), x * y + 1);
  EXPECT_EQ(lift_poly(0, 2, x + y), z + w);
  EXPECT_EQ(lower_poly(0, 1, y + z * z), x + y * y);
  EXPECT_EQ(lower_poly(2, 0, x * y), x * y);
  EXPECT_THROW(lower_poly(0, 1, x), std::invalid_argument);
}

TEST(Polynomial, ParseRational) {
  EXPECT_EQ(parse_rational("12"), 12);
  EXPECT_EQ(parse_rational("-3/4"), Rational(-3, 4));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1."), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
}

TEST(Polynomial, ValuationDefaultsToZero) {
  const Valuation v{1, 2};
  EXPECT_EQ(v[0], 1);
  EXPECT_EQ(v[5], 0);
  EXPECT_EQ(v.prepend(7)[0], 7);
  EXPECT_EQ(v.prepend(7)[2], 2);
}

TEST(Polynomial, DebugPrinter) {
  EXPECT_EQ(to_display_string(Polynomial()), "Const 0");
  EXPECT_EQ(to_display_string(x), "Var 0");
}

// ---------------------------------------------------------------- properties

TEST(PolynomialProperty, ArithmeticStaysCanonical) {
  Gen g(1);
  for (int i = 0; i < 500; ++i) {
    const Polynomial p = g.polynomial(3), q = g.polynomial(3);
    EXPECT_TRUE(canonical(p + q));
    EXPECT_TRUE(canonical(p - p));
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_TRUE(canonical(p * q));
  }
}

TEST(PolynomialProperty, Reconstruction) {
  Gen g(2);
  for (int i = 0; i < 1000; ++i) {
    const Polynomial p = g.polynomial(3, 5, 3);
    const Var var = g.index(3);
    const auto coeffs = nested_decompose(p, var);
    ASSERT_EQ(coeffs.size(), degree_in(p, var) + 1u);
    EXPECT_EQ(reconstruct(coeffs, var), p);
    for (const auto& c : coeffs) EXPECT_FALSE(c.mentions(var));
  }
}

TEST(PolynomialProperty, DegreeBoundUnderAddition) {
  Gen g(3);
  for (int i = 0; i < 1000; ++i) {
    const Polynomial p = g.polynomial(2, 4, 3), q = g.polynomial(2, 4, 3);
    EXPECT_LE(degree_in(p + q, 0), std::max(degree_in(p, 0), degree_in(q, 0)));
  }
}

TEST(PolynomialProperty, InsertionIsRingHomomorphism) {
  Gen g(4);
  for (int i = 0; i < 1000; ++i) {
    const Polynomial p = g.polynomial(3), q = g.polynomial(3);
    const Valuation v = g.valuation(g.index(4));
    EXPECT_EQ(insertion(v, p + q), insertion(v, p) + insertion(v, q));
    EXPECT_EQ(insertion(v, p * q), insertion(v, p) * insertion(v, q));
    EXPECT_EQ(insertion(v, -p), -insertion(v, p));
  }
}

TEST(PolynomialProperty, DerivativeLinearAndLeibniz) {
  Gen g(5);
  for (int i = 0; i < 1000; ++i) {
    const Polynomial p = g.polynomial(3), q = g.polynomial(3);
    const Var var = g.index(3);
    EXPECT_EQ(derivative(p + q, var), derivative(p, var) + derivative(q, var));
    EXPECT_EQ(derivative(p * q, var), derivative(p, var) * q + p * derivative(q, var));
  }
}

TEST(PolynomialProperty, LiftLowerRoundTrip) {
  Gen g(6);
  for (int i = 0; i < 1000; ++i) {
    const Polynomial p = g.polynomial(4);
    const Var d = g.index(4);
    const Var a = g.index(3);
    EXPECT_EQ(lower_poly(d, a, lift_poly(d, a, p)), p);
  }
}

TEST(PolynomialProperty, SubstituteMatchesEvaluation) {
  Gen g(7);
  for (int i = 0; i < 500; ++i) {
    const Polynomial p = g.polynomial(3, 4, 3), q = g.polynomial(3);
    const Var var = g.index(3);
    Valuation v = g.valuation(3);
    std::vector<Rational> w = v.values();
    w[var] = insertion(v, q);
    EXPECT_EQ(insertion(v, substitute(p, var, q)), insertion(Valuation(w), p));
  }
}

// |(p(v + h e) - p(v)) / h - p'(v)| <= C h for h <= 1, where
// C = sum_{k >= 2} |p^(k)(v)| / k! bounds the Taylor remainder exactly.
TEST(PolynomialProperty, DerivativeMatchesFiniteDifference) {
  Gen g(8);
  for (int i = 0; i < 1000; ++i) {
    const Polynomial p = g.polynomial(3, 5, 3);
    const Var var = g.index(3);
    const Valuation v = g.valuation(3);
    Rational bound(0), fact(1);
    Polynomial dk = derivative(p, var);
    for (unsigned k = 2; !(dk = derivative(dk, var)).is_zero(); ++k) {
      fact *= k;
      bound += abs_q(insertion(v, dk)) / fact;
    }
    const Rational slope = insertion(v, derivative(p, var));
    for (const Rational h : {Rational(1, 100), Rational(1, 1000)}) {
      std::vector<Rational> w = v.values();
      w[var] += h;
      const Rational fd = (insertion(Valuation(w), p) - insertion(v, p)) / h;
      EXPECT_LE(abs_q(fd - slope), bound * h) << to_display_string(p);
    }
  }
}
