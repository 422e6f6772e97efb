#include <gtest/gtest.h>

#include "gen.hpp"
#include "vsqe/oracle.hpp"
#include "vsqe/transform.hpp"
#include "vsqe/vsub.hpp"

using namespace vsqe;
using vsqe::testing::Gen;
namespace orc = vsqe::oracle;

namespace {

const Polynomial x0 = Polynomial::var(0);
const Polynomial x1 = Polynomial::var(1);
const Polynomial x2 = Polynomial::var(2);

Formula A(Atom at) { return Formula::atom(std::move(at)); }

// Value of a closed formula after folding; fails the test if it does not fold.
bool folded(const Formula& f) {
  const Formula s = simpfm(f);
  EXPECT_TRUE(s.is_true() || s.is_false()) << to_display_string(f);
  return s.is_true();
}

orc::UniPoly univariate(const Polynomial& p, const Valuation& v, Var var) {
  const Polynomial u = partial_insertion(v, p, var);
  orc::UniPoly out;
  for (const auto& c : nested_decompose(u, var)) out.push_back(c.constant_value());
  return out;
}

// Truth of `at` when var takes the value x and the rest follow v.
bool holds_with(const Atom& at, Var var, const orc::QuadNum& x, const Valuation& v) {
  return rel_holds(at.rel, orc::sign_at(univariate(at.poly, v, var), x));
}

}  // namespace

TEST(Vsub, LinearSubstitution) {
  const Polynomial a = x1, b = x2;
  EXPECT_EQ(simpfm(linear_substitution(0, a, b, Atom::less(x0 - 1))), A(Atom::less((a - b) * b)));
  EXPECT_EQ(simpfm(linear_substitution(0, a, b, Atom::eq(x0 * x0))), A(Atom::eq(a * a)));
  EXPECT_EQ(linear_substitution(0, a, b, Atom::eq(x1)), A(Atom::eq(x1)));
  // Checked at a=1, b=2: 1/2 - 1 < 0.
  EXPECT_TRUE(eval_qf(linear_substitution(0, a, b, Atom::less(x0 - 1)), {0, 1, 2}));
}

TEST(Vsub, SqrtCaseSplit) {
  EXPECT_TRUE(folded(sqrt_case_split(0, 0, x1, Rel::Eq)));
  EXPECT_TRUE(folded(sqrt_case_split(-1, 1, 1, Rel::Eq)));
  EXPECT_FALSE(folded(sqrt_case_split(-1, 0, 2, Rel::Eq)));
  // 1 - sqrt(2) < 0, 1 - sqrt(2) != 0, -(3) + 2 sqrt(2) < 0.
  EXPECT_TRUE(folded(sqrt_case_split(1, -1, 2, Rel::Less)));
  EXPECT_TRUE(folded(sqrt_case_split(1, -1, 2, Rel::Neq)));
  EXPECT_TRUE(folded(sqrt_case_split(-3, 2, 2, Rel::Less)));
  EXPECT_FALSE(folded(sqrt_case_split(-2, 2, 2, Rel::Leq)));
  EXPECT_TRUE(folded(sqrt_case_split(-2, 1, 4, Rel::Leq)));
}

TEST(Vsub, QuadraticSub) {
  EXPECT_FALSE(folded(quadratic_sub(0, 0, 1, 4, 1, Atom::eq(x0))));
  EXPECT_TRUE(folded(quadratic_sub(0, 0, 1, 2, 1, Atom::eq(x0 * x0 - 2))));
  EXPECT_EQ(quadratic_sub(0, 0, 1, 2, 1, Atom::less(x1)), A(Atom::less(x1)));
  // x = (1 + sqrt 5) / 2 is a root of x^2 - x - 1.
  EXPECT_TRUE(folded(quadratic_sub(0, 1, 1, 5, 2, Atom::eq(x0 * x0 - x0 - 1))));
  EXPECT_TRUE(folded(quadratic_sub(0, 1, 1, 5, 2, Atom::less(x0 - 2))));
}

TEST(Vsub, NegInfinity) {
  EXPECT_FALSE(folded(subst_neg_infinity(0, Atom::less(x0 * x0))));
  EXPECT_TRUE(folded(subst_neg_infinity(0, Atom::eq(0))));
  EXPECT_TRUE(folded(subst_neg_infinity(0, Atom::less(2 * x0 + 3))));
  EXPECT_TRUE(folded(subst_neg_infinity(0, Atom::neq(x0))));
  EXPECT_FALSE(folded(subst_neg_infinity(0, Atom::leq(-x0))));
  EXPECT_THROW(subst_neg_infinity(0, Atom::eq(x0 * x0 * x0)), DegreeError);
}

TEST(Vsub, Epsilon) {
  const Root zero = LinRoot{0, 1};
  EXPECT_FALSE(folded(subst_epsilon(0, zero, Atom::less(x0))));
  EXPECT_TRUE(folded(subst_epsilon(0, zero, Atom::less(-x0))));
  EXPECT_TRUE(folded(subst_epsilon(0, zero, Atom::eq(0))));
  EXPECT_FALSE(folded(subst_epsilon(0, zero, Atom::eq(x0))));
  EXPECT_TRUE(folded(subst_epsilon(0, zero, Atom::neq(x0))));
  // At 0 + eps, x^2 - x < 0 holds (the polynomial dips right after 0).
  EXPECT_TRUE(folded(subst_epsilon(0, zero, Atom::less(x0 * x0 - x0))));
  EXPECT_THROW(subst_epsilon(0, zero, Atom::eq(x0 * x0 * x0)), DegreeError);
}

TEST(Vsub, CollectRoots) {
  {
    const std::vector<Atom> atoms{Atom::leq(x0 - 1)};
    const RootSets rs = collect_roots(0, atoms);
    ASSERT_EQ(rs.exact.size(), 1u);
    EXPECT_TRUE(rs.eps.empty());
    const auto* lin = std::get_if<LinRoot>(&rs.exact[0].root);
    ASSERT_NE(lin, nullptr);
    EXPECT_EQ(lin->num, Polynomial(1));
    EXPECT_EQ(lin->den, Polynomial(1));
    EXPECT_TRUE(rs.exact[0].guard.is_true());
  }
  {
    const std::vector<Atom> atoms{Atom::neq(x0)};
    const RootSets rs = collect_roots(0, atoms);
    EXPECT_TRUE(rs.exact.empty());
    ASSERT_EQ(rs.eps.size(), 1u);
    EXPECT_EQ(rs.eps[0].kind, SamplePoint::Kind::Epsilon);
  }
  {
    const std::vector<Atom> atoms{Atom::eq(0)};
    const RootSets rs = collect_roots(0, atoms);
    EXPECT_TRUE(rs.exact.empty());
    EXPECT_TRUE(rs.eps.empty());
  }
  {
    // Symbolic coefficients: one linear candidate and two quadratic ones.
    const std::vector<Atom> atoms{Atom::eq(x1 * x0 * x0 + x0 - 1)};
    const RootSets rs = collect_roots(0, atoms);
    EXPECT_EQ(rs.exact.size(), 3u);
  }
}

TEST(Vsub, ElimVar) {
  EXPECT_TRUE(folded(elim_var(0, std::vector<Atom>{Atom::leq(x0 - 1)}, {})));
  EXPECT_FALSE(folded(elim_var(0, std::vector<Atom>{Atom::less(x0), Atom::less(-x0)}, {})));
  EXPECT_TRUE(folded(elim_var(0, std::vector<Atom>{Atom::eq(0)}, {})));
  EXPECT_FALSE(folded(elim_var(0, std::vector<Atom>{Atom::leq(x0 * x0 + 1)}, {})));
  // Quantified ctx is refused.
  const std::vector<Formula> ctx{Formula::forall(A(Atom::neq(x0 - x1)))};
  EXPECT_THROW(elim_var(0, std::vector<Atom>{}, ctx), std::invalid_argument);
}

TEST(Vsub, ElimVarEquality) {
  // exists x. x = 0 /\ x1 - x < 0  ~>  x1 < 0
  const std::vector<Atom> atoms{Atom::eq(x0), Atom::less(x1 - x0)};
  const Formula out = simpfm(elim_var_equality(0, atoms, {}, 0));
  EXPECT_FALSE(mentions_var(out, 0));
  EXPECT_EQ(out, A(Atom::less(x1)));
  EXPECT_TRUE(folded(elim_var_equality(0, std::vector<Atom>{Atom::eq(x0 * x0 - 2)}, {}, 0)));
  EXPECT_FALSE(folded(elim_var_equality(0, std::vector<Atom>{Atom::eq(x0 * x0 + 1)}, {}, 0)));
  // Eq(0): only the degenerate branch, which keeps the quantifier.
  const Formula deg = simpfm(elim_var_equality(0, std::vector<Atom>{Atom::eq(0), Atom::less(x0)}, {}, 0));
  EXPECT_EQ(deg.kind(), Formula::Kind::ExQ);
}

TEST(Vsub, ElimVarLucky) {
  EXPECT_TRUE(folded(elim_var_lucky(0, std::vector<Atom>{Atom::eq(x0 * x0 - 2)}, {}, 0)));
  EXPECT_FALSE(folded(elim_var_lucky(0, std::vector<Atom>{Atom::eq(x0 - 3), Atom::less(x0)}, {}, 0)));
}

// ---------------------------------------------------------------- properties

TEST(VsubProperty, LinearSubstitutionMatchesDirectSubstitution) {
  Gen g(21);
  for (int i = 0; i < 1000; ++i) {
    const Atom at{g.rel(), g.poly_in(0, 3, 3)};
    const Rational a = g.rational();
    Rational b = g.rational();
    if (b == 0) b = 1;
    const Formula out = linear_substitution(0, a, b, at);
    EXPECT_FALSE(mentions_var(out, 0));
    const Valuation v = g.valuation(3);
    std::vector<Rational> w = v.values();
    w[0] = a / b;
    EXPECT_EQ(eval_qf(out, v), aeval(at, Valuation(w))) << to_display_string(at);
  }
}

TEST(VsubProperty, QuadraticSubOnPerfectSquaresMatchesLinear) {
  Gen g(22);
  for (int i = 0; i < 1000; ++i) {
    const Atom at{g.rel(), g.poly_in(0, 3, 2)};
    const Rational a = g.rational(), b = g.rational(), q = g.rational();
    Rational d = g.rational();
    if (d == 0) d = -2;
    const Formula quad = quadratic_sub(0, a, b, Rational(q * q), d, at);
    const Formula lin = linear_substitution(0, Rational(a + b * abs(q)), d, at);
    for (int k = 0; k < 5; ++k) {
      const Valuation v = g.valuation(3);
      EXPECT_EQ(eval_qf(quad, v), eval_qf(lin, v)) << to_display_string(at);
    }
  }
}

TEST(VsubProperty, QuadraticSubMatchesExactEvaluation) {
  Gen g(23);
  for (int i = 0; i < 1000; ++i) {
    const Atom at{g.rel(), g.poly_in(0, 3, 2)};
    const Rational a = g.rational(), b = g.rational(), d = g.coin() ? Rational(2) : Rational(-3);
    const Rational c = g.integer(0, 12);
    const Formula out = quadratic_sub(0, a, b, c, d, at);
    EXPECT_FALSE(mentions_var(out, 0));
    const Valuation v = g.valuation(3);
    EXPECT_EQ(eval_qf(out, v), holds_with(at, 0, orc::QuadNum(a, b, c, d), v)) << to_display_string(at);
  }
}

TEST(VsubProperty, SqrtCaseSplitMatchesExactSign) {
  Gen g(24);
  for (int i = 0; i < 2000; ++i) {
    const Rational A = g.rational(), B = g.rational(), c = g.integer(0, 10);
    const Rel rel = g.rel();
    EXPECT_EQ(folded(sqrt_case_split(A, B, c, rel)), rel_holds(rel, orc::sign_of(A, B, c)))
        << A << " " << B << " " << c << " " << rel_name(rel);
  }
}

TEST(VsubProperty, ElimVarRemovesVariable) {
  Gen g(25);
  for (int i = 0; i < 500; ++i) {
    std::vector<Atom> atoms;
    const std::size_t n = 1 + g.index(3);
    for (std::size_t k = 0; k < n; ++k) atoms.push_back(Atom{g.rel(), g.poly_in(0, 3, 2)});
    std::vector<Formula> ctx;
    if (g.coin(0.3)) ctx.push_back(Formula::disj(A(Atom{g.rel(), g.poly_in(0, 3, 2)}), A(Atom{g.rel(), g.poly_in(0, 3, 1)})));
    EXPECT_FALSE(mentions_var(elim_var(0, atoms, ctx), 0));
    if (auto idx = find_lucky(0, atoms)) EXPECT_FALSE(mentions_var(elim_var_lucky(0, atoms, ctx, *idx), 0));
  }
}

TEST(VsubProperty, ElimVarAgreesWithSignTable) {
  Gen g(26);
  for (int i = 0; i < 1000; ++i) {
    std::vector<UniAtom> uni;
    std::vector<Atom> atoms;
    const std::size_t n = 1 + g.index(4);
    for (std::size_t k = 0; k < n; ++k) {
      uni.push_back(g.uni_atom(5, 2));
      atoms.push_back(to_atom(uni.back(), 0));
    }
    EXPECT_EQ(folded(elim_var(0, atoms, {})), orc::decide_closed_conjunction(uni));
  }
}
