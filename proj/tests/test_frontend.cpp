#include <gtest/gtest.h>

#include "gen.hpp"
#include "vsqe/frontend.hpp"

using namespace vsqe;
using vsqe::testing::Gen;

namespace {

const Polynomial x0 = Polynomial::var(0);
const Polynomial x1 = Polynomial::var(1);

Formula A(Atom at) { return Formula::atom(std::move(at)); }
Formula E(Formula f) { return Formula::exists(std::move(f)); }

Formula smt(std::string_view text) { return parse_smtlib(text).formula; }

// Expects a ParseError at the given position.
void expect_error_at(std::string_view text, std::size_t line, std::size_t column,
                     std::string_view fragment) {
  try {
    parse_smtlib(text);
    ADD_FAILURE() << "no error for: " << text;
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), line) << e.what();
    EXPECT_EQ(e.column(), column) << e.what();
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

Formula random_formula(Gen& g, int depth) {
  if (depth <= 0 || g.coin(0.3)) {
    if (g.coin(0.1)) return g.coin() ? Formula::top() : Formula::bottom();
    return A(g.atom(3, 4, 3));
  }
  switch (g.integer(0, 4)) {
    case 0: return Formula::conj(random_formula(g, depth - 1), random_formula(g, depth - 1));
    case 1: return Formula::disj(random_formula(g, depth - 1), random_formula(g, depth - 1));
    case 2: return Formula::neg(random_formula(g, depth - 1));
    case 3: return Formula::exists(random_formula(g, depth - 1));
    default: return Formula::forall(random_formula(g, depth - 1));
  }
}

}  // namespace

TEST(SExpr, ReaderPositionsAndComments) {
  const auto es = read_sexprs("; comment\n(a (b c))\n  d |x y| \"s\"\"t\"");
  ASSERT_EQ(es.size(), 4u);
  EXPECT_EQ(es[0].line, 2u);
  EXPECT_EQ(es[0].items[1].items[1].text, "c");
  EXPECT_EQ(es[1].line, 3u);
  EXPECT_EQ(es[1].column, 3u);
  EXPECT_EQ(es[2].text, "x y");
  EXPECT_EQ(es[3].text, "s\"t");
  EXPECT_THROW(read_sexprs("(a"), ParseError);
  EXPECT_THROW(read_sexprs(")"), ParseError);
}

TEST(SmtLib, Examples) {
  EXPECT_EQ(smt("(declare-const x Real)(assert (< x 0))(check-sat)"), E(A(Atom::less(x0))));
  EXPECT_EQ(smt("(assert true)(check-sat)"), Formula::top());
  EXPECT_EQ(smt("(assert (exists ((y Real)) (= (* y y) 2)))(check-sat)"), E(A(Atom::eq(x0 * x0 - 2))));
  EXPECT_EQ(smt("(check-sat)"), Formula::top());
}

TEST(SmtLib, ComparisonNormalization) {
  const std::string decl = "(declare-const x Real)(declare-const y Real)";
  // y is the innermost constant (index 0), x is index 1.
  EXPECT_EQ(smt(decl + "(assert (> x y))"), E(E(A(Atom::less(x0 - x1)))));
  EXPECT_EQ(smt(decl + "(assert (>= x y))"), E(E(A(Atom::leq(x0 - x1)))));
  EXPECT_EQ(smt(decl + "(assert (<= x y))"), E(E(A(Atom::leq(x1 - x0)))));
  EXPECT_EQ(smt(decl + "(assert (= x y))"), E(E(A(Atom::eq(x1 - x0)))));
  EXPECT_EQ(smt(decl + "(assert (distinct x y))"), E(E(A(Atom::neq(x1 - x0)))));
  EXPECT_EQ(smt("(declare-const x Real)(assert (< 0 x 1))"),
            E(Formula::conj(A(Atom::less(-x0)), A(Atom::less(x0 - 1)))));
}

TEST(SmtLib, LiteralsAndConnectives) {
  EXPECT_EQ(smt("(declare-const x Real)(assert (= x 0.1))"), E(A(Atom::eq(x0 - Rational(1, 10)))));
  EXPECT_EQ(smt("(declare-const x Real)(assert (= x (- 3)))"), E(A(Atom::eq(x0 + 3))));
  EXPECT_EQ(smt("(declare-const x Real)(assert (=> (< x 0) (= x 1)))"),
            E(Formula::disj(Formula::neg(A(Atom::less(x0))), A(Atom::eq(x0 - 1)))));
  EXPECT_EQ(smt("(declare-const x Real)(assert (not (and (< x 0) false)))"),
            E(Formula::neg(Formula::conj(A(Atom::less(x0)), Formula::bottom()))));
  // x^3 + x^2 + x + 1 = x^3 normalizes to x^2 + x + 1 = 0.
  EXPECT_EQ(smt("(declare-const x Real)(assert (= (+ (* x x x) (* x x) x 1) (* x x x)))"),
            E(A(Atom::eq(x0 * x0 + x0 + 1))));
}

TEST(SmtLib, ClosureOrderAndScopes) {
  // Two assertions with a declaration in between share one closure.
  const Formula f = smt("(declare-const a Real)(assert (< a 0))(declare-const b Real)(assert (< b a))");
  EXPECT_EQ(f, E(E(Formula::conj(A(Atom::less(x1)), A(Atom::less(x0 - x1))))));
  // Binder shadows a constant.
  EXPECT_EQ(smt("(declare-const x Real)(assert (exists ((x Real)) (= x 1)))"),
            E(E(A(Atom::eq(x0 - 1)))));
  // Multi-variable binder: first listed is outermost.
  EXPECT_EQ(smt("(assert (forall ((u Real) (v Real)) (< u v)))"),
            Formula::forall(Formula::forall(A(Atom::less(x1 - x0)))));
}

TEST(SmtLib, StatusAndCommands) {
  const Problem p = parse_smtlib(
      "(set-logic NRA)(set-option :produce-models true)(set-info :status unsat)"
      "(declare-fun x () Real)(assert (< x x))(check-sat)(exit)",
      "p");
  EXPECT_EQ(p.name, "p");
  EXPECT_EQ(p.expected, false);
  EXPECT_EQ(p.format, SourceFormat::SmtLib);
  EXPECT_FALSE(parse_smtlib("(set-info :status unknown)(check-sat)").expected);
}

TEST(SmtLib, Errors) {
  expect_error_at("(declare-const x Real)\n(assert (= (^ x 2) 1))", 2, 12, "'^'");
  expect_error_at("(declare-const x Real)\n(assert (= (/ x 2) 1))", 2, 12, "division");
  expect_error_at("(assert (= (/ 1 2) 0))", 1, 12, "division");
  expect_error_at("(declare-const n Int)", 1, 18, "sort 'Int'");
  expect_error_at("(assert (let ((y 1)) (= y 1)))", 1, 9, "'let'");
  expect_error_at("(assert (= (ite true 1 2) 1))", 1, 12, "'ite'");
  expect_error_at("(assert (< z 0))", 1, 12, "unknown symbol 'z'");
  expect_error_at("(declare-fun f (Real) Real)", 1, 16, "nullary");
  expect_error_at("(push 1)", 1, 1, "unsupported command");
  expect_error_at("(assert (exists ((y Int)) true))", 1, 21, "only Real");
  expect_error_at("(check-sat)\n(assert true)", 2, 1, "after check-sat");
  expect_error_at("(assert (< 1", 1, 9, "unbalanced");
}

TEST(Native, Examples) {
  EXPECT_EQ(parse_native_formula("(ExQ (Atom (Eq (Var 0))))"), E(A(Atom::eq(x0))));
  EXPECT_EQ(parse_native_formula("(TrueF)"), Formula::top());
  EXPECT_EQ(parse_native_formula("(FalseF)"), Formula::bottom());
  EXPECT_EQ(parse_native_formula("(Atom (Less (- (^ (+ (Var 0) (Const 1)) 2) (Const 1/2))))"),
            A(Atom::less(x0 * x0 + 2 * x0 + Rational(1, 2))));
  const Problem p = parse_native("(set-info :status sat)\n(TrueF)", "t");
  EXPECT_EQ(p.expected, true);
  EXPECT_EQ(p.format, SourceFormat::Native);
}

TEST(Native, SampleFormulaRoundTrips) {
  const Formula f = Formula::forall(
      Formula::conj(E(A(Atom::eq(x1 * Polynomial::var(2) - x0 * x0 * Polynomial::var(3)))),
                    Formula::neg(Formula::forall(A(Atom::leq(5 * x1 * x1 - x0))))));
  const std::string text = print_native(f);
  EXPECT_EQ(parse_native_formula(text), f);
  EXPECT_EQ(print_native(parse_native_formula(text)), text);
}

TEST(Native, CanonicalPrinting) {
  EXPECT_EQ(print_native(Polynomial()), "(Const 0)");
  EXPECT_EQ(print_native(x0), "(Var 0)");
  EXPECT_EQ(print_native(-x0), "(* (Const -1) (Var 0))");
  EXPECT_EQ(print_native(x0 * x0 * x1 + Rational(1, 3)), "(+ (* (^ (Var 0) 2) (Var 1)) (Const 1/3))");
  EXPECT_EQ(print_native(E(A(Atom::neq(x0)))), "(ExQ (Atom (Neq (Var 0))))");
}

TEST(Native, Errors) {
  EXPECT_THROW(parse_native_formula("(And (TrueF))"), ParseError);
  EXPECT_THROW(parse_native_formula("(Atom (Gt (Var 0)))"), ParseError);
  EXPECT_THROW(parse_native_formula("(Atom (Eq (Var -1)))"), ParseError);
  EXPECT_THROW(parse_native_formula("(Atom (Eq (Const 1/0)))"), ParseError);
  EXPECT_THROW(parse_native_formula("(TrueF) (TrueF)"), ParseError);
  EXPECT_THROW(parse_native_formula(""), ParseError);
  try {
    parse_native_formula("(And (TrueF)\n  (Bogus))");
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
}

TEST(NativeProperty, PrintParseRoundTrip) {
  Gen g(61);
  for (int i = 0; i < 1000; ++i) {
    const Formula f = random_formula(g, 5);
    const std::string text = print_native(f);
    const Formula back = parse_native_formula(text);
    ASSERT_EQ(back, f) << text;
    EXPECT_EQ(print_native(back), text);
  }
}

TEST(Bench, Classify) {
  EXPECT_EQ(classify(Answer::Sat, Answer::Unsat), Consistency::Agree);
  EXPECT_EQ(classify(Answer::Sat, Answer::Sat), Consistency::Contradict);
  EXPECT_EQ(classify(Answer::Unsat, Answer::Unsat), Consistency::Contradict);
  EXPECT_EQ(classify(Answer::Sat, Answer::Unknown), Consistency::OnlyOriginal);
  EXPECT_EQ(classify(Answer::Unknown, Answer::Unsat), Consistency::OnlyNegated);
  EXPECT_EQ(classify(Answer::Unknown, Answer::Unknown), Consistency::BothUnknown);
}

TEST(Bench, CorpusShape) {
  const auto problems = load_corpus(VSQE_CORPUS_DIR);
  ASSERT_GE(problems.size(), 35u);
  std::size_t cubic = 0;
  for (const auto& p : problems) {
    EXPECT_TRUE(p.expected.has_value()) << p.name;
    // Closed: lowering every binder away never fails.
    EXPECT_FALSE(mentions_var(p.formula, 0)) << p.name;
    bool high = false;
    for_each_atom(p.formula, [&](const Atom& at, Var depth) {
      EXPECT_TRUE(at.rel == Rel::Less || at.rel == Rel::Eq || at.rel == Rel::Leq || at.rel == Rel::Neq);
      for (Var v = 0; v < depth; ++v) high |= degree_in(at.poly, v) > 2;
    });
    cubic += high;
  }
  EXPECT_GE(cubic, 5u);
}

TEST(Bench, DeterministicAndCsv) {
  const auto problems = load_corpus(VSQE_CORPUS_DIR);
  RunOptions opts;
  opts.timeout = std::chrono::seconds(30);
  const auto a = run_bench(problems, opts, true);
  const auto b = run_bench(problems, opts, true);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].original.name, b[i].original.name);
    EXPECT_EQ(a[i].original.answer, b[i].original.answer);
    EXPECT_EQ(a[i].negation->answer, b[i].negation->answer);
    EXPECT_EQ(a[i].original.residual_nodes, b[i].original.residual_nodes);
  }
  const std::string csv = bench_csv(a);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "name,algorithm,answer,ms,residual_nodes");
  const auto summary = summarize(a);
  EXPECT_EQ(summary.total, problems.size());
  EXPECT_EQ(summary.contradictions, 0u);
  EXPECT_EQ(summary.mismatched_expected, 0u);
  EXPECT_EQ(summary.cumulative_ms.size(), summary.solved);
  EXPECT_TRUE(std::is_sorted(summary.cumulative_ms.begin(), summary.cumulative_ms.end()));
  const std::string json = bench_json(a, summary);
  EXPECT_NE(json.find("\"contradictions\": 0"), std::string::npos);
}

TEST(Bench, NegatedProblem) {
  Problem p{"p", E(A(Atom::less(x0))), true, SourceFormat::SmtLib};
  const Problem n = negated(p);
  EXPECT_EQ(n.name, "p.neg");
  EXPECT_EQ(n.expected, false);
  EXPECT_EQ(n.formula, Formula::neg(p.formula));
  const RunRecord r = run_problem(n, RunOptions{});
  EXPECT_EQ(r.answer, Answer::Unsat);
  EXPECT_EQ(r.algorithm, "leg");
}
