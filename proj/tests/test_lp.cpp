#include <gtest/gtest.h>

#include <limits>

#include "test_util.hpp"
#include "vlp/error.hpp"

namespace vlp {
namespace {

using test::q;
using test::vec;

// Minimum of c^T x over the basic feasible solutions, or nullopt when there
// are none.
std::optional<Rational> vertex_minimum(const LinearProgram& lp) {
  std::optional<Rational> best;
  for (const auto& x : enumerate_basic_solutions(lp.eq_matrix, lp.eq_rhs)) {
    const Rational v = dot(lp.objective, x);
    if (!best || v < *best) best = v;
  }
  return best;
}

// Checks an outcome by substitution and against vertex enumeration.
void expect_consistent(const LinearProgram& lp, const LpOutcome& out) {
  EXPECT_EQ(verify_outcome(lp, out), "");
  const auto best = vertex_minimum(lp);
  if (const auto* opt = std::get_if<LpOptimal>(&out)) {
    ASSERT_TRUE(best);
    EXPECT_EQ(opt->value, *best);
    EXPECT_EQ(dot(lp.objective, opt->x), dot(lp.eq_rhs, opt->y));
  } else if (std::holds_alternative<LpInfeasible>(out)) {
    EXPECT_FALSE(best);
  } else {
    EXPECT_TRUE(best) << "unbounded program must be feasible";
  }
}

TEST(SolveLp, OptimalOnSegment) {
  const LinearProgram lp{vec({1, 0}), QMatrix{{1, 1}}, vec({1})};
  const LpOutcome out = solve_lp(lp);
  const auto* opt = std::get_if<LpOptimal>(&out);
  ASSERT_TRUE(opt);
  EXPECT_EQ(opt->x, vec({0, 1}));
  EXPECT_EQ(opt->value, Rational(0));
  EXPECT_EQ(verify_outcome(lp, out), "");
}

TEST(SolveLp, InfeasibleWithFarkas) {
  const LinearProgram lp{vec({0, 0}), QMatrix{{1, 1}}, vec({-1})};
  const LpOutcome out = solve_lp(lp);
  const auto* inf = std::get_if<LpInfeasible>(&out);
  ASSERT_TRUE(inf);
  EXPECT_GT(dot(lp.eq_rhs, inf->farkas), 0);
  EXPECT_TRUE((-transpose_times(lp.eq_matrix, inf->farkas)).is_nonnegative());
  EXPECT_EQ(verify_outcome(lp, out), "");
}

TEST(SolveLp, UnboundedWithRay) {
  const LinearProgram lp{vec({-1, 0}), QMatrix{{1, -1}}, vec({0})};
  const LpOutcome out = solve_lp(lp);
  const auto* unb = std::get_if<LpUnbounded>(&out);
  ASSERT_TRUE(unb);
  EXPECT_EQ(unb->ray * (Rational(1) / unb->ray[0]), vec({1, 1}));
  EXPECT_EQ(verify_outcome(lp, out), "");
}

TEST(SolveLp, DimensionMismatch) {
  EXPECT_THROW(solve_lp(LinearProgram{vec({1}), QMatrix{{1, 1}}, vec({1})}),
               DimensionError);
}

TEST(SolveLp, VerifierRejectsForgedCertificates) {
  const LinearProgram lp{vec({1, 0}), QMatrix{{1, 1}}, vec({1})};
  EXPECT_NE(verify_outcome(lp, LpOptimal{vec({1, 0}), vec({0}), 0}), "");
  EXPECT_NE(verify_outcome(lp, LpInfeasible{vec({1})}), "");
  EXPECT_NE(verify_outcome(lp, LpUnbounded{vec({1, 0}), vec({1, 1})}), "");
}

TEST(SolveLp, Deterministic) {
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const LinearProgram lp = test::random_lp(rng);
    const LpOutcome a = solve_lp(lp), b = solve_lp(lp);
    ASSERT_EQ(a.index(), b.index());
    if (const auto* x = std::get_if<LpOptimal>(&a)) {
      EXPECT_EQ(x->x, std::get<LpOptimal>(b).x);
      EXPECT_EQ(x->y, std::get<LpOptimal>(b).y);
    }
  }
}

// Beale's example cycles under the textbook largest-coefficient rule.
TEST(SolveLp, BealeCyclingExample) {
  const LinearProgram lp{
      vec({0, 0, 0, q(-3, 4), 150, q(-1, 50), 6}),
      QMatrix{{1, 0, 0, q(1, 4), -60, q(-1, 25), 9},
              {0, 1, 0, q(1, 2), -90, q(-1, 50), 3},
              {0, 0, 1, 0, 0, 1, 0}},
      vec({0, 0, 1})};
  const LpOutcome out = solve_lp(lp);
  const auto* opt = std::get_if<LpOptimal>(&out);
  ASSERT_TRUE(opt);
  EXPECT_EQ(opt->value, q(-1, 20));
  expect_consistent(lp, out);
}

TEST(SolveLp, DegenerateCorpusTerminates) {
  std::vector<LinearProgram> corpus{
      // Kuhn's cycling example.
      {vec({-2, -3, 1, 12, 0, 0, 0}),
       QMatrix{{-2, -9, 1, 9, 1, 0, 0},
               {q(1, 3), 1, q(-1, 3), -2, 0, 1, 0},
               {2, 3, -1, -12, 0, 0, 1}},
       vec({0, 0, 2})},
      // Redundant rows.
      {vec({1, 2, 3}), QMatrix{{1, 1, 1}, {1, 1, 1}, {2, 2, 2}}, vec({1, 1, 2})},
      // Inconsistent redundancy.
      {vec({1, 2, 3}), QMatrix{{1, 1, 1}, {1, 1, 1}}, vec({1, 2})},
      // Zero matrix and zero rhs.
      {vec({-1, 0}), QMatrix(2, 2), vec({0, 0})},
      {vec({1, 1}), QMatrix(2, 2), vec({0, 0})},
      // Zero rows with nonzero rhs.
      {vec({1, 1}), QMatrix(1, 2), vec({3})},
      // Every basis degenerate at the origin.
      {vec({-1, -1, 0, 0}), QMatrix{{1, -1, 1, 0}, {-1, 1, 0, 1}}, vec({0, 0})},
      {vec({-3, -1, 0, 0}), QMatrix{{1, 1, 1, 0}, {2, 1, 0, 1}}, vec({0, 0})},
      // Ties in the ratio test.
      {vec({-1, -1, -1}), QMatrix{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, vec({1, 1, 1})},
      {vec({-10, 57, 9, 24, 0, 0, 0}),
       QMatrix{{q(1, 2), q(-11, 2), q(-5, 2), 9, 1, 0, 0},
               {q(1, 2), q(-3, 2), q(-1, 2), 1, 0, 1, 0},
               {1, 0, 0, 0, 0, 0, 1}},
       vec({0, 0, 1})},
  };
  for (const auto& lp : corpus) expect_consistent(lp, solve_lp(lp));
}

TEST(SolveLp, MatchesVertexEnumerationOnRandomCorpus) {
  Rng rng(2024);
  int counts[3] = {0, 0, 0};
  for (int t = 0; t < 300; ++t) {
    const LinearProgram lp = test::random_lp(rng);
    const LpOutcome out = solve_lp(lp);
    ++counts[out.index()];
    expect_consistent(lp, out);
  }
  EXPECT_GT(counts[0], 0);
  EXPECT_GT(counts[1], 0);
  EXPECT_GT(counts[2], 0);
}

TEST(StandardForm, FreeVariableSplits) {
  GeneralProgram g;
  g.add_variables(1, VarKind::Free);
  const StandardForm s = to_standard_form(g);
  EXPECT_EQ(s.lp.num_vars(), 2u);
  EXPECT_EQ(s.back_map.point(vec({3, 5})), vec({-2}));
}

TEST(StandardForm, LessEqualRowGetsSlack) {
  GeneralProgram g;
  g.add_variables(1, VarKind::NonNegative);
  g.add_row(vec({1}), RowSense::LessEqual, 3);
  const StandardForm s = to_standard_form(g);
  EXPECT_EQ(s.lp.num_vars(), 2u);
  EXPECT_EQ(s.lp.eq_matrix, (QMatrix{{1, 1}}));
  EXPECT_EQ(s.lp.eq_rhs, vec({3}));
}

TEST(StandardForm, LowerBoundsShiftBack) {
  GeneralProgram g;
  g.add_variables(1, VarKind::LowerBounded, 2);
  g.add_row(vec({1}), RowSense::GreaterEqual, 5);
  g.set_cost(0, 1);
  const GeneralOutcome out = solve_general(g);
  const auto* opt = std::get_if<GeneralOptimal>(&out);
  ASSERT_TRUE(opt);
  EXPECT_EQ(opt->x, vec({5}));
  EXPECT_EQ(opt->value, Rational(5));
}

TEST(StandardForm, MembershipSystemRoundTrips) {
  // lambda free (2), z free (2) on the empty-feasible-set instance:
  // L^T lambda - A^T z >= 0, lambda >= 1 componentwise.
  GeneralProgram g;
  g.add_variables(4, VarKind::Free);
  g.add_row(vec({0, 0, -1, -1}), RowSense::GreaterEqual, 0);
  g.add_row(vec({1, 0}), RowSense::GreaterEqual, 1);
  g.add_row(vec({0, 1}), RowSense::GreaterEqual, 1);
  const auto x = find_feasible_point(g);
  ASSERT_TRUE(x);
  EXPECT_TRUE(satisfies(g, *x));
  EXPECT_GE((*x)[0], 1);
  EXPECT_LE((*x)[2] + (*x)[3], 0);
}

TEST(StandardForm, RandomGeneralProgramsRoundTrip) {
  Rng rng(99);
  for (int t = 0; t < 200; ++t) {
    GeneralProgram g;
    const auto n = static_cast<std::size_t>(rng.uniform(1, 4));
    for (std::size_t j = 0; j < n; ++j) {
      const long kind = rng.uniform(0, 2);
      g.add_variables(1, static_cast<VarKind>(kind), rng.small_rational());
    }
    const long rows = rng.uniform(1, 4);
    for (long r = 0; r < rows; ++r) {
      QVector c(n);
      for (auto& x : c) x = rng.small_rational();
      g.add_row(c, static_cast<RowSense>(rng.uniform(0, 2)), rng.small_rational());
    }
    for (std::size_t j = 0; j < n; ++j) g.set_cost(j, rng.small_rational());
    const GeneralOutcome out = solve_general(g);
    if (const auto* opt = std::get_if<GeneralOptimal>(&out)) {
      EXPECT_TRUE(satisfies(g, opt->x));
      EXPECT_EQ(opt->value, dot(g.objective, opt->x));
    } else if (const auto* unb = std::get_if<GeneralUnbounded>(&out)) {
      EXPECT_TRUE(satisfies(g, unb->x0));
      EXPECT_TRUE(satisfies(g, unb->x0 + unb->ray));
      EXPECT_LT(dot(g.objective, unb->ray), 0);
    } else {
      EXPECT_FALSE(find_feasible_point(g));
    }
  }
}

TEST(SolveFeasibility, Examples) {
  const auto ok = solve_feasibility(QMatrix{{1, 1}}, vec({1}), {});
  ASSERT_TRUE(std::holds_alternative<QVector>(ok));
  const QVector& x = std::get<QVector>(ok);
  EXPECT_EQ(x[0] + x[1], Rational(1));
  EXPECT_TRUE(x.is_nonnegative());

  const auto bad = solve_feasibility(QMatrix{{1, 1}}, vec({-1}), {});
  ASSERT_TRUE(std::holds_alternative<LpInfeasible>(bad));
  EXPECT_GT(dot(vec({-1}), std::get<LpInfeasible>(bad).farkas), 0);

  const auto extra = solve_feasibility(QMatrix{{1, 1}}, vec({1}),
                                       {{vec({1, 0}), q(1, 2)}});
  ASSERT_TRUE(std::holds_alternative<QVector>(extra));
  EXPECT_GE(std::get<QVector>(extra)[0], q(1, 2));
}

}  // namespace
}  // namespace vlp
