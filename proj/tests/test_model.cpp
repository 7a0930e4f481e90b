#include <gtest/gtest.h>

#include "test_util.hpp"
#include "vlp/error.hpp"
#include "vlp/json_io.hpp"

namespace vlp {
namespace {

using test::vec;

const char* kR5 = R"({"n": 1, "m": 2, "k": 2,
  "L": [["0"], ["0"]], "A": [["1"], ["1"]], "b": ["-1", "-1"],
  "cone": {"orthant": 2}})";

TEST(LoadProblem, EmptyFeasibleSetInstance) {
  const VlpProblem p = load_problem(kR5);
  EXPECT_EQ(p.A().rows(), 2u);
  EXPECT_EQ(p.A().cols(), 1u);
  EXPECT_EQ(p, test::r5_problem());
}

TEST(LoadProblem, DimensionMismatchNamesField) {
  const char* text = R"({"n": 2, "m": 1, "k": 2,
    "L": [["1", "0"], ["0", "1"]], "A": [["1", "1", "1"]], "b": ["1"],
    "cone": {"orthant": 2}})";
  try {
    load_problem(text);
    FAIL() << "expected an error";
  } catch (const DimensionError& e) {
    EXPECT_NE(std::string(e.what()).find("A"), std::string::npos) << e.what();
  }
}

TEST(LoadProblem, NonPointedCone) {
  const char* text = R"({"n": 1, "m": 1, "k": 2,
    "L": [["1"], ["0"]], "A": [["1"]], "b": ["1"],
    "cone": {"dim": 2, "generators": [["1", "0"], ["-1", "0"]]}})";
  try {
    load_problem(text);
    FAIL() << "expected an error";
  } catch (const ConeError& e) {
    EXPECT_NE(std::string(e.what()).find("not pointed"), std::string::npos);
  }
}

TEST(LoadProblem, RejectsFloatsAndSyntax) {
  EXPECT_THROW(load_problem("{"), ParseError);
  EXPECT_THROW(load_problem(R"({"n": 1, "m": 1, "k": 1, "L": [[0.5]],
    "A": [["1"]], "b": ["1"], "cone": {"orthant": 1}})"),
               ParseError);
  EXPECT_THROW(load_problem(R"({"n": 1, "m": 1, "L": [["1"]],
    "A": [["1"]], "b": ["1"], "cone": {"orthant": 1}})"),
               ParseError);
}

TEST(Serialization, RoundTrip) {
  Rng rng(8);
  for (int t = 0; t < 100; ++t) {
    const VlpProblem p = random_instance(rng);
    EXPECT_EQ(load_problem(serialize_problem(p)), p);
  }
}

TEST(Objectives, Examples) {
  const VlpProblem p = test::r5_problem();
  EXPECT_EQ(objective_L(DualCandidateL{vec({1, 1}), vec({0, 0}), vec({-1, -1})}),
            vec({-1, -1}));
  EXPECT_EQ(objective_D(DualCandidateD{vec({1, 1}), QMatrix(2, 2), vec({0, 0})}, p),
            vec({0, 0}));
  EXPECT_EQ(objective_D(DualCandidateD{vec({1, 1}), QMatrix::identity(2), vec({1, -1})}, p),
            vec({0, -2}));
}

TEST(Objectives, DObjectiveSplits) {
  Rng rng(12);
  for (int t = 0; t < 50; ++t) {
    const VlpProblem p = random_instance(rng);
    QMatrix U(p.k(), p.m());
    for (std::size_t i = 0; i < p.k(); ++i) {
      for (std::size_t j = 0; j < p.m(); ++j) U(i, j) = rng.small_rational();
    }
    QVector v(p.k());
    for (auto& x : v) x = rng.small_rational();
    const DualCandidateD c{QVector::ones(p.k()), U, v};
    EXPECT_EQ(objective_D(c, p), objective_J(DualCandidateJ{c.lambda, U}, p) + v);
  }
}

TEST(PrimalFeasible, Examples) {
  const VlpProblem seg = test::segment_problem();
  EXPECT_TRUE(primal_feasible(seg, vec({1, 0})));
  EXPECT_FALSE(primal_feasible(seg, vec({2, -1})));
  EXPECT_THROW(primal_feasible(seg, vec({1})), DimensionError);
  const VlpProblem r5 = test::r5_problem();
  for (long x = 0; x < 5; ++x) EXPECT_FALSE(primal_feasible(r5, vec({x})));
}

TEST(DualJson, RoundTrip) {
  const VlpProblem p = test::r5_problem();
  const DualCandidateD d{vec({1, 1}), QMatrix{{1, Rational(1, 2)}, {0, -3}}, vec({1, -1})};
  EXPECT_EQ(std::get<DualCandidateD>(dual_from_json(to_json(d), p, "")), d);
  const DualCandidateL l{vec({1, 1}), vec({0, 0}), vec({-1, -1})};
  EXPECT_EQ(std::get<DualCandidateL>(dual_from_json(to_json(l), p, "")), l);
  const DualCandidateU u{QMatrix(2, 2), UFlavor::Isermann};
  EXPECT_EQ(std::get<DualCandidateU>(dual_from_json(to_json(u), p, "")), u);
  EXPECT_THROW(dual_from_json(to_json(l), p, "X"), ParseError);
}

}  // namespace
}  // namespace vlp
