#include <gtest/gtest.h>

#include "test_util.hpp"
#include "vlp/duality.hpp"
#include "vlp/error.hpp"

namespace vlp {
namespace {

using test::vec;

TEST(CheckFeasibleD, Examples) {
  const VlpProblem p = test::r5_problem();
  EXPECT_TRUE(check_feasible_D(p, DualCandidateD{vec({1, 1}), QMatrix(2, 2), vec({1, -1})}));
  EXPECT_FALSE(check_feasible_D(p, DualCandidateD{vec({1, 1}), QMatrix(2, 2), vec({-1, -1})}));
  EXPECT_FALSE(check_feasible_D(p, DualCandidateD{vec({1, 0}), QMatrix(2, 2), vec({0, 0})}));
  EXPECT_THROW(check_feasible_D(p, DualCandidateD{vec({1}), QMatrix(2, 2), vec({0, 0})}),
               DimensionError);
}

TEST(CheckFeasibleJL, Examples) {
  const VlpProblem p = test::r5_problem();
  EXPECT_TRUE(check_feasible_L(p, DualCandidateL{vec({1, 1}), vec({0, 0}), vec({-1, -1})}));
  EXPECT_TRUE(check_feasible_J(p, DualCandidateJ{vec({1, 1}), QMatrix(2, 2)}));
  // lambda^T v = 1 > z^T b = 0.
  EXPECT_FALSE(check_feasible_L(p, DualCandidateL{vec({1, 1}), vec({0, 0}), vec({1, 0})}));
}

TEST(CheckFeasibleU, Examples) {
  EXPECT_TRUE(check_feasible_U(test::r5_problem(), DualCandidateU{QMatrix(2, 2), UFlavor::H}));
  EXPECT_TRUE(check_feasible_U(test::r5_problem(),
                               DualCandidateU{QMatrix(2, 2), UFlavor::Isermann}));
  EXPECT_FALSE(check_feasible_U(test::negative_identity_problem(),
                                DualCandidateU{QMatrix(2, 1), UFlavor::H}));
  const VlpProblem skewed(QMatrix::identity(2), QMatrix{{1, 1}}, vec({1}),
                          OrderingCone(2, {vec({1, 0}), vec({1, 1})}));
  EXPECT_THROW(check_feasible_U(skewed, DualCandidateU{QMatrix(2, 1), UFlavor::Isermann}),
               PreconditionError);
}

TEST(LambdaExistence, Examples) {
  const auto l = lemma2_lambda_exists(test::r5_problem(), QMatrix(2, 2));
  ASSERT_TRUE(l);
  EXPECT_TRUE(in_quasi_interior(OrderingCone::orthant(2), *l));
  EXPECT_FALSE(lemma2_lambda_exists(test::negative_identity_problem(), QMatrix(2, 1)));
}

TEST(LambdaExistence, EquivalenceOnRandomPairs) {
  Rng rng(77);
  int feasible = 0;
  for (int t = 0; t < 100; ++t) {
    const VlpProblem p = random_instance(rng);
    QMatrix U(p.k(), p.m());
    if (rng.chance(1, 2)) {
      for (std::size_t i = 0; i < p.k(); ++i) {
        for (std::size_t j = 0; j < p.m(); ++j) U(i, j) = rng.small_rational();
      }
    } else {
      Rng local(static_cast<std::uint64_t>(t));
      const auto duals = sample_dual_points(p, local, {3, 10});
      if (!duals.empty()) U = duals.back().U;
    }
    const bool a = check_feasible_U(p, DualCandidateU{U, UFlavor::H});
    const bool b = lemma2_lambda_exists(p, U).has_value();
    EXPECT_EQ(a, b) << serialize_problem(p);
    feasible += a;
  }
  EXPECT_GT(feasible, 0);
  EXPECT_LT(feasible, 100);
}

TEST(ConstructDual, SegmentVertices) {
  const VlpProblem p = test::segment_problem();
  for (const auto& x : {vec({1, 0}), vec({0, 1})}) {
    const auto cert = proper_efficiency_certificate(p, x);
    ASSERT_TRUE(cert);
    const DualCandidateD c = construct_dual_solution(p, x, *cert);
    EXPECT_TRUE(check_feasible_D(p, c));
    EXPECT_EQ(objective_D(c, p), x);
    EXPECT_TRUE(dot(x, transpose_times(reduced_objective(p, c.U), c.lambda)).is_zero());
  }
  // Weights (1, 2) with eta from the Lagrange dual.
  const auto w = certificate_for_weights(p, vec({1, 0}), vec({1, 2}));
  ASSERT_TRUE(w);
  EXPECT_EQ(objective_D(construct_dual_solution(p, vec({1, 0}), *w), p), vec({1, 0}));
}

TEST(ConstructDual, ZeroRhs) {
  const VlpProblem p = test::zero_rhs_problem();
  const EfficiencyCertificate cert{EfficiencyKind::EfficientWithScalarization, vec({1, 1}),
                                   vec({0}), std::nullopt};
  const DualCandidateD c = construct_dual_solution(p, vec({0, 0}), cert);
  EXPECT_EQ(c.U, QMatrix(2, 1));
  EXPECT_EQ(c.v, vec({0, 0}));
  EXPECT_EQ(objective_D(c, p), vec({0, 0}));
}

TEST(ConstructDual, InvalidCertificate) {
  const VlpProblem p = test::segment_problem();
  const EfficiencyCertificate bad{EfficiencyKind::EfficientWithScalarization, vec({1, 2}),
                                  vec({0}), std::nullopt};
  EXPECT_THROW(construct_dual_solution(p, vec({0, 1}), bad), PreconditionError);
}

TEST(RecoverPrimal, Examples) {
  EXPECT_EQ(recover_primal(test::segment_problem(), vec({1, 0})), vec({1, 0}));
  EXPECT_FALSE(recover_primal(test::segment_problem(), vec({2, 2})));
  EXPECT_FALSE(recover_primal(test::r5_problem(), vec({0, 0})));
}

void expect_witness_reproduces(const VlpProblem& p, const MembershipVerdict& v,
                               const QVector& d) {
  ASSERT_TRUE(v.member);
  ASSERT_TRUE(v.witness);
  switch (v.set) {
    case ImageSet::hB:
      ASSERT_TRUE(v.candidate_D);
      EXPECT_TRUE(check_feasible_D(p, *v.candidate_D));
      EXPECT_EQ(objective_D(*v.candidate_D, p), d);
      break;
    case ImageSet::hL:
      ASSERT_TRUE(v.candidate_L);
      EXPECT_TRUE(check_feasible_L(p, *v.candidate_L));
      EXPECT_EQ(v.candidate_L->v, d);
      break;
    case ImageSet::hJ:
      ASSERT_TRUE(v.candidate_J);
      EXPECT_TRUE(check_feasible_J(p, *v.candidate_J));
      EXPECT_EQ(objective_J(*v.candidate_J, p), d);
      break;
  }
}

TEST(Membership, EmptyFeasibleSetInstance) {
  const VlpProblem p = test::r5_problem();
  EXPECT_FALSE(membership_hB(p, vec({-1, -1})).member);
  const auto b = membership_hB(p, vec({1, -1}));
  expect_witness_reproduces(p, b, vec({1, -1}));
  const auto l = membership_hL(p, vec({-1, -1}));
  expect_witness_reproduces(p, l, vec({-1, -1}));
  expect_witness_reproduces(p, membership_hL(p, vec({1, -1})), vec({1, -1}));
  expect_witness_reproduces(p, membership_hJ(p, vec({1, -1})), vec({1, -1}));
}

TEST(Membership, ZeroRhsGap) {
  const VlpProblem p = test::zero_rhs_problem();
  expect_witness_reproduces(p, membership_hB(p, vec({5, -5})), vec({5, -5}));
  EXPECT_FALSE(membership_hJ(p, vec({5, -5})).member);
  EXPECT_FALSE(membership_hJ(p, vec({1, -1})).member);
  expect_witness_reproduces(p, membership_hB(p, vec({1, -1})), vec({1, -1}));
  expect_witness_reproduces(p, membership_hJ(p, vec({0, 0})), vec({0, 0}));
}

TEST(Membership, EmptyDualSet) {
  const VlpProblem p = test::negative_identity_problem();
  for (const auto& d : {vec({0, 0}), vec({1, -1}), vec({-3, -3})}) {
    EXPECT_FALSE(membership_hL(p, d).member);
    EXPECT_FALSE(membership_hB(p, d).member);
    EXPECT_FALSE(membership_hJ(p, d).member);
  }
}

TEST(HValueMembership, Examples) {
  EXPECT_TRUE(h_H_value_membership(test::r5_problem(), QMatrix(2, 2), vec({0, 0})));
  EXPECT_FALSE(h_H_value_membership(test::r5_problem(), QMatrix(2, 2), vec({1, 1})));
  EXPECT_TRUE(h_H_value_membership(test::zero_rhs_problem(), QMatrix(2, 1), vec({1, -1})));
  try {
    h_H_value_membership(test::negative_identity_problem(), QMatrix(2, 1), vec({0, 0}));
    FAIL() << "expected an error";
  } catch (const PreconditionError& e) {
    EXPECT_STREQ(e.what(), "U not feasible for D^H");
  }
}

TEST(MapDHToD, Examples) {
  const VlpProblem r5 = test::r5_problem();
  const DualCandidateD a = map_DH_to_D(r5, QMatrix(2, 2), vec({0}));
  EXPECT_EQ(a.lambda, vec({1, 1}));
  EXPECT_EQ(a.v, vec({0, 0}));
  EXPECT_EQ(objective_D(a, r5), vec({0, 0}));

  const VlpProblem zb = test::zero_rhs_problem();
  const DualCandidateD b = map_DH_to_D(zb, QMatrix(2, 1), vec({0, 1}));
  EXPECT_EQ(b.lambda, vec({1, 1}));
  EXPECT_EQ(objective_D(b, zb), vec({1, -1}));
  EXPECT_TRUE(membership_hB(zb, objective_D(b, zb)).member);
}

TEST(MapDToDL, Examples) {
  const VlpProblem r5 = test::r5_problem();
  const DualCandidateL l =
      map_D_to_DL(r5, DualCandidateD{vec({1, 1}), QMatrix(2, 2), vec({1, -1})});
  EXPECT_EQ(l, (DualCandidateL{vec({1, 1}), vec({0, 0}), vec({1, -1})}));
  EXPECT_TRUE(check_feasible_L(r5, l));

  const VlpProblem zb = test::zero_rhs_problem();
  const DualCandidateL m =
      map_D_to_DL(zb, DualCandidateD{vec({1, 1}), QMatrix(2, 1), vec({3, -3})});
  EXPECT_EQ(m.z, vec({0}));
  EXPECT_EQ(m.v, vec({3, -3}));

  EXPECT_THROW(map_D_to_DL(r5, DualCandidateD{vec({1, 1}), QMatrix(2, 2), vec({1, 1})}),
               PreconditionError);
}

TEST(DualNonempty, Examples) {
  EXPECT_TRUE(dual_B_nonempty(test::r5_problem()));
  EXPECT_FALSE(dual_B_nonempty(test::negative_identity_problem()));
  EXPECT_FALSE(recession_image_pointed(test::negative_identity_problem()));
  EXPECT_TRUE(dual_B_nonempty(test::segment_problem()));
}

TEST(Improve, StrictlyImprovesOnEmptyFeasibleSet) {
  const VlpProblem p = test::r5_problem();
  Rng rng(4);
  const auto duals = sample_dual_points(p, rng, {20, 10});
  ASSERT_EQ(duals.size(), 20u);
  for (const auto& c : duals) {
    const DualCandidateD better = improve_dual_point(p, c);
    EXPECT_TRUE(check_feasible_D(p, better));
    EXPECT_EQ(cmp(p.K(), objective_D(c, p), objective_D(better, p)), Order::Below);
  }
  EXPECT_THROW(improve_dual_point(test::segment_problem(),
                                  construct_dual_solution(
                                      test::segment_problem(), vec({1, 0}),
                                      *proper_efficiency_certificate(test::segment_problem(),
                                                                     vec({1, 0})))),
               PreconditionError);
}

TEST(Sampler, FeasibleAndDeterministic) {
  Rng gen(9);
  for (int t = 0; t < 30; ++t) {
    const VlpProblem p = random_instance(gen);
    Rng a(static_cast<std::uint64_t>(t)), b(static_cast<std::uint64_t>(t));
    const auto da = sample_dual_points(p, a, {10, 10});
    const auto db = sample_dual_points(p, b, {10, 10});
    EXPECT_EQ(da, db);
    EXPECT_EQ(da.empty(), !dual_B_nonempty(p));
    for (const auto& c : da) EXPECT_TRUE(check_feasible_D(p, c));
  }
}

TEST(Properties, WeakDualityAndInclusionChain) {
  Rng gen(123);
  std::size_t pairs = 0, values = 0;
  for (int t = 0; t < 25; ++t) {
    const VlpProblem p = random_instance(gen);
    Rng rng(static_cast<std::uint64_t>(t) + 1000);
    const auto duals = sample_dual_points(p, rng, {15, 10});
    const auto vs = enumerate_vertices(p);
    for (const auto& c : duals) {
      const QVector h = objective_D(c, p);
      for (const auto& x : vs) {
        ++pairs;
        EXPECT_NE(cmp(p.K(), p.L() * x, h), Order::Below);
      }
      const auto j = membership_hJ(p, h), b = membership_hB(p, h), l = membership_hL(p, h);
      ++values;
      EXPECT_TRUE(b.member) << "dual objectives belong to h(B)";
      EXPECT_TRUE(!j.member || b.member);
      EXPECT_TRUE(!b.member || l.member);
    }
  }
  EXPECT_GT(pairs, 0u);
  EXPECT_GT(values, 0u);
}

}  // namespace
}  // namespace vlp
