#include <gtest/gtest.h>

#include "test_util.hpp"
#include "vlp/error.hpp"

namespace vlp {
namespace {

using test::vec;

TEST(IsEfficient, SegmentVertexEfficient) {
  const VlpProblem p = test::segment_problem();
  const EfficiencyCertificate c = is_efficient(p, vec({1, 0}));
  ASSERT_TRUE(c.efficient());
  EXPECT_TRUE(certificate_valid(p, vec({1, 0}), c));
  // Independent check: the two vertex images are incomparable.
  EXPECT_EQ(cmp(p.K(), vec({1, 0}), vec({0, 1})), Order::Incomparable);
}

TEST(IsEfficient, WidenedInstanceDominated) {
  const VlpProblem p = test::widened_problem();
  const EfficiencyCertificate c = is_efficient(p, vec({0, 0, 1}));
  ASSERT_EQ(c.kind, EfficiencyKind::Dominated);
  ASSERT_TRUE(c.dominator);
  EXPECT_TRUE(primal_feasible(p, *c.dominator));
  EXPECT_EQ(cmp(p.K(), p.L() * *c.dominator, vec({1, 1})), Order::Below);
  EXPECT_EQ(cmp(p.K(), p.L() * vec({1, 0, 0}), vec({1, 1})), Order::Below);
}

TEST(IsEfficient, ZeroRhsOriginEfficient) {
  const VlpProblem p = test::zero_rhs_problem();
  EXPECT_TRUE(is_efficient(p, vec({0, 0})).efficient());
  // The image set is the line {(t, -t)}; sampled points are incomparable.
  for (long t = -5; t <= 5; ++t) {
    if (t == 0) continue;
    EXPECT_EQ(cmp(p.K(), vec({t, -t}), vec({0, 0})), Order::Incomparable);
  }
}

TEST(IsEfficient, UnboundedDomination) {
  const VlpProblem p = test::negative_identity_problem();
  const EfficiencyCertificate c = is_efficient(p, vec({0, 0}));
  EXPECT_FALSE(c.efficient());
  ASSERT_TRUE(c.dominator);
  EXPECT_EQ(cmp(p.K(), p.L() * *c.dominator, vec({0, 0})), Order::Below);
}

TEST(IsEfficient, InfeasiblePointRejected) {
  EXPECT_THROW(is_efficient(test::segment_problem(), vec({1, 1})), PreconditionError);
  EXPECT_THROW(proper_efficiency_certificate(test::segment_problem(), vec({2, -1})),
               PreconditionError);
}

TEST(ProperEfficiency, Examples) {
  const VlpProblem seg = test::segment_problem();
  const auto c = proper_efficiency_certificate(seg, vec({1, 0}));
  ASSERT_TRUE(c);
  EXPECT_TRUE(certificate_valid(seg, vec({1, 0}), *c));
  // The weights (1, 2) also work: x1 + 2 x2 is minimized at (1, 0).
  const auto w = certificate_for_weights(seg, vec({1, 0}), vec({1, 2}));
  ASSERT_TRUE(w);
  EXPECT_TRUE(certificate_valid(seg, vec({1, 0}), *w));
  EXPECT_FALSE(certificate_for_weights(seg, vec({0, 1}), vec({1, 2})));

  EXPECT_FALSE(proper_efficiency_certificate(test::widened_problem(), vec({0, 0, 1})));

  const VlpProblem zb = test::zero_rhs_problem();
  const auto z = proper_efficiency_certificate(zb, vec({0, 0}));
  ASSERT_TRUE(z);
  EXPECT_EQ(*z->lambda, vec({1, 1}));
  EXPECT_TRUE(certificate_valid(zb, vec({0, 0}),
                                EfficiencyCertificate{EfficiencyKind::EfficientWithScalarization,
                                                      vec({1, 1}), vec({0}), std::nullopt}));
}

TEST(Vertices, Examples) {
  EXPECT_EQ(enumerate_vertices(test::segment_problem()),
            (std::vector<QVector>{vec({0, 1}), vec({1, 0})}));
  EXPECT_TRUE(enumerate_vertices(test::r5_problem()).empty());
  const VlpProblem unit(QMatrix::identity(2), QMatrix::identity(2), vec({1, 1}),
                        OrderingCone::orthant(2));
  EXPECT_EQ(enumerate_vertices(unit), (std::vector<QVector>{vec({1, 1})}));
}

TEST(Vertices, LimitError) {
  const std::size_t n = 20;
  QMatrix a(10, n);
  for (std::size_t i = 0; i < 10; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j % 10) ? 1 : 0;
  }
  try {
    enumerate_basic_solutions(a, QVector::ones(10), 1000);
    FAIL() << "expected a limit error";
  } catch (const LimitError& e) {
    EXPECT_NE(std::string(e.what()).find("shrink"), std::string::npos) << e.what();
  }
}

TEST(EfficientVertices, Examples) {
  const auto seg = efficient_vertices(test::segment_problem());
  ASSERT_EQ(seg.size(), 2u);
  for (const auto& e : seg) {
    EXPECT_TRUE(certificate_valid(test::segment_problem(), e.vertex, e.certificate));
  }
  const auto wide = efficient_vertices(test::widened_problem());
  ASSERT_EQ(wide.size(), 2u);
  EXPECT_EQ(wide[0].vertex, vec({0, 1, 0}));
  EXPECT_EQ(wide[1].vertex, vec({1, 0, 0}));
  EXPECT_TRUE(efficient_vertices(test::r5_problem()).empty());
}

TEST(Recession, Examples) {
  EXPECT_TRUE(recession_image_pointed(test::segment_problem()));
  EXPECT_TRUE(feasible_set_bounded(test::segment_problem()));
  const VlpProblem up(QMatrix::identity(2), QMatrix{{1, -1}}, vec({0}),
                      OrderingCone::orthant(2));
  EXPECT_TRUE(recession_image_pointed(up));
  EXPECT_FALSE(feasible_set_bounded(up));
  const VlpProblem down(-QMatrix::identity(2), QMatrix{{1, -1}}, vec({0}),
                        OrderingCone::orthant(2));
  EXPECT_FALSE(recession_image_pointed(down));
}

// Efficiency decided by enumerating the (x, mu) polyhedron of the
// domination LP together with its normalized recession directions.
bool enumerated_efficiency(const VlpProblem& p, const QVector& x) {
  const std::size_t n = p.n(), m = p.m(), k = p.k();
  const std::size_t r = p.K().num_generators();
  QMatrix aug(m + k + 1, n + r);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = p.A()(i, j);
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(m + i, j) = p.L()(i, j);
    for (std::size_t j = 0; j < r; ++j) aug(m + i, n + j) = p.K().generator_matrix()(i, j);
  }
  for (std::size_t j = 0; j < r; ++j) aug(m + k, n + j) = 1;
  QVector ray_rhs(m + k + 1);
  ray_rhs[m + k] = 1;
  if (!enumerate_basic_solutions(aug, ray_rhs).empty()) return false;
  QMatrix top(m + k, n + r);
  for (std::size_t i = 0; i < m + k; ++i) {
    for (std::size_t j = 0; j < n + r; ++j) top(i, j) = aug(i, j);
  }
  for (const auto& s : enumerate_basic_solutions(top, concat(p.b(), p.L() * x))) {
    if (!slice(s, n, r).is_zero()) return false;
  }
  return true;
}

TEST(Properties, ScalarizationEquivalenceOnRandomInstances) {
  Rng rng(42);
  std::size_t vertices = 0, efficient = 0;
  for (int t = 0; t < 60; ++t) {
    const VlpProblem p = random_instance(rng);
    const auto vs = enumerate_vertices(p);
    for (const auto& x : vs) {
      ++vertices;
      const EfficiencyCertificate e = is_efficient(p, x);
      const auto c = proper_efficiency_certificate(p, x);
      ASSERT_EQ(e.efficient(), c.has_value()) << serialize_problem(p) << " " << x;
      EXPECT_EQ(e.efficient(), enumerated_efficiency(p, x)) << serialize_problem(p);
      if (!c) continue;
      ++efficient;
      EXPECT_TRUE(certificate_valid(p, x, *c));
      EXPECT_TRUE(certificate_valid(p, x, e));
      for (const auto& y : vs) {
        EXPECT_LE(dot(*c->lambda, p.L() * x), dot(*c->lambda, p.L() * y));
      }
    }
  }
  EXPECT_GT(vertices, 0u);
  EXPECT_GT(efficient, 0u);
}

TEST(RandomInstance, RespectsBoundsAndIsDeterministic) {
  Rng a(5), b(5);
  for (int t = 0; t < 100; ++t) {
    const VlpProblem p = random_instance(a);
    EXPECT_EQ(p, random_instance(b));
    EXPECT_LE(p.n(), 6u);
    EXPECT_LE(p.m(), 3u);
    EXPECT_GE(p.k(), 2u);
    EXPECT_LE(p.k(), 3u);
    EXPECT_LE(p.K().num_generators(), std::max<std::size_t>(4, p.k()));
    for (std::size_t i = 0; i < p.k(); ++i) {
      for (std::size_t j = 0; j < p.n(); ++j) {
        const Rational& x = p.L()(i, j);
        EXPECT_TRUE(x.num() >= -9 && x.num() <= 9 && x.den() <= 3) << x;
      }
    }
  }
}

}  // namespace
}  // namespace vlp
