#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vlp/linalg.hpp"
#include "vlp/model.hpp"

namespace vlp {

enum class EfficiencyKind {
  EfficientWithScalarization,
  Dominated,
  UnboundedDomination,
};

// Efficient: lambda in K^{*0} (lambda^T g_i >= 1) and eta with
// L^T lambda + A^T eta >= 0 and lambda^T (L xbar) + eta^T b = 0, i.e. xbar
// minimizes lambda^T L x over the feasible set.
// Dominated / UnboundedDomination: a feasible dominator x' with
// L x' <=_K L xbar and L x' != L xbar.
struct EfficiencyCertificate {
  EfficiencyKind kind = EfficiencyKind::EfficientWithScalarization;
  std::optional<QVector> lambda;
  std::optional<QVector> eta;
  std::optional<QVector> dominator;

  bool efficient() const {
    return kind == EfficiencyKind::EfficientWithScalarization;
  }
};

// Decides efficiency of a feasible xbar with the domination LP
//   max sum(mu)  s.t.  A x = b,  L x + G mu = L xbar,  x, mu >= 0.
// Optimum 0 means efficient; the LP multipliers of that optimum are returned
// as (lambda, eta). A positive or unbounded optimum yields a dominator.
// Throws PreconditionError if xbar is infeasible.
EfficiencyCertificate is_efficient(const VlpProblem& p, const QVector& xbar);

// Solves for (lambda, eta) directly:
//   lambda^T g_i >= 1,  L^T lambda + A^T eta >= 0,
//   lambda^T (L xbar) + b^T eta = 0.
std::optional<EfficiencyCertificate> proper_efficiency_certificate(
    const VlpProblem& p, const QVector& xbar);

// For fixed weights lambda, solves the Lagrange dual of min lambda^T L x
// over the feasible set and returns a certificate if xbar attains the
// scalar optimum.
std::optional<EfficiencyCertificate> certificate_for_weights(
    const VlpProblem& p, const QVector& xbar, const QVector& lambda);

// Checks every condition of the certificate by direct substitution.
bool certificate_valid(const VlpProblem& p, const QVector& xbar,
                       const EfficiencyCertificate& cert);

inline constexpr std::size_t kDefaultBasisLimit = 100000;

// All basic feasible solutions of {x >= 0 : A x = b}, sorted and
// deduplicated. Throws LimitError when C(n, rank A) exceeds `limit`.
std::vector<QVector> enumerate_basic_solutions(
    const QMatrix& a, const QVector& b,
    std::size_t limit = kDefaultBasisLimit);

std::vector<QVector> enumerate_vertices(const VlpProblem& p,
                                        std::size_t limit = kDefaultBasisLimit);

struct EfficientVertex {
  QVector vertex;
  EfficiencyCertificate certificate;
};

// Vertices passing is_efficient, each with a certificate from
// proper_efficiency_certificate. Throws InternalError if some efficient
// vertex has no scalarization certificate.
std::vector<EfficientVertex> efficient_vertices(
    const VlpProblem& p, std::size_t limit = kDefaultBasisLimit);

// {L x : x >= 0, A x = 0} meets -K only at the origin.
bool recession_image_pointed(const VlpProblem& p);

// {x >= 0 : A x = 0} = {0}.
bool feasible_set_bounded(const VlpProblem& p);

// Deterministic generator for property suites. Entries are rationals with
// numerators in [-9, 9] and denominators in {1, 2, 3}; n <= 6, m <= 3,
// k in {2, 3}; the cone is R^k_+ or up to 4 random generators, rejection
// sampled until pointed.
//
// Draws go through std::mt19937_64 with an explicit rejection step so the
// stream is identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [lo, hi].
  long uniform(long lo, long hi);
  bool chance(long num, long den) { return uniform(1, den) <= num; }
  Rational small_rational();

 private:
  std::mt19937_64 engine_;
};

VlpProblem random_instance(Rng& rng);

}  // namespace vlp
