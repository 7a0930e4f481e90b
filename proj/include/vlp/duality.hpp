#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vlp/efficiency.hpp"
#include "vlp/linalg.hpp"
#include "vlp/model.hpp"

namespace vlp {

// ---------------------------------------------------------------------------
// Feasibility of the five dual candidate shapes.

// lambda in K^{*0}, lambda^T v = 0, (L - U A)^T lambda >= 0.
bool check_feasible_D(const VlpProblem& p, const DualCandidateD& c);
// lambda in K^{*0}, (L - U A)^T lambda >= 0.
bool check_feasible_J(const VlpProblem& p, const DualCandidateJ& c);
// lambda in K^{*0}, lambda^T v - z^T b <= 0, L^T lambda - A^T z >= 0.
bool check_feasible_L(const VlpProblem& p, const DualCandidateL& c);
// No x >= 0 with (L - U A) x in -C \ {0}, C = K (flavor H) or R^k_+
// (flavor Isermann), decided by the domination LP. Throws
// PreconditionError for the Isermann flavor on a non-orthant cone.
bool check_feasible_U(const VlpProblem& p, const DualCandidateU& c);

// Some lambda with lambda^T g_i >= 1 and (L - U A)^T lambda >= 0.
std::optional<QVector> lemma2_lambda_exists(const VlpProblem& p,
                                            const QMatrix& U);

// ---------------------------------------------------------------------------
// Constructive duality maps.

// Builds (lambda, U, v) in B with U b + v = L xbar from a scalarization
// certificate (lambda, eta): U = -lt eta^T, v = L xbar - U b, where lt is
// the first generator with positive lambda-product, scaled to product 1.
// Throws PreconditionError when the certificate does not verify.
DualCandidateD construct_dual_solution(const VlpProblem& p, const QVector& xbar,
                                       const EfficiencyCertificate& cert);

// x >= 0 with A x = b and L x = d, or nullopt.
std::optional<QVector> recover_primal(const VlpProblem& p, const QVector& d);

enum class ImageSet { hB, hL, hJ };

struct MembershipWitness {
  QVector lambda;
  QVector z;
};

struct MembershipVerdict {
  bool member = false;
  ImageSet set = ImageSet::hB;
  std::optional<MembershipWitness> witness;
  // Reconstructed dual point with objective equal to the queried value.
  // Exactly one is set on membership, matching `set`.
  std::optional<DualCandidateD> candidate_D;
  std::optional<DualCandidateL> candidate_L;
  std::optional<DualCandidateJ> candidate_J;
};

// d in h(B) iff some lambda in K^{*0}, z satisfy lambda^T d = b^T z and
// L^T lambda - A^T z >= 0.
MembershipVerdict membership_hB(const VlpProblem& p, const QVector& d);
// As membership_hB with lambda^T d <= b^T z.
MembershipVerdict membership_hL(const VlpProblem& p, const QVector& d);
// b != 0: same system as h(B), witness rebuilt with a rank-two U.
// b == 0: member iff d = 0 and B is nonempty.
MembershipVerdict membership_hJ(const VlpProblem& p, const QVector& d);

// d in U b + Min((L - U A)(R^n_+), K). Throws PreconditionError when U is
// not feasible for the H dual.
bool h_H_value_membership(const VlpProblem& p, const QMatrix& U,
                          const QVector& d);

// For U feasible for the H dual and xbar >= 0 with (L - U A) xbar minimal
// in the image cone, finds gamma with gamma^T g_i >= 1,
// (L - U A)^T gamma >= 0 and gamma^T (L - U A) xbar = 0, and returns
// (gamma, U, (L - U A) xbar) in B.
DualCandidateD map_DH_to_D(const VlpProblem& p, const QMatrix& U,
                           const QVector& xbar);

// (lambda, U^T lambda, U b + v). Throws PreconditionError on infeasible
// input.
DualCandidateL map_D_to_DL(const VlpProblem& p, const DualCandidateD& c);

// Some lambda in K^{*0} (normalized) and z with L^T lambda - A^T z >= 0.
std::optional<MembershipWitness> dual_B_witness(const VlpProblem& p);
bool dual_B_nonempty(const VlpProblem& p);

// Primal infeasibility certificate: z with A^T z <= 0 and b^T z > 0.
std::optional<QVector> primal_farkas(const VlpProblem& p);

// For an empty primal feasible set, returns a feasible dual point whose
// objective is strictly K-above that of c: U + lt zbar^T with zbar from
// primal_farkas. Throws PreconditionError when c is infeasible or the
// primal feasible set is nonempty.
DualCandidateD improve_dual_point(const VlpProblem& p, const DualCandidateD& c);

// ---------------------------------------------------------------------------
// Sampling of feasible dual points.

struct SamplerOptions {
  std::size_t count = 50;
  // Box bound on |lambda_i| and |z_j| for the vertex-sampling LP.
  long box = 10;
};

// Feasible points of B. lambda, z come from vertices (and convex
// combinations of two vertices) of the normalized (lambda, z) region under
// random objectives; U = lt z^T + W with W^T lambda = 0; v is a random vector
// projected onto lambda's orthogonal complement. Empty when B is empty.
std::vector<DualCandidateD> sample_dual_points(const VlpProblem& p, Rng& rng,
                                               const SamplerOptions& opts = {});

// Random convex combinations of the given vertices.
std::vector<QVector> sample_primal_points(const std::vector<QVector>& vertices,
                                          Rng& rng, std::size_t count);

}  // namespace vlp
