#include "vlp/duality.hpp"

#include <string>

#include "vlp/error.hpp"
#include "vlp/lp.hpp"

namespace vlp {
namespace {

void require_k(const VlpProblem& p, const QVector& v, const char* what) {
  if (v.dim() != p.k()) {
    throw DimensionError(std::string(what) + ": vector of dim " +
                         std::to_string(v.dim()) + ", expected k = " +
                         std::to_string(p.k()));
  }
}

enum class Domination { None, Dominated, Unattainable };

// Is `target` attained by M x, x >= 0, and if so, can it be pushed down
// along the cone? Solves max sum(mu) s.t. M x + G mu = target, x, mu >= 0.
Domination image_domination(const QMatrix& M, const QVector& target,
                            const OrderingCone& cone) {
  const std::size_t n = M.cols(), k = M.rows();
  const std::size_t r = cone.num_generators();
  const QMatrix& G = cone.generator_matrix();
  LinearProgram lp;
  lp.objective = QVector(n + r);
  for (std::size_t i = 0; i < r; ++i) lp.objective[n + i] = -1;
  lp.eq_matrix = QMatrix(k, n + r);
  lp.eq_rhs = target;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) lp.eq_matrix(i, j) = M(i, j);
    for (std::size_t j = 0; j < r; ++j) lp.eq_matrix(i, n + j) = G(i, j);
  }
  const LpOutcome out = solve_lp(lp);
  if (std::holds_alternative<LpInfeasible>(out)) return Domination::Unattainable;
  if (const auto* opt = std::get_if<LpOptimal>(&out)) {
    if (opt->value.is_zero()) return Domination::None;
  }
  return Domination::Dominated;
}

// Rows lambda^T g_i >= 1 over the first k variables.
void add_normalization(GeneralProgram& g, const OrderingCone& cone) {
  for (const auto& gen : cone.generators()) {
    g.add_row(gen, RowSense::GreaterEqual, 1);
  }
}

// Rows (L^T lambda - A^T z)_j >= 0 over variables (lambda, z).
void add_reduced_cost_rows(GeneralProgram& g, const VlpProblem& p) {
  for (std::size_t j = 0; j < p.n(); ++j) {
    QVector row(p.k() + p.m());
    for (std::size_t i = 0; i < p.k(); ++i) row[i] = p.L()(i, j);
    for (std::size_t i = 0; i < p.m(); ++i) row[p.k() + i] = -p.A()(i, j);
    g.add_row(std::move(row), RowSense::GreaterEqual, 0);
  }
}

GeneralProgram lambda_z_system(const VlpProblem& p) {
  GeneralProgram g;
  g.add_variables(p.k() + p.m(), VarKind::Free);
  add_normalization(g, p.K());
  add_reduced_cost_rows(g, p);
  return g;
}

std::optional<MembershipWitness> solve_lambda_z(GeneralProgram g,
                                                const VlpProblem& p) {
  auto sol = find_feasible_point(std::move(g));
  if (!sol) return std::nullopt;
  return MembershipWitness{slice(*sol, 0, p.k()), slice(*sol, p.k(), p.m())};
}

// Solves the (lambda, z) system with the extra row d^T lambda - b^T z
// (sense) 0.
std::optional<MembershipWitness> image_system(const VlpProblem& p,
                                              const QVector& d,
                                              RowSense sense) {
  GeneralProgram g = lambda_z_system(p);
  g.add_row(concat(d, -p.b()), sense, 0);
  return solve_lambda_z(std::move(g), p);
}

}  // namespace

bool check_feasible_D(const VlpProblem& p, const DualCandidateD& c) {
  require_k(p, c.lambda, "check_feasible_D");
  require_k(p, c.v, "check_feasible_D");
  const QMatrix M = reduced_objective(p, c.U);
  return in_quasi_interior(p.K(), c.lambda) && dot(c.lambda, c.v).is_zero() &&
         transpose_times(M, c.lambda).is_nonnegative();
}

bool check_feasible_J(const VlpProblem& p, const DualCandidateJ& c) {
  require_k(p, c.lambda, "check_feasible_J");
  const QMatrix M = reduced_objective(p, c.U);
  return in_quasi_interior(p.K(), c.lambda) &&
         transpose_times(M, c.lambda).is_nonnegative();
}

bool check_feasible_L(const VlpProblem& p, const DualCandidateL& c) {
  require_k(p, c.lambda, "check_feasible_L");
  require_k(p, c.v, "check_feasible_L");
  if (c.z.dim() != p.m()) {
    throw DimensionError("check_feasible_L: z has dim " +
                         std::to_string(c.z.dim()) + ", expected m = " +
                         std::to_string(p.m()));
  }
  const QVector reduced =
      transpose_times(p.L(), c.lambda) - transpose_times(p.A(), c.z);
  return in_quasi_interior(p.K(), c.lambda) &&
         dot(c.lambda, c.v) - dot(c.z, p.b()) <= 0 && reduced.is_nonnegative();
}

bool check_feasible_U(const VlpProblem& p, const DualCandidateU& c) {
  const QMatrix M = reduced_objective(p, c.U);
  if (c.flavor == UFlavor::Isermann) {
    if (!p.K().is_orthant()) {
      throw PreconditionError(
          "Isermann dual is defined only for the nonnegative orthant");
    }
    return image_domination(M, QVector(p.k()), OrderingCone::orthant(p.k())) ==
           Domination::None;
  }
  return image_domination(M, QVector(p.k()), p.K()) == Domination::None;
}

std::optional<QVector> lemma2_lambda_exists(const VlpProblem& p,
                                            const QMatrix& U) {
  const QMatrix M = reduced_objective(p, U);
  GeneralProgram g;
  g.add_variables(p.k(), VarKind::Free);
  add_normalization(g, p.K());
  for (std::size_t j = 0; j < p.n(); ++j) {
    g.add_row(M.column(j), RowSense::GreaterEqual, 0);
  }
  return find_feasible_point(std::move(g));
}

DualCandidateD construct_dual_solution(const VlpProblem& p, const QVector& xbar,
                                       const EfficiencyCertificate& cert) {
  if (!cert.efficient() || !certificate_valid(p, xbar, cert)) {
    throw PreconditionError("construct_dual_solution: invalid scalarization "
                            "certificate for " + xbar.str());
  }
  const QVector& lambda = *cert.lambda;
  const QVector lt = normalized_generator(p.K(), lambda);
  DualCandidateD c;
  c.lambda = lambda;
  c.U = -QMatrix::outer(lt, *cert.eta);
  c.v = p.L() * xbar - c.U * p.b();

  const QMatrix M = reduced_objective(p, c.U);
  if (!check_feasible_D(p, c) || objective_D(c, p) != p.L() * xbar ||
      !dot(xbar, transpose_times(M, lambda)).is_zero()) {
    throw InternalError("construct_dual_solution: postcondition failed");
  }
  return c;
}

std::optional<QVector> recover_primal(const VlpProblem& p, const QVector& d) {
  require_k(p, d, "recover_primal");
  QMatrix stacked(p.m() + p.k(), p.n());
  for (std::size_t j = 0; j < p.n(); ++j) {
    for (std::size_t i = 0; i < p.m(); ++i) stacked(i, j) = p.A()(i, j);
    for (std::size_t i = 0; i < p.k(); ++i) stacked(p.m() + i, j) = p.L()(i, j);
  }
  auto res = solve_feasibility(stacked, concat(p.b(), d), {});
  if (auto* x = std::get_if<QVector>(&res)) return std::move(*x);
  return std::nullopt;
}

MembershipVerdict membership_hB(const VlpProblem& p, const QVector& d) {
  require_k(p, d, "membership_hB");
  MembershipVerdict verdict;
  verdict.set = ImageSet::hB;
  auto w = image_system(p, d, RowSense::Equal);
  if (!w) return verdict;
  const QVector lt = normalized_generator(p.K(), w->lambda);
  DualCandidateD c;
  c.lambda = w->lambda;
  c.U = QMatrix::outer(lt, w->z);
  c.v = d - c.U * p.b();
  if (!check_feasible_D(p, c) || objective_D(c, p) != d) {
    throw InternalError("membership_hB: reconstructed candidate fails");
  }
  verdict.member = true;
  verdict.witness = std::move(*w);
  verdict.candidate_D = std::move(c);
  return verdict;
}

MembershipVerdict membership_hL(const VlpProblem& p, const QVector& d) {
  require_k(p, d, "membership_hL");
  MembershipVerdict verdict;
  verdict.set = ImageSet::hL;
  auto w = image_system(p, d, RowSense::LessEqual);
  if (!w) return verdict;
  DualCandidateL c{w->lambda, w->z, d};
  if (!check_feasible_L(p, c)) {
    throw InternalError("membership_hL: reconstructed candidate fails");
  }
  verdict.member = true;
  verdict.witness = std::move(*w);
  verdict.candidate_L = std::move(c);
  return verdict;
}

MembershipVerdict membership_hJ(const VlpProblem& p, const QVector& d) {
  require_k(p, d, "membership_hJ");
  MembershipVerdict verdict;
  verdict.set = ImageSet::hJ;
  DualCandidateJ c;
  if (p.b().is_zero()) {
    if (!d.is_zero()) return verdict;
    auto w = dual_B_witness(p);
    if (!w) return verdict;
    c.lambda = w->lambda;
    c.U = QMatrix::outer(normalized_generator(p.K(), w->lambda), w->z);
    verdict.witness = std::move(*w);
  } else {
    auto w = image_system(p, d, RowSense::Equal);
    if (!w) return verdict;
    // U = d u^T + lt (z - (lambda^T d) u)^T with u^T b = 1 gives U b = d and
    // U^T lambda = z.
    const QVector u = p.b() * (Rational(1) / dot(p.b(), p.b()));
    const QVector lt = normalized_generator(p.K(), w->lambda);
    c.lambda = w->lambda;
    c.U = QMatrix::outer(d, u) +
          QMatrix::outer(lt, w->z - u * dot(w->lambda, d));
    verdict.witness = std::move(*w);
  }
  if (!check_feasible_J(p, c) || objective_J(c, p) != d) {
    throw InternalError("membership_hJ: reconstructed candidate fails");
  }
  verdict.member = true;
  verdict.candidate_J = std::move(c);
  return verdict;
}

bool h_H_value_membership(const VlpProblem& p, const QMatrix& U,
                          const QVector& d) {
  require_k(p, d, "h_H_value_membership");
  if (!check_feasible_U(p, DualCandidateU{U, UFlavor::H})) {
    throw PreconditionError("U not feasible for D^H");
  }
  const QMatrix M = reduced_objective(p, U);
  return image_domination(M, d - U * p.b(), p.K()) == Domination::None;
}

DualCandidateD map_DH_to_D(const VlpProblem& p, const QMatrix& U,
                           const QVector& xbar) {
  if (!check_feasible_U(p, DualCandidateU{U, UFlavor::H})) {
    throw PreconditionError("U not feasible for D^H");
  }
  if (xbar.dim() != p.n() || !xbar.is_nonnegative()) {
    throw PreconditionError("map_DH_to_D: xbar must be a nonnegative n-vector");
  }
  const QMatrix M = reduced_objective(p, U);
  const QVector value = M * xbar;
  if (image_domination(M, value, p.K()) != Domination::None) {
    throw PreconditionError("map_DH_to_D: (L - U A) xbar is not minimal");
  }
  GeneralProgram g;
  g.add_variables(p.k(), VarKind::Free);
  add_normalization(g, p.K());
  for (std::size_t j = 0; j < p.n(); ++j) {
    g.add_row(M.column(j), RowSense::GreaterEqual, 0);
  }
  g.add_row(value, RowSense::Equal, 0);
  auto gamma = find_feasible_point(std::move(g));
  if (!gamma) throw InternalError("map_DH_to_D: no supporting gamma found");
  DualCandidateD c{std::move(*gamma), U, value};
  if (!check_feasible_D(p, c)) {
    throw InternalError("map_DH_to_D: mapped candidate infeasible");
  }
  return c;
}

DualCandidateL map_D_to_DL(const VlpProblem& p, const DualCandidateD& c) {
  if (!check_feasible_D(p, c)) {
    throw PreconditionError("map_D_to_DL: candidate not feasible for D");
  }
  DualCandidateL out{c.lambda, transpose_times(c.U, c.lambda),
                     objective_D(c, p)};
  if (!check_feasible_L(p, out) || dot(out.lambda, out.v) != dot(out.z, p.b())) {
    throw InternalError("map_D_to_DL: postcondition failed");
  }
  return out;
}

std::optional<MembershipWitness> dual_B_witness(const VlpProblem& p) {
  return solve_lambda_z(lambda_z_system(p), p);
}

bool dual_B_nonempty(const VlpProblem& p) {
  return dual_B_witness(p).has_value();
}

std::optional<QVector> primal_farkas(const VlpProblem& p) {
  LinearProgram lp{QVector(p.n()), p.A(), p.b()};
  auto out = solve_lp(lp);
  if (auto* inf = std::get_if<LpInfeasible>(&out)) return std::move(inf->farkas);
  return std::nullopt;
}

DualCandidateD improve_dual_point(const VlpProblem& p,
                                  const DualCandidateD& c) {
  if (!check_feasible_D(p, c)) {
    throw PreconditionError("improve_dual_point: candidate not feasible");
  }
  auto zbar = primal_farkas(p);
  if (!zbar) {
    throw PreconditionError("improve_dual_point: primal feasible set is "
                            "nonempty");
  }
  const QVector lt = normalized_generator(p.K(), c.lambda);
  return DualCandidateD{c.lambda, c.U + QMatrix::outer(lt, *zbar), c.v};
}

std::vector<DualCandidateD> sample_dual_points(const VlpProblem& p, Rng& rng,
                                               const SamplerOptions& opts) {
  std::vector<DualCandidateD> out;
  auto seed = dual_B_witness(p);
  if (!seed || opts.count == 0) return out;
  const std::size_t k = p.k(), m = p.m();

  Rational box(opts.box);
  for (const auto& x : concat(seed->lambda, seed->z)) {
    if (abs(x) * 2 + 1 > box) box = abs(x) * 2 + 1;
  }
  GeneralProgram region = lambda_z_system(p);
  for (std::size_t i = 0; i < k + m; ++i) {
    region.add_row(QVector::unit(k + m, i), RowSense::LessEqual, box);
    region.add_row(QVector::unit(k + m, i), RowSense::GreaterEqual, -box);
  }

  std::vector<QVector> pool{concat(seed->lambda, seed->z)};
  const std::size_t pool_size = std::min<std::size_t>(8, opts.count);
  for (std::size_t s = 0; s < pool_size; ++s) {
    for (std::size_t i = 0; i < k + m; ++i) {
      region.set_cost(i, rng.small_rational());
    }
    auto res = solve_general(region);
    if (auto* opt = std::get_if<GeneralOptimal>(&res)) pool.push_back(opt->x);
  }

  while (out.size() < opts.count) {
    // Convex combination of up to three pool points.
    QVector point(k + m);
    Rational total;
    for (int t = 0; t < 3; ++t) {
      const auto& q = pool[static_cast<std::size_t>(
          rng.uniform(0, static_cast<long>(pool.size()) - 1))];
      const Rational w(rng.uniform(t == 0 ? 1 : 0, 4));
      point += q * w;
      total += w;
    }
    point *= Rational(1) / total;
    const QVector lambda = slice(point, 0, k);
    const QVector z = slice(point, k, m);
    const QVector lt = normalized_generator(p.K(), lambda);

    QMatrix U = QMatrix::outer(lt, z);
    if (rng.chance(1, 2)) {
      QMatrix noise(k, m);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < m; ++j) noise(i, j) = rng.small_rational();
      }
      U += noise - QMatrix::outer(lt, transpose_times(noise, lambda));
    }
    QVector r(k);
    for (auto& x : r) x = rng.small_rational();
    QVector v = r - lt * dot(lambda, r);

    DualCandidateD c{lambda, std::move(U), std::move(v)};
    if (!check_feasible_D(p, c)) {
      throw InternalError("sample_dual_points: produced an infeasible point");
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<QVector> sample_primal_points(const std::vector<QVector>& vertices,
                                          Rng& rng, std::size_t count) {
  std::vector<QVector> out;
  if (vertices.empty()) return out;
  const std::size_t n = vertices.front().dim();
  for (std::size_t s = 0; s < count; ++s) {
    QVector x(n);
    Rational total;
    for (const auto& v : vertices) {
      const Rational w(rng.uniform(0, 3));
      if (w.is_zero()) continue;
      x += v * w;
      total += w;
    }
    if (total.is_zero()) {
      x = vertices[static_cast<std::size_t>(
          rng.uniform(0, static_cast<long>(vertices.size()) - 1))];
    } else {
      x *= Rational(1) / total;
    }
    out.push_back(std::move(x));
  }
  return out;
}

}  // namespace vlp
