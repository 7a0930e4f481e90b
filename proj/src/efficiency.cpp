#include "vlp/efficiency.hpp"

#include <algorithm>
#include <string>

#include "vlp/error.hpp"
#include "vlp/lp.hpp"

namespace vlp {
namespace {

void require_feasible(const VlpProblem& p, const QVector& xbar,
                      const char* what) {
  if (!primal_feasible(p, xbar)) {
    throw PreconditionError(std::string(what) + ": point " + xbar.str() +
                            " is not primal feasible");
  }
}

// Equality system [A 0; L G] over (x, mu) with rhs (b, target) and
// objective -sum(mu).
LinearProgram domination_lp(const VlpProblem& p, const QVector& target) {
  const std::size_t n = p.n(), m = p.m(), k = p.k();
  const std::size_t r = p.K().num_generators();
  const QMatrix& G = p.K().generator_matrix();
  LinearProgram lp;
  lp.objective = QVector(n + r);
  for (std::size_t i = 0; i < r; ++i) lp.objective[n + i] = -1;
  lp.eq_matrix = QMatrix(m + k, n + r);
  lp.eq_rhs = QVector(m + k);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) lp.eq_matrix(i, j) = p.A()(i, j);
    lp.eq_rhs[i] = p.b()[i];
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) lp.eq_matrix(m + i, j) = p.L()(i, j);
    for (std::size_t j = 0; j < r; ++j) lp.eq_matrix(m + i, n + j) = G(i, j);
    lp.eq_rhs[m + i] = target[i];
  }
  return lp;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t r = idx.size();
  for (std::size_t i = r; i-- > 0;) {
    if (idx[i] < n - r + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// C(n, r), saturating just above `cap`.
std::size_t binomial_capped(std::size_t n, std::size_t r, std::size_t cap) {
  r = std::min(r, n - r);
  unsigned __int128 c = 1;
  for (std::size_t i = 1; i <= r; ++i) {
    c = c * (n - r + i) / i;
    if (c > cap) return cap + 1;
  }
  return static_cast<std::size_t>(c);
}

}  // namespace

EfficiencyCertificate is_efficient(const VlpProblem& p, const QVector& xbar) {
  require_feasible(p, xbar, "is_efficient");
  const std::size_t n = p.n(), m = p.m(), k = p.k();
  const LinearProgram lp = domination_lp(p, p.L() * xbar);
  const LpOutcome out = solve_lp(lp);

  EfficiencyCertificate cert;
  if (const auto* opt = std::get_if<LpOptimal>(&out)) {
    if (opt->value.is_zero()) {
      cert.kind = EfficiencyKind::EfficientWithScalarization;
      cert.eta = -slice(opt->y, 0, m);
      cert.lambda = -slice(opt->y, m, k);
      return cert;
    }
    cert.kind = EfficiencyKind::Dominated;
    cert.dominator = slice(opt->x, 0, n);
    return cert;
  }
  if (const auto* unb = std::get_if<LpUnbounded>(&out)) {
    cert.kind = EfficiencyKind::UnboundedDomination;
    cert.dominator = slice(unb->x0 + unb->ray, 0, n);
    return cert;
  }
  throw InternalError("is_efficient: domination LP infeasible at a feasible "
                      "point");
}

std::optional<EfficiencyCertificate> proper_efficiency_certificate(
    const VlpProblem& p, const QVector& xbar) {
  require_feasible(p, xbar, "proper_efficiency_certificate");
  const std::size_t n = p.n(), m = p.m(), k = p.k();
  GeneralProgram g;
  const std::size_t lam = g.add_variables(k, VarKind::Free);
  const std::size_t eta = g.add_variables(m, VarKind::Free);
  for (const auto& gen : p.K().generators()) {
    g.add_row(gen, RowSense::GreaterEqual, 1);
  }
  for (std::size_t j = 0; j < n; ++j) {
    QVector row(k + m);
    for (std::size_t i = 0; i < k; ++i) row[lam + i] = p.L()(i, j);
    for (std::size_t i = 0; i < m; ++i) row[eta + i] = p.A()(i, j);
    g.add_row(std::move(row), RowSense::GreaterEqual, 0);
  }
  g.add_row(concat(p.L() * xbar, p.b()), RowSense::Equal, 0);

  auto sol = find_feasible_point(std::move(g));
  if (!sol) return std::nullopt;
  EfficiencyCertificate cert;
  cert.lambda = slice(*sol, lam, k);
  cert.eta = slice(*sol, eta, m);
  return cert;
}

std::optional<EfficiencyCertificate> certificate_for_weights(
    const VlpProblem& p, const QVector& xbar, const QVector& lambda) {
  require_feasible(p, xbar, "certificate_for_weights");
  if (!in_quasi_interior(p.K(), lambda)) return std::nullopt;
  // sup -b^T eta  s.t.  L^T lambda + A^T eta >= 0, written as a minimization.
  const QVector weighted = transpose_times(p.L(), lambda);
  GeneralProgram g;
  g.add_variables(p.m(), VarKind::Free);
  for (std::size_t i = 0; i < p.m(); ++i) g.set_cost(i, p.b()[i]);
  for (std::size_t j = 0; j < p.n(); ++j) {
    g.add_row(p.A().column(j), RowSense::GreaterEqual, -weighted[j]);
  }
  auto out = solve_general(g);
  const auto* opt = std::get_if<GeneralOptimal>(&out);
  if (!opt) return std::nullopt;
  if (dot(lambda, p.L() * xbar) + opt->value != 0) return std::nullopt;
  EfficiencyCertificate cert;
  cert.lambda = lambda;
  cert.eta = opt->x;
  return cert;
}

bool certificate_valid(const VlpProblem& p, const QVector& xbar,
                       const EfficiencyCertificate& cert) {
  if (!primal_feasible(p, xbar)) return false;
  if (cert.efficient()) {
    if (!cert.lambda || !cert.eta) return false;
    const QVector& lambda = *cert.lambda;
    const QVector& eta = *cert.eta;
    if (lambda.dim() != p.k() || eta.dim() != p.m()) return false;
    if (!in_quasi_interior(p.K(), lambda)) return false;
    const QVector reduced =
        transpose_times(p.L(), lambda) + transpose_times(p.A(), eta);
    if (!reduced.is_nonnegative()) return false;
    return dot(lambda, p.L() * xbar) + dot(eta, p.b()) == 0;
  }
  if (!cert.dominator) return false;
  const QVector& d = *cert.dominator;
  if (d.dim() != p.n() || !primal_feasible(p, d)) return false;
  return cmp(p.K(), p.L() * d, p.L() * xbar) == Order::Below;
}

std::vector<QVector> enumerate_basic_solutions(const QMatrix& a,
                                               const QVector& b,
                                               std::size_t limit) {
  if (a.rows() != b.dim()) {
    throw DimensionError("enumerate_basic_solutions: A has " +
                         std::to_string(a.rows()) + " rows, b has dim " +
                         std::to_string(b.dim()));
  }
  const std::size_t n = a.cols();
  const std::size_t r = rank(a);
  const std::size_t bases = binomial_capped(n, r, limit);
  if (bases > limit) {
    throw LimitError("vertex enumeration needs more than " +
                     std::to_string(limit) +
                     " candidate bases; shrink the instance (fewer variables "
                     "or constraints)");
  }
  std::vector<QVector> found;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  do {
    const QMatrix basis = select_columns(a, idx);
    const LinearSolution sol = solve_linear_system(basis, b);
    if (!sol.particular || !sol.nullspace.empty()) continue;
    if (!sol.particular->is_nonnegative()) continue;
    QVector x(n);
    for (std::size_t i = 0; i < r; ++i) x[idx[i]] = (*sol.particular)[i];
    found.push_back(std::move(x));
  } while (next_combination(idx, n));
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

std::vector<QVector> enumerate_vertices(const VlpProblem& p,
                                        std::size_t limit) {
  return enumerate_basic_solutions(p.A(), p.b(), limit);
}

std::vector<EfficientVertex> efficient_vertices(const VlpProblem& p,
                                                std::size_t limit) {
  std::vector<EfficientVertex> out;
  for (auto& v : enumerate_vertices(p, limit)) {
    if (!is_efficient(p, v).efficient()) continue;
    auto cert = proper_efficiency_certificate(p, v);
    if (!cert) {
      throw InternalError("efficient vertex " + v.str() +
                          " has no scalarization certificate");
    }
    out.push_back({std::move(v), std::move(*cert)});
  }
  return out;
}

bool recession_image_pointed(const VlpProblem& p) {
  const std::size_t n = p.n();
  const std::size_t r = p.K().num_generators();
  LinearProgram lp = domination_lp(p, QVector(p.k()));
  for (std::size_t i = 0; i < p.m(); ++i) lp.eq_rhs[i] = 0;
  // Append sum(x) + sum(mu) + s = 1.
  const std::size_t rows = lp.eq_matrix.rows();
  QMatrix grown(rows + 1, n + r + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n + r; ++j) grown(i, j) = lp.eq_matrix(i, j);
  }
  for (std::size_t j = 0; j <= n + r; ++j) grown(rows, j) = 1;
  lp.eq_matrix = std::move(grown);
  lp.eq_rhs = concat(lp.eq_rhs, QVector{1});
  lp.objective = concat(lp.objective, QVector{0});
  const auto out = solve_lp(lp);
  const auto* opt = std::get_if<LpOptimal>(&out);
  if (!opt) throw InternalError("recession_image_pointed: LP not optimal");
  return opt->value.is_zero();
}

bool feasible_set_bounded(const VlpProblem& p) {
  const std::size_t n = p.n();
  LinearProgram lp;
  lp.objective = QVector(n + 1);
  for (std::size_t j = 0; j < n; ++j) lp.objective[j] = -1;
  lp.eq_matrix = QMatrix(p.m() + 1, n + 1);
  lp.eq_rhs = QVector(p.m() + 1);
  for (std::size_t i = 0; i < p.m(); ++i) {
    for (std::size_t j = 0; j < n; ++j) lp.eq_matrix(i, j) = p.A()(i, j);
  }
  for (std::size_t j = 0; j <= n; ++j) lp.eq_matrix(p.m(), j) = 1;
  lp.eq_rhs[p.m()] = 1;
  const auto out = solve_lp(lp);
  const auto* opt = std::get_if<LpOptimal>(&out);
  if (!opt) throw InternalError("feasible_set_bounded: LP not optimal");
  return opt->value.is_zero();
}

long Rng::uniform(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit =
      std::mt19937_64::max() - (std::mt19937_64::max() % span);
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<long>(draw % span);
}

Rational Rng::small_rational() {
  const long num = uniform(-9, 9);
  const long den = uniform(1, 3);
  return Rational(Integer(num), Integer(den));
}

VlpProblem random_instance(Rng& rng) {
  const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 6));
  const std::size_t m = static_cast<std::size_t>(rng.uniform(1, 3));
  const std::size_t k = static_cast<std::size_t>(rng.uniform(2, 3));

  auto sparse_entry = [&] {
    return rng.chance(1, 4) ? Rational() : rng.small_rational();
  };
  QMatrix L(k, n), A(m, n);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) L(i, j) = sparse_entry();
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) A(i, j) = sparse_entry();
  }
  // Mostly consistent right-hand sides so the feasible set is often
  // nonempty; the rest are free draws.
  QVector b(m);
  if (rng.chance(3, 4)) {
    QVector x0(n);
    for (auto& x : x0) x = rng.chance(1, 3) ? Rational() : abs(rng.small_rational());
    b = A * x0;
  } else {
    for (auto& x : b) x = rng.small_rational();
  }

  if (rng.chance(1, 2)) {
    return VlpProblem(std::move(L), std::move(A), std::move(b),
                      OrderingCone::orthant(k));
  }
  for (;;) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 4));
    std::vector<QVector> gens(r, QVector(k));
    for (auto& g : gens) {
      for (auto& x : g) x = rng.small_rational();
    }
    OrderingCone cone(k, std::move(gens));
    if (cone.generators().empty()) continue;
    try {
      return VlpProblem(L, A, b, validate_cone(cone));
    } catch (const ConeError&) {
    }
  }
}

}  // namespace vlp
