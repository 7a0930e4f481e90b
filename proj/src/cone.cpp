#include "vlp/cone.hpp"

#include <string>

#include "vlp/error.hpp"
#include "vlp/lp.hpp"

namespace vlp {
namespace {

void require_dim(const OrderingCone& k, const QVector& v, const char* what) {
  if (v.dim() != k.dim()) {
    throw DimensionError(std::string(what) + ": vector of dim " +
                         std::to_string(v.dim()) + " against cone of dim " +
                         std::to_string(k.dim()));
  }
}

bool is_unit_list(std::size_t dim, const std::vector<QVector>& gens) {
  if (gens.size() != dim) return false;
  for (std::size_t i = 0; i < dim; ++i) {
    if (gens[i] != QVector::unit(dim, i)) return false;
  }
  return true;
}

}  // namespace

OrderingCone::OrderingCone(std::size_t dim, std::vector<QVector> generators)
    : dim_(dim) {
  for (auto& g : generators) {
    if (g.dim() != dim) {
      throw DimensionError("cone generator of dim " + std::to_string(g.dim()) +
                           " in cone of dim " + std::to_string(dim));
    }
    if (!g.is_zero()) generators_.push_back(std::move(g));
  }
  generator_matrix_ = QMatrix::from_columns(generators_, dim_);
  orthant_ = is_unit_list(dim_, generators_);
}

OrderingCone OrderingCone::orthant(std::size_t dim) {
  std::vector<QVector> gens;
  for (std::size_t i = 0; i < dim; ++i) gens.push_back(QVector::unit(dim, i));
  OrderingCone k(dim, std::move(gens));
  k.witness_ = QVector::ones(dim);
  return k;
}

OrderingCone OrderingCone::negated() const {
  std::vector<QVector> gens;
  for (const auto& g : generators_) gens.push_back(-g);
  OrderingCone k(dim_, std::move(gens));
  if (witness_) k.witness_ = -*witness_;
  return k;
}

OrderingCone validate_cone(const OrderingCone& k) {
  if (k.generators().empty()) throw ConeError("trivial cone");
  // lambda = p - q with p, q >= 0; minimizing sum(p + q) gives the
  // L1-smallest witness.
  GeneralProgram g;
  const std::size_t p = g.add_variables(k.dim(), VarKind::NonNegative);
  const std::size_t q = g.add_variables(k.dim(), VarKind::NonNegative);
  for (std::size_t i = 0; i < 2 * k.dim(); ++i) g.set_cost(i, 1);
  for (const auto& gen : k.generators()) {
    QVector row(2 * k.dim());
    for (std::size_t i = 0; i < k.dim(); ++i) {
      row[p + i] = gen[i];
      row[q + i] = -gen[i];
    }
    g.add_row(std::move(row), RowSense::GreaterEqual, 1);
  }
  auto out = solve_general(g);
  const auto* opt = std::get_if<GeneralOptimal>(&out);
  if (!opt) throw ConeError("not pointed");
  OrderingCone v = k;
  v.witness_ = slice(opt->x, p, k.dim()) - slice(opt->x, q, k.dim());
  return v;
}

bool contains(const OrderingCone& k, const QVector& v) {
  require_dim(k, v, "contains");
  if (k.is_orthant()) return v.is_nonnegative();
  if (v.is_zero()) return true;
  if (k.generators().empty()) return false;
  auto res = solve_feasibility(k.generator_matrix(), v, {});
  return std::holds_alternative<QVector>(res);
}

bool in_dual(const OrderingCone& k, const QVector& lambda) {
  require_dim(k, lambda, "in_dual");
  for (const auto& g : k.generators()) {
    if (dot(lambda, g).sign() < 0) return false;
  }
  return true;
}

bool in_quasi_interior(const OrderingCone& k, const QVector& lambda) {
  require_dim(k, lambda, "in_quasi_interior");
  for (const auto& g : k.generators()) {
    if (dot(lambda, g).sign() <= 0) return false;
  }
  return true;
}

Order cmp(const OrderingCone& k, const QVector& v, const QVector& w) {
  require_dim(k, v, "cmp");
  require_dim(k, w, "cmp");
  if (v == w) return Order::Equal;
  if (contains(k, w - v)) return Order::Below;
  if (contains(k, v - w)) return Order::Above;
  return Order::Incomparable;
}

std::vector<QVector> min_elements_finite(const OrderingCone& k,
                                         const std::vector<QVector>& points) {
  for (const auto& p : points) require_dim(k, p, "min_elements_finite");
  std::vector<QVector> kept;
  for (const auto& p : points) {
    bool dominated = false;
    for (const auto& q : points) {
      if (q != p && contains(k, p - q)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(p);
  }
  return kept;
}

std::vector<QVector> max_elements_finite(const OrderingCone& k,
                                         const std::vector<QVector>& points) {
  return min_elements_finite(k.negated(), points);
}

std::optional<SeparationCertificate> separate_from_cone(
    const OrderingCone& k, const std::vector<QVector>& points,
    const std::vector<QVector>& rays) {
  for (const auto& p : points) require_dim(k, p, "separate_from_cone");
  for (const auto& r : rays) require_dim(k, r, "separate_from_cone");
  GeneralProgram g;
  g.add_variables(k.dim(), VarKind::Free);
  for (const auto& gen : k.generators()) {
    g.add_row(gen, RowSense::LessEqual, -1);
  }
  for (const auto& p : points) g.add_row(p, RowSense::GreaterEqual, 0);
  for (const auto& r : rays) g.add_row(r, RowSense::GreaterEqual, 0);
  auto gamma = find_feasible_point(std::move(g));
  if (!gamma) return std::nullopt;
  return SeparationCertificate{std::move(*gamma)};
}

QVector find_quasi_interior_point(const OrderingCone& k) {
  if (!k.is_validated()) {
    throw PreconditionError("find_quasi_interior_point: cone not validated");
  }
  return *k.witness();
}

QVector normalized_generator(const OrderingCone& k, const QVector& lambda) {
  require_dim(k, lambda, "normalized_generator");
  for (const auto& g : k.generators()) {
    const Rational s = dot(lambda, g);
    if (s.sign() > 0) return g * (Rational(1) / s);
  }
  throw PreconditionError(
      "normalized_generator: lambda has no positive generator product");
}

}  // namespace vlp
