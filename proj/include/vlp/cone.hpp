#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "vlp/linalg.hpp"

namespace vlp {

// Polyhedral cone K = cone{g_1, ..., g_r} in R^k, V-represented.
//
// Zero generators are dropped at construction. A cone becomes usable as an
// ordering cone only through validate_cone, which proves pointedness by
// exhibiting a witness lambda with lambda^T g_i >= 1 for every generator.
class OrderingCone {
 public:
  OrderingCone(std::size_t dim, std::vector<QVector> generators);

  // R^k_+ generated by the unit vectors, already validated.
  static OrderingCone orthant(std::size_t dim);

  std::size_t dim() const { return dim_; }
  const std::vector<QVector>& generators() const { return generators_; }
  std::size_t num_generators() const { return generators_.size(); }

  // k x r matrix whose columns are the generators.
  const QMatrix& generator_matrix() const { return generator_matrix_; }

  bool is_validated() const { return witness_.has_value(); }
  const std::optional<QVector>& witness() const { return witness_; }

  // Generators are exactly e_1..e_k in order.
  bool is_orthant() const { return orthant_; }

  // -K, with the negated witness carried over.
  OrderingCone negated() const;

  friend bool operator==(const OrderingCone& a, const OrderingCone& b) {
    return a.dim_ == b.dim_ && a.generators_ == b.generators_;
  }

 private:
  friend OrderingCone validate_cone(const OrderingCone& k);

  std::size_t dim_;
  std::vector<QVector> generators_;
  QMatrix generator_matrix_;
  std::optional<QVector> witness_;
  bool orthant_ = false;
};

// Throws ConeError "trivial cone" when no nonzero generator remains and
// "not pointed" when no lambda with lambda^T g_i >= 1 exists. The stored
// witness minimizes ||lambda||_1 over that system.
OrderingCone validate_cone(const OrderingCone& k);

// v in K, i.e. some mu >= 0 has G mu = v.
bool contains(const OrderingCone& k, const QVector& v);

// lambda^T g_i >= 0 for all generators.
bool in_dual(const OrderingCone& k, const QVector& lambda);

// lambda^T g_i > 0 for all generators. Matches the quasi-interior of K*
// because K is pointed with nonzero generators.
bool in_quasi_interior(const OrderingCone& k, const QVector& lambda);

enum class Order {
  Equal,
  Below,  // v <=_K w, v != w
  Above,  // w <=_K v, v != w
  Incomparable,
};

Order cmp(const OrderingCone& k, const QVector& v, const QVector& w);

// Points p for which no listed q != p has q <=_K p. Keeps every list
// position whose value survives, so duplicates stay.
std::vector<QVector> min_elements_finite(const OrderingCone& k,
                                         const std::vector<QVector>& points);
std::vector<QVector> max_elements_finite(const OrderingCone& k,
                                         const std::vector<QVector>& points);

struct SeparationCertificate {
  // gamma^T g_i <= -1 on every cone generator, gamma^T m >= 0 on every
  // point and ray of the separated set.
  QVector gamma;
};

// Separates M = conv(points) + cone(rays) from K when M meets K only at 0.
std::optional<SeparationCertificate> separate_from_cone(
    const OrderingCone& k, const std::vector<QVector>& points,
    const std::vector<QVector>& rays);

// lambda with lambda^T g_i >= 1 for all generators. Requires a validated
// cone.
QVector find_quasi_interior_point(const OrderingCone& k);

// g / (lambda^T g) for the first generator g with lambda^T g > 0, so the
// result lies in K \ {0} and has unit product with lambda.
QVector normalized_generator(const OrderingCone& k, const QVector& lambda);

}  // namespace vlp
