#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "vlp/cone.hpp"
#include "vlp/linalg.hpp"

namespace vlp {

// Min L x  s.t.  x in {x >= 0 : A x = b}, ordered by the cone K.
class VlpProblem {
 public:
  // Throws DimensionError on inconsistent shapes and ConeError when the cone
  // fails validation.
  VlpProblem(QMatrix objective, QMatrix constraints, QVector rhs,
             OrderingCone cone);

  const QMatrix& L() const { return objective_; }
  const QMatrix& A() const { return constraints_; }
  const QVector& b() const { return rhs_; }
  const OrderingCone& K() const { return cone_; }

  std::size_t n() const { return objective_.cols(); }
  std::size_t m() const { return constraints_.rows(); }
  std::size_t k() const { return objective_.rows(); }

  friend bool operator==(const VlpProblem&, const VlpProblem&) = default;

 private:
  QMatrix objective_;
  QMatrix constraints_;
  QVector rhs_;
  OrderingCone cone_;
};

// Candidate for the dual with objective h(lambda, U, v) = U b + v.
struct DualCandidateD {
  QVector lambda;
  QMatrix U;
  QVector v;
  friend bool operator==(const DualCandidateD&, const DualCandidateD&) = default;
};

// Candidate for the dual abstract problem, h^J(lambda, U) = U b.
struct DualCandidateJ {
  QVector lambda;
  QMatrix U;
  friend bool operator==(const DualCandidateJ&, const DualCandidateJ&) = default;
};

// Candidate for the Lagrange-type dual, h^L(lambda, z, v) = v.
struct DualCandidateL {
  QVector lambda;
  QVector z;
  QVector v;
  friend bool operator==(const DualCandidateL&, const DualCandidateL&) = default;
};

// Isermann's dual requires K = R^k_+; the H flavor uses K itself in the
// no-domination condition.
enum class UFlavor { Isermann, H };

struct DualCandidateU {
  QMatrix U;
  UFlavor flavor = UFlavor::H;
  friend bool operator==(const DualCandidateU&, const DualCandidateU&) = default;
};

// Parses the problem JSON format. Throws ParseError naming the field.
VlpProblem load_problem(std::string_view text);
std::string serialize_problem(const VlpProblem& p);

QVector objective_D(const DualCandidateD& c, const VlpProblem& p);
QVector objective_J(const DualCandidateJ& c, const VlpProblem& p);
QVector objective_L(const DualCandidateL& c);

// L - U A.
QMatrix reduced_objective(const VlpProblem& p, const QMatrix& U);

// x >= 0 and A x = b.
bool primal_feasible(const VlpProblem& p, const QVector& x);

}  // namespace vlp
