// Independent certificate checks for LpOutcome. Written with plain loops
// over the raw entries so that no arithmetic path is shared with the solver.

#include <string>

#include "vlp/lp.hpp"

namespace vlp {
namespace {

Rational row_dot(const LinearProgram& p, std::size_t i, const QVector& x) {
  Rational s;
  for (std::size_t j = 0; j < p.num_vars(); ++j) s += p.eq_matrix(i, j) * x[j];
  return s;
}

Rational col_dot(const LinearProgram& p, std::size_t j, const QVector& y) {
  Rational s;
  for (std::size_t i = 0; i < p.num_rows(); ++i) s += p.eq_matrix(i, j) * y[i];
  return s;
}

Rational plain_dot(const QVector& a, const QVector& b) {
  Rational s;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

std::string check_primal_point(const LinearProgram& p, const QVector& x,
                               const QVector& rhs, const char* what) {
  if (x.dim() != p.num_vars()) return std::string(what) + ": wrong dimension";
  for (std::size_t j = 0; j < x.dim(); ++j) {
    if (x[j].sign() < 0) {
      return std::string(what) + ": negative entry " + std::to_string(j);
    }
  }
  for (std::size_t i = 0; i < p.num_rows(); ++i) {
    if (row_dot(p, i, x) != rhs[i]) {
      return std::string(what) + ": row " + std::to_string(i) + " violated";
    }
  }
  return {};
}

}  // namespace

std::string verify_outcome(const LinearProgram& p, const LpOutcome& outcome) {
  if (const auto* opt = std::get_if<LpOptimal>(&outcome)) {
    if (auto err = check_primal_point(p, opt->x, p.eq_rhs, "optimal x");
        !err.empty()) {
      return err;
    }
    if (opt->y.dim() != p.num_rows()) return "multipliers: wrong dimension";
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
      if ((p.objective[j] - col_dot(p, j, opt->y)).sign() < 0) {
        return "reduced cost negative at column " + std::to_string(j);
      }
    }
    const Rational primal = plain_dot(p.objective, opt->x);
    const Rational dual = plain_dot(p.eq_rhs, opt->y);
    if (primal != dual) return "duality gap: c^T x != b^T y";
    if (primal != opt->value) return "reported value differs from c^T x";
    return {};
  }
  if (const auto* inf = std::get_if<LpInfeasible>(&outcome)) {
    if (inf->farkas.dim() != p.num_rows()) return "farkas: wrong dimension";
    for (std::size_t j = 0; j < p.num_vars(); ++j) {
      if (col_dot(p, j, inf->farkas).sign() > 0) {
        return "farkas: A^T f > 0 at column " + std::to_string(j);
      }
    }
    if (plain_dot(p.eq_rhs, inf->farkas).sign() <= 0) {
      return "farkas: b^T f <= 0";
    }
    return {};
  }
  const auto& unb = std::get<LpUnbounded>(outcome);
  if (auto err = check_primal_point(p, unb.x0, p.eq_rhs, "unbounded x0");
      !err.empty()) {
    return err;
  }
  if (auto err = check_primal_point(p, unb.ray, QVector(p.num_rows()), "ray");
      !err.empty()) {
    return err;
  }
  if (plain_dot(p.objective, unb.ray).sign() >= 0) return "ray: c^T ray >= 0";
  return {};
}

}  // namespace vlp
