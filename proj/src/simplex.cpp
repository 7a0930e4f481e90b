// Dense two-phase tableau simplex over the rationals.
//
// The tableau holds B^{-1} [A' | I | b'] where A' = S A, b' = S b and S flips
// the sign of every row with negative rhs so the artificial basis starts
// feasible. The artificial block of the tableau is therefore B^{-1} itself,
// from which both the phase-I Farkas certificate and the phase-II
// multipliers are read off.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "vlp/error.hpp"
#include "vlp/lp.hpp"

namespace vlp {
namespace {

using Row = std::vector<Rational>;

class Tableau {
 public:
  Tableau(const LinearProgram& p) : n_(p.num_vars()), m_(p.num_rows()) {
    rows_.assign(m_, Row(n_ + m_ + 1));
    sign_.assign(m_, 1);
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (p.eq_rhs[i].sign() < 0) sign_[i] = -1;
      const Rational s(sign_[i]);
      for (std::size_t j = 0; j < n_; ++j) {
        if (!p.eq_matrix(i, j).is_zero()) rows_[i][j] = s * p.eq_matrix(i, j);
      }
      rows_[i][n_ + i] = 1;
      rows_[i][rhs_col()] = s * p.eq_rhs[i];
      basis_[i] = n_ + i;
    }
  }

  enum class Status { Optimal, Unbounded };

  // Bland's rule: the lowest-index improving column enters; among rows
  // attaining the minimum ratio the one whose basic variable has the
  // lowest index leaves. Columns >= `allowed` never enter.
  Status run(const std::vector<Rational>& cost, std::size_t allowed,
             std::size_t* unbounded_col) {
    std::vector<bool> in_basis(n_ + m_, false);
    for (;;) {
      std::fill(in_basis.begin(), in_basis.end(), false);
      for (auto b : basis_) in_basis[b] = true;

      std::size_t entering = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (in_basis[j]) continue;
        if (reduced_cost(cost, j).sign() < 0) {
          entering = j;
          break;
        }
      }
      if (entering == allowed) return Status::Optimal;

      std::size_t leaving = m_;
      Rational best_ratio;
      for (std::size_t r = 0; r < m_; ++r) {
        const Rational& a = rows_[r][entering];
        if (a.sign() <= 0) continue;
        Rational ratio = rows_[r][rhs_col()] / a;
        if (leaving == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[r] < basis_[leaving])) {
          leaving = r;
          best_ratio = std::move(ratio);
        }
      }
      if (leaving == m_) {
        *unbounded_col = entering;
        return Status::Unbounded;
      }
      pivot(leaving, entering);
    }
  }

  void pivot(std::size_t pr, std::size_t pc) {
    Row& p = rows_[pr];
    const Rational inv = Rational(1) / p[pc];
    for (auto& x : p) {
      if (!x.is_zero()) x *= inv;
    }
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == pr || rows_[r][pc].is_zero()) continue;
      const Rational f = rows_[r][pc];
      Row& row = rows_[r];
      for (std::size_t j = 0; j < row.size(); ++j) {
        if (!p[j].is_zero()) row[j] -= f * p[j];
      }
    }
    basis_[pr] = pc;
  }

  Rational reduced_cost(const std::vector<Rational>& cost,
                        std::size_t j) const {
    Rational d = cost[j];
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational& cb = cost[basis_[r]];
      if (!cb.is_zero() && !rows_[r][j].is_zero()) d -= cb * rows_[r][j];
    }
    return d;
  }

  // y = S (c_B^T B^{-1})^T, the multipliers for the unflipped rows.
  QVector multipliers(const std::vector<Rational>& cost) const {
    QVector y(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      Rational acc;
      for (std::size_t r = 0; r < m_; ++r) {
        const Rational& cb = cost[basis_[r]];
        if (!cb.is_zero()) acc += cb * rows_[r][n_ + i];
      }
      y[i] = sign_[i] < 0 ? -acc : acc;
    }
    return y;
  }

  QVector primal() const {
    QVector x(n_);
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) x[basis_[r]] = rows_[r][rhs_col()];
    }
    return x;
  }

  QVector ray(std::size_t entering) const {
    QVector d(n_);
    d[entering] = 1;
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) d[basis_[r]] = -rows_[r][entering];
    }
    return d;
  }

  // Pivots basic artificials out on any nonzero structural entry. Rows
  // with no such entry are redundant and keep their artificial at zero.
  void drive_out_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (basis_[r] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (!rows_[r][j].is_zero()) {
          pivot(r, j);
          break;
        }
      }
    }
  }

  Rational basic_cost(const std::vector<Rational>& cost) const {
    Rational v;
    for (std::size_t r = 0; r < m_; ++r) {
      if (!cost[basis_[r]].is_zero()) v += cost[basis_[r]] * rows_[r][rhs_col()];
    }
    return v;
  }

 private:
  std::size_t rhs_col() const { return n_ + m_; }

  std::size_t n_;
  std::size_t m_;
  std::vector<Row> rows_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
};

}  // namespace

void LinearProgram::check_dimensions() const {
  if (eq_matrix.cols() != objective.dim() || eq_matrix.rows() != eq_rhs.dim()) {
    throw DimensionError(
        "linear program: A is " + std::to_string(eq_matrix.rows()) + "x" +
        std::to_string(eq_matrix.cols()) + ", c has dim " +
        std::to_string(objective.dim()) + ", b has dim " +
        std::to_string(eq_rhs.dim()));
  }
}

LpOutcome solve_lp(const LinearProgram& p) {
  p.check_dimensions();
  const std::size_t n = p.num_vars();
  const std::size_t m = p.num_rows();
  Tableau t(p);
  std::size_t unbounded_col = 0;

  std::vector<Rational> phase1(n + m);
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  if (t.run(phase1, n + m, &unbounded_col) != Tableau::Status::Optimal) {
    throw InternalError("phase I reported unbounded");
  }
  if (t.basic_cost(phase1).sign() > 0) {
    return LpInfeasible{t.multipliers(phase1)};
  }

  t.drive_out_artificials();
  std::vector<Rational> phase2(n + m);
  for (std::size_t j = 0; j < n; ++j) phase2[j] = p.objective[j];
  if (t.run(phase2, n, &unbounded_col) == Tableau::Status::Unbounded) {
    return LpUnbounded{t.primal(), t.ray(unbounded_col)};
  }
  QVector x = t.primal();
  Rational value = dot(p.objective, x);
  return LpOptimal{std::move(x), t.multipliers(phase2), std::move(value)};
}

}  // namespace vlp
