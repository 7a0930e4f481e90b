#include "vlp/linalg.hpp"

#include <sstream>
#include <utility>

#include "vlp/error.hpp"

namespace vlp {
namespace {

void require_same_dim(const QVector& a, const QVector& b, const char* op) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(op) + ": dimension mismatch (" +
                         std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()) + ")");
  }
}

void require_same_shape(const QMatrix& a, const QMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch");
  }
}

// Integer row-echelon form of a rational matrix. Each row is first scaled by
// the lcm of its denominators, then Bareiss elimination keeps every entry an
// integer minor of the scaled matrix.
struct Echelon {
  std::vector<std::vector<Integer>> rows;
  std::vector<std::size_t> pivot_columns;
};

Echelon bareiss(const QMatrix& m, std::size_t pivot_limit) {
  Echelon e;
  e.rows.assign(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(),
              m(r, c).raw().get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      e.rows[r][c] = m(r, c).num() * (scale / m(r, c).den());
    }
  }

  Integer prev = 1;
  std::size_t r = 0;
  auto& a = e.rows;
  for (std::size_t c = 0; c < pivot_limit && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && a[p][c] == 0) ++p;
    if (p == m.rows()) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      for (std::size_t j = c + 1; j < m.cols(); ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(),
                     prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    e.pivot_columns.push_back(c);
    ++r;
  }
  return e;
}

}  // namespace

QVector QVector::ones(std::size_t dim) {
  QVector v(dim);
  for (auto& x : v) x = 1;
  return v;
}

QVector QVector::unit(std::size_t dim, std::size_t index) {
  QVector v(dim);
  v[index] = 1;
  return v;
}

bool QVector::is_zero() const {
  for (const auto& x : entries_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool QVector::is_nonnegative() const {
  for (const auto& x : entries_) {
    if (x.sign() < 0) return false;
  }
  return true;
}

QVector& QVector::operator+=(const QVector& o) {
  require_same_dim(*this, o, "vector add");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

QVector& QVector::operator-=(const QVector& o) {
  require_same_dim(*this, o, "vector subtract");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

QVector& QVector::operator*=(const Rational& s) {
  for (auto& x : entries_) x *= s;
  return *this;
}

QVector QVector::operator-() const {
  QVector r(*this);
  for (auto& x : r.entries_) x = -x;
  return r;
}

std::string QVector::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  return os << ')';
}

Rational dot(const QVector& a, const QVector& b) {
  require_same_dim(a, b, "dot");
  Rational s;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

QVector concat(const QVector& a, const QVector& b) {
  std::vector<Rational> e(a.begin(), a.end());
  e.insert(e.end(), b.begin(), b.end());
  return QVector(std::move(e));
}

QVector slice(const QVector& v, std::size_t offset, std::size_t count) {
  if (offset + count > v.dim()) throw DimensionError("slice out of range");
  return QVector(std::vector<Rational>(v.begin() + offset,
                                       v.begin() + offset + count));
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  entries_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw DimensionError("ragged matrix rows");
    entries_.insert(entries_.end(), row.begin(), row.end());
  }
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows,
                           std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].dim() != cols) throw DimensionError("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::from_columns(const std::vector<QVector>& columns,
                              std::size_t rows) {
  QMatrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].dim() != rows) throw DimensionError("ragged matrix columns");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::outer(const QVector& a, const QVector& b) {
  QMatrix m(a.dim(), b.dim());
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < b.dim(); ++c) m(r, c) = a[r] * b[c];
  }
  return m;
}

QVector QMatrix::row(std::size_t r) const {
  return QVector(std::vector<Rational>(entries_.begin() + r * cols_,
                                       entries_.begin() + (r + 1) * cols_));
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool QMatrix::is_zero() const {
  for (const auto& x : entries_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  require_same_shape(*this, o, "matrix add");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  require_same_shape(*this, o, "matrix subtract");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& s) {
  for (auto& x : entries_) x *= s;
  return *this;
}

QMatrix QMatrix::operator-() const {
  QMatrix r(*this);
  for (auto& x : r.entries_) x = -x;
  return r;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix multiply: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
  }
  QMatrix p(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) p(r, c) += a(r, k) * b(k, c);
    }
  }
  return p;
}

QVector operator*(const QMatrix& a, const QVector& x) {
  if (a.cols() != x.dim()) {
    throw DimensionError("matrix-vector multiply: " + std::to_string(a.cols()) +
                         " columns vs vector of dim " +
                         std::to_string(x.dim()));
  }
  QVector y(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (!x[c].is_zero()) y[r] += a(r, c) * x[c];
    }
  }
  return y;
}

std::string QMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << row(r);
  }
  os << ']';
  return os.str();
}

QVector transpose_times(const QMatrix& a, const QVector& x) {
  if (a.rows() != x.dim()) {
    throw DimensionError("transpose-vector multiply: " +
                         std::to_string(a.rows()) + " rows vs vector of dim " +
                         std::to_string(x.dim()));
  }
  QVector y(a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (x[r].is_zero()) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) y[c] += a(r, c) * x[r];
  }
  return y;
}

QMatrix transpose(const QMatrix& a) { return a.transpose(); }
QMatrix multiply(const QMatrix& a, const QMatrix& b) { return a * b; }
QVector multiply(const QMatrix& a, const QVector& x) { return a * x; }

QMatrix select_columns(const QMatrix& a,
                       std::span<const std::size_t> columns) {
  QMatrix s(a.rows(), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j] >= a.cols()) throw DimensionError("column out of range");
    for (std::size_t r = 0; r < a.rows(); ++r) s(r, j) = a(r, columns[j]);
  }
  return s;
}

std::size_t rank(const QMatrix& a) {
  return bareiss(a, a.cols()).pivot_columns.size();
}

LinearSolution solve_linear_system(const QMatrix& m, const QVector& rhs) {
  if (m.rows() != rhs.dim()) {
    throw DimensionError("solve_linear_system: " + std::to_string(m.rows()) +
                         " rows vs rhs of dim " + std::to_string(rhs.dim()));
  }
  const std::size_t n = m.cols();
  QMatrix aug(m.rows(), n + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = rhs[r];
  }
  const Echelon e = bareiss(aug, n);
  const std::size_t rk = e.pivot_columns.size();

  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_columns) is_pivot[c] = true;

  // Back substitution over the echelon rows with a given rhs column and a
  // given assignment of free variables.
  auto back_substitute = [&](bool use_rhs, std::size_t free_col) {
    QVector x(n);
    if (!use_rhs) x[free_col] = 1;
    for (std::size_t i = rk; i-- > 0;) {
      const std::size_t pc = e.pivot_columns[i];
      Rational acc = use_rhs ? Rational(e.rows[i][n]) : Rational();
      for (std::size_t j = pc + 1; j < n; ++j) {
        if (e.rows[i][j] != 0 && !x[j].is_zero()) {
          acc -= Rational(e.rows[i][j]) * x[j];
        }
      }
      x[pc] = acc / Rational(e.rows[i][pc]);
    }
    return x;
  };

  LinearSolution sol;
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_pivot[c]) sol.nullspace.push_back(back_substitute(false, c));
  }
  bool consistent = true;
  for (std::size_t i = rk; i < m.rows(); ++i) {
    if (e.rows[i][n] != 0) consistent = false;
  }
  if (consistent) {
    QVector x = back_substitute(true, 0);
    if (m * x != rhs) {
      throw InternalError("solve_linear_system: back-substitution check failed");
    }
    sol.particular = std::move(x);
  }
  return sol;
}

}  // namespace vlp
