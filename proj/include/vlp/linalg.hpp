#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "vlp/rational.hpp"

namespace vlp {

// Dense column vector of exact rationals.
class QVector {
 public:
  QVector() = default;
  explicit QVector(std::size_t dim) : entries_(dim) {}
  QVector(std::initializer_list<Rational> entries) : entries_(entries) {}
  explicit QVector(std::vector<Rational> entries)
      : entries_(std::move(entries)) {}

  static QVector zeros(std::size_t dim) { return QVector(dim); }
  static QVector ones(std::size_t dim);
  static QVector unit(std::size_t dim, std::size_t index);

  std::size_t dim() const { return entries_.size(); }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  Rational& operator[](std::size_t i) { return entries_[i]; }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }

  auto begin() { return entries_.begin(); }
  auto end() { return entries_.end(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  std::span<const Rational> entries() const { return entries_; }

  bool is_zero() const;
  bool is_nonnegative() const;

  QVector& operator+=(const QVector& o);
  QVector& operator-=(const QVector& o);
  QVector& operator*=(const Rational& s);

  friend QVector operator+(QVector a, const QVector& b) { return a += b; }
  friend QVector operator-(QVector a, const QVector& b) { return a -= b; }
  friend QVector operator*(QVector a, const Rational& s) { return a *= s; }
  friend QVector operator*(const Rational& s, QVector a) { return a *= s; }
  QVector operator-() const;

  friend bool operator==(const QVector&, const QVector&) = default;
  friend auto operator<=>(const QVector& a, const QVector& b) {
    return a.entries_ <=> b.entries_;
  }

  std::string str() const;

 private:
  std::vector<Rational> entries_;
};

Rational dot(const QVector& a, const QVector& b);

// Concatenation [a; b].
QVector concat(const QVector& a, const QVector& b);

// Entries [offset, offset + count).
QVector slice(const QVector& v, std::size_t offset, std::size_t count);

std::ostream& operator<<(std::ostream& os, const QVector& v);

// Dense row-major rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}
  // Row-list construction; all rows must share one length.
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix from_rows(const std::vector<QVector>& rows,
                           std::size_t cols);
  static QMatrix from_columns(const std::vector<QVector>& columns,
                              std::size_t rows);
  static QMatrix identity(std::size_t n);
  static QMatrix zeros(std::size_t rows, std::size_t cols) {
    return QMatrix(rows, cols);
  }
  // a * b^T.
  static QMatrix outer(const QVector& a, const QVector& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  QVector row(std::size_t r) const;
  QVector column(std::size_t c) const;

  bool is_zero() const;

  QMatrix transpose() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const Rational& s);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const Rational& s) { return a *= s; }
  QMatrix operator-() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QVector operator*(const QMatrix& a, const QVector& x);

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

// a^T x without materializing the transpose.
QVector transpose_times(const QMatrix& a, const QVector& x);

QMatrix transpose(const QMatrix& a);
QMatrix multiply(const QMatrix& a, const QMatrix& b);
QVector multiply(const QMatrix& a, const QVector& x);

// Column selection A[:, columns].
QMatrix select_columns(const QMatrix& a, std::span<const std::size_t> columns);

// Rank via fraction-free (Bareiss) elimination.
std::size_t rank(const QMatrix& a);

struct LinearSolution {
  // A particular solution, absent when the system is inconsistent.
  std::optional<QVector> particular;
  // Basis of {x : M x = 0}; computed whether or not the system is consistent.
  std::vector<QVector> nullspace;
};

// Solves M x = rhs exactly. Free variables of the particular solution are 0.
LinearSolution solve_linear_system(const QMatrix& m, const QVector& rhs);

}  // namespace vlp
