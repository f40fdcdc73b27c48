#pragma once

#include "spin7/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace spin7 {

/// Fixed-length vector of rationals.
class RatVector {
public:
  RatVector() = default;
  explicit RatVector(std::size_t n) : entries_(n) {}
  RatVector(std::initializer_list<Rational> xs) : entries_(xs) {}
  explicit RatVector(std::vector<Rational> xs) : entries_(std::move(xs)) {}

  std::size_t size() const { return entries_.size(); }
  Rational &operator[](std::size_t i) { return entries_[i]; }
  const Rational &operator[](std::size_t i) const { return entries_[i]; }
  std::span<const Rational> entries() const { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational &x) { return x.is_zero(); });
  }

  Rational dot(const RatVector &o) const {
    check_same(o);
    Rational s;
    for (std::size_t i = 0; i < size(); ++i)
      if (!entries_[i].is_zero() && !o.entries_[i].is_zero()) s += entries_[i] * o.entries_[i];
    return s;
  }
  Rational norm_sq() const { return dot(*this); }

  RatVector &operator+=(const RatVector &o) {
    check_same(o);
    for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
    return *this;
  }
  RatVector &operator-=(const RatVector &o) {
    check_same(o);
    for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
    return *this;
  }
  RatVector &operator*=(const Rational &c) {
    for (auto &x : entries_) x *= c;
    return *this;
  }
  friend RatVector operator+(RatVector a, const RatVector &b) { return a += b; }
  friend RatVector operator-(RatVector a, const RatVector &b) { return a -= b; }
  friend RatVector operator*(const Rational &c, RatVector a) { return a *= c; }
  friend bool operator==(const RatVector &, const RatVector &) = default;

private:
  void check_same(const RatVector &o) const {
    if (o.size() != size()) throw Error("vector length mismatch");
  }
  std::vector<Rational> entries_;
};

/// Dense row-major rational matrix.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto &r : rows) {
      if (r.size() != cols_) throw Error("ragged matrix literal");
      entries_.insert(entries_.end(), r.begin(), r.end());
    }
  }

  static RatMatrix identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }
  static RatMatrix diagonal(std::span<const Rational> d) {
    RatMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  /// Matrix whose columns are the given vectors.
  static RatMatrix from_columns(std::span<const RatVector> cols, std::size_t rows) {
    RatMatrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw Error("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational &operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational &operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  RatVector row(std::size_t i) const {
    return RatVector(std::vector<Rational>(entries_.begin() + i * cols_, entries_.begin() + (i + 1) * cols_));
  }
  RatVector column(std::size_t j) const {
    RatVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational &x) { return x.is_zero(); });
  }

  RatMatrix transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Rational trace() const {
    require_square();
    Rational s;
    for (std::size_t i = 0; i < rows_; ++i) s += (*this)(i, i);
    return s;
  }

  RatMatrix &operator+=(const RatMatrix &o) {
    require_shape(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
  }
  RatMatrix &operator-=(const RatMatrix &o) {
    require_shape(o);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
  }
  RatMatrix &operator*=(const Rational &c) {
    for (auto &x : entries_) x *= c;
    return *this;
  }

  friend RatMatrix operator+(RatMatrix a, const RatMatrix &b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix &b) { return a -= b; }
  friend RatMatrix operator*(const Rational &c, RatMatrix a) { return a *= c; }

  friend RatMatrix operator*(const RatMatrix &a, const RatMatrix &b) {
    if (a.cols_ != b.rows_) throw Error("matrix product shape mismatch");
    RatMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Rational &x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const Rational &y = b(k, j);
          if (!y.is_zero()) c(i, j) += x * y;
        }
      }
    return c;
  }

  friend RatVector operator*(const RatMatrix &a, const RatVector &v) {
    if (a.cols_ != v.size()) throw Error("matrix-vector shape mismatch");
    RatVector r(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) {
        const Rational &x = a(i, j);
        if (!x.is_zero() && !v[j].is_zero()) r[i] += x * v[j];
      }
    return r;
  }

  friend bool operator==(const RatMatrix &, const RatMatrix &) = default;

private:
  void require_square() const {
    if (!is_square()) throw Error("matrix is not square");
  }
  void require_shape(const RatMatrix &o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw Error("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Result of exact Gauss-Jordan elimination: `transform * input == rref`,
/// with `transform` invertible.
struct RowReduction {
  RatMatrix rref;
  RatMatrix transform;
  std::vector<std::size_t> pivots; ///< pivot column of each nonzero row
};

/// Gauss-Jordan elimination to reduced row echelon form. Pivots are the
/// first nonzero entry scanning rows top-down, normalized to 1. With
/// `track_transform == false` the transform is left empty (0x0).
inline RowReduction row_reduce(const RatMatrix &m, bool track_transform = true) {
  RowReduction out{m, track_transform ? RatMatrix::identity(m.rows()) : RatMatrix(), {}};
  RatMatrix &a = out.rref;
  RatMatrix &e = out.transform;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
      if (track_transform)
        for (std::size_t j = 0; j < rows; ++j) std::swap(e(p, j), e(r, j));
    }
    const Rational inv = Rational(1) / a(r, c);
    for (std::size_t j = 0; j < cols; ++j) a(r, j) *= inv;
    if (track_transform)
      for (std::size_t j = 0; j < rows; ++j) e(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (!a(r, j).is_zero()) a(i, j) -= f * a(r, j);
      if (track_transform)
        for (std::size_t j = 0; j < rows; ++j)
          if (!e(r, j).is_zero()) e(i, j) -= f * e(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  return out;
}

inline std::size_t rank(const RatMatrix &m) { return row_reduce(m, false).pivots.size(); }

/// Basis of the null space of `m`. One vector per free column in increasing
/// column order; each has a 1 at its free column and zeros at the other free
/// columns, so the output is canonical for a given matrix.
inline std::vector<RatVector> kernel_basis(const RatMatrix &m) {
  const RowReduction red = row_reduce(m, false);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<RatVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < red.pivots.size(); ++r) v[red.pivots[r]] = -red.rref(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Eigenvectors of `m` for the given eigenvalue, i.e. the kernel of m - lambda I.
inline std::vector<RatVector> eigenspace(const RatMatrix &m, const Rational &lambda) {
  if (!m.is_square()) throw Error("eigenspace of a non-square matrix");
  return kernel_basis(m - lambda * RatMatrix::identity(m.rows()));
}

inline RatMatrix inverse(const RatMatrix &m) {
  if (!m.is_square()) throw Error("inverse of a non-square matrix");
  RowReduction red = row_reduce(m);
  if (red.pivots.size() != m.rows()) throw Error("matrix is singular");
  return std::move(red.transform);
}

/// Rank of the span of a set of equal-length vectors.
inline std::size_t span_rank(std::span<const RatVector> vs) {
  if (vs.empty()) return 0;
  return rank(RatMatrix::from_columns(vs, vs.front().size()));
}

/// If `v == c * w` for some rational c, returns c. Requires w nonzero.
inline std::optional<Rational> proportionality(const RatVector &v, const RatVector &w) {
  if (v.size() != w.size()) throw Error("vector length mismatch");
  std::optional<Rational> c;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i].is_zero()) continue;
    c = v[i] / w[i];
    break;
  }
  if (!c) return std::nullopt;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (v[i] != *c * w[i]) return std::nullopt;
  return c;
}

/// Same as the vector overload, entrywise over matrices.
inline std::optional<Rational> proportionality(const RatMatrix &a, const RatMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("matrix shape mismatch");
  std::optional<Rational> c;
  for (std::size_t i = 0; i < b.rows() && !c; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (!b(i, j).is_zero()) {
        c = a(i, j) / b(i, j);
        break;
      }
  if (!c) return std::nullopt;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (a(i, j) != *c * b(i, j)) return std::nullopt;
  return c;
}

} // namespace spin7
