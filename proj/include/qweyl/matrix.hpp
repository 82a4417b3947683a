// Dense matrices over the Scalar fraction field. Rank is computed by
// fraction-free Bareiss elimination on a denominator-cleared polynomial
// matrix, so symbolic entries never force fraction arithmetic mid-pivot.
#pragma once

#include "qweyl/scalar.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace qweyl {

class ScalarMatrix {
public:
  ScalarMatrix() : rows_(0), cols_(0) {}
  ScalarMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static ScalarMatrix identity(int n) {
    ScalarMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
  }
  static ScalarMatrix zero(int rows, int cols) { return ScalarMatrix(rows, cols); }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool is_zero() const {
    for (auto& x : a_) if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const ScalarMatrix& a, const ScalarMatrix& b) { return !(a == b); }

  friend ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b) {
    require_same_shape(a, b);
    ScalarMatrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
    return r;
  }
  friend ScalarMatrix operator-(const ScalarMatrix& a, const ScalarMatrix& b) {
    require_same_shape(a, b);
    ScalarMatrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
    return r;
  }
  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("ScalarMatrix: shape mismatch in product");
    ScalarMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Scalar& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const Scalar& bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }
  ScalarMatrix scaled(const Scalar& c) const {
    ScalarMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k] * c;
    return r;
  }
  ScalarMatrix operator-() const { return scaled(Scalar(-1)); }

  ScalarMatrix transpose() const {
    ScalarMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
  }

  // Kronecker product with this matrix acting on the left factor.
  friend ScalarMatrix kron(const ScalarMatrix& a, const ScalarMatrix& b) {
    ScalarMatrix r(a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) {
        if (a.at(i, j).is_zero()) continue;
        for (int k = 0; k < b.rows_; ++k)
          for (int l = 0; l < b.cols_; ++l)
            r.at(i * b.rows_ + k, j * b.cols_ + l) = a.at(i, j) * b.at(k, l);
      }
    return r;
  }

  ScalarMatrix pow(int n) const {
    ScalarMatrix r = identity(rows_), b = *this;
    while (n) {
      if (n & 1) r = r * b;
      n >>= 1;
      if (n) b = b * b;
    }
    return r;
  }

  int rank() const;
  std::optional<ScalarMatrix> solve(const ScalarMatrix& rhs) const;
  std::optional<ScalarMatrix> inverse() const;
  std::vector<std::vector<Scalar>> nullspace() const;
  Scalar trace() const {
    Scalar s;
    for (int i = 0; i < rows_; ++i) s += at(i, i);
    return s;
  }

private:
  static void require_same_shape(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("ScalarMatrix: shape mismatch");
  }

  int rows_, cols_;
  std::vector<Scalar> a_;
};

// Operator acting on adjacent slots (pos, pos+1) of V^{(x) k}, dim d each.
inline ScalarMatrix embed_pair(const ScalarMatrix& op, int d, int pos, int k) {
  ScalarMatrix left = ScalarMatrix::identity(1);
  for (int s = 0; s < pos; ++s) left = kron(left, ScalarMatrix::identity(d));
  ScalarMatrix r = kron(left, op);
  for (int s = pos + 2; s < k; ++s) r = kron(r, ScalarMatrix::identity(d));
  return r;
}

inline int ScalarMatrix::rank() const {
  // Clear denominators per row, then Bareiss.
  std::vector<std::vector<MPoly>> m(rows_);
  for (int i = 0; i < rows_; ++i) {
    MPoly l(1);
    for (int j = 0; j < cols_; ++j) {
      const MPoly& d = at(i, j).den();
      if (!d.is_one()) {
        MPoly g = gcd(l, d);
        l = l * *MPoly::div_exact(d, g);
      }
    }
    m[i].resize(cols_);
    for (int j = 0; j < cols_; ++j)
      m[i][j] = at(i, j).num() * *MPoly::div_exact(l, at(i, j).den());
  }
  int rank = 0;
  MPoly prev(1);
  for (int col = 0; col < cols_ && rank < rows_; ++col) {
    // pick the shortest nonzero pivot to limit growth
    int piv = -1;
    size_t best = 0;
    for (int i = rank; i < rows_; ++i)
      if (!m[i][col].is_zero() && (piv < 0 || m[i][col].size() < best)) {
        piv = i;
        best = m[i][col].size();
      }
    if (piv < 0) continue;
    std::swap(m[rank], m[piv]);
    for (int i = rank + 1; i < rows_; ++i) {
      for (int j = col + 1; j < cols_; ++j) {
        MPoly v = m[rank][col] * m[i][j] - m[i][col] * m[rank][j];
        m[i][j] = v.is_zero() ? MPoly() : *MPoly::div_exact(v, prev);
      }
      m[i][col] = MPoly();
    }
    prev = m[rank][col];
    ++rank;
  }
  return rank;
}

namespace detail {

// Row-reduced echelon form over the fraction field; returns pivot columns.
inline std::vector<int> rref(std::vector<std::vector<Scalar>>& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  int rows = int(m.size()), cols = int(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Scalar inv = m[r][c].inv();
    for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

} // namespace detail

inline std::optional<ScalarMatrix> ScalarMatrix::solve(const ScalarMatrix& rhs) const {
  if (rhs.rows() != rows_)
    throw std::invalid_argument("ScalarMatrix::solve: shape mismatch");
  int n = cols_, k = rhs.cols();
  std::vector<std::vector<Scalar>> m(rows_, std::vector<Scalar>(n + k));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = at(i, j);
    for (int j = 0; j < k; ++j) m[i][n + j] = rhs.at(i, j);
  }
  std::vector<int> pivots = detail::rref(m);
  // Inconsistent if any pivot falls in the right-hand block.
  for (int c : pivots)
    if (c >= n) return std::nullopt;
  ScalarMatrix x(n, k);
  for (size_t r = 0; r < pivots.size(); ++r)
    for (int j = 0; j < k; ++j) x.at(pivots[r], j) = m[r][n + j];
  // rows below the pivot count must be zero on the rhs as well
  for (size_t i = pivots.size(); i < m.size(); ++i)
    for (int j = 0; j < k; ++j)
      if (!m[i][n + j].is_zero()) return std::nullopt;
  return x;
}

inline std::optional<ScalarMatrix> ScalarMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("ScalarMatrix::inverse: not square");
  auto x = solve(identity(rows_));
  if (!x) return std::nullopt;
  // solve() proves consistency; invertibility needs full rank
  std::vector<std::vector<Scalar>> m(rows_, std::vector<Scalar>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m[i][j] = at(i, j);
  if (int(detail::rref(m).size()) != rows_) return std::nullopt;
  return x;
}

inline std::vector<std::vector<Scalar>> ScalarMatrix::nullspace() const {
  std::vector<std::vector<Scalar>> m(rows_, std::vector<Scalar>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m[i][j] = at(i, j);
  std::vector<int> pivots = detail::rref(m);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    std::vector<Scalar> v(cols_);
    v[c] = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace qweyl
