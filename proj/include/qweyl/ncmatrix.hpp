// Matrices with free-algebra entries, plus the slot embeddings used for
// operator identities on tensor powers of V.
#pragma once

#include "qweyl/matrix.hpp"
#include "qweyl/ncpoly.hpp"

namespace qweyl {

class NCMatrix {
public:
  NCMatrix() : rows_(0), cols_(0) {}
  NCMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

  static NCMatrix identity(int n) {
    NCMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = NCPoly(Scalar(1));
    return m;
  }
  static NCMatrix from_scalar(const ScalarMatrix& s) {
    NCMatrix m(s.rows(), s.cols());
    for (int i = 0; i < s.rows(); ++i)
      for (int j = 0; j < s.cols(); ++j)
        if (!s.at(i, j).is_zero()) m.at(i, j) = NCPoly(s.at(i, j));
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  NCPoly& at(int i, int j) { return a_[size_t(i) * cols_ + j]; }
  const NCPoly& at(int i, int j) const { return a_[size_t(i) * cols_ + j]; }

  bool is_zero() const {
    for (auto& p : a_) if (!p.is_zero()) return false;
    return true;
  }
  friend bool operator==(const NCMatrix& a, const NCMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const NCMatrix& a, const NCMatrix& b) { return !(a == b); }

  friend NCMatrix operator+(const NCMatrix& a, const NCMatrix& b) {
    check_shape(a, b);
    NCMatrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] + b.a_[k];
    return r;
  }
  friend NCMatrix operator-(const NCMatrix& a, const NCMatrix& b) {
    check_shape(a, b);
    NCMatrix r(a.rows_, a.cols_);
    for (size_t k = 0; k < a.a_.size(); ++k) r.a_[k] = a.a_[k] - b.a_[k];
    return r;
  }
  friend NCMatrix operator*(const NCMatrix& a, const NCMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("NCMatrix: shape mismatch");
    NCMatrix r(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const NCPoly& aik = a.at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < b.cols_; ++j) {
          const NCPoly& bkj = b.at(k, j);
          if (bkj.is_zero()) continue;
          r.at(i, j) += aik * bkj;
        }
      }
    return r;
  }
  NCMatrix scaled(const Scalar& s) const {
    NCMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = a_[k].scaled(s);
    return r;
  }
  NCMatrix pow(int n) const {
    NCMatrix r = identity(rows_), b = *this;
    while (n) {
      if (n & 1) r = r * b;
      n >>= 1;
      if (n) b = b * b;
    }
    return r;
  }
  NCPoly trace() const {
    NCPoly s;
    for (int i = 0; i < rows_; ++i) s += at(i, i);
    return s;
  }
  NCMatrix map(const std::function<NCPoly(const NCPoly&)>& f) const {
    NCMatrix r(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) r.a_[k] = f(a_[k]);
    return r;
  }

private:
  static void check_shape(const NCMatrix& a, const NCMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw std::invalid_argument("NCMatrix: shape mismatch");
  }
  int rows_, cols_;
  std::vector<NCPoly> a_;
};

// Embed a d x d matrix into slot `slot` (0-based) of V^{(x) k}.
inline NCMatrix embed_slot(const NCMatrix& m, int d, int slot, int k) {
  int n = 1;
  for (int s = 0; s < k; ++s) n *= d;
  NCMatrix r(n, n);
  int stride = 1;
  for (int s = slot + 1; s < k; ++s) stride *= d;
  for (int row = 0; row < n; ++row) {
    int is = (row / stride) % d;
    int base = row - is * stride;
    for (int js = 0; js < d; ++js) {
      const NCPoly& v = m.at(is, js);
      if (v.is_zero()) continue;
      r.at(row, base + js * stride) = v;
    }
  }
  return r;
}

// Scalar operator acting on adjacent slots (pos, pos+1) of V^{(x) k},
// lifted to an NCMatrix.
inline NCMatrix embed_pair_nc(const ScalarMatrix& op, int d, int pos, int k) {
  return NCMatrix::from_scalar(embed_pair(op, d, pos, k));
}

} // namespace qweyl
