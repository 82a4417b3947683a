// Braiding diagnostics: Yang-Baxter and Hecke residuals, the skew inverse
// Psi with its B and C contractions, the extension of a skew-invertible
// braiding to V + V*, q-symmetrizers, and Poincare-Hilbert series data.
//
// Index convention throughout: R(x_i (x) x_j) = x_k (x) x_l R^{kl}_{ij},
// stored as matrix[row=(k,l)][col=(i,j)] with row-major flattening.
#pragma once

#include "qweyl/unipoly.hpp"

#include <optional>

namespace qweyl {

// q-number (q^n - q^-n)/(q - q^-1); continued as n at q = 1.
inline Scalar q_number(int n, const Scalar& q) {
  Scalar acc;
  // q^{n-1} + q^{n-3} + ... + q^{1-n}
  for (int k = n - 1; k >= 1 - n; k -= 2) acc += q.pow(k);
  return acc;
}

struct Braiding {
  int dim = 0;
  ScalarMatrix mat;                // dim^2 x dim^2
  std::optional<Scalar> hecke_q;   // present when R is declared Hecke

  int flatten(std::initializer_list<int> idx) const {
    int f = 0;
    for (int i : idx) f = f * dim + i;
    return f;
  }
  const Scalar& entry(int k, int l, int i, int j) const {
    return mat.at(k * dim + l, i * dim + j);
  }
};

// The usual flip on V (x) V as a matrix, for any dimension.
inline ScalarMatrix flip_matrix(int d) {
  ScalarMatrix p(d * d, d * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) p.at(j * d + i, i * d + j) = Scalar(1);
  return p;
}

// R12 R23 R12 - R23 R12 R23 on V^{(x)3}; zero iff R satisfies the QYBE.
inline ScalarMatrix check_qybe(const Braiding& r) {
  ScalarMatrix r12 = embed_pair(r.mat, r.dim, 0, 3);
  ScalarMatrix r23 = embed_pair(r.mat, r.dim, 1, 3);
  return r12 * r23 * r12 - r23 * r12 * r23;
}

// (R - q I)(R + q^-1 I); zero iff R is Hecke with parameter q.
inline ScalarMatrix check_hecke(const Braiding& r, const Scalar& q) {
  if (q.is_zero()) throw std::invalid_argument("check_hecke: q must be nonzero");
  int n = r.dim * r.dim;
  ScalarMatrix id = ScalarMatrix::identity(n);
  return (r.mat - id.scaled(q)) * (r.mat + id.scaled(q.inv()));
}

struct SkewData {
  ScalarMatrix psi;    // dim^2 x dim^2
  ScalarMatrix b_op;   // Tr_(1) Psi
  ScalarMatrix c_op;   // Tr_(2) Psi
};

namespace detail {

// Tr_(2) A_12 B_23 as a matrix on slots (1,3): [(a,c)][(i,k)] entry.
inline ScalarMatrix tr2_sandwich(const ScalarMatrix& a, const ScalarMatrix& b, int d) {
  ScalarMatrix r(d * d, d * d);
  for (int aa = 0; aa < d; ++aa)
    for (int c = 0; c < d; ++c)
      for (int i = 0; i < d; ++i)
        for (int k = 0; k < d; ++k) {
          Scalar s;
          for (int j = 0; j < d; ++j)
            for (int m = 0; m < d; ++m) {
              const Scalar& av = a.at(aa * d + j, i * d + m);
              if (av.is_zero()) continue;
              const Scalar& bv = b.at(m * d + c, j * d + k);
              if (bv.is_zero()) continue;
              s += av * bv;
            }
          r.at(aa * d + c, i * d + k) = std::move(s);
        }
  return r;
}

} // namespace detail

inline ScalarMatrix trace_first(const ScalarMatrix& psi, int d) {
  ScalarMatrix b(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      Scalar s;
      for (int k = 0; k < d; ++k) s += psi.at(k * d + j, k * d + i);
      b.at(j, i) = std::move(s);
    }
  return b;
}

inline ScalarMatrix trace_second(const ScalarMatrix& psi, int d) {
  ScalarMatrix c(d, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) {
      Scalar s;
      for (int k = 0; k < d; ++k) s += psi.at(j * d + k, i * d + k);
      c.at(j, i) = std::move(s);
    }
  return c;
}

// Verify both defining contractions Tr_(2) R12 Psi23 = P13 = Tr_(2) Psi12 R23.
inline bool verify_skew(const Braiding& r, const ScalarMatrix& psi) {
  int d = r.dim;
  ScalarMatrix p = flip_matrix(d);
  return detail::tr2_sandwich(r.mat, psi, d) == p &&
         detail::tr2_sandwich(psi, r.mat, d) == p;
}

// Solve for Psi; reports failure when the defining linear system is singular.
inline std::optional<SkewData> skew_inverse(const Braiding& r) {
  int d = r.dim, n = d * d;
  // Equations: sum_{j,m} R^{aj}_{im} Psi^{mc}_{jk} = delta^a_k delta^c_i.
  // Rows are (a,i), unknown groups (m,j), right-hand columns (c,k).
  ScalarMatrix M(n, n), rhs(n, n);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i)
      for (int m = 0; m < d; ++m)
        for (int j = 0; j < d; ++j)
          M.at(a * d + i, m * d + j) = r.entry(a, j, i, m);
  for (int a = 0; a < d; ++a)
    for (int i = 0; i < d; ++i) rhs.at(a * d + i, i * d + a) = Scalar(1);
  auto minv = M.inverse();
  if (!minv) return std::nullopt;
  ScalarMatrix y = *minv * rhs;
  ScalarMatrix psi(n, n);
  for (int m = 0; m < d; ++m)
    for (int j = 0; j < d; ++j)
      for (int c = 0; c < d; ++c)
        for (int k = 0; k < d; ++k)
          psi.at(m * d + c, j * d + k) = y.at(m * d + j, c * d + k);
  if (!verify_skew(r, psi)) return std::nullopt;
  SkewData s;
  s.psi = std::move(psi);
  s.b_op = trace_first(s.psi, d);
  s.c_op = trace_second(s.psi, d);
  return s;
}

// The braiding on (V + V*)^{(x)2} built from R, R^{-1} and Psi blockwise.
inline Braiding extend_braiding(const Braiding& r, const SkewData& s) {
  int d = r.dim, dd = 2 * d;
  auto rinv = r.mat.inverse();
  if (!rinv) throw std::invalid_argument("extend_braiding: R not invertible");
  ScalarMatrix m(dd * dd, dd * dd);
  auto put = [&](int r1, int r2, int c1, int c2, const Scalar& v) {
    m.at(r1 * dd + r2, c1 * dd + c2) = v;
  };
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l)
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          // V (x) V:    R(x_i (x) x_j)   = x_k (x) x_l   R^{kl}_{ij}
          put(k, l, i, j, r.entry(k, l, i, j));
          // V* (x) V*:  R(x^i (x) x^j)   = x^k (x) x^l   R^{ji}_{lk}
          put(d + k, d + l, d + i, d + j, r.entry(j, i, l, k));
          // V (x) V*:   R(x_i (x) x^j)   = x^k (x) x_l   (R^-1)^{lj}_{ki}
          put(d + k, l, i, d + j, rinv->at(l * d + j, k * d + i));
          // V* (x) V:   R(x^j (x) x_i)   = x_k (x) x^l   Psi^{kj}_{li}
          put(k, d + l, d + j, i, s.psi.at(k * d + j, l * d + i));
        }
  Braiding ext;
  ext.dim = dd;
  ext.mat = std::move(m);
  // the extension is a braiding but not a Hecke symmetry in general (the
  // mixed blocks bring in R^-1 eigenvalues), so no q is claimed for it
  ext.hecke_q = std::nullopt;
  return ext;
}

// The canonical element 1 -> sum_i x^i (x) x_i must braid trivially past
// every basis vector of V + V* in both directions.
inline bool check_pairing_invariance(const Braiding& ext, int d) {
  int dd = 2 * d;
  std::vector<Scalar> e(dd * dd);
  for (int i = 0; i < d; ++i) e[(d + i) * dd + i] = Scalar(1);
  ScalarMatrix r12 = embed_pair(ext.mat, dd, 0, 3);
  ScalarMatrix r23 = embed_pair(ext.mat, dd, 1, 3);
  ScalarMatrix move_left = r23 * r12;   // w (x) E -> E (x) w
  ScalarMatrix move_right = r12 * r23;  // E (x) w -> w (x) E
  int n3 = dd * dd * dd;
  for (int w = 0; w < dd; ++w) {
    std::vector<Scalar> we(n3), ew(n3);
    for (int a = 0; a < dd; ++a)
      for (int b = 0; b < dd; ++b) {
        const Scalar& v = e[a * dd + b];
        if (v.is_zero()) continue;
        we[(w * dd + a) * dd + b] = v;
        ew[(a * dd + b) * dd + w] = v;
      }
    for (int row = 0; row < n3; ++row) {
      Scalar lhs1, lhs2;
      for (int col = 0; col < n3; ++col) {
        if (!we[col].is_zero()) lhs1 += move_left.at(row, col) * we[col];
        if (!ew[col].is_zero()) lhs2 += move_right.at(row, col) * ew[col];
      }
      if (lhs1 != ew[row] || lhs2 != we[row]) return false;
    }
  }
  return true;
}

// q-symmetrizers on V^{(x)k} by the Hecke-algebra recursion
//   P^(k) = (1/k_q) P^(k-1) (q^{-+(k-1)} I +- (k-1)_q R_{k-1}) P^(k-1).
inline ScalarMatrix symmetrizer(const Braiding& r, int k, int sign) {
  if (k < 1) throw std::invalid_argument("symmetrizer: k must be >= 1");
  if (!r.hecke_q) throw std::invalid_argument("symmetrizer: Hecke parameter required");
  const Scalar& q = *r.hecke_q;
  for (int n = 2; n <= k; ++n)
    if (q_number(n, q).is_zero())
      throw std::invalid_argument("symmetrizer: q fails the genericity condition n_q != 0");
  ScalarMatrix p = ScalarMatrix::identity(r.dim);
  for (int n = 2; n <= k; ++n) {
    ScalarMatrix prev = kron(p, ScalarMatrix::identity(r.dim));
    ScalarMatrix rn = embed_pair(r.mat, r.dim, n - 2, n);
    Scalar qpow = q.pow(sign > 0 ? -(n - 1) : (n - 1));
    Scalar nq = q_number(n - 1, q);
    ScalarMatrix middle = ScalarMatrix::identity(rn.rows()).scaled(qpow) +
                          rn.scaled(sign > 0 ? nq : -nq);
    p = prev * middle * prev;
    p = p.scaled(q_number(n, q).inv());
  }
  return p;
}

struct PHReport {
  std::vector<int> dims_plus;   // starts at degree 0
  std::vector<int> dims_minus;
  std::optional<std::pair<UniPoly, UniPoly>> p_minus; // (N, D)
  std::optional<std::pair<int, int>> bi_rank;         // (deg N, deg D)
};

inline PHReport ph_series(const Braiding& r, int kmax) {
  if (kmax < 1) throw std::invalid_argument("ph_series: kmax must be >= 1");
  PHReport rep;
  rep.dims_plus.push_back(1);
  rep.dims_minus.push_back(1);
  for (int k = 1; k <= kmax; ++k) {
    if (k == 1) {
      rep.dims_plus.push_back(r.dim);
      rep.dims_minus.push_back(r.dim);
      continue;
    }
    rep.dims_plus.push_back(symmetrizer(r, k, +1).rank());
    rep.dims_minus.push_back(symmetrizer(r, k, -1).rank());
  }
  std::vector<Scalar> series;
  for (int v : rep.dims_minus) series.push_back(Scalar(v));
  for (int total = 0; total <= kmax && !rep.p_minus; ++total)
    for (int m = total; m >= 0 && !rep.p_minus; --m) {
      int n = total - m;
      if (m + n + 1 > int(series.size())) continue;
      auto rec = reconstruct_rational(series, m, n);
      if (rec) {
        rep.p_minus = rec;
        rep.bi_rank = {rec->first.degree(), rec->second.degree()};
      }
    }
  return rep;
}

// Identity for the skew inverse of R^{-1}:
//   Psi_{R^-1} = Psi + (q - q^-1) q^{2(m-n)} C_1 B_2,
// with B and C rescaled by q^{2(m-n)}.
inline bool psi_inverse_check(const Braiding& r, const SkewData& s,
                              std::pair<int, int> birank) {
  if (!r.hecke_q) return false;
  const Scalar& q = *r.hecke_q;
  auto rinv_m = r.mat.inverse();
  if (!rinv_m) return false;
  Braiding rinv{r.dim, *rinv_m, q.inv()};
  Scalar factor = (q - q.inv()) * q.pow(2 * (birank.first - birank.second));
  ScalarMatrix psi_inv = s.psi + kron(s.c_op, s.b_op).scaled(factor);
  if (!verify_skew(rinv, psi_inv)) return false;
  Scalar scale = q.pow(2 * (birank.first - birank.second));
  if (trace_first(psi_inv, r.dim) != s.b_op.scaled(scale)) return false;
  if (trace_second(psi_inv, r.dim) != s.c_op.scaled(scale)) return false;
  return true;
}

} // namespace qweyl
