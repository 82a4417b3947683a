// Reflection Equation algebras, their modified (quadratic-linear) form, and
// the braided Weyl algebra W(N) on coordinate matrix N and derivative matrix
// D. Includes R-matrix chains, the conjugated coordinate matrices N_kbar,
// the normal-ordering oracle for the derivative action, and - for involutive
// R - the closed-form hbar-Leibniz rule together with two independent
// evaluators (coproduct and circ-product stepping) used to cross-check it.
#pragma once

#include "qweyl/hecke.hpp"
#include "qweyl/ncmatrix.hpp"
#include "qweyl/rewrite.hpp"

namespace qweyl {

namespace detail {

inline std::string indexed_name(const char* stem, int i, int j) {
  return std::string(stem) + "_" + std::to_string(i + 1) + "^" + std::to_string(j + 1);
}

} // namespace detail

// ---- Reflection Equation algebra -------------------------------------------

struct REPresentation {
  Braiding braiding;
  SkewData skew;
  Alphabet alphabet;              // l_i^j, row-major
  std::vector<NCPoly> relations;  // independent, RREF-pruned
  RewriteSystem rs;

  int gen_id(int i, int j) const { return i * braiding.dim + j; }
  NCMatrix L() const {
    int d = braiding.dim;
    NCMatrix m(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) m.at(i, j) = NCPoly::gen(gen_id(i, j));
    return m;
  }
};

namespace detail {

inline Alphabet matrix_alphabet(const char* stem, int d, bool derivative_like) {
  std::vector<GenInfo> gens;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      gens.push_back({indexed_name(stem, i, j), derivative_like});
  return Alphabet(std::move(gens));
}

inline std::vector<NCPoly> matrix_entries(const NCMatrix& m) {
  std::vector<NCPoly> v;
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) v.push_back(m.at(i, j));
  return v;
}

} // namespace detail

// Relations R L1 R L1 - L1 R L1 R = 0, expanded and pruned.
inline REPresentation build_re(const Braiding& r) {
  auto skew = skew_inverse(r);
  if (!skew) throw std::invalid_argument("build_re: braiding is not skew-invertible");
  int d = r.dim;
  Alphabet alpha = detail::matrix_alphabet("l", d, false);
  NCMatrix L(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) L.at(i, j) = NCPoly::gen(i * d + j);
  NCMatrix L1 = embed_slot(L, d, 0, 2);
  NCMatrix R = embed_pair_nc(r.mat, d, 0, 2);
  NCMatrix rel = R * L1 * R * L1 - L1 * R * L1 * R;
  RewriteSystem rs = RewriteSystem::from_relations(alpha, detail::matrix_entries(rel));
  std::vector<NCPoly> pruned;
  for (int b = 1; b < alpha.size(); ++b)
    for (int a = 0; a < b; ++a) {
      Word w;
      w.push_back(char(b));
      w.push_back(char(a));
      pruned.push_back(NCPoly::word(w) - rs.rule(b, a));
    }
  return REPresentation{r, *skew, alpha, std::move(pruned), std::move(rs)};
}

// Relations of the modified RE algebra,
//   R Lt1 R Lt1 - Lt1 R Lt1 R = hbar (R Lt1 - Lt1 R),
// as polynomials in the shifted generators.
inline std::vector<NCPoly> mre_relations(const Braiding& r, const Scalar& hbar) {
  int d = r.dim;
  NCMatrix Lt(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) Lt.at(i, j) = NCPoly::gen(i * d + j);
  NCMatrix L1 = embed_slot(Lt, d, 0, 2);
  NCMatrix R = embed_pair_nc(r.mat, d, 0, 2);
  NCMatrix rel = R * L1 * R * L1 - L1 * R * L1 * R - (R * L1 - L1 * R).scaled(hbar);
  return detail::matrix_entries(rel);
}

// Substituting L = hbar I - (q - q^-1) Lt into the RE relations must
// reproduce (q - q^-1)^2 times the modified RE relations, identically.
// sign = -1 is the paper's shift; +1 is the deliberately wrong one.
inline bool modified_re_shift_check(const Braiding& r, const Scalar& hbar, int sign = -1) {
  if (!r.hecke_q) throw std::invalid_argument("modified_re_shift_check: Hecke q required");
  const Scalar q = *r.hecke_q;
  Scalar lam = q - q.inv();
  int d = r.dim;
  NCMatrix Lt(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) Lt.at(i, j) = NCPoly::gen(i * d + j);
  NCMatrix L = NCMatrix::identity(d).scaled(hbar) + Lt.scaled(sign > 0 ? lam : -lam);
  NCMatrix L1 = embed_slot(L, d, 0, 2);
  NCMatrix R = embed_pair_nc(r.mat, d, 0, 2);
  NCMatrix substituted = R * L1 * R * L1 - L1 * R * L1 * R;

  NCMatrix Lt1 = embed_slot(Lt, d, 0, 2);
  NCMatrix mre = R * Lt1 * R * Lt1 - Lt1 * R * Lt1 * R - (R * Lt1 - Lt1 * R).scaled(hbar);
  return substituted == mre.scaled(lam * lam);
}

// ---- braided Weyl algebra ---------------------------------------------------

struct WeylPresentation {
  Braiding braiding;
  Scalar hbar;
  int m = 0;
  Alphabet alphabet; // n_i^j then d_i^j, row-major
  RewriteSystem rs;
  std::vector<Scalar> eps; // counit values, zero on every d

  int n_id(int i, int j) const { return i * m + j; }
  // derivative letters are ordered in reversed row-major: the RE algebra on
  // D (braiding R^-1) is PBW-orientable in that order, not in the plain one
  int d_id(int i, int j) const { return m * m + (m - 1 - i) * m + (m - 1 - j); }

  NCMatrix N() const {
    NCMatrix x(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) x.at(i, j) = NCPoly::gen(n_id(i, j));
    return x;
  }
  NCMatrix D() const {
    NCMatrix x(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) x.at(i, j) = NCPoly::gen(d_id(i, j));
    return x;
  }
  // Dt = hbar^{-1} I + D
  NCMatrix Dtilde() const {
    if (hbar.is_zero())
      throw std::domain_error("Dtilde: undefined at hbar = 0");
    return NCMatrix::identity(m).scaled(hbar.inv()) + D();
  }

  // action of a derivative-side polynomial on a coordinate-side polynomial:
  // normal order, then evaluate the derivative tail by the counit
  NCPoly act(const NCPoly& dop, const NCPoly& coord) const {
    return evaluate_counit(dop * coord, rs, eps);
  }
};

// Relation sets of the braided Weyl algebra W(N):
//   R N1 R N1 - N1 R N1 R = hbar (R N1 - N1 R)
//   R^-1 D1 R^-1 D1 = D1 R^-1 D1 R^-1
//   D1 R N1 R - R N1 R^-1 D1 = R + hbar D1 R
inline WeylPresentation build_weyl(const Braiding& r, Scalar hbar) {
  int d = r.dim;
  auto rinv_m = r.mat.inverse();
  if (!rinv_m) throw std::invalid_argument("build_weyl: braiding not invertible");

  std::vector<GenInfo> gens;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      gens.push_back({detail::indexed_name("n", i, j), false});
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      gens.push_back({detail::indexed_name("d", d - 1 - i, d - 1 - j), true});
  Alphabet alphabet(std::move(gens));

  NCMatrix N(d, d), D(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      N.at(i, j) = NCPoly::gen(i * d + j);
      D.at(i, j) = NCPoly::gen(d * d + (d - 1 - i) * d + (d - 1 - j));
    }
  NCMatrix N1 = embed_slot(N, d, 0, 2);
  NCMatrix D1 = embed_slot(D, d, 0, 2);
  NCMatrix R = embed_pair_nc(r.mat, d, 0, 2);
  NCMatrix Ri = embed_pair_nc(*rinv_m, d, 0, 2);

  std::vector<NCPoly> relations;
  auto push = [&](const NCMatrix& m) {
    for (auto& p : detail::matrix_entries(m)) relations.push_back(p);
  };
  push(R * N1 * R * N1 - N1 * R * N1 * R - (R * N1 - N1 * R).scaled(hbar));
  push(Ri * D1 * Ri * D1 - D1 * Ri * D1 * Ri);
  push(D1 * R * N1 * R - R * N1 * Ri * D1 - R - (D1 * R).scaled(hbar));

  RewriteSystem rs = RewriteSystem::from_relations(alphabet, relations);
  std::vector<Scalar> eps(size_t(2 * d * d), Scalar(0));
  WeylPresentation w{r, std::move(hbar), d, rs.alphabet(), std::move(rs), std::move(eps)};
  return w;
}

// ---- R-matrix chains and conjugated coordinates -----------------------------

// Chain R_{p-1}...R_{k+1} R_k R_{k+1}...R_{p-1} on V^{(x) slots}; both
// defining products are formed and must agree (Yang-Baxter consequence).
// Math indices are 1-based, 1 <= k < p <= slots.
inline ScalarMatrix rchain(const Braiding& r, int k, int p, int slots) {
  if (k > p) std::swap(k, p); // chains are symmetric by definition
  if (k == p || p > slots || k < 1)
    throw std::invalid_argument("rchain: need 1 <= k < p <= slots");
  auto rmat = [&](int i) { return embed_pair(r.mat, r.dim, i - 1, slots); };
  int n = 1;
  for (int s = 0; s < slots; ++s) n *= r.dim;
  ScalarMatrix a = ScalarMatrix::identity(n);
  for (int i = p - 1; i >= k + 1; --i) a = a * rmat(i);
  a = a * rmat(k);
  for (int i = k + 1; i <= p - 1; ++i) a = a * rmat(i);
  ScalarMatrix b = ScalarMatrix::identity(n);
  for (int i = k; i <= p - 2; ++i) b = b * rmat(i);
  b = b * rmat(p - 1);
  for (int i = p - 2; i >= k; --i) b = b * rmat(i);
  if (a != b) throw std::logic_error("rchain: the two defining products differ");
  return a;
}

// Cycle chain R_(1 k1 ... ks) = R_{1,k1} R_{k1,k2} ... R_{k_{s-1},k_s}.
inline ScalarMatrix rchain_cycle(const Braiding& r, const std::vector<int>& ks, int slots) {
  if (ks.empty()) throw std::invalid_argument("rchain_cycle: empty index list");
  ScalarMatrix m = rchain(r, 1, ks[0], slots);
  for (size_t i = 0; i + 1 < ks.size(); ++i) m = m * rchain(r, ks[i], ks[i + 1], slots);
  return m;
}

// N_kbar = R_{k-1}...R_1 N_1 R_1^{-1}...R_{k-1}^{-1} on V^{(x) slots}.
inline NCMatrix nbar(const WeylPresentation& w, int k, int slots) {
  int d = w.m;
  NCMatrix nk = embed_slot(w.N(), d, 0, slots);
  if (k == 1) return nk;
  auto rinv = w.braiding.mat.inverse();
  for (int i = 1; i <= k - 1; ++i) {
    NCMatrix ri = embed_pair_nc(w.braiding.mat, d, i - 1, slots);
    NCMatrix rii = embed_pair_nc(*rinv, d, i - 1, slots);
    nk = ri * nk * rii;
  }
  return nk;
}

// Exchange identities for the chains against N_kbar; all three lines.
inline bool check_nbar_exchange(const WeylPresentation& w, int kmax) {
  for (int p = 1; p <= kmax; ++p)
    for (int k = 1; k <= kmax; ++k) {
      if (k == p) continue;
      int slots = std::max(k, p);
      NCMatrix chain = NCMatrix::from_scalar(rchain(w.braiding, std::min(k, p), std::max(k, p), slots));
      if (chain * nbar(w, k, slots) != nbar(w, p, slots) * chain) return false;
      for (int s = 1; s <= slots; ++s) {
        if (s == k || s == p) continue;
        if (chain * nbar(w, s, slots) != nbar(w, s, slots) * chain) return false;
      }
    }
  return true;
}

// Dt_1 N_kbar = N_kbar Dt_1 + hbar Dt_1 Chain_{1k}, entrywise after normal
// ordering.
inline bool check_dtilde_rule(const WeylPresentation& w, int k) {
  if (k < 2) throw std::invalid_argument("check_dtilde_rule: k >= 2");
  int slots = k;
  NCMatrix dt1 = embed_slot(w.Dtilde(), w.m, 0, slots);
  NCMatrix nk = nbar(w, k, slots);
  NCMatrix chain = NCMatrix::from_scalar(rchain(w.braiding, 1, k, slots));
  NCMatrix lhs = dt1 * nk;
  NCMatrix rhs = nk * dt1 + (dt1 * chain).scaled(w.hbar);
  auto nf = [&](const NCPoly& p) { return w.rs.normal_form(p); };
  return lhs.map(nf) == rhs.map(nf);
}

// ---- the closed-form hbar-Leibniz rule (involutive R) -----------------------

inline int ipow(int b, int e) {
  int r = 1;
  while (e--) r *= b;
  return r;
}

inline bool is_involutive(const Braiding& r) {
  return (r.mat * r.mat) == ScalarMatrix::identity(r.dim * r.dim);
}

// Oracle side: D_1 acting on Nbar_2 ... Nbar_{p+1}, computed by normal
// ordering and the counit, entrywise.
inline NCMatrix leibniz_lhs(const WeylPresentation& w, int p) {
  int slots = p + 1;
  NCMatrix prod = NCMatrix::identity(ipow(w.m, slots));
  for (int k = 2; k <= p + 1; ++k) prod = prod * nbar(w, k, slots);
  NCMatrix d1 = embed_slot(w.D(), w.m, 0, slots);
  NCMatrix applied = d1 * prod;
  return applied.map([&](const NCPoly& x) { return evaluate_counit(x, w.rs, w.eps); });
}

// Closed-form side of the action:
//   sum_{s>=1} hbar^{s-1} sum_{2<=k1<...<ks<=p+1} (prod omitting the k's)
//   R_(1 k1 ... ks).
inline NCMatrix leibniz_rhs(const WeylPresentation& w, int p) {
  if (!is_involutive(w.braiding))
    throw std::invalid_argument("leibniz closed form requires an involutive braiding");
  int slots = p + 1;
  int n = ipow(w.m, slots);
  NCMatrix acc(n, n);
  // iterate over nonempty subsets of {2,...,p+1}
  for (unsigned mask = 1; mask < (1u << p); ++mask) {
    std::vector<int> ks;
    for (int b = 0; b < p; ++b)
      if (mask & (1u << b)) ks.push_back(b + 2);
    NCMatrix prod = NCMatrix::identity(n);
    for (int k = 2; k <= p + 1; ++k) {
      if (std::find(ks.begin(), ks.end(), k) != ks.end()) continue;
      prod = prod * nbar(w, k, slots);
    }
    ScalarMatrix chain = rchain_cycle(w.braiding, ks, slots);
    acc = acc + (prod * NCMatrix::from_scalar(chain)).scaled(w.hbar.pow(int(ks.size()) - 1));
  }
  return acc;
}

// ---- per-monomial evaluators at R = P ---------------------------------------

using NWord = std::vector<std::pair<int, int>>; // letters n_a^b, 0-based

inline NCPoly nword_poly(const WeylPresentation& w, const NWord& word) {
  NCPoly p(Scalar(1));
  for (auto& [a, b] : word) p = p * NCPoly::gen(w.n_id(a, b));
  return p;
}

// Meljanac-Skoda coproduct evaluator at R = P:
//   Delta(d_i^j) = d_i^j (x) 1 + 1 (x) d_i^j + hbar d_k^j (x) d_i^k.
inline NCPoly coproduct_action(const WeylPresentation& w, int i, int j,
                               const NWord& word) {
  if (word.empty()) return NCPoly(); // d |> 1 = 0
  auto [a, b] = word.front();
  NWord rest(word.begin() + 1, word.end());
  NCPoly restp = nword_poly(w, rest);
  NCPoly out;
  // d_i^j |> n_a^b = delta_i^b delta_a^j
  if (i == b && a == j) out += restp;
  if (!rest.empty()) {
    NCPoly tail = coproduct_action(w, i, j, rest);
    out += NCPoly::gen(w.n_id(a, b)) * tail;
    for (int k = 0; k < w.m; ++k) {
      // (d_k^j |> n_a^b) (d_i^k |> rest)
      if (k == b && a == j)
        out += coproduct_action(w, i, k, rest).scaled(w.hbar);
    }
  }
  return out;
}

// Stepwise evaluator built on the circ product n_i^j o n_k^l = hbar d^j_k n_i^l:
// every nonempty subset of factor positions is collapsed through the circ
// product and hit with the derivative; remaining factors keep their order.
inline NCPoly circ_step_action(const WeylPresentation& w, int i, int j,
                               const NWord& word) {
  int p = int(word.size());
  NCPoly out;
  for (unsigned mask = 1; mask < (1u << p); ++mask) {
    // collapse the selected letters through o in position order
    Scalar coeff(1);
    int cur_a = -1, cur_b = -1;
    bool dead = false;
    for (int pos = 0; pos < p && !dead; ++pos) {
      if (!(mask & (1u << pos))) continue;
      auto [a, b] = word[size_t(pos)];
      if (cur_a < 0) {
        cur_a = a;
        cur_b = b;
      } else {
        // n_{cur} o n_{ab} = hbar delta(cur_b, a) n_{cur_a}^b
        if (cur_b != a) dead = true;
        coeff *= w.hbar;
        cur_b = b;
      }
    }
    if (dead) continue;
    // d_i^j |> n_{cur_a}^{cur_b}
    if (!(i == cur_b && cur_a == j)) continue;
    NCPoly restp(Scalar(1));
    for (int pos = 0; pos < p; ++pos)
      if (!(mask & (1u << pos)))
        restp = restp * NCPoly::gen(w.n_id(word[size_t(pos)].first, word[size_t(pos)].second));
    out += restp.scaled(coeff);
  }
  return out;
}

// Closed-form value for one monomial: the matrix entry of leibniz_rhs picked
// out by (i,j) and the letter indices. Valid at R = P, where the Nbar factors
// are plain slot embeddings.
inline NCPoly closed_form_entry_flip(const WeylPresentation& w, int i, int j,
                                     const NWord& word) {
  int p = int(word.size());
  NCPoly out;
  for (unsigned mask = 1; mask < (1u << p); ++mask) {
    std::vector<int> ks;
    for (int b = 0; b < p; ++b)
      if (mask & (1u << b)) ks.push_back(b + 2);
    // flip chains are permutation matrices: R_(1 k1..ks) maps the slot
    // content by the cycle (1 k1 ... ks); its (row I, col J) entry with
    // row fixed by the omitted letters realizes iterated deltas:
    //   delta(j, a_{k1}) delta(b_{k1}, a_{k2}) ... delta(b_{ks}, i)
    Scalar coeff = w.hbar.pow(int(ks.size()) - 1);
    bool ok = true;
    int prev = j; // incoming upper index from d_i^j
    for (int k : ks) {
      auto [a, b] = word[size_t(k - 2)];
      if (a != prev) { ok = false; break; }
      prev = b;
    }
    if (!ok || prev != i) continue;
    NCPoly restp(Scalar(1));
    for (int k = 2; k <= p + 1; ++k) {
      if (std::find(ks.begin(), ks.end(), k) != ks.end()) continue;
      restp = restp * NCPoly::gen(w.n_id(word[size_t(k - 2)].first, word[size_t(k - 2)].second));
    }
    out += restp.scaled(coeff);
  }
  return out;
}

// ---- braided traces and friends ---------------------------------------------

inline NCPoly braided_trace(const SkewData& s, const NCMatrix& m, int k) {
  return (NCMatrix::from_scalar(s.c_op) * m.pow(k)).trace();
}

// [element, generator] must normal-form to zero for every listed generator.
inline std::optional<std::pair<int, NCPoly>>
centrality_witness(const RewriteSystem& rs, const NCPoly& elem,
                   const std::vector<int>& gens) {
  for (int g : gens) {
    NCPoly comm = elem * NCPoly::gen(g) - NCPoly::gen(g) * elem;
    NCPoly nf = rs.normal_form(comm);
    if (!nf.is_zero()) return std::make_pair(g, nf);
  }
  return std::nullopt;
}

// M - (Tr_R M / Tr_R I) I; undefined when Tr C = 0 (bi-rank m = n).
inline NCMatrix traceless_part(const SkewData& s, const NCMatrix& m) {
  Scalar tr_c = s.c_op.trace();
  if (tr_c.is_zero())
    throw std::domain_error("traceless_part: Tr_R I = 0 (bi-rank m = n)");
  NCPoly tr_m = braided_trace(s, m, 1);
  NCMatrix out = m;
  NCPoly shift = tr_m.scaled(tr_c.inv());
  for (int i = 0; i < m.rows(); ++i) out.at(i, i) -= shift;
  return out;
}

} // namespace qweyl
