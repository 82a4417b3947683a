// Quantization: the quantum radius frame, the map alpha from classical
// coefficients to U(u(2)_h)-valued ones (both sign conventions for the
// h^2/12 constant), quantized operators in canonical form, the quantum
// d'Alembert / Dirac / Maxwell operators, the Schwarzschild-type
// Laplace-Beltrami operator, and exact difference-operator rendering on the
// isotypic components.
#pragma once

#include "qweyl/classical.hpp"
#include "qweyl/u2.hpp"

namespace qweyl {

// Sign convention for the constant in alpha(x^2) = x^2 + s h^2/12:
// RadiusMinus is the literal reading of the quantizing map with
// rhat^2 = Cas - h^2/4; DisplayPlus flips the constant to + h^2/4.
enum class AlphaConvention { RadiusMinus, DisplayPlus };

inline const char* convention_name(AlphaConvention c) {
  return c == AlphaConvention::RadiusMinus ? "minus (rhat^2 = Cas - h^2/4)"
                                           : "plus (rhat^2 = Cas + h^2/4)";
}

inline Scalar rhat() { return Scalar::var(VMU) / (Scalar(2) * Scalar::i()); }

// the substitute for r^2 under each convention, as a function of mu
inline Scalar alpha_r_squared(AlphaConvention conv) {
  Scalar h = Scalar::var(VH), mu = Scalar::var(VMU);
  Scalar cas = (h * h - mu * mu) * Scalar(BigRat(1, 4));
  Scalar quarter_h2 = h * h * Scalar(BigRat(1, 4));
  return conv == AlphaConvention::RadiusMinus ? cas - quarter_h2 : cas + quarter_h2;
}

// ---- quantum radius frame -----------------------------------------------------

// substituting r -> mu/(2i) and back round-trips exactly
inline bool quantum_radius_roundtrip(const Scalar& f_of_r) {
  Scalar mu_of_r = Scalar(2) * Scalar::i() * Scalar::var(VR);
  Scalar there = f_of_r.subst(VR, rhat());
  return there.subst(VMU, mu_of_r) == f_of_r;
}

// x^2 + y^2 + z^2 + h_small^2 - rhat^2 = 0 in U(u(2)_h), with h_small = h/(2i)
// and rhat^2 realized as the central element Cas - h^2/4
inline bool quantum_radius_relation(const U2System& u2) {
  Scalar h = Scalar::var(VH);
  Scalar h_small_sq = (h / (Scalar(2) * Scalar::i())).pow(2); // = -h^2/4
  NCPoly rhat_sq = u2.casimir() - NCPoly(h * h * Scalar(BigRat(1, 4)));
  NCPoly rel = u2.casimir() + NCPoly(h_small_sq) - rhat_sq;
  return u2.normal_form(rel).is_zero();
}

// ---- alpha on radial functions and isotypic data -------------------------------

namespace detail {

// substitute r^2 -> rs into an even-in-r polynomial
inline Scalar subst_even_r(const MPoly& p, const Scalar& rs) {
  Scalar out;
  for (auto& term : p.terms()) {
    if (term.m.e[VR] % 2 != 0)
      throw std::logic_error("subst_even_r: odd power survived the split");
    Mono rest = term.m;
    int k = term.m.e[VR] / 2;
    rest.e[VR] = 0;
    out += Scalar(MPoly::term(rest, term.c)) * rs.pow(k);
  }
  return out;
}

} // namespace detail

// f(t, r) -> f~(t, mu): even powers of r through alpha_r_squared(conv), a
// single leftover odd r through rhat = mu/(2i). Under RadiusMinus this is
// literally f(t, rhat).
inline Scalar alpha_radial(const Scalar& f, AlphaConvention conv) {
  Scalar rs = alpha_r_squared(conv);
  Scalar r = Scalar::var(VR);
  // rationalize: f = A/B = A B(-r) / (B B(-r)) with an even denominator
  MPoly bneg = f.den().subst(VR, (-r).num());
  MPoly num = f.num() * bneg;
  MPoly den = f.den() * bneg;
  MPoly even, odd; // num = even + r * odd with even/odd in r
  for (auto& term : num.terms()) {
    if (term.m.e[VR] % 2 == 0) {
      even += MPoly::term(term.m, term.c);
    } else {
      Mono m = term.m;
      m.e[VR] = int16_t(m.e[VR] - 1);
      odd += MPoly::term(m, term.c);
    }
  }
  Scalar out = detail::subst_even_r(even, rs) + rhat() * detail::subst_even_r(odd, rs);
  return out / detail::subst_even_r(den, rs);
}

struct ClassicalIsotypic {
  Scalar f; // rational in t, r (and rg)
  int k = 0;
  UPart upart = UPart::BPower;
};

inline IsotypicElement alpha(const ClassicalIsotypic& e, AlphaConvention conv) {
  return {alpha_radial(e.f, conv), e.k, e.upart};
}

// ---- the symmetrization map into U(u(2)_h) -------------------------------------

namespace detail {

inline void sym_words(std::string& cur, std::array<int, 3> left, NCPoly& acc,
                      const Scalar& weight) {
  if (left[0] == 0 && left[1] == 0 && left[2] == 0) {
    Word w;
    for (char c : cur) w.push_back(c);
    acc.add_term(w, weight);
    return;
  }
  for (int g = 0; g < 3; ++g) {
    if (left[size_t(g)] == 0) continue;
    auto next = left;
    --next[size_t(g)];
    cur.push_back(char(U2System::X + g));
    sym_words(cur, next, acc, weight);
    cur.pop_back();
  }
}

} // namespace detail

// full symmetrization of the classical monomial x^a y^b z^c
inline NCPoly sym_monomial(int a, int b, int c) {
  long n = a + b + c, distinct = 1, fact = 1;
  for (long k = 1; k <= n; ++k) fact *= k;
  long fa = 1, fb = 1, fc = 1;
  for (long k = 1; k <= a; ++k) fa *= k;
  for (long k = 1; k <= b; ++k) fb *= k;
  for (long k = 1; k <= c; ++k) fc *= k;
  distinct = fact / (fa * fb * fc);
  NCPoly acc;
  std::string cur;
  detail::sym_words(cur, {a, b, c}, acc, Scalar::rational(BigRat(1, distinct)));
  return acc;
}

// symmetrization of an xyz-polynomial (harmonic basis elements in practice),
// with any t-dependence passed through as central powers of t
inline NCPoly sym_poly(const MPoly& p) {
  NCPoly out;
  for (auto& term : p.terms()) {
    Mono rest = term.m;
    int a = term.m.e[VX], b = term.m.e[VY], c = term.m.e[VZ];
    rest.e[VX] = rest.e[VY] = rest.e[VZ] = 0;
    NCPoly tpart = NCPoly::gen(U2System::T).pow(rest.e[VT]);
    rest.e[VT] = 0;
    out += tpart.scaled(Scalar(MPoly::term(rest, term.c))) * sym_monomial(a, b, c);
  }
  return out;
}

// ---- canonical quantized operators ---------------------------------------------

struct QOpKey {
  std::array<int, 4> beta; // plain derivative orders (t, x, y, z)
  int hdeg = 0;            // harmonic degree of the coefficient part
  int hidx = 0;            // index into harmonic_basis(hdeg)
  friend bool operator<(const QOpKey& a, const QOpKey& b) {
    if (a.beta != b.beta) return a.beta < b.beta;
    if (a.hdeg != b.hdeg) return a.hdeg < b.hdeg;
    return a.hidx < b.hidx;
  }
  friend bool operator==(const QOpKey& a, const QOpKey& b) {
    return a.beta == b.beta && a.hdeg == b.hdeg && a.hidx == b.hidx;
  }
};

// coefficient f(t, mu) per (derivative multi-index, harmonic tag)
using QOperator = std::map<QOpKey, Scalar>;

inline void qop_add(QOperator& q, const QOpKey& key, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = q.find(key);
  if (it == q.end()) {
    q.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) q.erase(it);
  }
}

inline bool qop_equal(const QOperator& a, const QOperator& b) {
  auto strip = [](const QOperator& q) {
    QOperator m;
    for (auto& [k, v] : q)
      if (!v.is_zero()) m.emplace(k, v);
    return m;
  };
  return strip(a) == strip(b);
}

// quantize a classical right-ordered operator coefficientwise
inline QOperator alpha_operator(const classical::COperator& op, AlphaConvention conv) {
  QOperator out;
  for (auto& [beta, coeff] : op.terms) {
    classical::HarmonicForm hf = classical::to_harmonic_form(coeff);
    for (auto& [tag, f] : hf.parts)
      qop_add(out, QOpKey{beta, tag.first, tag.second}, alpha_radial(f, conv));
  }
  return out;
}

// ---- quantum Fischer decomposition ---------------------------------------------

// decompose a coordinate polynomial of U(u(2)_h) over the filtered basis
// t^a Cas^p sym(h_j); returns contributions f(t, mu) per harmonic tag
inline std::map<std::pair<int, int>, Scalar>
quantum_fischer(const U2System& u2, const NCPoly& coord_poly) {
  std::map<std::pair<int, int>, Scalar> out;
  NCPoly nf = u2.normal_form(coord_poly);
  if (nf.is_zero()) return out;
  int n = nf.degree();
  // collect basis elements and their tags
  struct BasisElem {
    int a, p, deg, idx;
    NCPoly value;
  };
  std::vector<BasisElem> basis;
  NCPoly cas = u2.casimir();
  for (int a = 0; a <= n; ++a)
    for (int p = 0; a + 2 * p <= n; ++p)
      for (int deg = 0; a + 2 * p + deg <= n; ++deg) {
        const auto& hb = classical::harmonic_basis(deg);
        for (int idx = 0; idx < int(hb.size()); ++idx) {
          NCPoly v = NCPoly::gen(U2System::T).pow(a) * cas.pow(p) *
                     sym_poly(hb[size_t(idx)]);
          basis.push_back({a, p, deg, idx, u2.normal_form(v)});
        }
      }
  // words appearing anywhere
  std::map<Word, int, WordOrder> widx;
  auto note = [&](const NCPoly& p) {
    for (auto& [w, c] : p.terms())
      if (!widx.count(w)) widx.emplace(w, int(widx.size()));
  };
  note(nf);
  for (auto& b : basis) note(b.value);
  ScalarMatrix A(int(widx.size()), int(basis.size())), rhs(int(widx.size()), 1);
  for (size_t j = 0; j < basis.size(); ++j)
    for (auto& [w, c] : basis[j].value.terms()) A.at(widx.at(w), int(j)) = c;
  for (auto& [w, c] : nf.terms()) rhs.at(widx.at(w), 0) = c;
  auto sol = A.solve(rhs);
  if (!sol)
    throw std::logic_error("quantum_fischer: element outside the filtered basis");
  Scalar h = Scalar::var(VH), mu = Scalar::var(VMU);
  Scalar cas_mu = (h * h - mu * mu) * Scalar(BigRat(1, 4));
  Scalar t = Scalar::var(VT);
  for (size_t j = 0; j < basis.size(); ++j) {
    Scalar c = sol->at(int(j), 0);
    if (c.is_zero()) continue;
    Scalar f = c * t.pow(basis[j].a) * cas_mu.pow(basis[j].p);
    auto key = std::make_pair(basis[j].deg, basis[j].idx);
    auto it = out.find(key);
    if (it == out.end()) out.emplace(key, f);
    else it->second += f;
  }
  return out;
}

// quantum operator polynomial (words = coordinates then derivatives) into
// canonical QOperator form; radial_coeff multiplies every term
inline QOperator to_qoperator(const U2System& u2, const NCPoly& op,
                              const Scalar& radial_coeff = Scalar(1)) {
  QOperator out;
  NCPoly nf = u2.normal_form(op);
  Scalar two_over_h = Scalar(2) / Scalar::var(VH);
  for (auto& [w, c] : nf.terms()) {
    size_t cut = w.size();
    while (cut > 0 && int(static_cast<unsigned char>(w[cut - 1])) >= U2System::DT)
      --cut;
    std::array<int, 4> counts{};
    for (size_t i = cut; i < w.size(); ++i)
      ++counts[size_t(int(static_cast<unsigned char>(w[i])) - U2System::DT)];
    NCPoly coord = NCPoly::word(w.substr(0, cut), c);
    auto parts = quantum_fischer(u2, coord);
    // Dt is the shifted derivative: Dt^a = sum binom(a,i) (2/h)^(a-i) dt^i
    for (int i = counts[0]; i >= 0; --i) {
      long bc = 1;
      for (int k = 0; k < i; ++k) bc = bc * (counts[0] - k) / (k + 1);
      Scalar factor = Scalar(bc) * two_over_h.pow(counts[0] - i);
      std::array<int, 4> beta = {i, counts[1], counts[2], counts[3]};
      for (auto& [tag, f] : parts)
        qop_add(out, QOpKey{beta, tag.first, tag.second}, radial_coeff * factor * f);
    }
  }
  return out;
}

// ---- d'Alembert, Dirac, Maxwell -------------------------------------------------

// gamma matrices in the Dirac representation, Minkowski metric (1,-1,-1,-1)
inline std::array<ScalarMatrix, 4> dirac_gammas() {
  Scalar i = Scalar::i(), one(1);
  std::array<ScalarMatrix, 4> g;
  for (auto& m : g) m = ScalarMatrix(4, 4);
  g[0].at(0, 0) = one;
  g[0].at(1, 1) = one;
  g[0].at(2, 2) = -one;
  g[0].at(3, 3) = -one;
  g[1].at(0, 3) = one;
  g[1].at(1, 2) = one;
  g[1].at(2, 1) = -one;
  g[1].at(3, 0) = -one;
  g[2].at(0, 3) = -i;
  g[2].at(1, 2) = i;
  g[2].at(2, 1) = i;
  g[2].at(3, 0) = -i;
  g[3].at(0, 2) = one;
  g[3].at(1, 3) = -one;
  g[3].at(2, 0) = -one;
  g[3].at(3, 1) = one;
  return g;
}

// Dhat^2 = Box I with the gamma representation above; also verifies the
// Clifford relations themselves.
inline bool dirac_check(const U2System& u2) {
  auto g = dirac_gammas();
  ScalarMatrix id4 = ScalarMatrix::identity(4);
  static const int metric[4] = {1, -1, -1, -1};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      ScalarMatrix anti = g[a] * g[b] + g[b] * g[a];
      ScalarMatrix expect = (a == b) ? id4.scaled(Scalar(2 * metric[a]))
                                     : ScalarMatrix::zero(4, 4);
      if (anti != expect) return false;
    }
  std::array<NCPoly, 4> derivs = {u2.dt_plain(), NCPoly::gen(U2System::DX),
                                  NCPoly::gen(U2System::DY), NCPoly::gen(U2System::DZ)};
  NCMatrix dirac(4, 4);
  for (int mu = 0; mu < 4; ++mu) {
    Scalar sign = (mu == 0) ? Scalar(1) : Scalar(-1);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (!g[size_t(mu)].at(i, j).is_zero())
          dirac.at(i, j) += derivs[size_t(mu)].scaled(sign * g[size_t(mu)].at(i, j));
  }
  NCMatrix d2 = dirac * dirac;
  NCMatrix expect = NCMatrix::identity(4).map([&](const NCPoly& e) {
    return u2.box() * e;
  });
  return (d2 - expect)
      .map([&](const NCPoly& e) { return u2.normal_form(e); })
      .is_zero();
}

// Maxwell operator applied through the oracle, componentwise:
//   Mw(v)_mu = Box(v_mu) - d_mu (d_t v_0 - d_x v_1 - d_y v_2 - d_z v_3)
inline std::array<NCPoly, 4> maxwell(const U2System& u2,
                                     const std::array<NCPoly, 4>& v) {
  std::array<NCPoly, 4> d = {u2.dt_plain(), NCPoly::gen(U2System::DX),
                             NCPoly::gen(U2System::DY), NCPoly::gen(U2System::DZ)};
  NCPoly div = u2.act(d[0], v[0]);
  for (int i = 1; i < 4; ++i) div -= u2.act(d[size_t(i)], v[size_t(i)]);
  std::array<NCPoly, 4> out;
  for (int mu = 0; mu < 4; ++mu)
    out[size_t(mu)] = u2.act(u2.box(), v[size_t(mu)]) - u2.act(d[size_t(mu)], div);
  return out;
}

// ---- the quantum Laplace-Beltrami operator --------------------------------------

// coefficients of c_tt dt^2 + c_q2 Q^2 + c_q Q + c_qdt Q dt + c_delta Delta,
// rational in (mu, rg)
struct InvariantQuantumOp {
  Scalar c_tt, c_q2, c_q, c_qdt, c_delta;
};

inline InvariantQuantumOp lb_quantum(const classical::MetricProfile& m,
                                     AlphaConvention conv) {
  if (m.phi.is_zero())
    throw std::invalid_argument("lb_quantum: degenerate metric profile");
  Scalar h = Scalar::var(VH);
  Scalar phi_hat = m.phi.subst(VR, rhat());
  Scalar dphi_hat = m.phi.derivative(VR).subst(VR, rhat());
  Scalar a = (phi_hat - Scalar(1)) / (rhat() * rhat());
  Scalar s = conv == AlphaConvention::DisplayPlus ? Scalar(1) : Scalar(-1);
  InvariantQuantumOp op;
  op.c_tt = phi_hat.inv();
  op.c_q2 = -a;
  op.c_q = -(a + dphi_hat / rhat());
  op.c_qdt = h * Scalar(BigRat(1, 2)) * a;
  op.c_delta = -(Scalar(1) + s * h * h * Scalar(BigRat(1, 12)) * a);
  return op;
}

// expand the five-term operator into canonical QOperator form
inline QOperator to_qoperator(const U2System& u2, const InvariantQuantumOp& op) {
  QOperator out;
  auto acc = [&](const QOperator& q) {
    for (auto& [k, v] : q) qop_add(out, k, v);
  };
  NCPoly dt = u2.dt_plain();
  acc(to_qoperator(u2, dt * dt, op.c_tt));
  acc(to_qoperator(u2, u2.q_op() * u2.q_op(), op.c_q2));
  acc(to_qoperator(u2, u2.q_op(), op.c_q));
  acc(to_qoperator(u2, u2.q_op() * dt, op.c_qdt));
  acc(to_qoperator(u2, u2.delta(), op.c_delta));
  return out;
}

// ---- difference operators --------------------------------------------------------

// coefficients over the invariant basis {1, Dt~, Q, Delta_0..Delta_3}
struct InvariantSpan {
  std::array<Scalar, 7> c; // id, dt_shifted, q, d0, d1, d2, d3
};

inline InvariantSpan to_span(const InvariantQuantumOp& op) {
  Scalar h = Scalar::var(VH);
  InvariantSpan s;
  // dt^2 = D0 - (4/h) Dt~ + 4/h^2, Q dt = D2 - (2/h) Q, Q^2 = D3
  s.c[0] = op.c_tt * Scalar(4) / (h * h);
  s.c[1] = -op.c_tt * Scalar(4) / h;
  s.c[2] = op.c_q - op.c_qdt * Scalar(2) / h;
  s.c[3] = op.c_tt;
  s.c[4] = op.c_delta;
  s.c[5] = op.c_qdt;
  s.c[6] = op.c_q2;
  return s;
}

struct DifferenceOperator {
  struct Term {
    Scalar coeff;    // rational in (t, mu)
    BigRat dt, dmu;  // shifts in units of h
  };
  std::vector<Term> terms;
  int k = 0;

  Scalar apply(const Scalar& f) const {
    Scalar h = Scalar::var(VH), t = Scalar::var(VT), mu = Scalar::var(VMU);
    Scalar out;
    for (auto& term : terms)
      out += term.coeff * f.subst(VT, t + Scalar::rational(term.dt) * h)
                              .subst(VMU, mu + Scalar::rational(term.dmu) * h);
    return out;
  }
};

namespace detail {

inline void diff_add(std::map<std::pair<BigRat, BigRat>, Scalar>& acc,
                     const BigRat& dt, const BigRat& dmu, const Scalar& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(dt, dmu);
  auto it = acc.find(key);
  if (it == acc.end()) acc.emplace(key, c);
  else it->second += c;
}

} // namespace detail

// exact difference-operator rendering of a span combination on component k
inline DifferenceOperator difference_form(const SpectralMatrices& s,
                                          const InvariantSpan& span, int k) {
  Scalar h = Scalar::var(VH);
  std::map<std::pair<BigRat, BigRat>, Scalar> acc;
  // identity
  detail::diff_add(acc, 0, 0, span.c[0]);
  // first order: rows of (P1, P2) against (2/h, k)
  Scalar vk1[2] = {Scalar(2) / h, Scalar(long(k))};
  for (int row = 0; row < 2; ++row) {
    const Scalar& coeff = span.c[1 + row];
    if (coeff.is_zero()) continue;
    Scalar c1 = s.p1.at(row, 0) * vk1[0] + s.p1.at(row, 1) * vk1[1];
    Scalar c2 = s.p2.at(row, 0) * vk1[0] + s.p2.at(row, 1) * vk1[1];
    detail::diff_add(acc, BigRat(1, 2), -1, coeff * c1);
    detail::diff_add(acc, BigRat(1, 2), 1, coeff * c2);
  }
  // second order: rows of (P0, P+, P-) against (4/h^2, 0, 2k/h, k^2)
  Scalar vk2[4] = {Scalar(4) / (h * h), Scalar(0), Scalar(2 * long(k)) / h,
                   Scalar(long(k) * long(k))};
  for (int row = 0; row < 4; ++row) {
    const Scalar& coeff = span.c[3 + row];
    if (coeff.is_zero()) continue;
    auto contract = [&](const ScalarMatrix& p) {
      Scalar v;
      for (int j = 0; j < 4; ++j) v += p.at(row, j) * vk2[j];
      return v;
    };
    detail::diff_add(acc, 1, 0, coeff * contract(s.p0));
    detail::diff_add(acc, 1, 2, coeff * contract(s.p_plus));
    detail::diff_add(acc, 1, -2, coeff * contract(s.p_minus));
  }
  DifferenceOperator out;
  out.k = k;
  for (auto& [key, c] : acc)
    if (!c.is_zero()) out.terms.push_back({c, key.first, key.second});
  return out;
}

inline DifferenceOperator difference_form(const SpectralMatrices& s,
                                          const InvariantQuantumOp& op, int k) {
  return difference_form(s, to_span(op), k);
}

// Constant-coefficient span detection for a raw operator polynomial; fails
// (nullopt) when the operator lies outside the invariant span.
inline std::optional<InvariantSpan> span_decompose(const U2System& u2,
                                                   const NCPoly& op) {
  std::array<NCPoly, 7> basis = {NCPoly(Scalar(1)), u2.dt_shifted(), u2.q_op(),
                                 u2.delta_i(0),     u2.delta_i(1),   u2.delta_i(2),
                                 u2.delta_i(3)};
  std::map<Word, int, WordOrder> widx;
  std::array<NCPoly, 7> nfb;
  NCPoly nf = u2.normal_form(op);
  for (auto& [w, c] : nf.terms())
    if (!widx.count(w)) widx.emplace(w, int(widx.size()));
  for (size_t i = 0; i < basis.size(); ++i) {
    nfb[i] = u2.normal_form(basis[i]);
    for (auto& [w, c] : nfb[i].terms())
      if (!widx.count(w)) widx.emplace(w, int(widx.size()));
  }
  ScalarMatrix A(int(widx.size()), 7), b(int(widx.size()), 1);
  for (int j = 0; j < 7; ++j)
    for (auto& [w, c] : nfb[size_t(j)].terms()) A.at(widx.at(w), j) = c;
  for (auto& [w, c] : nf.terms()) b.at(widx.at(w), 0) = c;
  auto sol = A.solve(b);
  if (!sol) return std::nullopt;
  InvariantSpan s;
  for (int j = 0; j < 7; ++j) s.c[size_t(j)] = sol->at(j, 0);
  return s;
}

} // namespace qweyl
