// The calculus on U(u(2)_h): generators t, x, y, z with [x,y] = h z cyclic
// and t central, partial derivatives Dx, Dy, Dz plus the shifted Dt
// (= plain d/dt + 2/h), their 16 permutation rules, the Cayley-Hamilton
// identity of the generating matrix, the spectral matrices Phi and Pi with
// their projectors, and the closed-form action of the invariant operators on
// isotypic elements f(t, mu) b^k, cross-checked against the PBW oracle.
#pragma once

#include "qweyl/ncmatrix.hpp"
#include "qweyl/rewrite.hpp"

#include <array>

namespace qweyl {

enum class FirstOrderOp { DtPlain, DtShifted, Q };
enum class SecondOrderOp { Delta0, Delta1, Delta2, Delta3 };
enum class UPart { BPower, ReB, ImB };

struct IsotypicElement {
  Scalar f;            // rational in t, mu over Q(i)(h)
  int k = 0;           // component marker b^k
  UPart upart = UPart::BPower;
};

class U2System {
public:
  enum Gen { T = 0, X = 1, Y = 2, Z = 3, DT = 4, DX = 5, DY = 6, DZ = 7 };

  U2System() : rs_(build()), eps_(8, Scalar(0)) {
    eps_[DT] = Scalar(2) / h();
  }

  const RewriteSystem& rs() const { return rs_; }
  const std::vector<Scalar>& eps() const { return eps_; }

  static Scalar h() { return Scalar::var(VH); }
  static Scalar half_h() { return Scalar::var(VH) * Scalar(BigRat(1, 2)); }

  NCPoly gen(Gen g) const { return NCPoly::gen(int(g)); }

  // invariant operators
  NCPoly dt_shifted() const { return gen(DT); }
  NCPoly dt_plain() const { return gen(DT) - NCPoly(Scalar(2) / h()); }
  NCPoly q_op() const {
    return gen(X) * gen(DX) + gen(Y) * gen(DY) + gen(Z) * gen(DZ);
  }
  NCPoly delta() const {
    return gen(DX) * gen(DX) + gen(DY) * gen(DY) + gen(DZ) * gen(DZ);
  }
  NCPoly delta_i(int i) const {
    switch (i) {
      case 0: return gen(DT) * gen(DT);
      case 1: return delta();
      case 2: return q_op() * gen(DT);
      case 3: return q_op() * q_op();
    }
    throw std::invalid_argument("delta_i: index 0..3");
  }
  NCPoly box() const { return dt_plain() * dt_plain() - delta(); }
  NCPoly casimir() const {
    return gen(X) * gen(X) + gen(Y) * gen(Y) + gen(Z) * gen(Z);
  }
  NCPoly b_elem() const { return gen(X).scaled(-Scalar::i()) - gen(Y); }

  // the generating matrix [[t-iz, -ix-y], [-ix+y, t+iz]]
  NCMatrix n_matrix() const {
    NCMatrix n(2, 2);
    Scalar i = Scalar::i();
    n.at(0, 0) = gen(T) - gen(Z).scaled(i);
    n.at(0, 1) = gen(X).scaled(-i) - gen(Y);
    n.at(1, 0) = gen(X).scaled(-i) + gen(Y);
    n.at(1, 1) = gen(T) + gen(Z).scaled(i);
    return n;
  }

  NCPoly act(const NCPoly& op, const NCPoly& elem) const {
    return evaluate_counit(op * elem, rs_, eps_);
  }
  NCPoly normal_form(const NCPoly& p) const { return rs_.normal_form(p); }

  // u-part polynomials: b^k, Re(b^k), Im(b^k)
  NCPoly u_part(int k, UPart part) const {
    NCPoly bk = b_elem().pow(k);
    if (part == UPart::BPower) return bk;
    NCPoly conj = bk.conjugate_coeffs();
    if (part == UPart::ReB) return (bk + conj).scaled(Scalar(BigRat(1, 2)));
    return (bk - conj).scaled((Scalar(2) * Scalar::i()).inv());
  }

  // N^2 - (2t + h) N + (t^2 + Cas + h t) I normal-forms to zero entrywise.
  bool cayley_hamilton_check(bool perturb = false) const {
    NCMatrix n = n_matrix();
    Scalar two_t_h_coeff = perturb ? Scalar(2) : Scalar(1);
    NCPoly tr = gen(T).scaled(Scalar(2)) + NCPoly(h() * two_t_h_coeff);
    NCPoly det = gen(T) * gen(T) + casimir() + gen(T).scaled(h());
    NCMatrix lhs = n * n - n.map([&](const NCPoly& e) { return tr * e; }) +
                   NCMatrix::identity(2).map([&](const NCPoly& e) { return det * e; });
    return lhs.map([&](const NCPoly& e) { return normal_form(e); }).is_zero();
  }

  // op t^k = (t + shift)^k op as an operator identity
  bool t_shift_check(const NCPoly& op, const Scalar& shift, int k) const {
    NCPoly tk = gen(T).pow(k);
    NCPoly shifted = (gen(T) + NCPoly(shift)).pow(k);
    return normal_form(op * tk - shifted * op).is_zero();
  }

private:
  static RewriteSystem build() {
    Alphabet alpha({{"t", false},
                    {"x", false},
                    {"y", false},
                    {"z", false},
                    {"Dt", true},
                    {"Dx", true},
                    {"Dy", true},
                    {"Dz", true}});
    auto w = [](int a, int b) {
      Word s;
      s.push_back(char(a));
      s.push_back(char(b));
      return s;
    };
    Scalar h = Scalar::var(VH);
    Scalar hh = h * Scalar(BigRat(1, 2));
    std::map<std::pair<int, int>, NCPoly> rules;
    // t is central among the coordinates
    for (int g : {X, Y, Z}) rules[{g, T}] = NCPoly::word(w(T, g));
    // [x,y] = h z, [y,z] = h x, [z,x] = h y
    rules[{Y, X}] = NCPoly::word(w(X, Y)) - NCPoly::gen(Z).scaled(h);
    rules[{Z, X}] = NCPoly::word(w(X, Z)) + NCPoly::gen(Y).scaled(h);
    rules[{Z, Y}] = NCPoly::word(w(Y, Z)) - NCPoly::gen(X).scaled(h);
    // partial derivatives commute with each other
    for (int b = DT; b <= DZ; ++b)
      for (int a = DT; a < b; ++a) rules[{b, a}] = NCPoly::word(w(a, b));
    // the 16-entry permutation table with the coordinates
    auto cross = [&](int dgen, int cgen, int corr, const Scalar& c) {
      rules[{dgen, cgen}] =
          NCPoly::word(w(cgen, dgen)) + NCPoly::gen(corr).scaled(c);
    };
    cross(DT, T, DT, hh);
    cross(DT, X, DX, -hh);
    cross(DT, Y, DY, -hh);
    cross(DT, Z, DZ, -hh);
    cross(DX, T, DX, hh);
    cross(DX, X, DT, hh);
    cross(DX, Y, DZ, hh);
    cross(DX, Z, DY, -hh);
    cross(DY, T, DY, hh);
    cross(DY, X, DZ, -hh);
    cross(DY, Y, DT, hh);
    cross(DY, Z, DX, hh);
    cross(DZ, T, DZ, hh);
    cross(DZ, X, DY, hh);
    cross(DZ, Y, DX, -hh);
    cross(DZ, Z, DT, hh);
    return RewriteSystem::from_rules(std::move(alpha), rules);
  }

  RewriteSystem rs_;
  std::vector<Scalar> eps_;
};

// ---- spectral data -----------------------------------------------------------

// All entries are rational functions of (h, mu) through Cas = (h^2 - mu^2)/4.
struct SpectralMatrices {
  ScalarMatrix phi;                         // 2 x 2
  ScalarMatrix pi;                          // 4 x 4
  Scalar lambda1, lambda2;                  // Phi eigenvalues
  Scalar lambda0, lambda_plus, lambda_minus; // Pi eigenvalues
  ScalarMatrix p1, p2;                      // Phi projectors
  ScalarMatrix p0, p_plus, p_minus;         // Pi projectors
};

inline Scalar u2_cas_mu() {
  Scalar h = Scalar::var(VH), mu = Scalar::var(VMU);
  return (h * h - mu * mu) * Scalar(BigRat(1, 4));
}

inline SpectralMatrices spectral_matrices() {
  Scalar h = Scalar::var(VH), mu = Scalar::var(VMU);
  Scalar cas = u2_cas_mu();
  Scalar quarter(BigRat(1, 4)), half(BigRat(1, 2));

  SpectralMatrices s;
  s.phi = ScalarMatrix(2, 2);
  s.phi.at(0, 0) = cas - h * h * Scalar(BigRat(3, 4));
  s.phi.at(0, 1) = -h;
  s.phi.at(1, 0) = h * cas;
  s.phi.at(1, 1) = cas + h * h * quarter;

  s.pi = ScalarMatrix(4, 4);
  s.pi.at(0, 0) = cas - h * h * Scalar(BigRat(3, 2));
  s.pi.at(0, 1) = h * h * half;
  s.pi.at(0, 2) = Scalar(-2) * h;
  s.pi.at(1, 0) = h * h * Scalar(BigRat(3, 2));
  s.pi.at(1, 1) = cas - h * h * half;
  s.pi.at(1, 2) = Scalar(2) * h;
  s.pi.at(2, 0) = h * cas;
  s.pi.at(2, 2) = cas - h * h * half;
  s.pi.at(2, 3) = -h;
  s.pi.at(3, 0) = h * h * cas;
  s.pi.at(3, 1) = -(h * h * half) * cas;
  s.pi.at(3, 2) = h * (Scalar(2) * cas + h * h * quarter);
  s.pi.at(3, 3) = cas + h * h * half;

  s.lambda1 = mu * (Scalar(2) * h - mu) * quarter;
  s.lambda2 = -(mu * (Scalar(2) * h + mu)) * quarter;
  s.lambda0 = (h * h - mu * mu) * quarter;
  s.lambda_plus = (h * h - (mu + Scalar(2) * h).pow(2)) * quarter;
  s.lambda_minus = (h * h - (mu - Scalar(2) * h).pow(2)) * quarter;

  auto proj2 = [&](const Scalar& la, const Scalar& lb) {
    return (s.phi - ScalarMatrix::identity(2).scaled(lb)).scaled((la - lb).inv());
  };
  s.p1 = proj2(s.lambda1, s.lambda2);
  s.p2 = proj2(s.lambda2, s.lambda1);

  auto proj4 = [&](const Scalar& la, const Scalar& lb, const Scalar& lc) {
    ScalarMatrix m = (s.pi - ScalarMatrix::identity(4).scaled(lb)) *
                     (s.pi - ScalarMatrix::identity(4).scaled(lc));
    return m.scaled(((la - lb) * (la - lc)).inv());
  };
  s.p0 = proj4(s.lambda0, s.lambda_plus, s.lambda_minus);
  s.p_plus = proj4(s.lambda_plus, s.lambda0, s.lambda_minus);
  s.p_minus = proj4(s.lambda_minus, s.lambda0, s.lambda_plus);

  // construction-time certification of the type invariants
  auto check = [](bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("spectral_matrices: ") + what);
  };
  check(s.p1 + s.p2 == ScalarMatrix::identity(2), "Phi projectors incomplete");
  check(s.p1 * s.p1 == s.p1 && s.p2 * s.p2 == s.p2, "Phi projectors not idempotent");
  check((s.p1 * s.p2).is_zero(), "Phi projectors not orthogonal");
  check(s.p1.scaled(s.lambda1) + s.p2.scaled(s.lambda2) == s.phi,
        "Phi spectral decomposition failed");
  check(s.p0 + s.p_plus + s.p_minus == ScalarMatrix::identity(4),
        "Pi projectors incomplete");
  for (auto* p : {&s.p0, &s.p_plus, &s.p_minus})
    check(*p * *p == *p, "Pi projector not idempotent");
  check((s.p0 * s.p_plus).is_zero() && (s.p0 * s.p_minus).is_zero() &&
            (s.p_plus * s.p_minus).is_zero(),
        "Pi projectors not orthogonal");
  check(s.p0.scaled(s.lambda0) + s.p_plus.scaled(s.lambda_plus) +
                s.p_minus.scaled(s.lambda_minus) ==
            s.pi,
        "Pi spectral decomposition failed");
  return s;
}

// ---- closed-form actions on isotypic elements ---------------------------------

namespace detail {

inline Scalar shift_tmu(const Scalar& f, const Scalar& dt, const Scalar& dmu) {
  Scalar t = Scalar::var(VT), mu = Scalar::var(VMU);
  return f.subst(VT, t + dt).subst(VMU, mu + dmu);
}

} // namespace detail

// First-order actions from the Phi spectral data; the f-argument shifts are
// (t + h/2, mu -+ h), the projector rows stay at unshifted mu. The plain
// d/dt subtracts (2/h) f itself, not the literal constant 2/h.
inline IsotypicElement act_first_order(const SpectralMatrices& s, FirstOrderOp op,
                                       const IsotypicElement& e) {
  Scalar h = Scalar::var(VH);
  Scalar vk[2] = {Scalar(2) / h, Scalar(long(e.k))};
  int row = (op == FirstOrderOp::Q) ? 1 : 0;
  Scalar c1 = s.p1.at(row, 0) * vk[0] + s.p1.at(row, 1) * vk[1];
  Scalar c2 = s.p2.at(row, 0) * vk[0] + s.p2.at(row, 1) * vk[1];
  Scalar half_h = h * Scalar(BigRat(1, 2));
  Scalar g = detail::shift_tmu(e.f, half_h, -h) * c1 +
             detail::shift_tmu(e.f, half_h, h) * c2;
  if (op == FirstOrderOp::DtPlain) g = g - (Scalar(2) / h) * e.f;
  return {g, e.k, e.upart};
}

// The literal reading of the paper's "-2" (subtracting the constant rather
// than the original element); kept so the mismatch can be demonstrated.
inline IsotypicElement act_dt_literal_minus_two(const SpectralMatrices& s,
                                                const IsotypicElement& e) {
  IsotypicElement shifted = act_first_order(s, FirstOrderOp::DtShifted, e);
  Scalar h = Scalar::var(VH);
  return {shifted.f - Scalar(2) / h, e.k, e.upart};
}

inline IsotypicElement act_second_order(const SpectralMatrices& s, SecondOrderOp op,
                                        const IsotypicElement& e) {
  Scalar h = Scalar::var(VH);
  Scalar vk[4] = {Scalar(4) / (h * h), Scalar(0),
                  Scalar(2 * long(e.k)) / h, Scalar(long(e.k) * long(e.k))};
  int row = int(op);
  auto contract = [&](const ScalarMatrix& p) {
    Scalar acc;
    for (int j = 0; j < 4; ++j) acc += p.at(row, j) * vk[j];
    return acc;
  };
  Scalar two_h = Scalar(2) * h;
  Scalar g = detail::shift_tmu(e.f, h, Scalar(0)) * contract(s.p0) +
             detail::shift_tmu(e.f, h, two_h) * contract(s.p_plus) +
             detail::shift_tmu(e.f, h, -two_h) * contract(s.p_minus);
  return {g, e.k, e.upart};
}

// ---- conversions to the PBW algebra and the oracle gate -----------------------

inline bool is_mu_even(const Scalar& f) {
  Scalar mu = Scalar::var(VMU);
  return f.subst(VMU, -mu) == f;
}

// polynomial in (t, mu); denominators in h alone are fine
inline bool is_t_mu_polynomial(const Scalar& f) {
  return !f.den().depends_on(VT) && !f.den().depends_on(VMU);
}

// An f(t, mu) polynomial in (t, mu) and even in mu becomes an honest central
// element via mu^2 = h^2 - 4 Cas; multiplied by the chosen u-part and
// normal-formed.
inline NCPoly isotypic_to_nc(const U2System& u2, const IsotypicElement& e) {
  if (!is_t_mu_polynomial(e.f))
    throw std::invalid_argument("isotypic_to_nc: f must be polynomial in (t, mu)");
  if (!is_mu_even(e.f))
    throw std::invalid_argument("isotypic_to_nc: f must be even in mu");
  NCPoly cas = u2.casimir();
  NCPoly acc;
  for (auto& term : e.f.num().terms()) {
    int p2 = term.m.e[VMU];
    Mono rest = term.m;
    rest.e[VMU] = 0;
    // mu^(2p) -> (h^2 - 4 Cas)^p
    NCPoly mu_part =
        (NCPoly(Scalar(MPoly::var(VH, 2))) - cas.scaled(Scalar(4))).pow(p2 / 2);
    NCPoly tpart = NCPoly::gen(U2System::T).pow(rest.e[VT]);
    rest.e[VT] = 0;
    acc += tpart.scaled(Scalar(MPoly::term(rest, term.c), e.f.den())) * mu_part;
  }
  return u2.normal_form(acc * u2.u_part(e.k, e.upart));
}

inline NCPoly op_poly(const U2System& u2, FirstOrderOp op) {
  switch (op) {
    case FirstOrderOp::DtPlain: return u2.dt_plain();
    case FirstOrderOp::DtShifted: return u2.dt_shifted();
    case FirstOrderOp::Q: return u2.q_op();
  }
  throw std::invalid_argument("op_poly");
}

inline NCPoly op_poly(const U2System& u2, SecondOrderOp op) {
  return u2.delta_i(int(op));
}

// Closed form vs PBW oracle on one test case. f must be polynomial and even
// in mu so it is an honest central element on both routes.
template <class Op>
inline bool oracle_crosscheck(const U2System& u2, const SpectralMatrices& s, Op op,
                              const Scalar& f, int k, UPart part = UPart::BPower) {
  IsotypicElement e{f, k, part};
  IsotypicElement closed;
  if constexpr (std::is_same_v<Op, FirstOrderOp>)
    closed = act_first_order(s, op, e);
  else
    closed = act_second_order(s, op, e);
  if (!is_mu_even(closed.f) || !is_t_mu_polynomial(closed.f)) return false;
  NCPoly via_closed = isotypic_to_nc(u2, closed);
  NCPoly via_oracle = u2.act(op_poly(u2, op), isotypic_to_nc(u2, e));
  return via_closed == via_oracle;
}

// Delta kills b^k, Re(b^k) and Im(b^k), straight from the oracle.
inline bool harmonicity_check(const U2System& u2, int kmax = 4) {
  for (int k = 1; k <= kmax; ++k)
    for (UPart part : {UPart::BPower, UPart::ReB, UPart::ImB}) {
      NCPoly elem = u2.normal_form(u2.u_part(k, part));
      if (!u2.act(u2.delta(), elem).is_zero()) return false;
    }
  return true;
}

} // namespace qweyl
