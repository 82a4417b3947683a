// U(u(2)_h) calculus: the derivative table, Cayley-Hamilton, t-shifts,
// spectral matrices against frozen reference entries, closed-form actions on
// f(t,mu) b^k and the PBW-oracle gate, harmonicity, and classical limits.
#include <catch2/catch_amalgamated.hpp>

#include "qweyl/u2.hpp"

#include "spectral_fixtures.hpp"
#include "qweyl/unipoly.hpp"

using namespace qweyl;

namespace {

U2System& u2() {
  static U2System sys;
  return sys;
}
const SpectralMatrices& spec() {
  static SpectralMatrices s = spectral_matrices();
  return s;
}

Scalar h() { return Scalar::var(VH); }
Scalar t() { return Scalar::var(VT); }
Scalar mu() { return Scalar::var(VMU); }
Scalar cas_mu() { return u2_cas_mu(); }

Scalar frac(long a, long b) { return Scalar::rational(BigRat(a, b)); }

// parse with the generator names of the system
NCPoly P(const std::string& s) { return u2().rs().parse(s); }

} // namespace

TEST_CASE("derivative system is confluent and derivatives commute") {
  CHECK(u2().rs().certified());
  // operator-level commutativity on a spread of degree <= 4 elements
  std::vector<NCPoly> elems = {P("x"), P("t*z"), P("x*y*z"), P("x^2*y^2"),
                               P("t^2*x*y"), P("z^4")};
  for (int a = U2System::DT; a <= U2System::DZ; ++a)
    for (int b = a + 1; b <= U2System::DZ; ++b) {
      NCPoly comm = NCPoly::gen(b) * NCPoly::gen(a) - NCPoly::gen(a) * NCPoly::gen(b);
      for (auto& e : elems) CHECK(u2().act(comm, e).is_zero());
    }
}

TEST_CASE("oracle derivative examples") {
  CHECK(u2().act(P("Dx"), P("x")) == P("1"));
  CHECK(u2().act(P("Dx"), P("y*z")) == NCPoly(h() * frac(1, 2)));
  CHECK(u2().act(P("Dx"), P("x^2")) == P("2*x"));
  CHECK(u2().act(P("Dx"), P("1")).is_zero());
  // plain d/dt of the Casimir
  NCPoly cas = u2().casimir();
  CHECK(u2().act(u2().dt_plain(), cas) == NCPoly(h() * frac(-3, 2)));
}

TEST_CASE("Cayley-Hamilton identity for the generating matrix") {
  CHECK(u2().cayley_hamilton_check());
  CHECK(!u2().cayley_hamilton_check(/*perturb=*/true));
}

TEST_CASE("t-shift relations") {
  for (int k = 0; k <= 3; ++k) {
    CHECK(u2().t_shift_check(u2().dt_shifted(), U2System::half_h(), k));
    CHECK(u2().t_shift_check(u2().q_op(), U2System::half_h(), k));
    for (int i = 0; i < 4; ++i)
      CHECK(u2().t_shift_check(u2().delta_i(i), h(), k));
  }
  // wrong shift detected
  CHECK(!u2().t_shift_check(u2().q_op(), h(), 1));
}

TEST_CASE("Phi and Pi eigenvalues via charpoly") {
  const SpectralMatrices& s = spec();
  UniPoly cp = charpoly(s.phi);
  UniPoly lam = UniPoly::x("lam");
  UniPoly expect = (lam - UniPoly::constant("lam", s.lambda1)) *
                   (lam - UniPoly::constant("lam", s.lambda2));
  CHECK(cp == expect);

  UniPoly cpi = charpoly(s.pi);
  UniPoly expect4 = (lam - UniPoly::constant("lam", s.lambda0)) *
                    (lam - UniPoly::constant("lam", s.lambda0)) *
                    (lam - UniPoly::constant("lam", s.lambda_plus)) *
                    (lam - UniPoly::constant("lam", s.lambda_minus));
  CHECK(cpi == expect4);

  CHECK(s.lambda1 == mu() * (Scalar(2) * h() - mu()) * frac(1, 4));
  CHECK(s.lambda2 == -(mu() * (Scalar(2) * h() + mu())) * frac(1, 4));
}

TEST_CASE("Phi projectors match the reference entries") {
  const SpectralMatrices& s = spec();
  CHECK(s.p1 == fixtures::phi_p1_display());
  CHECK(s.p2 == fixtures::phi_p2_display());
}

TEST_CASE("Pi projectors match the reference entries") {
  const SpectralMatrices& s = spec();
  CHECK(s.p0 == fixtures::pi_p0_display());
  CHECK(s.p_plus == fixtures::pi_pplus_display());
  CHECK(s.p_minus == fixtures::pi_pminus_display());
}

TEST_CASE("spectral power identities for symbolic exponents") {
  const SpectralMatrices& s = spec();
  for (int p = 0; p <= 4; ++p) {
    CHECK(s.phi.pow(p) ==
          s.p1.scaled(s.lambda1.pow(p)) + s.p2.scaled(s.lambda2.pow(p)));
    CHECK(s.pi.pow(p) == s.p0.scaled(s.lambda0.pow(p)) +
                             s.p_plus.scaled(s.lambda_plus.pow(p)) +
                             s.p_minus.scaled(s.lambda_minus.pow(p)));
  }
}

TEST_CASE("Phi and Pi operator identities, by normal form and by oracle") {
  NCPoly cas = u2().casimir();
  NCPoly dt = u2().dt_shifted(), q = u2().q_op();
  Scalar H = h();
  // row identities (dtilde, Q)^t Cas = Phi (dtilde, Q)^t
  NCPoly r0 = dt * cas - ((cas - NCPoly(H * H * frac(3, 4))) * dt - q.scaled(H));
  NCPoly r1 = q * cas - (cas.scaled(H) * dt + (cas + NCPoly(H * H * frac(1, 4))) * q);
  CHECK(u2().normal_form(r0).is_zero());
  CHECK(u2().normal_form(r1).is_zero());

  // Pi rows: Delta_i Cas = sum_j Pi_ij(Cas) Delta_j
  auto pi_entry = [&](int i, int j) -> NCPoly {
    Scalar half = frac(1, 2), quarter = frac(1, 4);
    NCPoly zero;
    switch (i * 4 + j) {
      case 0: return cas - NCPoly(H * H * frac(3, 2));
      case 1: return NCPoly(H * H * half);
      case 2: return NCPoly(Scalar(-2) * H);
      case 4: return NCPoly(H * H * frac(3, 2));
      case 5: return cas - NCPoly(H * H * half);
      case 6: return NCPoly(Scalar(2) * H);
      case 8: return cas.scaled(H);
      case 10: return cas - NCPoly(H * H * half);
      case 11: return NCPoly(-H);
      case 12: return cas.scaled(H * H);
      case 13: return cas.scaled(-(H * H * half));
      case 14: return cas.scaled(Scalar(2) * H) + NCPoly(H * H * H * quarter);
      case 15: return cas + NCPoly(H * H * half);
      default: return zero;
    }
  };
  for (int i = 0; i < 4; ++i) {
    NCPoly lhs = u2().delta_i(i) * cas;
    NCPoly rhs;
    for (int j = 0; j < 4; ++j) rhs += pi_entry(i, j) * u2().delta_i(j);
    CHECK(u2().normal_form(lhs - rhs).is_zero());
    // oracle verification on degree <= 3 monomials (the acceptance suite
    // repeats this at degree 4)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 3; ++b)
        for (int c = 0; a + b + c <= 3; ++c)
          for (int d = 0; a + b + c + d <= 3; ++d) {
            NCPoly m = P("t").pow(a) * P("x").pow(b) * P("y").pow(c) * P("z").pow(d);
            if (u2().act(lhs - rhs, m).is_zero()) continue;
            FAIL("Pi row " << i << " oracle mismatch");
          }
  }
}

TEST_CASE("closed-form actions on b^k") {
  const SpectralMatrices& s = spec();
  for (int k = 0; k <= 3; ++k) {
    IsotypicElement e{Scalar(1), k};
    CHECK(act_first_order(s, FirstOrderOp::DtShifted, e).f == Scalar(2) / h());
    CHECK(act_first_order(s, FirstOrderOp::DtPlain, e).f.is_zero());
    CHECK(act_first_order(s, FirstOrderOp::Q, e).f == Scalar(long(k)));
    CHECK(act_second_order(s, SecondOrderOp::Delta0, e).f == Scalar(4) / (h() * h()));
    CHECK(act_second_order(s, SecondOrderOp::Delta1, e).f.is_zero());
    CHECK(act_second_order(s, SecondOrderOp::Delta2, e).f == Scalar(2 * long(k)) / h());
    CHECK(act_second_order(s, SecondOrderOp::Delta3, e).f == Scalar(long(k) * long(k)));
  }
}

TEST_CASE("spot values from the derived oracle") {
  const SpectralMatrices& s = spec();
  // Q(Cas b) = (3 Cas + h^2/4) b
  IsotypicElement e{cas_mu(), 1};
  Scalar qres = act_first_order(s, FirstOrderOp::Q, e).f;
  CHECK(qres == Scalar(3) * cas_mu() + h() * h() * frac(1, 4));
  // dt(mu^2) = 6h, Delta(mu^2) = -24, Delta(Cas) = 6
  IsotypicElement mu2{mu() * mu(), 0};
  CHECK(act_first_order(s, FirstOrderOp::DtPlain, mu2).f == Scalar(6) * h());
  CHECK(act_second_order(s, SecondOrderOp::Delta1, mu2).f == Scalar(-24));
  IsotypicElement ecas{cas_mu(), 0};
  CHECK(act_second_order(s, SecondOrderOp::Delta1, ecas).f == Scalar(6));
}

TEST_CASE("oracle gate on a spread of cases") {
  const SpectralMatrices& s = spec();
  std::vector<Scalar> fs = {Scalar(1), t(), cas_mu(), t() * cas_mu()};
  for (auto& f : fs)
    for (int k = 0; k <= 2; ++k) {
      CHECK(oracle_crosscheck(u2(), s, FirstOrderOp::DtPlain, f, k));
      CHECK(oracle_crosscheck(u2(), s, FirstOrderOp::Q, f, k));
      CHECK(oracle_crosscheck(u2(), s, SecondOrderOp::Delta1, f, k));
      CHECK(oracle_crosscheck(u2(), s, SecondOrderOp::Delta3, f, k));
    }
  // Re/Im parts of b^k behave the same way
  CHECK(oracle_crosscheck(u2(), s, SecondOrderOp::Delta1, cas_mu(), 2, UPart::ReB));
  CHECK(oracle_crosscheck(u2(), s, FirstOrderOp::Q, t(), 2, UPart::ImB));
}

TEST_CASE("the literal -2 reading fails against the oracle") {
  const SpectralMatrices& s = spec();
  IsotypicElement e{cas_mu(), 0};
  IsotypicElement literal = act_dt_literal_minus_two(s, e);
  IsotypicElement correct = act_first_order(s, FirstOrderOp::DtPlain, e);
  CHECK(correct.f == h() * frac(-3, 2)); // matches the oracle value for Cas
  CHECK(literal.f != correct.f);
  // and the literal value disagrees with the PBW oracle
  NCPoly oracle = u2().act(u2().dt_plain(), isotypic_to_nc(u2(), e));
  CHECK(oracle == NCPoly(h() * frac(-3, 2)));
}

TEST_CASE("harmonicity of b^k and its real and imaginary parts") {
  CHECK(harmonicity_check(u2(), 3));
}

TEST_CASE("mu-even polynomial inputs give mu-even polynomial outputs") {
  const SpectralMatrices& s = spec();
  // polynomial in (t, mu); denominators in h alone are expected
  auto poly_in_t_mu = [](const Scalar& f) {
    return !f.den().depends_on(VT) && !f.den().depends_on(VMU);
  };
  std::vector<Scalar> fs = {cas_mu() * cas_mu(), t() * t() * mu() * mu(), Scalar(5)};
  for (auto& f : fs)
    for (int k = 0; k <= 2; ++k) {
      IsotypicElement e{f, k};
      for (auto op : {FirstOrderOp::DtPlain, FirstOrderOp::DtShifted, FirstOrderOp::Q}) {
        IsotypicElement g = act_first_order(s, op, e);
        CHECK(poly_in_t_mu(g.f));
        CHECK(is_mu_even(g.f));
      }
      for (auto op : {SecondOrderOp::Delta0, SecondOrderOp::Delta1,
                      SecondOrderOp::Delta2, SecondOrderOp::Delta3}) {
        IsotypicElement g = act_second_order(s, op, e);
        CHECK(poly_in_t_mu(g.f));
        CHECK(is_mu_even(g.f));
      }
    }
}

TEST_CASE("classical limit h -> 0 of the closed forms") {
  const SpectralMatrices& s = spec();
  auto dmu = [](const Scalar& f) { return f.derivative(VMU); };
  auto dt_ = [](const Scalar& f) { return f.derivative(VT); };
  std::vector<Scalar> fs = {t() * t(), mu() * mu(), t() * mu() * mu(),
                            mu() * mu() * mu() * mu()};
  for (auto& f : fs)
    for (int k = 0; k <= 2; ++k) {
      IsotypicElement e{f, k};
      // plain d/dt -> f_t
      CHECK(act_first_order(s, FirstOrderOp::DtPlain, e).f.subst(VH, Scalar(0)) ==
            dt_(f));
      // Q -> mu f_mu + k f
      CHECK(act_first_order(s, FirstOrderOp::Q, e).f.subst(VH, Scalar(0)) ==
            mu() * dmu(f) + Scalar(long(k)) * f);
      // Delta -> -4 f_mumu - 8(k+1) f_mu / mu
      CHECK(act_second_order(s, SecondOrderOp::Delta1, e).f.subst(VH, Scalar(0)) ==
            Scalar(-4) * dmu(dmu(f)) - Scalar(8 * (long(k) + 1)) * dmu(f) / mu());
      // Q^2 -> (mu d_mu + k)^2
      Scalar qcl = mu() * dmu(f) + Scalar(long(k)) * f;
      CHECK(act_second_order(s, SecondOrderOp::Delta3, e).f.subst(VH, Scalar(0)) ==
            mu() * dmu(qcl) + Scalar(long(k)) * qcl);
    }
}

TEST_CASE("the a,b,c,d combinations satisfy the gl(2) bracket") {
  // a = t - iz, b = -ix - y, c = -ix + y, d = t + iz link the system to
  // U(gl(2)_h): [n_i^j, n_k^l] = h (delta_k^j n_i^l - delta_i^l n_k^j)
  Scalar i = Scalar::i();
  NCPoly gl[2][2];
  gl[0][0] = P("t") - P("z").scaled(i);
  gl[0][1] = P("x").scaled(-i) - P("y");
  gl[1][0] = P("x").scaled(-i) + P("y");
  gl[1][1] = P("t") + P("z").scaled(i);
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          NCPoly lhs = gl[a][b] * gl[c][d] - gl[c][d] * gl[a][b];
          NCPoly rhs;
          if (c == b) rhs += gl[a][d].scaled(h());
          if (a == d) rhs -= gl[c][b].scaled(h());
          CHECK(u2().normal_form(lhs - rhs).is_zero());
        }
}

TEST_CASE("matrix powers of Phi and Pi reproduce the lambda-substitution rule") {
  // acting on Cas^p b^k through the p-th matrix power must agree with the
  // closed form evaluated at f = Cas^p
  const SpectralMatrices& s = spec();
  Scalar h_ = h();
  for (int p = 0; p <= 3; ++p)
    for (int k = 0; k <= 2; ++k) {
      Scalar f = cas_mu().pow(p);
      ScalarMatrix phip = s.phi.pow(p);
      Scalar v1 = Scalar(2) / h_, v2 = Scalar(long(k));
      // first-order: shift t is irrelevant for t-free f
      Scalar dt_via_power = phip.at(0, 0) * v1 + phip.at(0, 1) * v2;
      Scalar q_via_power = phip.at(1, 0) * v1 + phip.at(1, 1) * v2;
      CHECK(act_first_order(s, FirstOrderOp::DtShifted, {f, k}).f == dt_via_power);
      CHECK(act_first_order(s, FirstOrderOp::Q, {f, k}).f == q_via_power);
      ScalarMatrix pip = s.pi.pow(p);
      Scalar w[4] = {Scalar(4) / (h_ * h_), Scalar(0), Scalar(2 * long(k)) / h_,
                     Scalar(long(k) * long(k))};
      for (int row = 0; row < 4; ++row) {
        Scalar via_power;
        for (int j = 0; j < 4; ++j) via_power += pip.at(row, j) * w[j];
        CHECK(act_second_order(s, SecondOrderOp(row), {f, k}).f == via_power);
      }
    }
}
