// Classical (commutative) side of the quantization: the algebra of rational
// functions of (t, r) tensored with polynomials in x, y, z modulo
// x^2+y^2+z^2 = r^2, its unique harmonic decomposition, differential
// operators with such coefficients, and the Laplace-Beltrami operator of a
// rotationally symmetric metric profile.
#pragma once

#include "qweyl/matrix.hpp"

#include <array>
#include <map>
#include <mutex>

namespace qweyl {

namespace classical {

// xyz-monomials of a fixed total degree, ordered lexicographically
inline std::vector<Mono> xyz_monomials(int deg) {
  std::vector<Mono> out;
  for (int a = deg; a >= 0; --a)
    for (int b = deg - a; b >= 0; --b) {
      Mono m;
      m.e[VX] = int16_t(a);
      m.e[VY] = int16_t(b);
      m.e[VZ] = int16_t(deg - a - b);
      out.push_back(m);
    }
  return out;
}

inline MPoly laplacian_xyz(const MPoly& p) {
  return p.derivative(VX).derivative(VX) + p.derivative(VY).derivative(VY) +
         p.derivative(VZ).derivative(VZ);
}

// Basis of harmonic polynomials of the given degree (dimension 2 deg + 1),
// computed once as the kernel of the Laplacian on the monomial basis.
// Guarded so concurrent read-only use of the library stays safe.
inline const std::vector<MPoly>& harmonic_basis(int deg) {
  static std::mutex guard;
  static std::map<int, std::vector<MPoly>> cache;
  std::lock_guard<std::mutex> lock(guard);
  auto it = cache.find(deg);
  if (it != cache.end()) return it->second;
  std::vector<Mono> monos = xyz_monomials(deg);
  std::vector<Mono> lower = deg >= 2 ? xyz_monomials(deg - 2) : std::vector<Mono>{};
  std::map<Mono, int> lower_index;
  for (size_t i = 0; i < lower.size(); ++i) lower_index[lower[i]] = int(i);
  ScalarMatrix lap(int(lower.size()), int(monos.size()));
  for (size_t j = 0; j < monos.size(); ++j) {
    MPoly l = laplacian_xyz(MPoly::term(monos[j], GaussRat(1)));
    for (auto& term : l.terms()) lap.at(lower_index.at(term.m), int(j)) = Scalar(term.c);
  }
  std::vector<MPoly> basis;
  for (auto& v : lap.nullspace()) {
    MPoly h;
    for (size_t j = 0; j < monos.size(); ++j)
      if (!v[j].is_zero()) h += MPoly::term(monos[j], v[j].constant_value());
    basis.push_back(std::move(h));
  }
  return cache.emplace(deg, std::move(basis)).first->second;
}

// A canonical element of K(t,r)(rg) (x) Sym(xyz) / (x^2+y^2+z^2 - r^2):
// coefficients indexed by (harmonic degree, basis index).
struct HarmonicForm {
  std::map<std::pair<int, int>, Scalar> parts;

  bool is_zero() const {
    for (auto& [k, v] : parts)
      if (!v.is_zero()) return false;
    return true;
  }
  friend bool operator==(const HarmonicForm& a, const HarmonicForm& b) {
    auto strip = [](const HarmonicForm& f) {
      std::map<std::pair<int, int>, Scalar> m;
      for (auto& [k, v] : f.parts)
        if (!v.is_zero()) m.emplace(k, v);
      return m;
    };
    return strip(a) == strip(b);
  }
};

// Decompose a homogeneous xyz-polynomial with Scalar coefficients as
// sum_j r^{2j} h_j, h_j harmonic. Returns pairs (j, coefficients over the
// degree-(deg-2j) harmonic basis).
inline void fischer_decompose(int deg, const std::vector<Scalar>& coeffs,
                              const std::vector<Mono>& monos, HarmonicForm& out,
                              const Scalar& radial_prefix) {
  if (deg == 0) {
    Scalar c = coeffs.empty() ? Scalar(0) : coeffs[0];
    if (!c.is_zero()) out.parts[{0, 0}] += radial_prefix * c;
    return;
  }
  const std::vector<MPoly>& hb = harmonic_basis(deg);
  std::vector<Mono> lower = deg >= 2 ? xyz_monomials(deg - 2) : std::vector<Mono>{};
  // unknowns: harmonic coefficients + lower part multiplied by x^2+y^2+z^2
  int n = int(monos.size());
  int hdim = int(hb.size()), ldim = int(lower.size());
  ScalarMatrix A(n, hdim + ldim), b(n, 1);
  std::map<Mono, int> idx;
  for (int i = 0; i < n; ++i) idx[monos[size_t(i)]] = i;
  for (int j = 0; j < hdim; ++j)
    for (auto& term : hb[size_t(j)].terms())
      A.at(idx.at(term.m), j) = Scalar(term.c);
  MPoly sphere = MPoly::var(VX, 2) + MPoly::var(VY, 2) + MPoly::var(VZ, 2);
  for (int j = 0; j < ldim; ++j) {
    MPoly prod = sphere * MPoly::term(lower[size_t(j)], GaussRat(1));
    for (auto& term : prod.terms()) A.at(idx.at(term.m), hdim + j) = Scalar(term.c);
  }
  for (int i = 0; i < n; ++i) b.at(i, 0) = coeffs[size_t(i)];
  auto sol = A.solve(b);
  if (!sol) throw std::logic_error("fischer_decompose: decomposition failed");
  for (int j = 0; j < hdim; ++j)
    if (!sol->at(j, 0).is_zero())
      out.parts[{deg, j}] += radial_prefix * sol->at(j, 0);
  if (deg >= 2) {
    std::vector<Scalar> rest(lower.size());
    bool any = false;
    for (int j = 0; j < ldim; ++j) {
      rest[size_t(j)] = sol->at(hdim + j, 0);
      any = any || !rest[size_t(j)].is_zero();
    }
    // the x^2+y^2+z^2 factor becomes r^2 on the coefficient side
    if (any)
      fischer_decompose(deg - 2, rest, lower, out,
                        radial_prefix * Scalar::var(VR, 2));
  }
}

// Canonicalize a raw Scalar whose numerator may involve x, y, z (denominator
// must not) into its harmonic form.
inline HarmonicForm to_harmonic_form(const Scalar& raw) {
  if (raw.den().depends_on(VX) || raw.den().depends_on(VY) || raw.den().depends_on(VZ))
    throw std::invalid_argument("to_harmonic_form: xyz in a denominator");
  HarmonicForm out;
  // bucket numerator terms by xyz-degree
  std::map<int, std::map<Mono, Scalar>> buckets;
  for (auto& term : raw.num().terms()) {
    Mono xyz;
    Mono rest = term.m;
    xyz.e[VX] = term.m.e[VX];
    xyz.e[VY] = term.m.e[VY];
    xyz.e[VZ] = term.m.e[VZ];
    rest.e[VX] = rest.e[VY] = rest.e[VZ] = 0;
    int deg = xyz.total_degree();
    buckets[deg][xyz] += Scalar(MPoly::term(rest, term.c), raw.den());
  }
  for (auto& [deg, terms] : buckets) {
    std::vector<Mono> monos = xyz_monomials(deg);
    std::vector<Scalar> coeffs(monos.size());
    for (size_t i = 0; i < monos.size(); ++i) {
      auto it = terms.find(monos[i]);
      if (it != terms.end()) coeffs[i] = it->second;
    }
    fischer_decompose(deg, coeffs, monos, out, Scalar(1));
  }
  return out;
}

// ---- classical differential operators ---------------------------------------

// d/d(dir) on an element of A, with the radius dependent on x, y, z through
// the chain rule d r / d u = u / r.
inline Scalar derive(const Scalar& f, int dir) {
  Scalar out = f.derivative(dir);
  if (dir == VX || dir == VY || dir == VZ) {
    Scalar fr = f.derivative(VR);
    if (!fr.is_zero())
      out += Scalar::var(dir) / Scalar::var(VR) * fr;
  }
  return out;
}

// an operator sum_beta a_beta d^beta with beta over (t, x, y, z)
struct COperator {
  std::map<std::array<int, 4>, Scalar> terms;

  static COperator single(std::array<int, 4> beta, Scalar coeff) {
    COperator o;
    if (!coeff.is_zero()) o.terms[beta] = std::move(coeff);
    return o;
  }
  void add(const std::array<int, 4>& beta, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms.find(beta);
    if (it == terms.end()) {
      terms.emplace(beta, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms.erase(it);
    }
  }
  friend COperator operator+(COperator a, const COperator& b) {
    for (auto& [beta, c] : b.terms) a.add(beta, c);
    return a;
  }
  COperator scaled(const Scalar& s) const {
    COperator o;
    for (auto& [beta, c] : terms) o.add(beta, c * s);
    return o;
  }

  Scalar apply(const Scalar& f) const {
    static const int dirs[4] = {VT, VX, VY, VZ};
    Scalar out;
    for (auto& [beta, c] : terms) {
      Scalar g = f;
      for (int d = 0; d < 4; ++d)
        for (int k = 0; k < beta[size_t(d)]; ++k) g = derive(g, dirs[d]);
      out += c * g;
    }
    return out;
  }

  // operator composition via the Leibniz rule
  friend COperator compose(const COperator& a, const COperator& b) {
    static const int dirs[4] = {VT, VX, VY, VZ};
    COperator out;
    for (auto& [beta, ca] : a.terms)
      for (auto& [gamma, cb] : b.terms) {
        // a d^beta (cb d^gamma): Leibniz over how many derivatives of each
        // direction land on the coefficient cb
        for (int k0 = 0; k0 <= beta[0]; ++k0)
          for (int k1 = 0; k1 <= beta[1]; ++k1)
            for (int k2 = 0; k2 <= beta[2]; ++k2)
              for (int k3 = 0; k3 <= beta[3]; ++k3) {
                Scalar g = cb;
                for (int k = 0; k < k0; ++k) g = derive(g, dirs[0]);
                for (int k = 0; k < k1; ++k) g = derive(g, dirs[1]);
                for (int k = 0; k < k2; ++k) g = derive(g, dirs[2]);
                for (int k = 0; k < k3; ++k) g = derive(g, dirs[3]);
                if (g.is_zero()) continue;
                long c = choose(beta[0], k0) * choose(beta[1], k1) *
                         choose(beta[2], k2) * choose(beta[3], k3);
                std::array<int, 4> ord = {beta[0] - k0 + gamma[0], beta[1] - k1 + gamma[1],
                                          beta[2] - k2 + gamma[2], beta[3] - k3 + gamma[3]};
                out.add(ord, ca * g * Scalar(c));
              }
      }
    return out;
  }

private:
  static long choose(int n, int k) {
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - i + 1) / i;
    return r;
  }
};

inline COperator q_operator() {
  COperator q;
  q.add({0, 1, 0, 0}, Scalar::var(VX));
  q.add({0, 0, 1, 0}, Scalar::var(VY));
  q.add({0, 0, 0, 1}, Scalar::var(VZ));
  return q;
}

inline COperator delta_operator() {
  COperator d;
  d.add({0, 2, 0, 0}, Scalar(1));
  d.add({0, 0, 2, 0}, Scalar(1));
  d.add({0, 0, 0, 2}, Scalar(1));
  return d;
}

// reduce a polynomial modulo x^2 + y^2 + z^2 - r^2 by folding z^2 away
inline MPoly reduce_mod_sphere(const MPoly& p) {
  MPoly out;
  MPoly z2 = MPoly::var(VR, 2) - MPoly::var(VX, 2) - MPoly::var(VY, 2);
  for (auto& term : p.terms()) {
    int ez = term.m.e[VZ];
    Mono rest = term.m;
    rest.e[VZ] = int16_t(ez % 2);
    out += MPoly::term(rest, term.c) * z2.pow(ez / 2);
  }
  return out;
}

// equality in A: difference vanishes modulo the sphere relation
inline bool equal_in_A(const Scalar& a, const Scalar& b) {
  Scalar d = a - b;
  if (d.is_zero()) return true;
  return reduce_mod_sphere(d.num()).is_zero();
}

// ---- the Laplace-Beltrami operator -------------------------------------------

struct MetricProfile {
  Scalar phi; // rational in r, possibly with the parameter rg
  static MetricProfile schwarzschild() {
    return {Scalar(1) - Scalar::var(VRG) / Scalar::var(VR)};
  }
  static MetricProfile flat() { return {Scalar(1)}; }
};

// coefficients of the invariant form: c_tt dt^2 + c_q2 Q^2 + c_q Q + c_d Delta
struct InvariantClassicalOp {
  Scalar c_tt, c_q2, c_q, c_delta;
};

// Invariant form with Q and Q^2 substituted for the radial derivatives:
//   phi^-1 dt^2 - (phi-1)/r^2 Q^2 - ((phi-1)/r^2 + phi'/r) Q - Delta.
inline InvariantClassicalOp lb_classical(const MetricProfile& m) {
  if (m.phi.is_zero())
    throw std::invalid_argument("lb_classical: degenerate metric profile");
  Scalar r = Scalar::var(VR);
  Scalar phim1 = m.phi - Scalar(1);
  Scalar dphi = m.phi.derivative(VR);
  InvariantClassicalOp op;
  op.c_tt = m.phi.inv();
  op.c_q2 = -phim1 / (r * r);
  op.c_q = -(phim1 / (r * r) + dphi / r);
  op.c_delta = Scalar(-1);
  return op;
}

inline COperator to_coperator(const InvariantClassicalOp& op) {
  COperator out = COperator::single({2, 0, 0, 0}, op.c_tt);
  out = out + compose(q_operator(), q_operator()).scaled(op.c_q2);
  out = out + q_operator().scaled(op.c_q);
  out = out + delta_operator().scaled(op.c_delta);
  return out;
}

// The metric form before the radial derivatives are eliminated:
//   phi^-1 dt^2 - phi dr^2 - (X^2+Y^2+Z^2)/r^2 - (1/r^2) dr(phi r^2) dr,
// applied through dr = Q/r and dr^2 = (Q^2 - Q)/r^2. Used as an independent
// route to validate lb_classical on test elements.
inline Scalar lb_metric_form_apply(const MetricProfile& m, const Scalar& f) {
  Scalar r = Scalar::var(VR);
  Scalar ftt = derive(derive(f, VT), VT);
  COperator q = q_operator();
  Scalar qf = q.apply(f);
  Scalar qqf = q.apply(qf);
  Scalar dr_f = qf / r;
  Scalar dr2_f = (qqf - qf) / (r * r);
  // rotational part via the vector fields X = y dz - z dy etc.
  auto rot = [&](int u, int v) {
    // u d_v - v d_u as an operator
    return [&, u, v](const Scalar& g) {
      return Scalar::var(u) * derive(g, v) - Scalar::var(v) * derive(g, u);
    };
  };
  auto X = rot(VY, VZ), Y = rot(VZ, VX), Z = rot(VX, VY);
  Scalar ang = X(X(f)) + Y(Y(f)) + Z(Z(f));
  Scalar dr_phir2 = (m.phi * r * r).derivative(VR);
  return m.phi.inv() * ftt - m.phi * dr2_f - ang / (r * r) -
         dr_phir2 / (r * r) * dr_f;
}

inline Scalar lb_invariant_apply(const InvariantClassicalOp& op, const Scalar& f) {
  COperator q = q_operator();
  Scalar qf = q.apply(f);
  return op.c_tt * derive(derive(f, VT), VT) + op.c_q2 * q.apply(qf) +
         op.c_q * qf + op.c_delta * delta_operator().apply(f);
}

} // namespace classical

} // namespace qweyl
