// Sparse multivariate polynomials over the Gaussian rationals, with exact
// gcd via a primitive pseudo-remainder sequence. The variable set is fixed
// globally: q, h (the deformation parameter), t, mu, r, rg, x, y, z, in
// decreasing lexicographic priority.
#pragma once

#include "qweyl/gaussrat.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <vector>

namespace qweyl {

enum Var : int { VQ = 0, VH = 1, VT = 2, VMU = 3, VR = 4, VRG = 5, VX = 6, VY = 7, VZ = 8 };
constexpr int kNumVars = 9;

inline const char* var_name(int v) {
  static const char* names[kNumVars] = {"q", "h", "t", "mu", "r", "rg", "x", "y", "z"};
  return names[v];
}

struct Mono {
  std::array<int16_t, kNumVars> e{};

  bool is_one() const {
    for (auto x : e) if (x) return false;
    return true;
  }
  int total_degree() const {
    int s = 0;
    for (auto x : e) s += x;
    return s;
  }
  Mono operator*(const Mono& o) const {
    Mono m;
    for (int i = 0; i < kNumVars; ++i) m.e[i] = int16_t(e[i] + o.e[i]);
    return m;
  }
  // Exact division; caller guarantees divisibility.
  Mono operator/(const Mono& o) const {
    Mono m;
    for (int i = 0; i < kNumVars; ++i) m.e[i] = int16_t(e[i] - o.e[i]);
    return m;
  }
  bool divides(const Mono& o) const {
    for (int i = 0; i < kNumVars; ++i) if (e[i] > o.e[i]) return false;
    return true;
  }
  friend bool operator==(const Mono& a, const Mono& b) { return a.e == b.e; }
  // Lexicographic with q > h > t > mu > r > rg > x > y > z.
  friend bool operator<(const Mono& a, const Mono& b) {
    for (int i = 0; i < kNumVars; ++i)
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
  }
};

inline Mono mono_var(int v, int deg = 1) {
  Mono m;
  m.e[v] = int16_t(deg);
  return m;
}

// Terms kept sorted in strictly decreasing lex order; no zero coefficients.
class MPoly {
public:
  struct Term {
    Mono m;
    GaussRat c;
  };

  MPoly() = default;
  MPoly(long v) { if (v != 0) t_.push_back({Mono{}, GaussRat(v)}); }
  explicit MPoly(GaussRat c) { if (!c.is_zero()) t_.push_back({Mono{}, std::move(c)}); }
  static MPoly var(int v, int deg = 1) {
    MPoly p;
    if (deg == 0) return MPoly(1);
    p.t_.push_back({mono_var(v, deg), GaussRat(1)});
    return p;
  }
  static MPoly term(Mono m, GaussRat c) {
    MPoly p;
    if (!c.is_zero()) p.t_.push_back({std::move(m), std::move(c)});
    return p;
  }

  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  bool is_one() const { return t_.size() == 1 && t_[0].m.is_one() && t_[0].c.is_one(); }
  GaussRat constant_value() const {
    if (t_.empty()) return GaussRat();
    return t_.back().m.is_one() ? t_.back().c : GaussRat();
  }
  size_t size() const { return t_.size(); }
  const Term& leading() const { return t_.front(); }
  int total_degree() const {
    int d = 0;
    for (auto& t : t_) d = std::max(d, t.m.total_degree());
    return d;
  }
  int degree(int v) const {
    int d = -1;
    for (auto& t : t_) d = std::max(d, int(t.m.e[v]));
    return d; // -1 for the zero polynomial
  }
  bool depends_on(int v) const {
    for (auto& t : t_) if (t.m.e[v] > 0) return true;
    return false;
  }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    if (a.t_.size() != b.t_.size()) return false;
    for (size_t i = 0; i < a.t_.size(); ++i)
      if (!(a.t_[i].m == b.t_[i].m) || a.t_[i].c != b.t_[i].c) return false;
    return true;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly operator-() const {
    MPoly r = *this;
    for (auto& t : r.t_) t.c = -t.c;
    return r;
  }

  friend MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r;
    r.t_.reserve(a.t_.size() + b.t_.size());
    size_t i = 0, j = 0;
    while (i < a.t_.size() && j < b.t_.size()) {
      if (b.t_[j].m < a.t_[i].m) {
        r.t_.push_back(a.t_[i++]);
      } else if (a.t_[i].m < b.t_[j].m) {
        r.t_.push_back(b.t_[j++]);
      } else {
        GaussRat c = a.t_[i].c + b.t_[j].c;
        if (!c.is_zero()) r.t_.push_back({a.t_[i].m, std::move(c)});
        ++i; ++j;
      }
    }
    while (i < a.t_.size()) r.t_.push_back(a.t_[i++]);
    while (j < b.t_.size()) r.t_.push_back(b.t_[j++]);
    return r;
  }
  friend MPoly operator-(const MPoly& a, const MPoly& b) { return a + (-b); }
  MPoly& operator+=(const MPoly& o) { *this = *this + o; return *this; }
  MPoly& operator-=(const MPoly& o) { *this = *this - o; return *this; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    if (a.is_zero() || b.is_zero()) return MPoly();
    if (b.t_.size() == 1) return a.mul_term(b.t_[0]);
    if (a.t_.size() == 1) return b.mul_term(a.t_[0]);
    std::map<Mono, GaussRat> acc;
    for (auto& ta : a.t_)
      for (auto& tb : b.t_) {
        Mono m = ta.m * tb.m;
        auto it = acc.find(m);
        if (it == acc.end()) acc.emplace(std::move(m), ta.c * tb.c);
        else it->second += ta.c * tb.c;
      }
    MPoly r;
    r.t_.reserve(acc.size());
    for (auto it = acc.rbegin(); it != acc.rend(); ++it)
      if (!it->second.is_zero()) r.t_.push_back({it->first, it->second});
    return r;
  }
  MPoly& operator*=(const MPoly& o) { *this = *this * o; return *this; }

  MPoly mul_term(const Term& t) const {
    MPoly r;
    r.t_.reserve(t_.size());
    for (auto& a : t_) r.t_.push_back({a.m * t.m, a.c * t.c});
    return r;
  }
  MPoly mul_coeff(const GaussRat& c) const {
    if (c.is_zero()) return MPoly();
    MPoly r = *this;
    for (auto& t : r.t_) t.c *= c;
    return r;
  }

  // Exact multivariate division; returns nothing when the division fails.
  static std::optional<MPoly> div_exact(const MPoly& a, const MPoly& b) {
    if (b.is_zero()) throw std::domain_error("MPoly: division by zero");
    MPoly rem = a, quo;
    while (!rem.is_zero()) {
      const Term& lr = rem.leading();
      const Term& lb = b.leading();
      if (!lb.m.divides(lr.m)) return std::nullopt;
      Term qt{lr.m / lb.m, lr.c / lb.c};
      quo.t_.push_back(qt);
      rem = rem - b.mul_term(qt);
    }
    std::sort(quo.t_.begin(), quo.t_.end(),
              [](const Term& x, const Term& y) { return y.m < x.m; });
    return quo;
  }

  // Coefficient of v^k, as a polynomial in the remaining variables.
  MPoly coeff_of(int v, int k) const {
    MPoly r;
    for (auto& t : t_)
      if (t.m.e[v] == k) {
        Mono m = t.m;
        m.e[v] = 0;
        r.t_.push_back({m, t.c});
      }
    std::sort(r.t_.begin(), r.t_.end(),
              [](const Term& x, const Term& y) { return y.m < x.m; });
    return r;
  }

  MPoly subst(int v, const MPoly& value) const {
    int d = degree(v);
    if (d <= 0) return *this;
    // Horner on the coefficients in v.
    MPoly r = coeff_of(v, d);
    for (int k = d - 1; k >= 0; --k) r = r * value + coeff_of(v, k);
    return r;
  }

  MPoly derivative(int v) const {
    MPoly r;
    for (auto& t : t_)
      if (t.m.e[v] > 0) {
        Mono m = t.m;
        m.e[v] = int16_t(m.e[v] - 1);
        r.t_.push_back({m, t.c * GaussRat(long(t.m.e[v]))});
      }
    return r;
  }

  MPoly pow(int n) const {
    if (n < 0) throw std::domain_error("MPoly::pow: negative exponent");
    MPoly r(1), b = *this;
    while (n) {
      if (n & 1) r *= b;
      b = (n >>= 1) ? b * b : b;
    }
    return r;
  }

private:
  std::vector<Term> t_;
};

// ---- gcd machinery -------------------------------------------------------

namespace detail {

inline int top_var(const MPoly& p) {
  for (int v = 0; v < kNumVars; ++v)
    if (p.depends_on(v)) return v;
  return -1;
}

// View p as a univariate polynomial in v with MPoly coefficients.
inline std::vector<MPoly> coeffs_in(const MPoly& p, int v) {
  int d = p.degree(v);
  std::vector<MPoly> c;
  c.reserve(d + 1);
  for (int k = 0; k <= d; ++k) c.push_back(p.coeff_of(v, k));
  return c;
}

inline MPoly from_coeffs(const std::vector<MPoly>& c, int v) {
  MPoly r;
  for (size_t k = 0; k < c.size(); ++k)
    r += c[k] * MPoly::var(v, int(k));
  return r;
}

} // namespace detail

MPoly gcd(const MPoly& a, const MPoly& b);

namespace detail {

// Pseudo-remainder of a by b in the variable v.
inline MPoly prem(const MPoly& a, const MPoly& b, int v) {
  int da = a.degree(v), db = b.degree(v);
  if (da < db) return a;
  MPoly lb = b.coeff_of(v, db);
  MPoly r = a;
  int k = da;
  while (!r.is_zero() && (k = r.degree(v)) >= db) {
    MPoly lr = r.coeff_of(v, k);
    r = r * lb - b * lr * MPoly::var(v, k - db);
  }
  return r;
}

inline MPoly content_in(const MPoly& p, int v) {
  MPoly c;
  int d = p.degree(v);
  for (int k = 0; k <= d; ++k) {
    MPoly ck = p.coeff_of(v, k);
    if (!ck.is_zero()) c = gcd(c, ck);
    if (c.is_one()) break;
  }
  return c;
}

} // namespace detail

// Makes the leading coefficient (w.r.t. global lex order) equal to 1.
inline MPoly monic(const MPoly& p) {
  if (p.is_zero()) return p;
  return p.mul_coeff(p.leading().c.inv());
}

inline MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return MPoly(1);
  int v = std::min(detail::top_var(a), detail::top_var(b));
  if (a.degree(v) == 0 || b.degree(v) == 0) {
    // One side does not involve the main variable; the gcd divides it, so
    // recurse against the content of the side that does.
    const MPoly& with = a.degree(v) > 0 ? a : b;
    const MPoly& sans = a.degree(v) > 0 ? b : a;
    return gcd(detail::content_in(with, v), sans);
  }
  MPoly ca = detail::content_in(a, v);
  MPoly cb = detail::content_in(b, v);
  MPoly cg = gcd(ca, cb);
  MPoly A = *MPoly::div_exact(a, ca);
  MPoly B = *MPoly::div_exact(b, cb);
  if (A.degree(v) < B.degree(v)) std::swap(A, B);
  // Primitive PRS.
  while (true) {
    MPoly r = detail::prem(A, B, v);
    if (r.is_zero()) break;
    if (r.degree(v) == 0) return monic(cg); // coprime in v
    MPoly cr = detail::content_in(r, v);
    A = B;
    B = *MPoly::div_exact(r, cr);
  }
  MPoly pb = *MPoly::div_exact(B, detail::content_in(B, v));
  return monic(cg * pb);
}

} // namespace qweyl
