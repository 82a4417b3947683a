// Univariate polynomials over Scalar coefficients, tagged with a display
// variable. Carries the characteristic polynomial, rational reconstruction of
// a power series, and the coefficient-shape checks used on Poincare-Hilbert
// data (mountain property, reciprocality, quadratic-factor extraction).
#pragma once

#include "qweyl/matrix.hpp"

#include <optional>
#include <variant>

namespace qweyl {

class UniPoly {
public:
  UniPoly() : tag_("t") {}
  explicit UniPoly(std::string tag) : tag_(std::move(tag)) {}
  UniPoly(std::string tag, std::vector<Scalar> coeffs)
      : tag_(std::move(tag)), c_(std::move(coeffs)) {
    trim();
  }
  static UniPoly constant(std::string tag, Scalar v) {
    return UniPoly(std::move(tag), {std::move(v)});
  }
  static UniPoly x(std::string tag) {
    return UniPoly(std::move(tag), {Scalar(0), Scalar(1)});
  }

  const std::string& tag() const { return tag_; }
  int degree() const { return int(c_.size()) - 1; } // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  Scalar coeff(int k) const {
    return (k >= 0 && k < int(c_.size())) ? c_[k] : Scalar(0);
  }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar leading() const { return c_.empty() ? Scalar(0) : c_.back(); }

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
    return UniPoly(a.tag_, std::move(c));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) - b.coeff(int(i));
    return UniPoly(a.tag_, std::move(c));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly(a.tag_);
    std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(a.tag_, std::move(c));
  }
  UniPoly scaled(const Scalar& s) const {
    std::vector<Scalar> c = c_;
    for (auto& x : c) x = x * s;
    return UniPoly(tag_, std::move(c));
  }

  // Division with remainder over the Scalar field.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("UniPoly: division by zero");
    UniPoly r = a;
    std::vector<Scalar> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1);
    Scalar lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int k = r.degree() - b.degree();
      Scalar f = r.leading() / lb;
      q[k] = q[k] + f;
      std::vector<Scalar> sub(k + b.c_.size());
      for (size_t i = 0; i < b.c_.size(); ++i) sub[k + i] = b.c_[i] * f;
      r = r - UniPoly(a.tag_, std::move(sub));
    }
    return {UniPoly(a.tag_, std::move(q)), r};
  }

  UniPoly monic() const {
    if (is_zero()) return *this;
    return scaled(leading().inv());
  }

  static UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
      auto [q, r] = divmod(a, b);
      a = b;
      b = r;
    }
    return a.monic();
  }

  Scalar eval(const Scalar& v) const {
    Scalar r;
    for (int k = degree(); k >= 0; --k) r = r * v + c_[k];
    return r;
  }

  // p(t) -> p(-t)
  UniPoly alternate() const {
    std::vector<Scalar> c = c_;
    for (size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return UniPoly(tag_, std::move(c));
  }

  // Evaluate on a square matrix.
  ScalarMatrix eval(const ScalarMatrix& m) const {
    ScalarMatrix r = ScalarMatrix::zero(m.rows(), m.cols());
    for (int k = degree(); k >= 0; --k)
      r = r * m + ScalarMatrix::identity(m.rows()).scaled(c_[k]);
    return r;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < c_.size(); ++k) {
      if (c_[k].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[k].str() << ")";
      if (k >= 1) os << "*" << tag_;
      if (k >= 2) os << "^" << k;
    }
    return os.str();
  }

private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::string tag_;
  std::vector<Scalar> c_;
};

// Monic characteristic polynomial via Faddeev-LeVerrier.
inline UniPoly charpoly(const ScalarMatrix& m, const std::string& tag = "lam") {
  if (m.rows() != m.cols())
    throw std::invalid_argument("charpoly: matrix must be square");
  int n = m.rows();
  std::vector<Scalar> c(n + 1);
  c[n] = Scalar(1);
  ScalarMatrix mk = ScalarMatrix::zero(n, n);
  for (int k = 1; k <= n; ++k) {
    mk = m * (mk + ScalarMatrix::identity(n).scaled(c[n - k + 1]));
    c[n - k] = -(mk.trace() / Scalar(k));
  }
  return UniPoly(tag, std::move(c));
}

// Pade-style reconstruction: find coprime N (deg<=dn), D (deg<=dd, D(0)=1)
// with N/D matching every supplied series term. Returns nothing if no such
// pair exists within the bounds.
inline std::optional<std::pair<UniPoly, UniPoly>>
reconstruct_rational(const std::vector<Scalar>& series, int dn, int dd,
                     const std::string& tag = "t") {
  int need = dn + dd + 1;
  if (int(series.size()) < need)
    throw std::invalid_argument("reconstruct_rational: series too short");
  // Unknowns: n_0..n_dn, d_1..d_dd (with d_0 := 1).
  // Equations, one per series term: sum_{j} d_j c_{k-j} = n_k (n_k = 0 for k > dn).
  int terms = int(series.size());
  int unknowns = dn + 1 + dd;
  ScalarMatrix A(terms, unknowns), b(terms, 1);
  for (int k = 0; k < terms; ++k) {
    if (k <= dn) A.at(k, k) = Scalar(-1);
    for (int j = 1; j <= dd; ++j)
      if (k - j >= 0) A.at(k, dn + 1 + j - 1) = series[k - j];
    b.at(k, 0) = -series[k];
  }
  auto sol = A.solve(b);
  if (!sol) return std::nullopt;
  std::vector<Scalar> nc(dn + 1), dc(dd + 1);
  for (int k = 0; k <= dn; ++k) nc[k] = sol->at(k, 0);
  dc[0] = Scalar(1);
  for (int j = 1; j <= dd; ++j) dc[j] = sol->at(dn + j, 0);
  UniPoly N(tag, std::move(nc)), D(tag, std::move(dc));
  UniPoly g = UniPoly::gcd(N, D);
  if (g.degree() > 0) {
    N = UniPoly::divmod(N, g).first;
    D = UniPoly::divmod(D, g).first;
    // renormalize D(0) = 1
    Scalar d0 = D.coeff(0);
    if (d0.is_zero()) return std::nullopt;
    N = N.scaled(d0.inv());
    D = D.scaled(d0.inv());
  }
  return std::make_pair(N, D);
}

// ---- coefficient-shape checks ---------------------------------------------

namespace detail {
inline BigRat rational_coeff(const Scalar& s, const char* what) {
  if (!s.is_constant())
    throw std::invalid_argument(std::string(what) + ": coefficients must be rational");
  GaussRat c = s.constant_value();
  if (!c.is_real())
    throw std::invalid_argument(std::string(what) + ": coefficients must be real");
  return c.re;
}
} // namespace detail

struct MountainResult {
  bool pass;
  int fail_index; // first offending coefficient index when pass is false
};

// Coefficients must strictly increase up to the middle one(s).
inline MountainResult mountain_check(const UniPoly& p) {
  int n = p.degree();
  if (n < 0) return {false, 0};
  std::vector<BigRat> c(n + 1);
  for (int k = 0; k <= n; ++k) c[k] = detail::rational_coeff(p.coeff(k), "mountain_check");
  int mid = n / 2;
  for (int i = 1; i <= mid; ++i)
    if (!(c[i - 1] < c[i])) return {false, i};
  return {true, -1};
}

inline bool is_palindromic(const UniPoly& p) {
  int n = p.degree();
  if (n < 0) return false;
  for (int k = 0; k <= n; ++k)
    if (p.coeff(k) != p.coeff(n - k)) return false;
  return true;
}

// N(t) reciprocal and D(-t) reciprocal.
inline bool reciprocal_check(const UniPoly& N, const UniPoly& D) {
  if (!is_palindromic(N)) return false;
  if (D.degree() == 0) return true; // constant denominator
  return is_palindromic(D.alternate());
}

struct MountainFactorization {
  std::vector<UniPoly> factors;          // each (1+t) or (1+c t+t^2), c >= 2
  std::optional<UniPoly> remainder;      // set when not fully factorable over Q
};

namespace detail {

// Rational roots of a polynomial with BigRat coefficients, by the rational
// root theorem after clearing denominators.
inline std::vector<BigRat> rational_roots(const std::vector<BigRat>& c) {
  std::vector<BigRat> roots;
  int n = int(c.size()) - 1;
  while (n >= 0 && c[n] == 0) --n;
  if (n <= 0) return roots;
  BigInt lcm = 1;
  for (int k = 0; k <= n; ++k)
    lcm = boost::multiprecision::lcm(lcm, boost::multiprecision::denominator(c[k]));
  std::vector<BigInt> a(n + 1);
  for (int k = 0; k <= n; ++k)
    a[k] = BigInt(c[k] * BigRat(lcm));
  int low = 0;
  while (a[low] == 0) ++low; // factor out t^low; root 0 only if low>0 (not useful here)
  auto divisors = [](BigInt v) {
    std::vector<BigInt> d;
    if (v < 0) v = -v;
    for (BigInt k = 1; k * k <= v; ++k)
      if (v % k == 0) {
        d.push_back(k);
        if (k * k != v) d.push_back(v / k);
      }
    return d;
  };
  auto eval = [&](const BigRat& x) {
    BigRat r = 0;
    for (int k = n; k >= 0; --k) r = r * x + BigRat(a[k]);
    return r;
  };
  for (const BigInt& p : divisors(a[low]))
    for (const BigInt& q : divisors(a[n])) {
      for (int sign : {1, -1}) {
        BigRat cand = BigRat(sign * p, q);
        if (eval(cand) == 0) roots.push_back(cand);
      }
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

} // namespace detail

// Greedy extraction of (1+t) and (1+c t+t^2) factors with rational c >= 2.
// Preconditions checked: positive rational coefficients, reciprocal input.
inline MountainFactorization factor_mountain(const UniPoly& p) {
  if (!is_palindromic(p))
    throw std::invalid_argument("factor_mountain: polynomial must be reciprocal");
  std::string tag = p.tag();
  UniPoly rem = p;
  // normalize to leading coefficient 1 if possible
  MountainFactorization out;
  UniPoly one_plus_t(tag, {Scalar(1), Scalar(1)});
  while (rem.degree() > 0) {
    if (rem.degree() >= 1) {
      auto [q, r] = UniPoly::divmod(rem, one_plus_t);
      if (r.is_zero()) {
        out.factors.push_back(one_plus_t);
        rem = q;
        continue;
      }
    }
    if (rem.degree() >= 2) {
      // Divide by t^2 + c t + 1 with symbolic c; remainder is linear in c with
      // polynomial coefficients r1(c) t + r0(c). A valid c is a common
      // rational root with c >= 2.
      int n = rem.degree();
      std::vector<std::vector<BigRat>> a(n + 1); // a[k] = coeff poly in c
      for (int k = 0; k <= n; ++k)
        a[k] = {detail::rational_coeff(rem.coeff(k), "factor_mountain")};
      auto shift_mul_c = [](const std::vector<BigRat>& v) {
        std::vector<BigRat> r(v.size() + 1);
        for (size_t i = 0; i < v.size(); ++i) r[i + 1] = v[i];
        return r;
      };
      auto sub = [](std::vector<BigRat> x, const std::vector<BigRat>& y) {
        if (x.size() < y.size()) x.resize(y.size());
        for (size_t i = 0; i < y.size(); ++i) x[i] -= y[i];
        return x;
      };
      // synthetic division by t^2 + c t + 1 from the top
      std::vector<std::vector<BigRat>> qc(n - 1);
      for (int k = n - 2; k >= 0; --k) {
        std::vector<BigRat> v = a[k + 2];
        if (k + 1 <= n - 2) v = sub(v, shift_mul_c(qc[k + 1]));
        if (k + 2 <= n - 2) v = sub(v, qc[k + 2]);
        qc[k] = v;
      }
      std::vector<BigRat> r1 = a[1], r0 = a[0];
      r1 = sub(r1, shift_mul_c(qc[0]));
      if (1 <= n - 2) r1 = sub(r1, qc[1]);
      r0 = sub(r0, qc[0]);
      // common rational roots of r0 and r1
      auto nonzero = [](const std::vector<BigRat>& v) {
        for (auto& x : v) if (x != 0) return true;
        return false;
      };
      std::vector<BigRat> cands =
          detail::rational_roots(nonzero(r0) ? r0 : r1);
      auto eval_at = [](const std::vector<BigRat>& v, const BigRat& x) {
        BigRat r = 0;
        for (int k = int(v.size()) - 1; k >= 0; --k) r = r * x + v[k];
        return r;
      };
      std::optional<BigRat> found;
      for (auto& cand : cands)
        if (cand >= 2 && eval_at(r1, cand) == 0 && eval_at(r0, cand) == 0) {
          found = cand;
          break;
        }
      if (found) {
        UniPoly f(tag, {Scalar(1), Scalar::rational(*found), Scalar(1)});
        auto [q, r] = UniPoly::divmod(rem, f);
        if (!r.is_zero())
          throw std::logic_error("factor_mountain: internal division mismatch");
        out.factors.push_back(f);
        rem = q;
        continue;
      }
    }
    break; // no factor extracted
  }
  if (rem.degree() > 0 || !rem.is_one()) out.remainder = rem;
  return out;
}

} // namespace qweyl
