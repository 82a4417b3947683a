// Scalar: an element of Q(i)(q,h,...) kept as a reduced fraction of
// multivariate polynomials with a monic denominator, so equality is a
// structural comparison. Also the parser/printer for the small expression
// grammar used by every serialized interface (integers, i, variable names,
// + - * / ^ and parentheses).
#pragma once

#include "qweyl/mpoly.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <string>

namespace qweyl {

class Scalar {
public:
  Scalar() : num_(), den_(1) {}
  Scalar(long v) : num_(v), den_(1) {}
  Scalar(MPoly p) : num_(std::move(p)), den_(1) {}
  Scalar(MPoly n, MPoly d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }
  explicit Scalar(GaussRat c) : num_(std::move(c)), den_(1) {}

  static Scalar var(int v, int deg = 1) { return Scalar(MPoly::var(v, deg)); }
  static Scalar i() { return Scalar(GaussRat::unit_i()); }
  static Scalar rational(BigRat r) { return Scalar(GaussRat(std::move(r))); }

  const MPoly& num() const { return num_; }
  const MPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_one(); }

  // Constant Scalars only; throws otherwise.
  GaussRat constant_value() const {
    if (!is_constant()) throw std::domain_error("Scalar: not a constant");
    return num_.constant_value() / den_.constant_value();
  }

  bool depends_on(int v) const { return num_.depends_on(v) || den_.depends_on(v); }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // Canonical total order for use as a map key.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    auto key = [](const MPoly& p) {
      std::vector<std::pair<Mono, GaussRat>> v;
      for (auto& t : p.terms()) v.emplace_back(t.m, t.c);
      return v;
    };
    auto ka = key(a.num_), kb = key(b.num_);
    if (ka != kb) return ka < kb;
    return key(a.den_) < key(b.den_);
  }

  Scalar operator-() const { return Scalar(-num_, den_, nocheck{}); }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
    return Scalar(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (a.den_.is_one() && b.den_.is_one())
      return Scalar(a.num_ * b.num_, MPoly(1), nocheck{});
    return Scalar(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) {
    if (b.is_zero()) throw std::domain_error("Scalar: division by zero");
    if (a.is_zero()) return Scalar();
    return Scalar(a.num_ * b.den_, a.den_ * b.num_);
  }

  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
  Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

  Scalar inv() const { return Scalar(1) / *this; }

  Scalar pow(int n) const {
    if (n < 0) return inv().pow(-n);
    Scalar r(1), b = *this;
    while (n) {
      if (n & 1) r *= b;
      b = (n >>= 1) ? b * b : b;
    }
    return r;
  }

  Scalar subst(int v, const Scalar& value) const {
    // v -> c v + e with constant c != 0 is a ring automorphism, so the
    // substituted fraction is already reduced and needs no gcd
    if (value.is_polynomial() && value.num().degree(v) == 1) {
      MPoly c1 = value.num().coeff_of(v, 1);
      if (c1.is_constant() && !c1.is_zero()) {
        MPoly n = num_.subst(v, value.num());
        MPoly d = den_.subst(v, value.num());
        Scalar r(std::move(n), MPoly(1), nocheck{});
        r.den_ = std::move(d);
        GaussRat lc = r.den_.leading().c;
        if (!lc.is_one()) {
          GaussRat il = lc.inv();
          r.num_ = r.num_.mul_coeff(il);
          r.den_ = r.den_.mul_coeff(il);
        }
        return r;
      }
    }
    Scalar n = subst_poly(num_, v, value);
    Scalar d = subst_poly(den_, v, value);
    return n / d;
  }

  // d/dv with all variables independent.
  Scalar derivative(int v) const {
    return Scalar(num_.derivative(v) * den_ - num_ * den_.derivative(v),
                  den_ * den_);
  }

  std::string str() const;

private:
  struct nocheck {};
  Scalar(MPoly n, MPoly d, nocheck) : num_(std::move(n)), den_(std::move(d)) {}

  static Scalar subst_poly(const MPoly& p, int v, const Scalar& value) {
    int d = p.degree(v);
    if (d <= 0) return Scalar(p);
    Scalar r(p.coeff_of(v, d));
    for (int k = d - 1; k >= 0; --k) r = r * value + Scalar(p.coeff_of(v, k));
    return r;
  }

  void reduce() {
    if (den_.is_zero()) throw std::domain_error("Scalar: zero denominator");
    if (num_.is_zero()) { den_ = MPoly(1); return; }
    if (!den_.is_constant()) {
      if (den_.size() == 1) {
        // monomial denominator: cancel the common monomial factor directly
        Mono shift;
        const Mono& dm = den_.leading().m;
        for (int v = 0; v < kNumVars; ++v) {
          int16_t m = dm.e[v];
          for (auto& t : num_.terms()) m = std::min(m, t.m.e[v]);
          shift.e[v] = m;
        }
        if (!shift.is_one()) {
          num_ = *MPoly::div_exact(num_, MPoly::term(shift, GaussRat(1)));
          den_ = *MPoly::div_exact(den_, MPoly::term(shift, GaussRat(1)));
        }
      } else {
        MPoly g = gcd(num_, den_);
        if (!g.is_one()) {
          num_ = *MPoly::div_exact(num_, g);
          den_ = *MPoly::div_exact(den_, g);
        }
      }
    }
    GaussRat lc = den_.leading().c;
    if (!lc.is_one()) {
      GaussRat il = lc.inv();
      num_ = num_.mul_coeff(il);
      den_ = den_.mul_coeff(il);
    }
  }

  MPoly num_, den_;
};

// ---- printing ------------------------------------------------------------

namespace detail {

inline void print_bigrat(std::ostream& os, const BigRat& r) {
  os << boost::multiprecision::numerator(r).str();
  if (boost::multiprecision::denominator(r) != 1)
    os << "/" << boost::multiprecision::denominator(r).str();
}

inline void print_mono(std::ostream& os, const Mono& m, bool lead_coeff_is_one) {
  bool first = lead_coeff_is_one;
  for (int v = 0; v < kNumVars; ++v) {
    if (m.e[v] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << var_name(v);
    if (m.e[v] > 1) os << "^" << m.e[v];
  }
  if (first) os << "1";
}

// One printed term per nonzero real/imaginary coefficient part.
inline void print_part(std::ostream& os, bool& first, const BigRat& c,
                       bool imaginary, const Mono& m) {
  if (c == 0) return;
  BigRat a = c;
  if (a < 0) { os << "-"; a = -a; }
  else if (!first) os << "+";
  first = false;
  bool coeff_one = (a == 1);
  if (!coeff_one) print_bigrat(os, a);
  if (imaginary) {
    if (!coeff_one) os << "*";
    os << "i";
    coeff_one = false;
  }
  if (!m.is_one()) {
    if (!coeff_one) os << "*";
    print_mono(os, m, true);
  } else if (coeff_one) {
    os << "1";
  }
}

inline void print_poly(std::ostream& os, const MPoly& p) {
  if (p.is_zero()) { os << "0"; return; }
  bool first = true;
  for (auto& t : p.terms()) {
    print_part(os, first, t.c.re, false, t.m);
    print_part(os, first, t.c.im, true, t.m);
  }
}

} // namespace detail

inline std::string Scalar::str() const {
  std::ostringstream os;
  if (den_.is_one()) {
    detail::print_poly(os, num_);
  } else {
    os << "(";
    detail::print_poly(os, num_);
    os << ")/(";
    detail::print_poly(os, den_);
    os << ")";
  }
  return os.str();
}

// ---- parsing -------------------------------------------------------------

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  size_t position() const { return pos_; }

private:
  size_t pos_;
};

// Recursive-descent parser for the Scalar grammar. `allowed` restricts which
// variables may appear; contexts like R-matrix files allow only q and h.
class ScalarParser {
public:
  explicit ScalarParser(std::set<int> allowed = {VQ, VH, VT, VMU, VR, VRG})
      : allowed_(std::move(allowed)) {}

  Scalar parse(const std::string& s) const {
    size_t pos = 0;
    Scalar v = parse_sum(s, pos);
    skip_ws(s, pos);
    if (pos != s.size()) throw ParseError("unexpected trailing input", pos);
    return v;
  }

private:
  std::set<int> allowed_;

  static void skip_ws(const std::string& s, size_t& p) {
    while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
  }

  Scalar parse_sum(const std::string& s, size_t& p) const {
    Scalar v = parse_product(s, p);
    while (true) {
      skip_ws(s, p);
      if (p < s.size() && (s[p] == '+' || s[p] == '-')) {
        char op = s[p++];
        Scalar w = parse_product(s, p);
        v = (op == '+') ? v + w : v - w;
      } else {
        return v;
      }
    }
  }

  Scalar parse_product(const std::string& s, size_t& p) const {
    Scalar v = parse_power(s, p);
    while (true) {
      skip_ws(s, p);
      if (p < s.size() && (s[p] == '*' || s[p] == '/')) {
        char op = s[p++];
        Scalar w = parse_power(s, p);
        if (op == '/' && w.is_zero()) throw ParseError("division by zero", p);
        v = (op == '*') ? v * w : v / w;
      } else {
        return v;
      }
    }
  }

  Scalar parse_power(const std::string& s, size_t& p) const {
    Scalar v = parse_atom(s, p);
    skip_ws(s, p);
    while (p < s.size() && s[p] == '^') {
      ++p;
      skip_ws(s, p);
      bool neg = false;
      if (p < s.size() && s[p] == '-') { neg = true; ++p; }
      size_t start = p;
      while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
      if (p == start) throw ParseError("expected integer exponent", p);
      int e = std::stoi(s.substr(start, p - start));
      v = v.pow(neg ? -e : e);
      skip_ws(s, p);
    }
    return v;
  }

  Scalar parse_atom(const std::string& s, size_t& p) const {
    skip_ws(s, p);
    if (p >= s.size()) throw ParseError("unexpected end of input", p);
    char c = s[p];
    if (c == '(') {
      ++p;
      Scalar v = parse_sum(s, p);
      skip_ws(s, p);
      if (p >= s.size() || s[p] != ')') throw ParseError("expected ')'", p);
      ++p;
      return v;
    }
    if (c == '-') {
      ++p;
      return -parse_power(s, p);
    }
    if (c == '+') {
      ++p;
      return parse_power(s, p);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = p;
      while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
      return Scalar::rational(BigRat(BigInt(s.substr(start, p - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t start = p;
      while (p < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[p])) || s[p] == '_'))
        ++p;
      std::string name = s.substr(start, p - start);
      if (name == "i") return Scalar::i();
      for (int v = 0; v < kNumVars; ++v)
        if (name == var_name(v)) {
          if (!allowed_.count(v))
            throw ParseError("variable '" + name + "' not allowed here", start);
          return Scalar::var(v);
        }
      throw ParseError("unknown symbol '" + name + "'", start);
    }
    throw ParseError(std::string("unexpected character '") + c + "'", p);
  }
};

inline Scalar parse_scalar(const std::string& s,
                           std::set<int> allowed = {VQ, VH, VT, VMU, VR, VRG}) {
  return ScalarParser(std::move(allowed)).parse(s);
}

} // namespace qweyl
