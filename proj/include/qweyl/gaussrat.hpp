// Exact Gaussian-rational coefficients: a + b*i with a, b arbitrary-precision
// rationals. This is the coefficient field for everything in the library.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace qweyl {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct GaussRat {
  BigRat re, im;

  GaussRat() : re(0), im(0) {}
  GaussRat(long v) : re(v), im(0) {}
  GaussRat(BigRat r) : re(std::move(r)), im(0) {}
  GaussRat(BigRat r, BigRat i) : re(std::move(r)), im(std::move(i)) {}

  static GaussRat unit_i() { return GaussRat(BigRat(0), BigRat(1)); }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat operator-() const { return GaussRat(-re, -im); }
  GaussRat conj() const { return GaussRat(re, -im); }

  GaussRat& operator+=(const GaussRat& o) { re += o.re; im += o.im; return *this; }
  GaussRat& operator-=(const GaussRat& o) { re -= o.re; im -= o.im; return *this; }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { a += b; return a; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { a -= b; return a; }

  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return GaussRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }

  GaussRat inv() const {
    BigRat n = re * re + im * im;
    if (n == 0) throw std::domain_error("GaussRat: division by zero");
    return GaussRat(re / n, -im / n);
  }

  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inv(); }

  GaussRat& operator*=(const GaussRat& o) { *this = *this * o; return *this; }
  GaussRat& operator/=(const GaussRat& o) { *this = *this / o; return *this; }

  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) { return !(a == b); }

  // Total order used only for canonical term ordering, not for analysis.
  friend bool operator<(const GaussRat& a, const GaussRat& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

inline std::string to_string(const BigRat& r) {
  return r.str();
}

} // namespace qweyl
