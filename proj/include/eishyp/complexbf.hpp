#pragma once

#include "eishyp/bigfloat.hpp"

namespace eishyp {

// Complex number over BigFloat. The environment's MPFR has no complex layer,
// so the handful of operations needed here are spelled out; i-factors coming
// from the odd-line families stay explicit this way.
struct ComplexBF {
  BigFloat re, im;

  ComplexBF() = default;
  explicit ComplexBF(mpfr_prec_t prec) : re(prec), im(prec) {}
  ComplexBF(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
  ComplexBF(long r, mpfr_prec_t prec) : re(r, prec), im(prec) {}

  static ComplexBF unit_i(mpfr_prec_t prec) { return ComplexBF(BigFloat(prec), BigFloat(1L, prec)); }

  friend ComplexBF operator+(const ComplexBF& a, const ComplexBF& b) { return {a.re + b.re, a.im + b.im}; }
  friend ComplexBF operator-(const ComplexBF& a, const ComplexBF& b) { return {a.re - b.re, a.im - b.im}; }
  friend ComplexBF operator*(const ComplexBF& a, const ComplexBF& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexBF operator*(const BigFloat& s, const ComplexBF& a) { return {s * a.re, s * a.im}; }
  friend ComplexBF operator/(const ComplexBF& a, const ComplexBF& b) {
    BigFloat d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  ComplexBF operator-() const { return {-re, -im}; }
  ComplexBF& operator+=(const ComplexBF& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  ComplexBF conj() const { return {re, -im}; }
};

inline BigFloat abs(const ComplexBF& a) { return sqrt(a.re * a.re + a.im * a.im); }

inline ComplexBF pow_int(const ComplexBF& a, long e) {
  mpfr_prec_t p = a.re.prec() > a.im.prec() ? a.re.prec() : a.im.prec();
  ComplexBF acc(1L, p);
  ComplexBF base = a;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  while (n) {
    if (n & 1) acc = acc * base;
    base = base * base;
    n >>= 1;
  }
  if (e < 0) return ComplexBF(1L, p) / acc;
  return acc;
}

}  // namespace eishyp
