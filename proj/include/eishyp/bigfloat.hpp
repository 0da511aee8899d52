#pragma once

#include <mpfr.h>

#include <string>

#include "eishyp/rational.hpp"

namespace eishyp {

// Arbitrary-precision real backed by MPFR. A value carries its working
// precision; binary operations round to the larger precision of the two
// operands, so an accumulator created at P + guard bits keeps sums at that
// precision. All rounding is to nearest.
class BigFloat {
 public:
  BigFloat() { mpfr_init2(x_, 64); mpfr_set_zero(x_, 1); }
  explicit BigFloat(mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
  BigFloat(long v, mpfr_prec_t prec) { mpfr_init2(x_, prec); mpfr_set_si(x_, v, MPFR_RNDN); }
  BigFloat(const Rational& q, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    mpfr_set_q(x_, q.get_mpq_t(), MPFR_RNDN);
  }
  BigFloat(const std::string& dec, mpfr_prec_t prec) {
    mpfr_init2(x_, prec);
    if (mpfr_set_str(x_, dec.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("BigFloat: bad decimal literal '" + dec + "'");
  }

  BigFloat(const BigFloat& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
  BigFloat(BigFloat&& o) noexcept { mpfr_init2(x_, 64); mpfr_swap(x_, o.x_); }
  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(x_, mpfr_get_prec(o.x_));
      mpfr_set(x_, o.x_, MPFR_RNDN);
    }
    return *this;
  }
  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) mpfr_swap(x_, o.x_);
    return *this;
  }
  ~BigFloat() { mpfr_clear(x_); }

  mpfr_prec_t prec() const { return mpfr_get_prec(x_); }
  mpfr_ptr raw() { return x_; }
  mpfr_srcptr raw() const { return x_; }

  bool is_zero() const { return mpfr_zero_p(x_) != 0; }
  int sign() const { return mpfr_sgn(x_); }
  double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }
  // Decimal string with enough digits to reconstruct the value at this
  // precision; deterministic for a given value and precision.
  std::string to_string(size_t digits = 0) const;

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o) { mpfr_add(x_, x_, o.x_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(x_, x_, o.x_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(x_, x_, o.x_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) { mpfr_div(x_, x_, o.x_, MPFR_RNDN); return *this; }

  friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }
  friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.x_, b.x_) == 0; }

 private:
  mpfr_t x_;
};

BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat exp(const BigFloat& a);
BigFloat log(const BigFloat& a);
BigFloat sin(const BigFloat& a);
BigFloat cos(const BigFloat& a);
BigFloat sinh(const BigFloat& a);
BigFloat cosh(const BigFloat& a);
BigFloat pow_si(const BigFloat& a, long e);
BigFloat ldexp2(const BigFloat& a, long e);  // a * 2^e, exact
BigFloat round_nearest(const BigFloat& a);

// Cached constants, computed at the requested precision.
BigFloat const_pi(mpfr_prec_t prec);
BigFloat const_sqrt2(mpfr_prec_t prec);
// Gamma(1/4) through the arithmetic-geometric mean:
//   agm(1, sqrt 2) = pi / varpi,  Gamma(1/4)^2 = 2 sqrt(2 pi) varpi
// where varpi is the lemniscate constant. Relative error <= 2^-prec.
BigFloat gamma_quarter(mpfr_prec_t prec);
// 2^e as a BigFloat, exact.
BigFloat two_pow(long e, mpfr_prec_t prec);

}  // namespace eishyp
