#pragma once

#include <string>
#include <vector>

#include "eishyp/bigfloat.hpp"
#include "eishyp/rational.hpp"

namespace eishyp {

// Hyperbolic weight factor kind(pi*(c*m + d))^v with rational c > 0, d, and
// v >= 1. csch and sech decay like e^{-v c pi m}; tanh and coth are bounded.
enum class HypKind { csch, sech, tanh_f, coth_f };

struct HypFactor {
  HypKind kind;
  Rational c;
  Rational d;  // affine offset, zero for the plain catalog
  int v = 1;
};

// Bound |w(m)| <= exp(log_c) * m^deg * exp(-rho * pi * m) valid for m >= 1.
// rho is kept exact (a rational multiple of pi); the constant is a double
// since it only steers truncation, always rounded in the safe direction.
struct DecayBound {
  double log_c = 0.0;
  int deg = 0;
  Rational rho = Rational(0);
};

// Closed catalog of admissible weights: a rational scalar, an integer power
// of m, an optional (-1)^m sign, and a product of hyperbolic factors. The
// zero weight is represented by scalar == 0.
class WeightFn {
 public:
  Rational scalar = Rational(1);
  int m_power = 0;
  bool alternating = false;
  std::vector<HypFactor> hyp;

  // Value at any integer m (negative and zero included; zero only when no
  // factor has a pole there).
  BigFloat eval(long m, mpfr_prec_t prec) const;

  // +1 if w(-m) == w(m) for all m, -1 if w(-m) == -w(m), 0 when unknown
  // (some factor carries a nonzero offset).
  int parity() const;

  DecayBound decay() const;

  bool is_zero() const { return scalar == 0; }
  bool has_offsets() const;

  // Grammar: factors joined by '*'. Factors: a rational literal, 'm' or
  // 'm^p', '(-1)^m', and fn(c) / fn(c,d) / fn(c)^v / fn(c,d)^v for fn in
  // {csch, sech, tanh, coth}; arguments are multiples of pi. Example:
  //   m^2 * csch(1)        for m^2 / sinh(pi m)
  //   (-1)^m * sech(1)     for (-1)^m / cosh(pi m)
  //   sech(1,1/2)          for 1 / cosh(pi(m + 1/2))
  static WeightFn parse(const std::string& text);
  std::string to_string() const;
};

}  // namespace eishyp
