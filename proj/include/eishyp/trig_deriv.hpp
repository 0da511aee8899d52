#pragma once

#include "eishyp/complexbf.hpp"
#include "eishyp/rational.hpp"

namespace eishyp {

// The four function shapes whose n-th derivative has an exact closed form:
//   csc_odd_power(m): 1/sin^{2m-1}(pi s)   (m >= 1)
//   cot: cos(pi s)/sin(pi s)
//   sec: 1/cos(pi s)
//   tan: sin(pi s)/cos(pi s)
enum class TrigBase { csc_odd_power, cot, sec, tan };

struct TrigKind {
  TrigBase base = TrigBase::cot;
  int m = 1;  // only meaningful for csc_odd_power
};

// d^order/ds^order of the kind at complex s, via the closed formulas: an exact
// rational combination of 1/sin^j or 1/cos^j times an optional cos/sin
// numerator factor, scaled by pi^order. Coefficient tables are exact and
// cached per (kind, order); safe to call concurrently.
//
// Throws std::domain_error when s lies within 2^{-prec/4} of a pole of the
// kind (integers for the sin family, half-integers for the cos family),
// distance measured to the nearest pole in the complex plane.
ComplexBF deriv_formula(TrigKind kind, int order, const ComplexBF& s, mpfr_prec_t prec);

// Independent route: Taylor-series arithmetic on sin/cos developments around
// s, carrying order + 8 guard coefficients, derivative read off as
// order! * [t^order]. Shares only the complex sin/cos evaluations with the
// formula route.
ComplexBF deriv_oracle(TrigKind kind, int order, const ComplexBF& s, mpfr_prec_t prec);

// sin(pi s) and cos(pi s) for complex s.
ComplexBF sin_pi(const ComplexBF& s, mpfr_prec_t prec);
ComplexBF cos_pi(const ComplexBF& s, mpfr_prec_t prec);

// Distance from s to the nearest pole of the kind.
BigFloat pole_distance(TrigKind kind, const ComplexBF& s, mpfr_prec_t prec);

}  // namespace eishyp
