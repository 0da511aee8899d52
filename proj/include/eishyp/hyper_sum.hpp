#pragma once

#include "eishyp/bigfloat.hpp"
#include "eishyp/rational.hpp"
#include "eishyp/weight.hpp"

namespace eishyp {

// Kernel multiplying the weight in each term: a power of csch or sech of the
// shared argument pi*(arg_a*m + arg_b), optionally with the cofunction as a
// numerator (cosh over csch powers, sinh over sech powers).
enum class KernelKind { none, csch_pow, cosh_csch_pow, sech_pow, sinh_sech_pow };

// How the weight enters a term at index m.
//   single:     w(m)
//   sum_pm:     w(m) + w(-m)
//   diff_pm:    w(m) - w(-m)
//   shift_pair: w(m-1) + w(-m)
enum class CombineMode { single, sum_pm, diff_pm, shift_pair };

struct HyperSumSpec {
  WeightFn weight;
  CombineMode combine = CombineMode::single;
  KernelKind kernel = KernelKind::none;
  int kernel_pow = 0;  // j in csch^j or sech^j, 0 iff kernel == none
  Rational arg_a = Rational(1);
  Rational arg_b = Rational(0);
};

struct HyperSumResult {
  BigFloat value;
  BigFloat tail_bound;  // bound on the dropped tail, from the term majorant
  long terms = 0;
};

// Sum over m >= 1, truncated once a geometric majorant bounds the dropped
// tail below 2^-(prec+8) relative to max(|partial sum|, largest |term|).
// Throws std::invalid_argument when the majorant has no decay and
// std::runtime_error when max_terms is reached first.
HyperSumResult sum_hyperbolic(const HyperSumSpec& spec, mpfr_prec_t prec,
                              long max_terms = 400000);

}  // namespace eishyp
