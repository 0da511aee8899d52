#pragma once

#include <vector>

#include "eishyp/complexbf.hpp"
#include "eishyp/family_spec.hpp"
#include "eishyp/hyper_sum.hpp"

namespace eishyp {

struct FamilyEval {
  ComplexBF value;
  BigFloat tail_bound;  // propagated truncation bound over all sub-sums
  long terms = 0;       // hyperbolic terms evaluated in total
};

// One reduction line: rational coefficient times a hyperbolic single sum.
// Exposed so tests can probe the decomposition directly.
struct ReductionTerm {
  Rational c;
  HyperSumSpec sum;
};

struct Reduction {
  Rational pref;         // rational prefactor, pi^pi_pow split off
  int pi_pow = 0;
  bool imaginary_unit = false;  // whole value carries a factor i
  std::vector<ReductionTerm> terms;
};

// Closed reduction of the double series to hyperbolic single sums.
Reduction reduce_family(const FamilySpec& spec,
                        OddLineArg odd_arg = OddLineArg::half_spacing);

// Evaluate the reduction. The result is real for the even-line kinds and
// for plain_odd, purely imaginary for alternating_odd.
FamilyEval eval_family(const FamilySpec& spec, mpfr_prec_t prec,
                       OddLineArg odd_arg = OddLineArg::half_spacing);

}  // namespace eishyp
