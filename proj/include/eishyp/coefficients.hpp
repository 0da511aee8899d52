#pragma once

#include "eishyp/rational.hpp"

namespace eishyp {

// Weak-composition power sum
//   S^{(m)}_l(k-l) = sum over r_0+...+r_l = k-l, r_h >= 0, of
//                    prod_{h=0}^{l} (2m+2h-1)^{2 r_h}.
// Enumeration is lexicographic in (r_0, ..., r_l). Integer-valued.
// Requires 0 <= l <= k and m >= 1.
Rational composition_power_sum(int k, int l, int m = 1);

// A_{k,m}(l) = (-1)^{k-l} ((2m+2l-2)!/(2m-2)!) S^{(m)}_l(k-l) for 0 <= l <= k,
// and 0 for l > k. Memoized; safe to call concurrently.
Rational coefficient_A(int k, int m, int l);

// Same values through the two-term recurrence
//   A_{k,m}(l) = (2m+2l-3)(2m+2l-2) A_{k-1,m}(l-1) - (2m+2l-1)^2 A_{k-1,m}(l)
// with A_{0,m}(0) = 1 and A vanishing outside 0 <= l <= k. Kept as an
// independent route; never calls coefficient_A.
Rational coefficient_A_recurrence(int k, int m, int l);

// Normalized lower-triangular matrix entries (the pi^{2k}/a^{2k} layer is
// stripped so the entries are pure rationals), 1 <= l <= k:
//   a_norm(k,l) = (2l-1) (-1)^{k+l} A_{k-1,1}(l-1) / (2k-1)!
//   b_norm(k,l) = ((-1)^l/(2k-1)!) sum_{j=l}^{k}
//                 ( C(2k,2j)/(2l) - C(2k,2j+1)(2l+1)/(2l) ) (-1)^j A_{j,1}(l)
// Diagonals are 1; a_norm(2,1) = 1/6, b_norm(2,1) = 2/3.
Rational a_coeff_norm(int k, int l);
Rational b_coeff_norm(int k, int l);

}  // namespace eishyp
