#pragma once

#include <string>

#include "eishyp/rational.hpp"
#include "eishyp/weight.hpp"

namespace eishyp {

// The four double-series shapes over m + a n i with a weight on the real
// index m (m != 0, both signs; conditionally convergent cases are read as
// symmetric limits in n and in m):
//   alternating:     sum w(m) (-1)^n / (m + a n i)^p,      n over Z
//   plain:           sum w(m) / (m + a n i)^p,             n over Z
//   alternating_odd: sum w(m) (-1)^n / (m + a(2n+1) i)^p,  n over Z
//   plain_odd:       sum w(m) / (m + a(2n+1) i)^p,         n over Z
enum class FamilyKind { alternating, plain, alternating_odd, plain_odd };

// shifted replaces the real part by 2bm + b with m over all of Z (zero
// included) while keeping the alternating integer-line structure; it is
// only meaningful for kind == alternating with an even exponent.
struct FamilySpec {
  FamilyKind kind = FamilyKind::alternating;
  int exponent = 2;
  Rational a = Rational(1);
  WeightFn weight;
  bool shifted = false;
  Rational b = Rational(1);
};

// Kernel argument scale used by the odd-line reductions: half_spacing reads
// the hyperbolic argument as m pi/(2a), full_spacing as m pi/a. Only
// half_spacing reproduces the lattice; the other stays selectable so the
// verifier can demonstrate the separation.
enum class OddLineArg { half_spacing, full_spacing };

std::string family_kind_name(FamilyKind k);
FamilyKind family_kind_from_name(const std::string& name);

}  // namespace eishyp
