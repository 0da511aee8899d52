#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "eishyp/hyper_sum.hpp"

using namespace eishyp;

namespace {

// Brute-force reference at double precision with a fixed cutoff.
double brute(const HyperSumSpec& spec, long cutoff = 200) {
  double acc = 0;
  for (long m = 1; m <= cutoff; ++m) {
    double w = 0;
    switch (spec.combine) {
      case CombineMode::single: w = spec.weight.eval(m, 96).to_double(); break;
      case CombineMode::sum_pm:
        w = spec.weight.eval(m, 96).to_double() + spec.weight.eval(-m, 96).to_double();
        break;
      case CombineMode::diff_pm:
        w = spec.weight.eval(m, 96).to_double() - spec.weight.eval(-m, 96).to_double();
        break;
      case CombineMode::shift_pair:
        w = spec.weight.eval(m - 1, 96).to_double() + spec.weight.eval(-m, 96).to_double();
        break;
    }
    double x = 3.14159265358979323846 *
               (spec.arg_a.get_d() * double(m) + spec.arg_b.get_d());
    double k = 1;
    switch (spec.kernel) {
      case KernelKind::none: break;
      case KernelKind::csch_pow: k = std::pow(1.0 / std::sinh(x), spec.kernel_pow); break;
      case KernelKind::cosh_csch_pow:
        k = std::cosh(x) * std::pow(1.0 / std::sinh(x), spec.kernel_pow);
        break;
      case KernelKind::sech_pow: k = std::pow(1.0 / std::cosh(x), spec.kernel_pow); break;
      case KernelKind::sinh_sech_pow:
        k = std::sinh(x) * std::pow(1.0 / std::cosh(x), spec.kernel_pow);
        break;
    }
    acc += w * k;
  }
  return acc;
}

HyperSumSpec make(const char* w, CombineMode c, KernelKind k, int j, const Rational& aa,
                  const Rational& ab) {
  HyperSumSpec s;
  s.weight = WeightFn::parse(w);
  s.combine = c;
  s.kernel = k;
  s.kernel_pow = j;
  s.arg_a = aa;
  s.arg_b = ab;
  return s;
}

}  // namespace

TEST_CASE("plain weight sums against brute force") {
  for (const char* w : {"csch(1)^2", "sech(1)^4", "(-1)^m * sech(1) * csch(1)^2",
                        "csch(1,-1/2)^2", "m^4 * csch(1)"}) {
    HyperSumSpec s = make(w, CombineMode::single, KernelKind::none, 0, Rational(1), Rational(0));
    HyperSumResult r = sum_hyperbolic(s, 256);
    CHECK(r.value.to_double() == doctest::Approx(brute(s)).epsilon(1e-13));
    CHECK(r.tail_bound.to_double() <= std::abs(r.value.to_double()) * 1e-60 + 1e-300);
  }
}

TEST_CASE("kernel forms against brute force") {
  HyperSumSpec a = make("m^2 * csch(1)", CombineMode::diff_pm, KernelKind::csch_pow, 1,
                        Rational(1), Rational(0));
  CHECK(sum_hyperbolic(a, 192).value.to_double() == doctest::Approx(brute(a)).epsilon(1e-13));

  HyperSumSpec b = make("csch(1)^2", CombineMode::sum_pm, KernelKind::cosh_csch_pow, 2,
                        Rational(1), Rational(0));
  CHECK(sum_hyperbolic(b, 192).value.to_double() == doctest::Approx(brute(b)).epsilon(1e-13));

  HyperSumSpec c = make("sech(1)", CombineMode::diff_pm, KernelKind::sinh_sech_pow, 2,
                        make_rational(1, 1), Rational(0));
  CHECK(sum_hyperbolic(c, 192).value.to_double() == doctest::Approx(brute(c)).epsilon(1e-13));

  HyperSumSpec d = make("sech(1,1/2)", CombineMode::shift_pair, KernelKind::cosh_csch_pow, 2,
                        make_rational(1, 1), make_rational(-1, 2));
  CHECK(sum_hyperbolic(d, 192).value.to_double() == doctest::Approx(brute(d)).epsilon(1e-13));

  HyperSumSpec e = make("csch(1)", CombineMode::sum_pm, KernelKind::sech_pow, 3,
                        make_rational(1, 2), Rational(0));
  CHECK(sum_hyperbolic(e, 192).value.to_double() == doctest::Approx(brute(e)).epsilon(1e-13));
}

TEST_CASE("parity shortcut gives exact zero") {
  // Even combined weight under diff_pm vanishes identically.
  HyperSumSpec s = make("csch(1)^2", CombineMode::diff_pm, KernelKind::csch_pow, 2,
                        Rational(1), Rational(0));
  HyperSumResult r = sum_hyperbolic(s, 256);
  CHECK(r.value.is_zero());
  CHECK(r.tail_bound.is_zero());
  // Odd combined weight under sum_pm likewise.
  HyperSumSpec t = make("m^2 * csch(1)", CombineMode::sum_pm, KernelKind::none, 0,
                        Rational(1), Rational(0));
  CHECK(sum_hyperbolic(t, 256).value.is_zero());
}

TEST_CASE("tail bound is honest") {
  // Compare the 256-bit value against a 512-bit run of the same spec.
  HyperSumSpec s = make("m^2 * csch(1)", CombineMode::diff_pm, KernelKind::csch_pow, 2,
                        Rational(1), Rational(0));
  HyperSumResult lo = sum_hyperbolic(s, 256);
  HyperSumResult hi = sum_hyperbolic(s, 512);
  CHECK(abs(lo.value - hi.value).to_double() <=
        lo.tail_bound.to_double() + std::ldexp(std::abs(hi.value.to_double()), -240));
}

TEST_CASE("no decay is rejected") {
  // coth alone does not decay; the majorant must refuse it.
  HyperSumSpec s = make("coth(1)", CombineMode::single, KernelKind::none, 0, Rational(1),
                        Rational(0));
  CHECK_THROWS_AS(sum_hyperbolic(s, 128), std::invalid_argument);
}

TEST_CASE("precision scales") {
  // Same spec at increasing precision: values agree to the coarser precision.
  HyperSumSpec s = make("sech(1)^2", CombineMode::single, KernelKind::none, 0, Rational(1),
                        Rational(0));
  BigFloat v1 = sum_hyperbolic(s, 128).value;
  BigFloat v2 = sum_hyperbolic(s, 320).value;
  CHECK(abs(v1 - v2).to_double() <= std::ldexp(1.0, -120));
}
