#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "eishyp/trig_deriv.hpp"

using namespace eishyp;

namespace {

ComplexBF point(double re, double im, mpfr_prec_t prec = 256) {
  ComplexBF s{BigFloat(prec), BigFloat(prec)};
  mpfr_set_d(s.re.raw(), re, MPFR_RNDN);
  mpfr_set_d(s.im.raw(), im, MPFR_RNDN);
  return s;
}

double formula_re(TrigBase base, int m, int order, double re, double im = 0) {
  return deriv_formula(TrigKind{base, m}, order, point(re, im), 256).re.to_double();
}

}  // namespace

TEST_CASE("known exact values") {
  // cot(pi/4) = 1, tan(pi/4) = 1.
  CHECK(formula_re(TrigBase::cot, 1, 0, 0.25) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(formula_re(TrigBase::tan, 1, 0, 0.25) == doctest::Approx(1.0).epsilon(1e-15));
  // csc''(pi s) at s = 1/2 and sec''(pi s) at s = 0 both equal pi^2.
  const double pi2 = 9.869604401089358;
  CHECK(formula_re(TrigBase::csc_odd_power, 1, 2, 0.5) == doctest::Approx(pi2).epsilon(1e-15));
  CHECK(formula_re(TrigBase::sec, 1, 2, 0.0) == doctest::Approx(pi2).epsilon(1e-15));
  // cot' = -pi csc^2: at s = 1/4 that is -2 pi.
  CHECK(formula_re(TrigBase::cot, 1, 1, 0.25) ==
        doctest::Approx(-2 * 3.14159265358979324).epsilon(1e-15));
  // tan' = pi sec^2: at s = 0 that is pi.
  CHECK(formula_re(TrigBase::tan, 1, 1, 0.0) ==
        doctest::Approx(3.14159265358979324).epsilon(1e-15));
  // 1/sin^3 at s = 1/2 is 1; its second derivative there is 3 pi^2 + ...:
  // d^2/ds^2 sin^{-3} = pi^2 (12 sin^{-5} - 9 sin^{-3}), so 3 pi^2 at s = 1/2.
  CHECK(formula_re(TrigBase::csc_odd_power, 2, 2, 0.5) ==
        doctest::Approx(3 * pi2).epsilon(1e-15));
}

TEST_CASE("formula matches oracle at random complex points") {
  const mpfr_prec_t prec = 256;
  const BigFloat tol = two_pow(-240, 64);
  const BigFloat one(1, prec);
  std::mt19937_64 rng(0xfeedbeefu);
  auto uniform = [&] { return double(rng() >> 11) * 0x1.0p-53; };
  struct Kind {
    TrigBase base;
    int m;
  };
  const Kind kinds[] = {{TrigBase::cot, 1},          {TrigBase::sec, 1},
                        {TrigBase::tan, 1},          {TrigBase::csc_odd_power, 1},
                        {TrigBase::csc_odd_power, 2}, {TrigBase::csc_odd_power, 3}};
  for (int draw = 0; draw < 12; ++draw) {
    double u = uniform();
    double re = u < 0.5 ? 0.07 + 0.72 * u : 0.57 + 0.72 * (u - 0.5);
    double im = -0.4 + 0.8 * uniform();
    CAPTURE(re);
    CAPTURE(im);
    ComplexBF s = point(re, im);
    for (const Kind& kd : kinds)
      for (int order = 0; order <= 8; ++order) {
        ComplexBF a = deriv_formula(TrigKind{kd.base, kd.m}, order, s, prec);
        ComplexBF b = deriv_oracle(TrigKind{kd.base, kd.m}, order, s, prec);
        BigFloat scale = abs(a);
        if (scale < one) scale = one;
        CHECK(abs(a - b) <= tol * scale);
      }
  }
}

TEST_CASE("derivative of the derivative chains") {
  // Finite difference of order n against order n+1 at moderate precision.
  ComplexBF s = point(0.3, 0.1, 320);
  BigFloat h = two_pow(-40, 320);
  ComplexBF sp = s, sm = s;
  sp.re = sp.re + h;
  sm.re = sm.re - h;
  for (int order = 0; order <= 4; ++order) {
    ComplexBF fp = deriv_formula(TrigKind{TrigBase::cot, 1}, order, sp, 320);
    ComplexBF fm = deriv_formula(TrigKind{TrigBase::cot, 1}, order, sm, 320);
    ComplexBF want = deriv_formula(TrigKind{TrigBase::cot, 1}, order + 1, s, 320);
    ComplexBF got = (fp - fm) / ComplexBF{h + h, BigFloat(0L, 320)};
    // Central difference is O(h^2) accurate.
    CHECK(abs(got - want).to_double() <= 1e-20 * (1 + abs(want).to_double()));
  }
}

TEST_CASE("pole rejection") {
  CHECK_THROWS_AS(deriv_formula(TrigKind{TrigBase::cot, 1}, 0, point(1.0, 0.0), 256),
                  std::domain_error);
  CHECK_THROWS_AS(deriv_formula(TrigKind{TrigBase::csc_odd_power, 1}, 2, point(0.0, 0.0), 256),
                  std::domain_error);
  CHECK_THROWS_AS(deriv_formula(TrigKind{TrigBase::sec, 1}, 0, point(0.5, 0.0), 256),
                  std::domain_error);
  CHECK_THROWS_AS(deriv_formula(TrigKind{TrigBase::tan, 1}, 1, point(-0.5, 0.0), 256),
                  std::domain_error);
  // Near-pole guard: the 2^{-prec/4} exclusion disc widens at low precision.
  CHECK_THROWS_AS(deriv_formula(TrigKind{TrigBase::cot, 1}, 0, point(1e-10, 0.0), 64),
                  std::domain_error);
  CHECK_NOTHROW(deriv_formula(TrigKind{TrigBase::cot, 1}, 0, point(1e-10, 0.0), 256));
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(deriv_formula(TrigKind{TrigBase::cot, 1}, -1, point(0.25, 0.0), 256),
                  std::invalid_argument);
  CHECK_THROWS_AS(deriv_formula(TrigKind{TrigBase::csc_odd_power, 0}, 0, point(0.25, 0.0), 256),
                  std::invalid_argument);
}

TEST_CASE("pole distance") {
  BigFloat d = pole_distance(TrigKind{TrigBase::cot, 1}, point(0.25, 0.0), 128);
  CHECK(d.to_double() == doctest::Approx(0.25));
  BigFloat e = pole_distance(TrigKind{TrigBase::sec, 1}, point(0.25, 0.0), 128);
  CHECK(e.to_double() == doctest::Approx(0.25));
  BigFloat f = pole_distance(TrigKind{TrigBase::cot, 1}, point(0.0, 0.3), 128);
  CHECK(f.to_double() == doctest::Approx(0.3));
}
