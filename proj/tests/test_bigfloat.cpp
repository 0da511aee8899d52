#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eishyp/bigfloat.hpp"
#include "eishyp/complexbf.hpp"

using namespace eishyp;

TEST_CASE("construction and comparison") {
  BigFloat a(3, 128);
  BigFloat b(make_rational(1, 3), 128);
  CHECK(a.to_double() == 3.0);
  CHECK((a * b).to_double() == doctest::Approx(1.0));
  CHECK(BigFloat("0.25", 64).to_double() == 0.25);
  CHECK_THROWS_AS(BigFloat("zzz", 64), std::invalid_argument);
  CHECK(BigFloat(-2, 64) < BigFloat(1, 64));
  CHECK(abs(BigFloat(-2, 64)) == BigFloat(2, 64));
  CHECK(BigFloat().is_zero());
}

TEST_CASE("constants") {
  mpfr_prec_t p = 512;
  BigFloat pi = const_pi(p);
  CHECK(abs(sin(pi)) <= two_pow(-500, 64));
  BigFloat r2 = const_sqrt2(p);
  CHECK(abs(r2 * r2 - BigFloat(2, p)) <= two_pow(-505, 64));
  // Gamma(1/4) = 3.6256099082219083119... and Gamma(1/4)^4 = 2 pi^3 / agm(1, sqrt2/... )
  BigFloat g = gamma_quarter(p);
  CHECK(g.to_double() == doctest::Approx(3.6256099082219083119).epsilon(1e-15));
  // Reflection-style cross-check: Gamma(1/4) Gamma(3/4) = pi sqrt2, with
  // Gamma(3/4) = pi sqrt2 / Gamma(1/4) tested through mpfr's own gamma.
  BigFloat x(p);
  mpfr_set_d(x.raw(), 0.25, MPFR_RNDN);
  mpfr_gamma(x.raw(), x.raw(), MPFR_RNDN);
  CHECK(abs(g - x) <= two_pow(-500, 64) * g);
}

TEST_CASE("two_pow and ldexp2") {
  CHECK(two_pow(-3, 64).to_double() == 0.125);
  CHECK(ldexp2(BigFloat(3, 64), 4).to_double() == 48.0);
  CHECK(ldexp2(BigFloat(3, 64), -1).to_double() == 1.5);
}

TEST_CASE("complex arithmetic") {
  mpfr_prec_t p = 128;
  ComplexBF i = ComplexBF::unit_i(p);
  ComplexBF z = ComplexBF{BigFloat(3, p), BigFloat(4, p)};
  CHECK(abs(z).to_double() == doctest::Approx(5.0));
  ComplexBF w = z * z.conj();
  CHECK(w.re.to_double() == doctest::Approx(25.0));
  CHECK(w.im.is_zero());
  CHECK((i * i).re.to_double() == doctest::Approx(-1.0));
  // pow_int with negative exponent inverts.
  ComplexBF q = pow_int(z, -2) * pow_int(z, 2);
  CHECK(q.re.to_double() == doctest::Approx(1.0));
  CHECK(q.im.to_double() == doctest::Approx(0.0).epsilon(1e-30));
}

TEST_CASE("string form") {
  BigFloat x(make_rational(1, 4), 128);
  std::string s = x.to_string(10);
  CHECK(s.find("0.25") != std::string::npos);
}
