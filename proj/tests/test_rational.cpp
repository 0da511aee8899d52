#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eishyp/rational.hpp"

using namespace eishyp;

TEST_CASE("make_rational canonicalizes") {
  CHECK(make_rational(2, 4) == make_rational(1, 2));
  CHECK(make_rational(-3, -6) == make_rational(1, 2));
  CHECK(make_rational(3, -6) == make_rational(-1, 2));
  CHECK(make_rational(0, 7) == 0);
  CHECK(make_rational(2, 4).get_den() == 2);
  CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("rational_from_string") {
  CHECK(rational_from_string("5") == 5);
  CHECK(rational_from_string("-7/21") == make_rational(-1, 3));
  CHECK(to_string(rational_from_string("6/4")) == "3/2");
  CHECK_THROWS_AS(rational_from_string("abc"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial_z(0) == 1);
  CHECK(factorial_z(10) == 3628800);
  CHECK(binomial_z(10, 3) == 120);
  CHECK(binomial_z(10, 0) == 1);
  CHECK(binomial_z(10, 11) == 0);
  CHECK(binomial_z(10, -1) == 0);
  CHECK(binomial_z(-2, 0) == 0);
  // Pascal rule across a block of rows.
  for (long n = 1; n <= 24; ++n)
    for (long k = 0; k <= n; ++k)
      CHECK(binomial_z(n, k) == binomial_z(n - 1, k - 1) + binomial_z(n - 1, k));
}

TEST_CASE("pow_rational") {
  Rational q = make_rational(2, 3);
  CHECK(pow_rational(q, 0) == 1);
  CHECK(pow_rational(q, 3) == make_rational(8, 27));
  CHECK(pow_rational(q, -2) == make_rational(9, 4));
  CHECK(pow_rational(make_rational(-1, 2), 3) == make_rational(-1, 8));
  CHECK(pow_rational(make_rational(-1, 2), -3) == make_rational(-8, 1));
  CHECK_THROWS_AS(pow_rational(Rational(0), -1), std::domain_error);
  // x^a * x^b == x^(a+b) over a sign-mixed grid.
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b)
      CHECK(pow_rational(q, a) * pow_rational(q, b) == pow_rational(q, a + b));
}
