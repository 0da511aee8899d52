#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "eishyp/weight.hpp"

using namespace eishyp;

namespace {
double ref_eval(const WeightFn& w, long m) { return w.eval(m, 128).to_double(); }
}  // namespace

TEST_CASE("parse and evaluate") {
  WeightFn w = WeightFn::parse("m^2 * csch(1)");
  CHECK(w.m_power == 2);
  REQUIRE(w.hyp.size() == 1);
  CHECK(w.hyp[0].kind == HypKind::csch);
  CHECK(ref_eval(w, 2) == doctest::Approx(4.0 / std::sinh(2 * 3.14159265358979323846)));

  WeightFn a = WeightFn::parse("(-1)^m * sech(1)");
  CHECK(a.alternating);
  CHECK(ref_eval(a, 1) == doctest::Approx(-1.0 / std::cosh(3.14159265358979323846)));
  CHECK(ref_eval(a, 2) == doctest::Approx(1.0 / std::cosh(2 * 3.14159265358979323846)));

  WeightFn h = WeightFn::parse("sech(1,1/2)");
  CHECK(ref_eval(h, 0) == doctest::Approx(1.0 / std::cosh(0.5 * 3.14159265358979323846)));
  CHECK(ref_eval(h, -1) == doctest::Approx(1.0 / std::cosh(-0.5 * 3.14159265358979323846)));

  WeightFn s = WeightFn::parse("-3/2 * m * tanh(2)^3");
  CHECK(s.scalar == make_rational(-3, 2));
  CHECK(ref_eval(s, 1) ==
        doctest::Approx(-1.5 * std::pow(std::tanh(2 * 3.14159265358979323846), 3)));
}

TEST_CASE("round trip") {
  for (const char* text : {"csch(1)^2", "m^2 * csch(1)", "(-1)^m * sech(1) * csch(1)^4",
                           "csch(1,-1/2)^2", "sech(1,1/2)^3", "-1 * (-1)^m * csch(1)^2"}) {
    WeightFn w = WeightFn::parse(text);
    WeightFn w2 = WeightFn::parse(w.to_string());
    CHECK(w.to_string() == w2.to_string());
    for (long m : {1L, 2L, 5L})
      CHECK(ref_eval(w, m) == doctest::Approx(ref_eval(w2, m)).epsilon(1e-14));
  }
}

TEST_CASE("parity") {
  CHECK(WeightFn::parse("csch(1)^2").parity() == 1);
  CHECK(WeightFn::parse("csch(1)").parity() == -1);
  CHECK(WeightFn::parse("m * csch(1)").parity() == 1);
  CHECK(WeightFn::parse("m^2 * csch(1)").parity() == -1);
  CHECK(WeightFn::parse("(-1)^m * sech(1)").parity() == 1);
  CHECK(WeightFn::parse("m * coth(1) * sech(1)").parity() == 1);
  CHECK(WeightFn::parse("m^2 * coth(1) * sech(1)").parity() == -1);
  CHECK(WeightFn::parse("sech(1,1/2)").parity() == 0);
  // Numeric agreement with the declared parity.
  for (const char* text : {"csch(1)", "m * csch(1)", "m^3 * sech(1)^2", "coth(2) * csch(1)"}) {
    WeightFn w = WeightFn::parse(text);
    int p = w.parity();
    REQUIRE(p != 0);
    for (long m : {1L, 3L, 4L})
      CHECK(ref_eval(w, -m) == doctest::Approx(p * ref_eval(w, m)));
  }
}

TEST_CASE("zero and poles") {
  WeightFn w = WeightFn::parse("m^2 * csch(1)");
  CHECK(w.eval(0, 128).is_zero());
  CHECK_THROWS_AS(WeightFn::parse("csch(1)").eval(0, 128), std::domain_error);
  CHECK_THROWS_AS(WeightFn::parse("coth(1)").eval(0, 128), std::domain_error);
  CHECK(WeightFn::parse("sech(1)").eval(0, 128).to_double() == doctest::Approx(1.0));
  // Offset moving the pole off zero.
  CHECK(WeightFn::parse("csch(1,-1/2)").eval(0, 128).to_double() ==
        doctest::Approx(-1.0 / std::sinh(0.5 * 3.14159265358979323846)));
}

TEST_CASE("decay bound") {
  WeightFn w = WeightFn::parse("m^2 * csch(1)");
  DecayBound d = w.decay();
  CHECK(d.deg == 2);
  CHECK(d.rho == 1);
  CHECK(WeightFn::parse("sech(1)^2").decay().rho == 2);
  CHECK(WeightFn::parse("csch(2) * sech(1)").decay().rho == 3);
  CHECK(WeightFn::parse("coth(1)").decay().rho == 0);
  // The bound actually majorizes on a sample range.
  for (const char* text : {"m^2 * csch(1)", "sech(1)^2", "m^4 * sech(1) * coth(1)"}) {
    WeightFn f = WeightFn::parse(text);
    DecayBound b = f.decay();
    double rho = b.rho.get_d();
    for (long m = 1; m <= 12; ++m) {
      double bound = std::exp(b.log_c) * std::pow(double(m), b.deg) *
                     std::exp(-rho * 3.14159265358979323846 * double(m));
      CHECK(std::abs(ref_eval(f, m)) <= bound * (1 + 1e-12));
    }
  }
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(WeightFn::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(WeightFn::parse("bogus(1)"), std::invalid_argument);
  CHECK_THROWS_AS(WeightFn::parse("csch(0)"), std::invalid_argument);
  CHECK_THROWS_AS(WeightFn::parse("csch(-1)"), std::invalid_argument);
  CHECK_THROWS_AS(WeightFn::parse("csch(1)^0"), std::invalid_argument);
  CHECK_THROWS_AS(WeightFn::parse("m^2 csch(1)"), std::invalid_argument);
  CHECK_THROWS_AS(WeightFn::parse("csch(1) *"), std::invalid_argument);
}
