#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "eishyp/family.hpp"
#include "eishyp/lattice.hpp"

using namespace eishyp;

namespace {
FamilySpec spec_of(FamilyKind kind, int p, const Rational& a, const char* w) {
  FamilySpec s;
  s.kind = kind;
  s.exponent = p;
  s.a = a;
  s.weight = WeightFn::parse(w);
  return s;
}
}  // namespace

TEST_CASE("direct sum meets the reduction") {
  // The two routes share no code beyond the weight evaluator.
  struct Case {
    FamilyKind kind;
    int p;
    const char* a;
    const char* w;
    bool imag;
  };
  const Case cases[] = {
      {FamilyKind::alternating, 1, "1", "m^2 * csch(1)", false},
      {FamilyKind::alternating, 1, "1", "m^4 * csch(1)", false},
      {FamilyKind::plain, 2, "1", "csch(1)^2", false},
      {FamilyKind::plain, 2, "2", "m^2 * sech(1/2)^2", false},
      {FamilyKind::plain, 4, "1", "(-1)^m * sech(1)", false},
      {FamilyKind::alternating_odd, 2, "1/2", "csch(1)", true},
      {FamilyKind::alternating_odd, 1, "1/2", "m^2 * sech(1)", true},
      {FamilyKind::plain_odd, 2, "1", "csch(1/2)^2", false},
      {FamilyKind::plain_odd, 4, "1/2", "sech(1)^2", false},
  };
  LatticeTruncation trunc{25, 1500};
  for (const Case& c : cases) {
    CAPTURE(c.w);
    FamilySpec s = spec_of(c.kind, c.p, rational_from_string(c.a), c.w);
    ComplexBF series = eval_family(s, 192).value;
    LatticeResult lat = eval_double_sum(s, trunc);
    double got = c.imag ? lat.value.im.to_double() : lat.value.re.to_double();
    double want = c.imag ? series.im.to_double() : series.re.to_double();
    CHECK(std::abs(got - want) <= 1e-5);
    CHECK(lat.terms > 0);
    // The reported estimate is a usable scale for the actual error.
    CHECK(std::abs(got - want) <= 100 * lat.error_estimate + 1e-9);
  }
}

TEST_CASE("shifted lattice meets the reduction") {
  FamilySpec s = spec_of(FamilyKind::alternating, 2, Rational(2), "sech(1,1/2)");
  s.shifted = true;
  s.b = Rational(1);
  ComplexBF series = eval_family(s, 192).value;
  LatticeResult lat = eval_double_sum(s, LatticeTruncation{25, 1500});
  CHECK(std::abs(lat.value.re.to_double() - series.re.to_double()) <= 1e-5);
}

TEST_CASE("refinement shrinks the discrepancy") {
  FamilySpec s = spec_of(FamilyKind::alternating, 1, Rational(1), "m^2 * csch(1)");
  double truth = eval_family(s, 192).value.re.to_double();
  double prev = 1e9;
  for (long n : {200L, 800L, 3200L}) {
    LatticeResult lat = eval_double_sum(s, LatticeTruncation{20, n});
    double d = std::abs(lat.value.re.to_double() - truth);
    CHECK(d < prev);
    prev = d;
  }
}

TEST_CASE("budget enforcement") {
  FamilySpec s = spec_of(FamilyKind::plain, 2, Rational(1), "csch(1)^2");
  CHECK_THROWS_AS(eval_double_sum(s, LatticeTruncation{40, 10000}, 1000), BudgetExceeded);
}

TEST_CASE("input validation") {
  FamilySpec s = spec_of(FamilyKind::plain, 0, Rational(1), "csch(1)^2");
  CHECK_THROWS_AS(eval_double_sum(s, LatticeTruncation{10, 100}), std::invalid_argument);
  FamilySpec t = spec_of(FamilyKind::plain, 2, Rational(1), "csch(1)^2");
  CHECK_THROWS_AS(eval_double_sum(t, LatticeTruncation{10, 4}), std::invalid_argument);
  FamilySpec u = spec_of(FamilyKind::plain_odd, 2, Rational(1), "csch(1/2)^2");
  u.shifted = true;
  CHECK_THROWS_AS(eval_double_sum(u, LatticeTruncation{10, 100}), std::invalid_argument);
}
