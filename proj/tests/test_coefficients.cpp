#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "eishyp/coefficients.hpp"

using namespace eishyp;

TEST_CASE("composition power sums") {
  // Empty exponent budget: single all-zero composition, product 1.
  for (int l = 0; l <= 6; ++l) CHECK(composition_power_sum(l, l, 1) == 1);
  // l = 0: one part, S = (2m-1)^{2(k)}.
  CHECK(composition_power_sum(3, 0, 1) == 1);
  CHECK(composition_power_sum(3, 0, 2) == 729);
  // l = 1, k - l = 1: 1^2 + 3^2.
  CHECK(composition_power_sum(2, 1, 1) == 10);
  // l = 5, k - l = 1: sum of (2h+1)^2, h = 0..5.
  CHECK(composition_power_sum(6, 5, 1) == 286);
  CHECK_THROWS_AS(composition_power_sum(2, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(composition_power_sum(2, 1, 0), std::invalid_argument);
}

TEST_CASE("golden table") {
  std::ifstream f(std::string(EISHYP_DATA_DIR) + "/coeff_golden.txt");
  REQUIRE(f.good());
  std::string line;
  int rows = 0;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ss(line);
    std::string head;
    ss >> head;
    REQUIRE(head.rfind("l=", 0) == 0);
    int l = std::stoi(head.substr(2));
    for (int k = 0; k <= 7; ++k) {
      std::string v;
      REQUIRE((ss >> v));
      CHECK(coefficient_A(k, 1, l) == rational_from_string(v));
    }
    ++rows;
  }
  CHECK(rows == 6);
}

TEST_CASE("two routes agree") {
  for (int m = 1; m <= 3; ++m)
    for (int k = 0; k <= 8; ++k)
      for (int l = 0; l <= k; ++l)
        CHECK(coefficient_A(k, m, l) == coefficient_A_recurrence(k, m, l));
}

TEST_CASE("vanishing outside the triangle") {
  CHECK(coefficient_A(3, 1, 4) == 0);
  CHECK(coefficient_A_recurrence(3, 2, 5) == 0);
}

TEST_CASE("normalized matrix entries") {
  CHECK(a_coeff_norm(1, 1) == 1);
  CHECK(a_coeff_norm(2, 2) == 1);
  CHECK(a_coeff_norm(2, 1) == make_rational(1, 6));
  CHECK(b_coeff_norm(1, 1) == 1);
  CHECK(b_coeff_norm(2, 2) == 1);
  CHECK(b_coeff_norm(2, 1) == make_rational(2, 3));
  for (int k = 1; k <= 6; ++k) {
    CHECK(a_coeff_norm(k, k) == 1);
    CHECK(b_coeff_norm(k, k) == 1);
  }
}
