#pragma once

#include <string>
#include <vector>

#include "eishyp/bigfloat.hpp"
#include "eishyp/rational.hpp"

namespace eishyp {

// One term  coeff * (sqrt 2)^sqrt2_exp * pi^(pi_half_exp / 2) * Gamma(1/4)^gamma_exp.
// pi_half_exp counts half-powers of pi so pi^(5/2) is representable exactly.
struct ConstMonomial {
  Rational coeff;
  int sqrt2_exp = 0;
  int pi_half_exp = 0;
  int gamma_exp = 0;
};

// Exact element of the constant ring: a finite sum of monomials. Invariants
// after any operation: sqrt2_exp is 0 or 1 (even powers of sqrt 2 are folded
// into the rational coefficient), no zero coefficients, one monomial per
// (sqrt2_exp, pi_half_exp, gamma_exp) key, terms sorted by key. The empty sum
// is exact zero.
class ConstExpr {
 public:
  ConstExpr() = default;
  explicit ConstExpr(const Rational& q);
  explicit ConstExpr(const ConstMonomial& m);
  explicit ConstExpr(std::vector<ConstMonomial> terms);

  static ConstExpr zero() { return ConstExpr(); }

  const std::vector<ConstMonomial>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  friend ConstExpr operator+(const ConstExpr& a, const ConstExpr& b);
  friend ConstExpr operator-(const ConstExpr& a, const ConstExpr& b);
  friend ConstExpr operator*(const ConstExpr& a, const ConstExpr& b);
  ConstExpr operator-() const;
  ConstExpr scaled(const Rational& q) const;
  bool operator==(const ConstExpr& o) const;

  // Numeric value with relative error <= 2^-prec (work is done at prec + 64).
  // Exact zero evaluates to exact zero.
  BigFloat eval(mpfr_prec_t prec) const;

  // Catalog text form: monomials are "coeff sqrt2 pihalf gamma" joined by
  // " ; ", e.g. "-1/4 0 -2 0 ; 1/768 0 -10 8". parse() accepts any order and
  // normalizes.
  std::string to_catalog_string() const;
  static ConstExpr parse(const std::string& s);

 private:
  void normalize();
  std::vector<ConstMonomial> terms_;
};

}  // namespace eishyp
