#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace eishyp {

// Exact rational scalar. GMP's mpq_class keeps values in lowest terms with a
// positive denominator as long as every value is canonicalized on entry;
// arithmetic preserves the invariant. Always build values through the helpers
// below, never through the raw two-argument mpq_class constructor.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den = 1) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "n", "-n", "n/d"; whitespace is not tolerated.
inline Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("rational_from_string: bad literal '" + s + "'");
  }
  if (q.get_den() == 0)
    throw std::invalid_argument("rational_from_string: bad denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline BigInt factorial_z(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

// Out-of-range indices give 0, matching the convention used by the closed
// derivative formulas (a binomial past the row simply drops the term).
inline BigInt binomial_z(long n, long k) {
  if (k < 0 || k > n || n < 0) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

inline Rational pow_rational(const Rational& q, long e) {
  if (e == 0) return Rational(1);
  if (q == 0 && e < 0) throw std::domain_error("pow_rational: 0^negative");
  Rational num, den;
  unsigned long ae = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(num.get_num_mpz_t(), q.get_num_mpz_t(), ae);
  mpz_pow_ui(num.get_den_mpz_t(), q.get_den_mpz_t(), ae);
  num.canonicalize();
  if (e > 0) return num;
  den = Rational(num.get_den(), num.get_num());
  den.canonicalize();
  return den;
}

}  // namespace eishyp
