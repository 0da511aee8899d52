#include "eishyp/bigfloat.hpp"

#include <map>
#include <mutex>
#include <vector>

namespace eishyp {

namespace {
mpfr_prec_t max_prec(const BigFloat& a, const BigFloat& b) {
  return a.prec() > b.prec() ? a.prec() : b.prec();
}
}  // namespace

std::string BigFloat::to_string(size_t digits) const {
  if (digits == 0) {
    // ceil(prec * log10(2)) + 2 guard digits
    digits = static_cast<size_t>(static_cast<double>(prec()) * 0.30103) + 3;
  }
  mpfr_exp_t e;
  char* s = mpfr_get_str(nullptr, &e, 10, digits, x_, MPFR_RNDN);
  std::string mant(s);
  mpfr_free_str(s);
  bool neg = !mant.empty() && mant[0] == '-';
  std::string d = neg ? mant.substr(1) : mant;
  std::string out = neg ? "-" : "";
  if (mpfr_zero_p(x_)) return "0";
  out += "0." + d + "e" + std::to_string(static_cast<long>(e));
  return out;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}
BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}
BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}
BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(max_prec(a, b));
  mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN);
  return r;
}
BigFloat BigFloat::operator-() const {
  BigFloat r(prec());
  mpfr_neg(r.x_, x_, MPFR_RNDN);
  return r;
}

#define EISHYP_UNARY(name, fn)               \
  BigFloat name(const BigFloat& a) {         \
    BigFloat r(a.prec());                    \
    fn(r.raw(), a.raw(), MPFR_RNDN);         \
    return r;                                \
  }
EISHYP_UNARY(abs, mpfr_abs)
EISHYP_UNARY(sqrt, mpfr_sqrt)
EISHYP_UNARY(exp, mpfr_exp)
EISHYP_UNARY(log, mpfr_log)
EISHYP_UNARY(sin, mpfr_sin)
EISHYP_UNARY(cos, mpfr_cos)
EISHYP_UNARY(sinh, mpfr_sinh)
EISHYP_UNARY(cosh, mpfr_cosh)
#undef EISHYP_UNARY

BigFloat pow_si(const BigFloat& a, long e) {
  BigFloat r(a.prec());
  mpfr_pow_si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}

BigFloat ldexp2(const BigFloat& a, long e) {
  BigFloat r(a.prec());
  mpfr_mul_2si(r.raw(), a.raw(), e, MPFR_RNDN);
  return r;
}

BigFloat round_nearest(const BigFloat& a) {
  BigFloat r(a.prec());
  mpfr_rint(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

BigFloat two_pow(long e, mpfr_prec_t prec) {
  BigFloat r(1L, prec);
  return ldexp2(r, e);
}

namespace {
std::mutex g_const_mu;
std::map<mpfr_prec_t, BigFloat> g_gamma_cache;
}  // namespace

BigFloat const_pi(mpfr_prec_t prec) {
  BigFloat r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);  // MPFR caches internally
  return r;
}

BigFloat const_sqrt2(mpfr_prec_t prec) {
  BigFloat two(2L, prec);
  return sqrt(two);
}

BigFloat gamma_quarter(mpfr_prec_t prec) {
  {
    std::lock_guard<std::mutex> lk(g_const_mu);
    auto it = g_gamma_cache.find(prec);
    if (it != g_gamma_cache.end()) return it->second;
  }
  // agm iteration converges quadratically; 32 guard bits absorb the rounding
  // of the handful of iterations and the closing sqrt/div.
  const mpfr_prec_t wp = prec + 32;
  BigFloat a(1L, wp), b = const_sqrt2(wp);
  BigFloat half = ldexp2(BigFloat(1L, wp), -1);
  BigFloat eps = two_pow(-static_cast<long>(prec) - 16, wp);
  for (int i = 0; i < 64; ++i) {
    BigFloat an = (a + b) * half;
    BigFloat bn = sqrt(a * b);
    a = an;
    b = bn;
    if (abs(a - b) <= eps * abs(a)) break;
  }
  BigFloat pi = const_pi(wp);
  BigFloat varpi = pi / a;
  BigFloat g2 = BigFloat(2L, wp) * sqrt(BigFloat(2L, wp) * pi) * varpi;
  BigFloat g = sqrt(g2);
  BigFloat out(prec);
  mpfr_set(out.raw(), g.raw(), MPFR_RNDN);
  std::lock_guard<std::mutex> lk(g_const_mu);
  g_gamma_cache.emplace(prec, out);
  return out;
}

}  // namespace eishyp
