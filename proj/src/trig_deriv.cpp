#include "eishyp/trig_deriv.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "eishyp/coefficients.hpp"

namespace eishyp {

namespace {

// One term of a closed derivative formula, before the global pi^order factor:
//   c * numer^{with_numer} / denom^{inv_pow}
// where denom is sin for the sin family and cos for the cos family, and numer
// is the opposite function.
struct FormulaTerm {
  Rational c;
  int inv_pow;
  bool with_numer;
};

bool sin_family(TrigBase b) { return b == TrigBase::csc_odd_power || b == TrigBase::cot; }

std::vector<FormulaTerm> build_terms(TrigKind kind, int order) {
  std::vector<FormulaTerm> out;
  const int n = order;
  switch (kind.base) {
    case TrigBase::csc_odd_power: {
      const int m = kind.m;
      const BigInt fac_base = factorial_z(static_cast<unsigned long>(2 * m - 2));
      if (n % 2 == 0) {
        const int k = n / 2;
        for (int l = 0; l <= k; ++l)
          out.push_back({coefficient_A(k, m, l), 2 * m + 2 * l - 1, false});
      } else {
        const int k = (n - 1) / 2;
        for (int l = 0; l <= k; ++l) {
          Rational c = Rational(factorial_z(static_cast<unsigned long>(2 * m + 2 * l - 1)) / fac_base) *
                       composition_power_sum(k, l, m);
          if ((k + 1 - l) % 2 != 0) c = -c;
          out.push_back({c, 2 * m + 2 * l, true});
        }
      }
      break;
    }
    case TrigBase::cot:
    case TrigBase::tan: {
      const bool is_tan = kind.base == TrigBase::tan;
      if (n % 2 == 0) {
        const int k = n / 2;
        for (int l = 0; l <= k; ++l) {
          Rational c(0);
          for (int j = l; j <= k; ++j) {
            Rational brace = Rational(binomial_z(2 * k, 2 * j) * factorial_z(2 * l)) -
                             Rational(binomial_z(2 * k, 2 * j + 1) * factorial_z(2 * l + 1));
            c += brace * composition_power_sum(j, l, 1);
          }
          if ((k - l) % 2 != 0) c = -c;
          if (c != 0) out.push_back({c, 2 * l + 1, true});
        }
      } else {
        const int k = (n - 1) / 2;
        for (int l = 1; l <= k + 1; ++l) {
          Rational c(0);
          for (int j = l; j <= k + 1; ++j) {
            Rational brace =
                Rational(binomial_z(2 * k + 2, 2 * j) * factorial_z(2 * l - 1)) -
                Rational(binomial_z(2 * k + 2, 2 * j + 1) * factorial_z(2 * l - 1) * BigInt(2 * l + 1));
            c += brace * composition_power_sum(j, l, 1);
          }
          bool neg = ((k - l) % 2 + 2) % 2 != 0;
          if (is_tan) neg = !neg;  // odd tan carries the opposite sign pattern
          if (neg) c = -c;
          if (c != 0) out.push_back({c, 2 * l, false});
        }
      }
      break;
    }
    case TrigBase::sec: {
      if (n % 2 == 0) {
        const int k = n / 2;
        for (int l = 0; l <= k; ++l) {
          Rational c = Rational(factorial_z(2 * l)) * composition_power_sum(k, l, 1);
          if ((k - l) % 2 != 0) c = -c;
          out.push_back({c, 2 * l + 1, false});
        }
      } else {
        const int k = (n - 1) / 2;
        for (int l = 0; l <= k; ++l) {
          Rational c = Rational(factorial_z(2 * l + 1)) * composition_power_sum(k, l, 1);
          if ((k - l) % 2 != 0) c = -c;
          out.push_back({c, 2 * l + 2, true});
        }
      }
      break;
    }
  }
  return out;
}

std::mutex g_terms_mu;
std::map<std::tuple<int, int, int>, std::vector<FormulaTerm>> g_terms_cache;

const std::vector<FormulaTerm>& cached_terms(TrigKind kind, int order) {
  const auto key = std::make_tuple(static_cast<int>(kind.base), kind.base == TrigBase::csc_odd_power ? kind.m : 1,
                                   order);
  std::lock_guard<std::mutex> lk(g_terms_mu);
  auto it = g_terms_cache.find(key);
  if (it == g_terms_cache.end()) it = g_terms_cache.emplace(key, build_terms(kind, order)).first;
  return it->second;
}

void check_kind(TrigKind kind, int order) {
  if (order < 0) throw std::invalid_argument("derivative order must be >= 0");
  if (kind.base == TrigBase::csc_odd_power && kind.m < 1)
    throw std::invalid_argument("csc_odd_power needs m >= 1");
}

void check_pole(TrigKind kind, const ComplexBF& s, mpfr_prec_t prec) {
  BigFloat d = pole_distance(kind, s, prec);
  BigFloat thr = two_pow(-static_cast<long>(prec) / 4, prec);
  if (d < thr) throw std::domain_error("evaluation point too close to a pole");
}

// ---- truncated Taylor arithmetic over ComplexBF ----

struct CSeries {
  std::vector<ComplexBF> c;

  static CSeries mul(const CSeries& a, const CSeries& b, size_t n, mpfr_prec_t wp) {
    CSeries r;
    r.c.assign(n, ComplexBF(wp));
    for (size_t i = 0; i < a.c.size() && i < n; ++i)
      for (size_t j = 0; j + i < n && j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    return r;
  }

  // 1/a given a.c[0] != 0, standard convolution recurrence.
  static CSeries recip(const CSeries& a, size_t n, mpfr_prec_t wp) {
    CSeries r;
    r.c.assign(n, ComplexBF(wp));
    ComplexBF inv0 = ComplexBF(1L, wp) / a.c[0];
    r.c[0] = inv0;
    for (size_t i = 1; i < n; ++i) {
      ComplexBF acc(wp);
      for (size_t j = 1; j <= i && j < a.c.size(); ++j) acc += a.c[j] * r.c[i - j];
      r.c[i] = -(inv0 * acc);
    }
    return r;
  }

  static CSeries pow(const CSeries& a, int e, size_t n, mpfr_prec_t wp) {
    CSeries r;
    r.c.assign(n, ComplexBF(wp));
    r.c[0] = ComplexBF(1L, wp);
    CSeries base = a;
    int k = e;
    while (k) {
      if (k & 1) r = mul(r, base, n, wp);
      base = mul(base, base, n, wp);
      k >>= 1;
    }
    return r;
  }
};

}  // namespace

ComplexBF sin_pi(const ComplexBF& s, mpfr_prec_t prec) {
  BigFloat pi = const_pi(prec);
  BigFloat x = pi * s.re, y = pi * s.im;
  return {sin(x) * cosh(y), cos(x) * sinh(y)};
}

ComplexBF cos_pi(const ComplexBF& s, mpfr_prec_t prec) {
  BigFloat pi = const_pi(prec);
  BigFloat x = pi * s.re, y = pi * s.im;
  return {cos(x) * cosh(y), -(sin(x) * sinh(y))};
}

BigFloat pole_distance(TrigKind kind, const ComplexBF& s, mpfr_prec_t prec) {
  // Poles sit at integers (sin family) or half-integers (cos family) on the
  // real axis.
  BigFloat x(prec);
  mpfr_set(x.raw(), s.re.raw(), MPFR_RNDN);
  if (!sin_family(kind.base)) x += ldexp2(BigFloat(1L, prec), -1);
  BigFloat dx = x - round_nearest(x);
  BigFloat y(prec);
  mpfr_set(y.raw(), s.im.raw(), MPFR_RNDN);
  return sqrt(dx * dx + y * y);
}

ComplexBF deriv_formula(TrigKind kind, int order, const ComplexBF& s, mpfr_prec_t prec) {
  check_kind(kind, order);
  check_pole(kind, s, prec);
  const mpfr_prec_t wp = prec + 64;
  ComplexBF sw{BigFloat(wp), BigFloat(wp)};
  mpfr_set(sw.re.raw(), s.re.raw(), MPFR_RNDN);
  mpfr_set(sw.im.raw(), s.im.raw(), MPFR_RNDN);

  const bool sinf = sin_family(kind.base);
  ComplexBF den = sinf ? sin_pi(sw, wp) : cos_pi(sw, wp);
  ComplexBF num = sinf ? cos_pi(sw, wp) : sin_pi(sw, wp);
  ComplexBF inv_den = ComplexBF(1L, wp) / den;

  const auto& terms = cached_terms(kind, order);
  // Terms share inverse powers; evaluate by ascending inv_pow reusing powers.
  ComplexBF acc(wp);
  for (const auto& t : terms) {
    ComplexBF v = pow_int(inv_den, t.inv_pow);
    if (t.with_numer) v = v * num;
    acc += BigFloat(t.c, wp) * v;
  }
  if (order > 0) acc = pow_si(const_pi(wp), order) * acc;
  ComplexBF out(prec);
  mpfr_set(out.re.raw(), acc.re.raw(), MPFR_RNDN);
  mpfr_set(out.im.raw(), acc.im.raw(), MPFR_RNDN);
  return out;
}

ComplexBF deriv_oracle(TrigKind kind, int order, const ComplexBF& s, mpfr_prec_t prec) {
  check_kind(kind, order);
  check_pole(kind, s, prec);
  const mpfr_prec_t wp = prec + 64;
  const size_t n = static_cast<size_t>(order) + 9;  // requested order + 8 guard
  ComplexBF sw{BigFloat(wp), BigFloat(wp)};
  mpfr_set(sw.re.raw(), s.re.raw(), MPFR_RNDN);
  mpfr_set(sw.im.raw(), s.im.raw(), MPFR_RNDN);

  // sin(pi(s+t)) = sum_j (pi^j/j!) t^j * cycle(sin, cos, -sin, -cos)(pi s)
  ComplexBF s0 = sin_pi(sw, wp), c0 = cos_pi(sw, wp);
  BigFloat pi = const_pi(wp);
  CSeries sinser, cosser;
  sinser.c.assign(n, ComplexBF(wp));
  cosser.c.assign(n, ComplexBF(wp));
  BigFloat scale(1L, wp);
  for (size_t j = 0; j < n; ++j) {
    if (j > 0) scale = scale * pi / BigFloat(static_cast<long>(j), wp);
    const ComplexBF* sv;
    const ComplexBF* cv;
    ComplexBF ns0 = -s0, nc0 = -c0;
    switch (j % 4) {
      case 0: sv = &s0; cv = &c0; break;
      case 1: sv = &c0; cv = &ns0; break;
      case 2: sv = &ns0; cv = &nc0; break;
      default: sv = &nc0; cv = &s0; break;
    }
    sinser.c[j] = scale * (*sv);
    cosser.c[j] = scale * (*cv);
  }

  CSeries f;
  switch (kind.base) {
    case TrigBase::csc_odd_power:
      f = CSeries::pow(CSeries::recip(sinser, n, wp), 2 * kind.m - 1, n, wp);
      break;
    case TrigBase::cot:
      f = CSeries::mul(cosser, CSeries::recip(sinser, n, wp), n, wp);
      break;
    case TrigBase::sec:
      f = CSeries::recip(cosser, n, wp);
      break;
    case TrigBase::tan:
      f = CSeries::mul(sinser, CSeries::recip(cosser, n, wp), n, wp);
      break;
  }

  BigFloat fac(1L, wp);
  for (int j = 2; j <= order; ++j) fac *= BigFloat(static_cast<long>(j), wp);
  ComplexBF acc = fac * f.c[static_cast<size_t>(order)];
  ComplexBF out(prec);
  mpfr_set(out.re.raw(), acc.re.raw(), MPFR_RNDN);
  mpfr_set(out.im.raw(), acc.im.raw(), MPFR_RNDN);
  return out;
}

}  // namespace eishyp
