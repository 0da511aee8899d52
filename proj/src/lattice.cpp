#include "eishyp/lattice.hpp"

#include <cmath>
#include <utility>

namespace eishyp {

namespace {

constexpr double kPi = 3.14159265358979323846;

double to_double(const Rational& r) { return mpq_class(r).get_d(); }

int neg_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

BigFloat atan_bf(const BigFloat& x) {
  BigFloat r(x.prec());
  mpfr_atan(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

// 2*Re or 2*Im of (z + a u i)^{-p} for a real line offset u.
BigFloat pair_term(const BigFloat& z, const Rational& a, long u, int p,
                   bool measure_im, mpfr_prec_t wp) {
  ComplexBF c(z, BigFloat(a * Rational(u), wp));
  ComplexBF w = pow_int(c, -p);
  BigFloat two(2L, wp);
  return measure_im ? two * w.im : two * w.re;
}

struct InnerOut {
  BigFloat v;      // the real measure of the line sum
  double err = 0.0;
  long points = 0;
};

// n over Z at spacing a: center z^{-p} plus paired wings. alt applies
// (-1)^n. Tail: Euler-Maclaurin (plain) or one averaging step (alternating).
InnerOut inner_even(const BigFloat& z, const Rational& a, int p, bool alt,
                    long Nn, mpfr_prec_t wp) {
  InnerOut out;
  out.v = pow_si(z, -p);
  out.points = 1;
  BigFloat last_h(wp);
  for (long n = 1; n <= Nn; ++n) {
    last_h = pair_term(z, a, n, p, false, wp);
    out.v += (alt && (n % 2 != 0)) ? -last_h : last_h;
  }
  out.points += 2 * Nn;
  double zd = z.to_double(), ad = to_double(a);
  if (alt) {
    BigFloat h1 = pair_term(z, a, Nn + 1, p, false, wp);
    BigFloat h2 = pair_term(z, a, Nn + 2, p, false, wp);
    out.v += ((Nn + 1) % 2 != 0) ? -ldexp2(h1, -1) : ldexp2(h1, -1);
    out.err += std::fabs((h1 - h2).to_double());
    out.points += 4;
  } else {
    if (p >= 2) {
      ComplexBF c(z, BigFloat(a * Rational(Nn), wp));
      ComplexBF w = pow_int(c, 1 - p);
      out.v += (BigFloat(2L, wp) / (BigFloat(a, wp) * BigFloat(p - 1, wp))) * w.im;
    } else {
      BigFloat arg = z / BigFloat(a * Rational(Nn), wp);
      out.v += (BigFloat(2L, wp) / BigFloat(a, wp)) * atan_bf(arg);
    }
    out.v -= ldexp2(last_h, -1);
    out.err += 2.0 * p * ad *
               std::pow(std::hypot(zd, ad * Nn), -(p + 1.0)) / 12.0;
    out.points += 2;
  }
  return out;
}

// n >= 0 at line offsets u = 2n+1, paired with -u. alt applies (-1)^n; the
// alternating measure is imaginary, the plain one real.
InnerOut inner_odd(const BigFloat& z, const Rational& a, int p, bool alt,
                   long Nn, mpfr_prec_t wp) {
  InnerOut out;
  out.v = BigFloat(0L, wp);
  BigFloat last_h(wp);
  for (long n = 0; n <= Nn; ++n) {
    last_h = pair_term(z, a, 2 * n + 1, p, alt, wp);
    out.v += (alt && (n % 2 != 0)) ? -last_h : last_h;
  }
  out.points += 2 * (Nn + 1);
  double zd = z.to_double(), ad = to_double(a);
  if (alt) {
    BigFloat h1 = pair_term(z, a, 2 * (Nn + 1) + 1, p, true, wp);
    BigFloat h2 = pair_term(z, a, 2 * (Nn + 2) + 1, p, true, wp);
    out.v += ((Nn + 1) % 2 != 0) ? -ldexp2(h1, -1) : ldexp2(h1, -1);
    out.err += std::fabs((h1 - h2).to_double());
    out.points += 4;
  } else {
    if (p >= 2) {
      ComplexBF c(z, BigFloat(a * Rational(2 * Nn + 1), wp));
      ComplexBF w = pow_int(c, 1 - p);
      out.v += (BigFloat(1L, wp) / (BigFloat(a, wp) * BigFloat(p - 1, wp))) * w.im;
    } else {
      BigFloat arg = z / BigFloat(a * Rational(2 * Nn + 1), wp);
      out.v += (BigFloat(1L, wp) / BigFloat(a, wp)) * atan_bf(arg);
    }
    out.v -= ldexp2(last_h, -1);
    out.err += 4.0 * p * ad *
               std::pow(std::hypot(zd, ad * (2.0 * Nn + 1)), -(p + 1.0)) / 12.0;
    out.points += 2;
  }
  return out;
}

}  // namespace

LatticeResult eval_double_sum(const FamilySpec& spec,
                              const LatticeTruncation& trunc, long budget,
                              mpfr_prec_t prec) {
  if (spec.exponent < 1)
    throw std::invalid_argument("lattice: exponent must be >= 1");
  if (spec.a <= 0) throw std::invalid_argument("lattice: a must be positive");
  if (trunc.Nm < 1 || trunc.Nn < 8)
    throw std::invalid_argument("lattice: cutoffs too small");
  if (spec.shifted &&
      (spec.kind != FamilyKind::alternating || spec.exponent % 2 != 0 ||
       spec.b <= 0))
    throw std::invalid_argument("lattice: bad shifted spec");

  const int p = spec.exponent;
  const mpfr_prec_t wp = prec;
  const bool odd_line = spec.kind == FamilyKind::alternating_odd ||
                        spec.kind == FamilyKind::plain_odd;
  const bool alt = spec.kind == FamilyKind::alternating ||
                   spec.kind == FamilyKind::alternating_odd;
  const int sgn = spec.kind == FamilyKind::alternating_odd ? -neg_pow(p)
                                                           : neg_pow(p);
  const long row_cost = 2 * trunc.Nn + 8;

  LatticeResult out;
  out.value = ComplexBF(wp);
  BigFloat acc(0L, wp);
  double err = 0.0;
  double last_row = 0.0;

  auto fold_row = [&](const BigFloat& cw, const BigFloat& z) {
    InnerOut in = odd_line ? inner_odd(z, spec.a, p, alt, trunc.Nn, wp)
                           : inner_even(z, spec.a, p, alt, trunc.Nn, wp);
    BigFloat contrib = cw * in.v;
    acc += contrib;
    double cwd = std::fabs(cw.to_double());
    err += cwd * in.err;
    last_row = std::fabs(contrib.to_double());
    out.terms += in.points;
  };

  if (spec.shifted) {
    for (long m = 0; m <= trunc.Nm; ++m) {
      if (out.terms + row_cost > budget)
        throw BudgetExceeded("lattice: term budget exceeded");
      BigFloat cw = spec.weight.eval(m, wp);
      BigFloat cn = spec.weight.eval(-m - 1, wp);
      cw = sgn > 0 ? cw + cn : cw - cn;
      if (cw.is_zero()) continue;
      fold_row(cw, BigFloat(spec.b * Rational(2 * m + 1), wp));
    }
  } else {
    for (long m = 1; m <= trunc.Nm; ++m) {
      if (out.terms + row_cost > budget)
        throw BudgetExceeded("lattice: term budget exceeded");
      BigFloat cw = spec.weight.eval(m, wp);
      BigFloat cn = spec.weight.eval(-m, wp);
      cw = sgn > 0 ? cw + cn : cw - cn;
      if (cw.is_zero()) continue;
      fold_row(cw, BigFloat(m, wp));
    }
  }

  // Weighted estimate for the dropped rows.
  DecayBound wb = spec.weight.decay();
  double rho = to_double(wb.rho);
  double zt = spec.shifted ? to_double(spec.b) * (2.0 * trunc.Nm + 3.0)
                           : trunc.Nm + 1.0;
  double inner_bound =
      std::pow(zt, -p) + (kPi / to_double(spec.a)) * std::pow(zt, 1.0 - p);
  if (rho > 0) {
    double q = std::exp(-rho * kPi) *
               std::pow((trunc.Nm + 2.0) / (trunc.Nm + 1.0), wb.deg);
    double w1 = 2.0 * std::exp(wb.log_c) *
                std::pow(trunc.Nm + 1.0, wb.deg) *
                std::exp(-rho * kPi * (trunc.Nm + 1.0));
    err += q < 0.95 ? w1 * inner_bound / (1.0 - q) : w1 * inner_bound * 20.0;
  } else {
    // No exponential weight decay; the inner line values themselves decay
    // for the alternating kinds, so reuse the last row as the scale.
    err += last_row + inner_bound;
  }
  out.error_estimate = err;

  BigFloat re(wp), im(wp);
  if (odd_line && alt)
    im = acc;
  else
    re = acc;
  out.value = ComplexBF(std::move(re), std::move(im));
  return out;
}

}  // namespace eishyp
