#include "eishyp/hyper_sum.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace eishyp {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kLn2 = 0.69314718055994530942;
// ln 2.1: csch(x), sech(x) <= 2.1 e^{-x} once x >= pi/2.
constexpr double kLnEnvelope = 0.74193734472937733;

double to_double(const Rational& r) { return mpq_class(r).get_d(); }

// Majorant for one combined term: exp(log_c) * m^deg * exp(-rho*pi*m).
struct Majorant {
  double log_c;
  int deg;
  Rational rho;
};

Majorant build_majorant(const HyperSumSpec& s) {
  DecayBound wb = s.weight.decay();
  Majorant mj{wb.log_c, wb.deg, wb.rho};
  mj.log_c += std::log(2.0);  // both signs of m (or the doubled parity form)
  if (s.combine == CombineMode::shift_pair)
    mj.log_c += to_double(wb.rho) * kPi;  // index shift m -> m-1
  if (s.kernel != KernelKind::none) {
    int j = s.kernel_pow;
    bool numer = s.kernel == KernelKind::cosh_csch_pow ||
                 s.kernel == KernelKind::sinh_sech_pow;
    double ab = std::abs(to_double(s.arg_b));
    mj.log_c += j * (kLnEnvelope + kPi * ab);
    mj.rho += s.arg_a * Rational(j);
    if (numer) {
      mj.log_c += kPi * ab;
      mj.rho -= s.arg_a;
    }
  }
  return mj;
}

// The envelope constants hold once every hyperbolic argument is at least
// pi/2 (pi/4 for coth); require that of the first dropped index.
bool envelope_valid_from(const HyperSumSpec& s, long m1) {
  if (s.kernel != KernelKind::none) {
    if (s.arg_a * Rational(m1) + s.arg_b < make_rational(1, 2)) return false;
  }
  long mw = s.combine == CombineMode::shift_pair ? m1 - 1 : m1;
  for (const HypFactor& f : s.weight.hyp) {
    Rational floor_arg = f.c * Rational(mw) - abs(f.d);
    Rational need =
        f.kind == HypKind::coth_f ? make_rational(1, 4) : make_rational(1, 2);
    if (floor_arg < need) return false;
  }
  return true;
}

// log2 of the tail bound sum_{m > M} of the majorant, or +inf when the
// geometric ratio is not yet below 0.9.
double tail_log2(const Majorant& mj, long M) {
  double rho = to_double(mj.rho);
  double q = std::exp(-rho * kPi) *
             std::pow((M + 2.0) / (M + 1.0), mj.deg);
  if (q > 0.9) return std::numeric_limits<double>::infinity();
  double ln_first = mj.log_c + mj.deg * std::log(M + 1.0) - rho * kPi * (M + 1);
  return ln_first / kLn2 - std::log2(1.0 - q);
}

BigFloat kernel_value(const HyperSumSpec& s, const BigFloat& t) {
  mpfr_prec_t p = t.prec();
  switch (s.kernel) {
    case KernelKind::none:
      return BigFloat(1L, p);
    case KernelKind::csch_pow:
      return pow_si(sinh(t), -s.kernel_pow);
    case KernelKind::cosh_csch_pow:
      return cosh(t) * pow_si(sinh(t), -s.kernel_pow);
    case KernelKind::sech_pow:
      return pow_si(cosh(t), -s.kernel_pow);
    case KernelKind::sinh_sech_pow:
      return sinh(t) * pow_si(cosh(t), -s.kernel_pow);
  }
  throw std::logic_error("hyper_sum: unreachable");
}

}  // namespace

HyperSumResult sum_hyperbolic(const HyperSumSpec& s, mpfr_prec_t prec,
                              long max_terms) {
  if ((s.kernel == KernelKind::none) != (s.kernel_pow == 0))
    throw std::invalid_argument("hyper_sum: kernel and kernel_pow disagree");
  if (s.kernel != KernelKind::none && s.arg_a <= 0)
    throw std::invalid_argument("hyper_sum: kernel rate must be positive");

  HyperSumResult out;
  out.value = BigFloat(prec);
  out.tail_bound = BigFloat(prec);
  if (s.weight.is_zero()) return out;

  int par = s.weight.parity();
  if (s.combine == CombineMode::sum_pm && par == -1) return out;
  if (s.combine == CombineMode::diff_pm && par == +1) return out;
  bool doubled = (s.combine == CombineMode::sum_pm && par == +1) ||
                 (s.combine == CombineMode::diff_pm && par == -1);

  Majorant mj = build_majorant(s);
  if (!(mj.rho > 0))
    throw std::invalid_argument("hyper_sum: no exponential decay, diverges");

  mpfr_prec_t wp = prec + 32;
  BigFloat pi = const_pi(wp);
  BigFloat two(2L, wp);
  BigFloat partial(0L, wp);
  mpfr_exp_t max_term_exp = mpfr_get_emin();
  bool seen_nonzero = false;

  for (long m = 1; m <= max_terms; ++m) {
    BigFloat wv(wp);
    switch (s.combine) {
      case CombineMode::single:
        wv = s.weight.eval(m, wp);
        break;
      case CombineMode::sum_pm:
        wv = doubled ? two * s.weight.eval(m, wp)
                     : s.weight.eval(m, wp) + s.weight.eval(-m, wp);
        break;
      case CombineMode::diff_pm:
        wv = doubled ? two * s.weight.eval(m, wp)
                     : s.weight.eval(m, wp) - s.weight.eval(-m, wp);
        break;
      case CombineMode::shift_pair:
        wv = s.weight.eval(m - 1, wp) + s.weight.eval(-m, wp);
        break;
    }
    BigFloat term = wv;
    if (s.kernel != KernelKind::none) {
      BigFloat t = BigFloat(s.arg_a * Rational(m) + s.arg_b, wp) * pi;
      if (t.is_zero())
        throw std::domain_error("hyper_sum: kernel argument hits zero");
      term = wv * kernel_value(s, t);
    }
    partial += term;
    out.terms = m;
    if (!term.is_zero()) {
      seen_nonzero = true;
      mpfr_exp_t e = mpfr_get_exp(term.raw());
      if (e > max_term_exp) max_term_exp = e;
    }
    if (m < 8 || !seen_nonzero) continue;
    if (!envelope_valid_from(s, m + 1)) continue;
    double lt = tail_log2(mj, m);
    if (std::isinf(lt)) continue;
    mpfr_exp_t anchor = max_term_exp;
    if (!partial.is_zero() && mpfr_get_exp(partial.raw()) > anchor)
      anchor = mpfr_get_exp(partial.raw());
    // mpfr_get_exp(x) - 1 <= log2|x|, so this comparison is conservative.
    if (lt <= static_cast<double>(anchor - 1) - static_cast<double>(prec + 8)) {
      BigFloat rounded(prec);
      mpfr_set(rounded.raw(), partial.raw(), MPFR_RNDN);
      out.value = rounded;
      out.tail_bound = two_pow(static_cast<long>(std::ceil(lt)), prec);
      return out;
    }
  }
  throw std::runtime_error("hyper_sum: term cap reached before convergence");
}

}  // namespace eishyp
