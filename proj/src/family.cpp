#include "eishyp/family.hpp"

#include <stdexcept>
#include <utility>

#include "eishyp/coefficients.hpp"

namespace eishyp {

namespace {

Rational fact_q(long n) { return Rational(factorial_z(static_cast<unsigned long>(n))); }

// S_l(j) with base index 1; composition_power_sum takes (k, l) with j = k - l.
Rational S_l(int l, int j) { return composition_power_sum(j + l, l, 1); }

// Brace coefficient of the plain-kind reductions.
//   even exponent 2k: sum_j ( C(2k,2j)(2l-1)! - C(2k,2j+1)(2l-1)!(2l+1) ) S_l(j-l)
//   odd exponent 2k+1: sum_j ( C(2k,2j)(2l)!  - C(2k,2j+1)(2l+1)! ) S_l(j-l)
// with j from l to k.
Rational brace_even(int k, int l) {
  Rational acc(0);
  for (int j = l; j <= k; ++j) {
    Rational c = Rational(binomial_z(2 * k, 2 * j)) * fact_q(2 * l - 1) -
                 Rational(binomial_z(2 * k, 2 * j + 1)) * fact_q(2 * l - 1) *
                     Rational(2 * l + 1);
    acc += c * S_l(l, j - l);
  }
  return acc;
}

Rational brace_odd(int k, int l) {
  Rational acc(0);
  for (int j = l; j <= k; ++j) {
    Rational c = Rational(binomial_z(2 * k, 2 * j)) * fact_q(2 * l) -
                 Rational(binomial_z(2 * k, 2 * j + 1)) * fact_q(2 * l + 1);
    acc += c * S_l(l, j - l);
  }
  return acc;
}

int neg_pow(int e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

Reduction reduce_family(const FamilySpec& spec, OddLineArg odd_arg) {
  if (spec.exponent < 1)
    throw std::invalid_argument("family: exponent must be >= 1");
  if (spec.a <= 0) throw std::invalid_argument("family: a must be positive");
  if (spec.shifted) {
    if (spec.kind != FamilyKind::alternating || spec.exponent % 2 != 0)
      throw std::invalid_argument(
          "family: shifted form needs the alternating kind and even exponent");
    if (spec.b <= 0) throw std::invalid_argument("family: b must be positive");
  }

  const int p = spec.exponent;
  Reduction red;
  red.pi_pow = p;

  // Even-line kinds share the kernel rate 1/a; odd-line kinds use 1/(2a)
  // (or the doubled reading on request) and the prefactor switches a -> 2a.
  Rational inv_a = make_rational(1) / spec.a;
  Rational theta_odd = odd_arg == OddLineArg::half_spacing
                           ? make_rational(1) / (Rational(2) * spec.a)
                           : inv_a;

  auto push = [&red](Rational c, CombineMode cm, KernelKind kk, int j,
                     Rational arg_a, Rational arg_b, const WeightFn& w) {
    if (c == 0) return;
    ReductionTerm t;
    t.c = std::move(c);
    t.sum.weight = w;
    t.sum.combine = cm;
    t.sum.kernel = kk;
    t.sum.kernel_pow = j;
    t.sum.arg_a = std::move(arg_a);
    t.sum.arg_b = std::move(arg_b);
    red.terms.push_back(std::move(t));
  };

  if (spec.shifted) {
    int k = p / 2;
    red.pref = make_rational(1) / (pow_rational(spec.a, p) * fact_q(p - 1));
    Rational arg_a = Rational(2) * spec.b / spec.a;
    Rational arg_b = -spec.b / spec.a;
    for (int l = 0; l < k; ++l)
      push(fact_q(2 * l + 1) * S_l(l, k - 1 - l), CombineMode::shift_pair,
           KernelKind::cosh_csch_pow, 2 * l + 2, arg_a, arg_b, spec.weight);
    return red;
  }

  switch (spec.kind) {
    case FamilyKind::alternating: {
      red.pref = make_rational(1) / (pow_rational(spec.a, p) * fact_q(p - 1));
      if (p % 2 == 0) {
        int k = p / 2;
        for (int l = 0; l < k; ++l)
          push(fact_q(2 * l + 1) * S_l(l, k - 1 - l), CombineMode::sum_pm,
               KernelKind::cosh_csch_pow, 2 * l + 2, inv_a, Rational(0),
               spec.weight);
      } else {
        int k = (p + 1) / 2;
        for (int l = 0; l < k; ++l)
          push(fact_q(2 * l) * S_l(l, k - 1 - l), CombineMode::diff_pm,
               KernelKind::csch_pow, 2 * l + 1, inv_a, Rational(0),
               spec.weight);
      }
      break;
    }
    case FamilyKind::plain: {
      red.pref = make_rational(1) / (pow_rational(spec.a, p) * fact_q(p - 1));
      if (p % 2 == 0) {
        int k = p / 2;
        for (int l = 1; l <= k; ++l)
          push(brace_even(k, l), CombineMode::sum_pm, KernelKind::csch_pow,
               2 * l, inv_a, Rational(0), spec.weight);
      } else {
        int k = (p - 1) / 2;
        for (int l = 0; l <= k; ++l)
          push(brace_odd(k, l), CombineMode::diff_pm,
               KernelKind::cosh_csch_pow, 2 * l + 1, inv_a, Rational(0),
               spec.weight);
      }
      break;
    }
    case FamilyKind::alternating_odd: {
      red.imaginary_unit = true;
      red.pref = make_rational(1) /
                 (pow_rational(Rational(2) * spec.a, p) * fact_q(p - 1));
      if (p % 2 == 0) {
        int k = p / 2;
        for (int l = 0; l < k; ++l)
          push(Rational(-neg_pow(l)) * fact_q(2 * l + 1) * S_l(l, k - 1 - l),
               CombineMode::diff_pm, KernelKind::sinh_sech_pow, 2 * l + 2,
               theta_odd, Rational(0), spec.weight);
      } else {
        int k = (p + 1) / 2;
        for (int l = 0; l < k; ++l)
          push(Rational(-neg_pow(l)) * fact_q(2 * l) * S_l(l, k - 1 - l),
               CombineMode::sum_pm, KernelKind::sech_pow, 2 * l + 1, theta_odd,
               Rational(0), spec.weight);
      }
      break;
    }
    case FamilyKind::plain_odd: {
      red.pref = make_rational(1) /
                 (pow_rational(Rational(2) * spec.a, p) * fact_q(p - 1));
      if (p % 2 == 0) {
        int k = p / 2;
        for (int l = 1; l <= k; ++l)
          push(Rational(neg_pow(l)) * brace_even(k, l), CombineMode::sum_pm,
               KernelKind::sech_pow, 2 * l, theta_odd, Rational(0),
               spec.weight);
      } else {
        int k = (p - 1) / 2;
        for (int l = 0; l <= k; ++l)
          push(Rational(neg_pow(l)) * brace_odd(k, l), CombineMode::diff_pm,
               KernelKind::sinh_sech_pow, 2 * l + 1, theta_odd, Rational(0),
               spec.weight);
      }
      break;
    }
  }
  return red;
}

FamilyEval eval_family(const FamilySpec& spec, mpfr_prec_t prec,
                       OddLineArg odd_arg) {
  Reduction red = reduce_family(spec, odd_arg);
  mpfr_prec_t wp = prec + 32;

  FamilyEval out;
  out.value = ComplexBF(prec);
  out.tail_bound = BigFloat(prec);
  if (spec.weight.is_zero()) return out;

  BigFloat acc(0L, wp);
  BigFloat tail(0L, wp);
  for (const ReductionTerm& t : red.terms) {
    HyperSumResult r = sum_hyperbolic(t.sum, wp);
    BigFloat c(t.c, wp);
    acc += c * r.value;
    tail += abs(c) * r.tail_bound;
    out.terms += r.terms;
  }
  BigFloat scale = BigFloat(red.pref, wp) * pow_si(const_pi(wp), red.pi_pow);
  acc *= scale;
  tail *= abs(scale);
  tail = ldexp2(tail, 2);  // headroom for the final roundings

  BigFloat re(prec), im(prec);
  if (red.imaginary_unit)
    mpfr_set(im.raw(), acc.raw(), MPFR_RNDN);
  else
    mpfr_set(re.raw(), acc.raw(), MPFR_RNDN);
  out.value = ComplexBF(std::move(re), std::move(im));
  mpfr_set(out.tail_bound.raw(), tail.raw(), MPFR_RNDN);
  return out;
}

std::string family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::alternating: return "alternating";
    case FamilyKind::plain: return "plain";
    case FamilyKind::alternating_odd: return "alternating-odd";
    case FamilyKind::plain_odd: return "plain-odd";
  }
  return "?";
}

FamilyKind family_kind_from_name(const std::string& name) {
  if (name == "alternating") return FamilyKind::alternating;
  if (name == "plain") return FamilyKind::plain;
  if (name == "alternating-odd") return FamilyKind::alternating_odd;
  if (name == "plain-odd") return FamilyKind::plain_odd;
  throw std::invalid_argument("family: unknown kind '" + name + "'");
}

}  // namespace eishyp
