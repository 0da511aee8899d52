#include "eishyp/coefficients.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <vector>

namespace eishyp {

namespace {

void check_domain(int k, int l, int m) {
  if (m < 1) throw std::invalid_argument("composition power sum: m must be >= 1");
  if (l < 0 || k < l) throw std::invalid_argument("composition power sum: need 0 <= l <= k");
}

// prod over the remaining parts h..l with `rem` still to distribute.
BigInt comp_sum_rec(int l, int m, int h, int rem) {
  const long base = 2L * m + 2L * h - 1;
  if (h == l) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(2 * rem));
    return p;
  }
  BigInt acc = 0;
  for (int r = 0; r <= rem; ++r) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(2 * r));
    acc += p * comp_sum_rec(l, m, h + 1, rem - r);
  }
  return acc;
}

std::mutex g_memo_mu;
std::map<std::tuple<int, int, int>, Rational> g_comp_memo;
std::map<std::tuple<int, int, int>, Rational> g_A_memo;

}  // namespace

Rational composition_power_sum(int k, int l, int m) {
  check_domain(k, l, m);
  const auto key = std::make_tuple(k, l, m);
  {
    std::lock_guard<std::mutex> lk(g_memo_mu);
    auto it = g_comp_memo.find(key);
    if (it != g_comp_memo.end()) return it->second;
  }
  Rational v(comp_sum_rec(l, m, 0, k - l));
  std::lock_guard<std::mutex> lk(g_memo_mu);
  g_comp_memo.emplace(key, v);
  return v;
}

Rational coefficient_A(int k, int m, int l) {
  if (m < 1) throw std::invalid_argument("coefficient_A: m must be >= 1");
  if (k < 0 || l < 0) throw std::invalid_argument("coefficient_A: negative index");
  if (l > k) return Rational(0);
  const auto key = std::make_tuple(k, m, l);
  {
    std::lock_guard<std::mutex> lk(g_memo_mu);
    auto it = g_A_memo.find(key);
    if (it != g_A_memo.end()) return it->second;
  }
  BigInt fac = factorial_z(static_cast<unsigned long>(2 * m + 2 * l - 2)) /
               factorial_z(static_cast<unsigned long>(2 * m - 2));
  Rational v = Rational(fac) * composition_power_sum(k, l, m);
  if ((k - l) % 2 != 0) v = -v;
  std::lock_guard<std::mutex> lk(g_memo_mu);
  g_A_memo.emplace(key, v);
  return v;
}

Rational coefficient_A_recurrence(int k, int m, int l) {
  if (m < 1) throw std::invalid_argument("coefficient_A_recurrence: m must be >= 1");
  if (k < 0 || l < 0) throw std::invalid_argument("coefficient_A_recurrence: negative index");
  if (l > k) return Rational(0);
  // Row-by-row fill; row k only depends on row k-1.
  std::vector<Rational> row(1, Rational(1));  // row for k = 0
  for (int kk = 1; kk <= k; ++kk) {
    std::vector<Rational> next(static_cast<size_t>(kk) + 1);
    for (int ll = 0; ll <= kk; ++ll) {
      Rational acc(0);
      if (ll >= 1 && ll - 1 < static_cast<int>(row.size())) {
        acc += Rational((2L * m + 2L * ll - 3) * (2L * m + 2L * ll - 2)) * row[ll - 1];
      }
      if (ll < static_cast<int>(row.size())) {
        long d = 2L * m + 2L * ll - 1;
        acc -= Rational(d * d) * row[ll];
      }
      next[ll] = acc;
    }
    row.swap(next);
  }
  return row[l];
}

Rational a_coeff_norm(int k, int l) {
  if (k < 1 || l < 1 || l > k) throw std::invalid_argument("a_coeff_norm: need 1 <= l <= k");
  Rational v = Rational(2L * l - 1) * coefficient_A(k - 1, 1, l - 1);
  v /= Rational(factorial_z(static_cast<unsigned long>(2 * k - 1)));
  if ((k + l) % 2 != 0) v = -v;
  return v;
}

Rational b_coeff_norm(int k, int l) {
  if (k < 1 || l < 1 || l > k) throw std::invalid_argument("b_coeff_norm: need 1 <= l <= k");
  Rational acc(0);
  for (int j = l; j <= k; ++j) {
    Rational brace = Rational(binomial_z(2 * k, 2 * j), BigInt(2L * l)) -
                     Rational(binomial_z(2 * k, 2 * j + 1) * BigInt(2L * l + 1), BigInt(2L * l));
    Rational t = brace * coefficient_A(j, 1, l);
    if (j % 2 != 0) t = -t;
    acc += t;
  }
  acc /= Rational(factorial_z(static_cast<unsigned long>(2 * k - 1)));
  if (l % 2 != 0) acc = -acc;
  return acc;
}

}  // namespace eishyp
