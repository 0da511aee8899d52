#include "eishyp/const_expr.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace eishyp {

namespace {
std::tuple<int, int, int> key_of(const ConstMonomial& m) {
  return {m.gamma_exp, m.pi_half_exp, m.sqrt2_exp};
}
}  // namespace

ConstExpr::ConstExpr(const Rational& q) {
  if (q != 0) terms_.push_back({q, 0, 0, 0});
}

ConstExpr::ConstExpr(const ConstMonomial& m) : terms_{m} { normalize(); }

ConstExpr::ConstExpr(std::vector<ConstMonomial> terms) : terms_(std::move(terms)) { normalize(); }

void ConstExpr::normalize() {
  for (auto& m : terms_) {
    // (sqrt 2)^s = 2^(floor(s/2)) * (sqrt 2)^(s mod 2), floored for negatives
    int s = m.sqrt2_exp;
    int r = ((s % 2) + 2) % 2;
    long halves = (static_cast<long>(s) - r) / 2;
    if (halves != 0) m.coeff *= pow_rational(Rational(2), halves);
    m.sqrt2_exp = r;
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const ConstMonomial& a, const ConstMonomial& b) { return key_of(a) < key_of(b); });
  std::vector<ConstMonomial> out;
  for (auto& m : terms_) {
    if (!out.empty() && key_of(out.back()) == key_of(m)) {
      out.back().coeff += m.coeff;
    } else {
      out.push_back(m);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const ConstMonomial& m) { return m.coeff == 0; }),
            out.end());
  terms_ = std::move(out);
}

ConstExpr operator+(const ConstExpr& a, const ConstExpr& b) {
  std::vector<ConstMonomial> t = a.terms_;
  t.insert(t.end(), b.terms_.begin(), b.terms_.end());
  return ConstExpr(std::move(t));
}

ConstExpr operator-(const ConstExpr& a, const ConstExpr& b) { return a + (-b); }

ConstExpr ConstExpr::operator-() const {
  std::vector<ConstMonomial> t = terms_;
  for (auto& m : t) m.coeff = -m.coeff;
  ConstExpr r;
  r.terms_ = std::move(t);  // already normalized
  return r;
}

ConstExpr operator*(const ConstExpr& a, const ConstExpr& b) {
  std::vector<ConstMonomial> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_)
      t.push_back({x.coeff * y.coeff, x.sqrt2_exp + y.sqrt2_exp, x.pi_half_exp + y.pi_half_exp,
                   x.gamma_exp + y.gamma_exp});
  return ConstExpr(std::move(t));
}

ConstExpr ConstExpr::scaled(const Rational& q) const {
  if (q == 0) return ConstExpr();
  std::vector<ConstMonomial> t = terms_;
  for (auto& m : t) m.coeff *= q;
  ConstExpr r;
  r.terms_ = std::move(t);
  return r;
}

bool ConstExpr::operator==(const ConstExpr& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (key_of(terms_[i]) != key_of(o.terms_[i]) || terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

BigFloat ConstExpr::eval(mpfr_prec_t prec) const {
  if (terms_.empty()) return BigFloat(prec);
  const mpfr_prec_t wp = prec + 64;
  BigFloat pi = const_pi(wp);
  BigFloat spi = sqrt(pi);
  BigFloat s2 = const_sqrt2(wp);
  bool needs_gamma = false;
  for (const auto& m : terms_)
    if (m.gamma_exp != 0) needs_gamma = true;
  BigFloat g = needs_gamma ? gamma_quarter(wp) : BigFloat(1L, wp);
  BigFloat acc(wp);
  for (const auto& m : terms_) {
    BigFloat v(m.coeff, wp);
    if (m.sqrt2_exp == 1) v *= s2;
    int p = m.pi_half_exp;
    int r = ((p % 2) + 2) % 2;
    long q = (static_cast<long>(p) - r) / 2;
    if (q != 0) v *= pow_si(pi, q);
    if (r) v *= spi;
    if (m.gamma_exp != 0) v *= pow_si(g, m.gamma_exp);
    acc += v;
  }
  BigFloat out(prec);
  mpfr_set(out.raw(), acc.raw(), MPFR_RNDN);
  return out;
}

std::string ConstExpr::to_catalog_string() const {
  if (terms_.empty()) return "0 0 0 0";
  std::ostringstream os;
  bool first = true;
  for (const auto& m : terms_) {
    if (!first) os << " ; ";
    first = false;
    os << to_string(m.coeff) << ' ' << m.sqrt2_exp << ' ' << m.pi_half_exp << ' ' << m.gamma_exp;
  }
  return os.str();
}

ConstExpr ConstExpr::parse(const std::string& s) {
  std::vector<ConstMonomial> terms;
  std::string chunk;
  std::istringstream stream(s);
  // split on ';'
  while (std::getline(stream, chunk, ';')) {
    std::istringstream ts(chunk);
    std::string coeff;
    long s2, ph, ge;
    if (!(ts >> coeff >> s2 >> ph >> ge)) {
      throw std::invalid_argument("ConstExpr::parse: bad monomial '" + chunk + "'");
    }
    std::string extra;
    if (ts >> extra) throw std::invalid_argument("ConstExpr::parse: trailing junk '" + extra + "'");
    terms.push_back({rational_from_string(coeff), static_cast<int>(s2), static_cast<int>(ph),
                     static_cast<int>(ge)});
  }
  return ConstExpr(std::move(terms));
}

}  // namespace eishyp
