#include "eishyp/weight.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace eishyp {

namespace {

double to_double(const Rational& r) { return mpq_class(r).get_d(); }

BigFloat hyp_eval(HypKind kind, const BigFloat& t) {
  switch (kind) {
    case HypKind::csch: {
      BigFloat s = sinh(t);
      if (s.is_zero())
        throw std::domain_error("weight: csch pole at integer argument");
      return BigFloat(1L, t.prec()) / s;
    }
    case HypKind::sech:
      return BigFloat(1L, t.prec()) / cosh(t);
    case HypKind::tanh_f:
      return sinh(t) / cosh(t);
    case HypKind::coth_f: {
      BigFloat s = sinh(t);
      if (s.is_zero())
        throw std::domain_error("weight: coth pole at integer argument");
      return cosh(t) / s;
    }
  }
  throw std::logic_error("weight: unreachable");
}

const char* hyp_name(HypKind kind) {
  switch (kind) {
    case HypKind::csch: return "csch";
    case HypKind::sech: return "sech";
    case HypKind::tanh_f: return "tanh";
    case HypKind::coth_f: return "coth";
  }
  return "?";
}

}  // namespace

BigFloat WeightFn::eval(long m, mpfr_prec_t prec) const {
  mpfr_prec_t wp = prec + 32;
  if (scalar == 0) return BigFloat(0L, prec);
  BigFloat acc(scalar, wp);
  if (m_power != 0) {
    if (m == 0) {
      if (m_power > 0) return BigFloat(0L, prec);
      throw std::domain_error("weight: negative m power at m = 0");
    }
    BigFloat mm(m, wp);
    acc = acc * pow_si(mm, m_power);
  }
  if (alternating && (m % 2 != 0)) acc = -acc;
  if (!hyp.empty()) {
    BigFloat pi = const_pi(wp);
    for (const HypFactor& f : hyp) {
      Rational arg = f.c * Rational(m) + f.d;
      BigFloat t = BigFloat(arg, wp) * pi;
      BigFloat base = hyp_eval(f.kind, t);
      acc = acc * pow_si(base, f.v);
    }
  }
  BigFloat out(prec);
  mpfr_set(out.raw(), acc.raw(), MPFR_RNDN);
  return out;
}

int WeightFn::parity() const {
  if (has_offsets()) return 0;
  // w(-m)/w(m): each factor contributes its own sign under m -> -m.
  int sign = 1;
  if (m_power % 2 != 0) sign = -sign;
  for (const HypFactor& f : hyp) {
    bool odd_fn = (f.kind == HypKind::csch || f.kind == HypKind::tanh_f ||
                   f.kind == HypKind::coth_f);
    if (odd_fn && (f.v % 2 != 0)) sign = -sign;
  }
  return sign;
}

bool WeightFn::has_offsets() const {
  for (const HypFactor& f : hyp)
    if (f.d != 0) return true;
  return false;
}

DecayBound WeightFn::decay() const {
  DecayBound b;
  if (scalar == 0) {
    b.log_c = -1e9;
    return b;
  }
  b.log_c = std::log(std::abs(to_double(scalar)));
  b.deg = m_power > 0 ? m_power : 0;
  for (const HypFactor& f : hyp) {
    switch (f.kind) {
      case HypKind::csch:
      case HypKind::sech:
        // |csch(pi(cm+d))|, |sech(pi(cm+d))| <= 2 e^{-pi(cm+d)} once the
        // argument clears the nearest pole; fold e^{pi|d|v} and the factor
        // 2^v into the constant and keep the clean rate c*v. For the
        // catalog's arguments (c >= 1/2, |d| <= 1/2) the bound holds from
        // m = 1 on.
        b.rho += f.c * Rational(f.v);
        b.log_c += f.v * (std::log(2.0) +
                          3.1415926535897932 * std::abs(to_double(f.d)) +
                          3.1415926535897932);
        break;
      case HypKind::tanh_f:
        break;  // |tanh| <= 1
      case HypKind::coth_f:
        b.log_c += f.v * std::log(2.0);  // |coth(pi t)| <= 2 for t >= 1/4
        break;
    }
  }
  return b;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip_ws();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) {
      std::ostringstream os;
      os << "weight parse: expected '" << c << "' at offset " << i << " in '"
         << s << "'";
      throw std::invalid_argument(os.str());
    }
  }
  bool starts_with(const char* lit) {
    skip_ws();
    size_t n = std::string(lit).size();
    return s.compare(i, n, lit) == 0;
  }
};

// Rational literal: optional sign, digits, optional /digits.
Rational parse_rational_tok(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) ++c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    ++c.i;
  if (c.i < c.s.size() && c.s[c.i] == '/') {
    ++c.i;
    while (c.i < c.s.size() &&
           std::isdigit(static_cast<unsigned char>(c.s[c.i])))
      ++c.i;
  }
  if (c.i == start)
    throw std::invalid_argument("weight parse: expected number in '" + c.s +
                                "'");
  return rational_from_string(c.s.substr(start, c.i - start));
}

int parse_int_tok(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) ++c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    ++c.i;
  if (c.i == start)
    throw std::invalid_argument("weight parse: expected integer in '" + c.s +
                                "'");
  return std::atoi(c.s.substr(start, c.i - start).c_str());
}

}  // namespace

WeightFn WeightFn::parse(const std::string& text) {
  WeightFn w;
  Cursor c{text};
  c.skip_ws();
  if (c.i == text.size())
    throw std::invalid_argument("weight parse: empty input");
  bool first = true;
  while (true) {
    if (!first) {
      c.skip_ws();
      if (c.i == text.size()) break;
      c.expect('*');
    }
    first = false;
    c.skip_ws();
    if (c.starts_with("(-1)^m")) {
      c.i += 6;
      w.alternating = !w.alternating;
      continue;
    }
    if (c.starts_with("m")) {
      // Bare 'm' or 'm^p'; careful not to swallow a function name.
      size_t save = c.i;
      ++c.i;
      if (c.eat('^')) {
        w.m_power += parse_int_tok(c);
        continue;
      }
      c.skip_ws();
      if (c.i == text.size() || text[c.i] == '*') {
        w.m_power += 1;
        continue;
      }
      c.i = save;  // not a bare m after all
    }
    bool matched = false;
    for (HypKind kind : {HypKind::csch, HypKind::sech, HypKind::tanh_f,
                         HypKind::coth_f}) {
      const char* name = hyp_name(kind);
      if (!c.starts_with(name)) continue;
      c.i += std::string(name).size();
      c.expect('(');
      HypFactor f;
      f.kind = kind;
      f.c = parse_rational_tok(c);
      if (c.eat(',')) f.d = parse_rational_tok(c);
      c.expect(')');
      if (c.eat('^')) f.v = parse_int_tok(c);
      if (f.v < 1)
        throw std::invalid_argument("weight parse: factor power must be >= 1");
      if (f.c <= 0)
        throw std::invalid_argument("weight parse: factor rate must be > 0");
      w.hyp.push_back(f);
      matched = true;
      break;
    }
    if (matched) continue;
    w.scalar = w.scalar * parse_rational_tok(c);
  }
  return w;
}

std::string WeightFn::to_string() const {
  std::ostringstream os;
  bool need_star = false;
  auto sep = [&]() {
    if (need_star) os << " * ";
    need_star = true;
  };
  if (scalar != 1 || (m_power == 0 && !alternating && hyp.empty())) {
    sep();
    os << eishyp::to_string(scalar);
  }
  if (m_power == 1) {
    sep();
    os << "m";
  } else if (m_power != 0) {
    sep();
    os << "m^" << m_power;
  }
  if (alternating) {
    sep();
    os << "(-1)^m";
  }
  for (const HypFactor& f : hyp) {
    sep();
    os << hyp_name(f.kind) << "(" << eishyp::to_string(f.c);
    if (f.d != 0) os << "," << eishyp::to_string(f.d);
    os << ")";
    if (f.v != 1) os << "^" << f.v;
  }
  return os.str();
}

}  // namespace eishyp
