#include "eishyp/verify.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "eishyp/family.hpp"
#include "eishyp/hyper_sum.hpp"
#include "eishyp/rational_matrix.hpp"

namespace eishyp {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0)
      .count();
}

std::string fmt(const BigFloat& v) { return v.to_string(40); }
std::string fmt_short(const BigFloat& v) { return v.to_string(6); }

std::string fmt_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

BigFloat series_lhs(const CatalogEntry& e, mpfr_prec_t prec, OddLineArg arg) {
  if (!e.is_double) {
    HyperSumSpec s;
    s.weight = e.weight;
    return sum_hyperbolic(s, prec).value;
  }
  FamilyEval fe = eval_family(e.family, prec, arg);
  return e.pure_imaginary ? fe.value.im : fe.value.re;
}

// Independent single-sum route: fixed-cutoff direct accumulation.
BigFloat direct_single_sum(const WeightFn& w, mpfr_prec_t prec, long cutoff) {
  BigFloat acc(0L, prec);
  for (long m = 1; m <= cutoff; ++m) acc += w.eval(m, prec);
  return acc;
}

struct RowBuilder {
  VerificationReport& rep;
  bool timings;

  bool add(const std::string& id, const std::string& route,
           const std::string& reading, const BigFloat& lhs, const BigFloat& rhs,
           const BigFloat& tol, const std::string& tol_text,
           Clock::time_point t0) {
    VerificationRow row;
    row.id = id;
    row.route = route;
    row.reading = reading;
    row.lhs = fmt(lhs);
    row.rhs = fmt(rhs);
    BigFloat diff = abs(lhs - rhs);
    row.abs_diff = fmt_short(diff);
    row.tolerance = tol_text;
    row.pass = diff <= tol;
    row.elapsed_ms = timings ? ms_since(t0) : 0;
    rep.rows.push_back(std::move(row));
    return rep.rows.back().pass;
  }
};

}  // namespace

VerificationReport verify_catalog(const std::vector<CatalogEntry>& entries,
                                  const VerifyOptions& opt) {
  VerificationReport rep;
  RowBuilder rb{rep, opt.timings};
  const std::string tol_series_text = fmt_short(opt.tol_series);
  const std::string tol_oracle_text = fmt_double(opt.tol_oracle);
  BigFloat tol_oracle_bf(64);
  mpfr_set_d(tol_oracle_bf.raw(), opt.tol_oracle, MPFR_RNDN);

  for (const CatalogEntry& e : entries) {
    if (e.alt_rhs && e.adjudicate_scaling)
      throw std::runtime_error("verify: entry " + e.id +
                               " carries both reading flags");
    bool ok = true;
    std::string note;

    if (opt.mode != VerifyMode::oracle) {
      Clock::time_point t0 = Clock::now();
      BigFloat rhs = e.rhs.eval(opt.precision);
      if (e.adjudicate_scaling) {
        BigFloat lhs_half = series_lhs(e, opt.precision, OddLineArg::half_spacing);
        BigFloat lhs_full = series_lhs(e, opt.precision, OddLineArg::full_spacing);
        bool p1 = rb.add(e.id, "series", "half-spacing", lhs_half, rhs,
                         opt.tol_series, tol_series_text, t0);
        bool p2 = rb.add(e.id, "series", "full-spacing", lhs_full, rhs,
                         opt.tol_series, tol_series_text, t0);
        if (p1 == p2) {
          ok = false;
          note = p1 ? "both kernel readings match" : "no kernel reading matches";
        } else {
          note = p1 ? "half-spacing reading matches" : "full-spacing reading matches";
        }
      } else if (e.alt_rhs) {
        BigFloat lhs = series_lhs(e, opt.precision, OddLineArg::half_spacing);
        BigFloat rhs2 = e.alt_rhs->eval(opt.precision);
        bool p1 = rb.add(e.id, "series", "primary", lhs, rhs, opt.tol_series,
                         tol_series_text, t0);
        bool p2 = rb.add(e.id, "series", "alternate", lhs, rhs2, opt.tol_series,
                         tol_series_text, t0);
        if (p1 == p2) {
          ok = false;
          note = p1 ? "both readings match" : "no reading matches";
        } else {
          note = p1 ? "primary reading matches" : "alternate reading matches";
        }
      } else {
        if (!rb.add(e.id, "series", "", series_lhs(e, opt.precision,
                                                   OddLineArg::half_spacing),
                    rhs, opt.tol_series, tol_series_text, t0)) {
          ok = false;
          note = "series route failed";
        }
      }
    }

    if (opt.mode != VerifyMode::series) {
      Clock::time_point t0 = Clock::now();
      BigFloat rhs = e.rhs.eval(opt.precision);
      BigFloat lhs(128);
      if (e.is_double) {
        LatticeResult lr = eval_double_sum(e.family, opt.trunc, opt.budget);
        lhs = e.pure_imaginary ? lr.value.im : lr.value.re;
      } else {
        lhs = direct_single_sum(e.weight, 192, 2000);
      }
      if (!rb.add(e.id, "oracle", "", lhs, rhs, tol_oracle_bf, tol_oracle_text,
                  t0)) {
        ok = false;
        note = note.empty() ? "oracle route failed" : note + "; oracle route failed";
      }
    }

    EntryOutcome out;
    out.id = e.id;
    out.ok = ok;
    out.note = note.empty() ? "ok" : note;
    rep.entries.push_back(std::move(out));
    if (!ok) ++rep.failures;
  }
  return rep;
}

VerificationReport verify_matrix_relations(int k_max,
                                           const std::vector<Rational>& a_values,
                                           mpfr_prec_t precision,
                                           bool timings) {
  if (k_max < 1) throw std::invalid_argument("verify: k_max must be >= 1");
  VerificationReport rep;
  RowBuilder rb{rep, timings};
  const mpfr_prec_t wp = precision + 48;
  const BigFloat tol = two_pow(-static_cast<long>(precision) + 16, 64);
  const std::string tol_text = fmt_short(tol);
  const BigFloat pi = const_pi(wp);

  for (const Rational& a : a_values) {
    if (a <= 0) throw std::invalid_argument("verify: a must be positive");
    const std::string atag = to_string(a);
    const Rational inv_a = make_rational(1) / a;

    WeightFn g;
    g.hyp.push_back(HypFactor{HypKind::sech, inv_a, Rational(0), 1});
    WeightFn f = g;
    f.hyp[0].v = 2;

    std::vector<BigFloat> F, G, Fbar, Gbar;
    for (int j = 1; j <= k_max; ++j) {
      FamilySpec fs;
      fs.kind = FamilyKind::alternating;
      fs.exponent = 2 * j;
      fs.a = a;
      fs.weight = f;
      F.push_back(eval_family(fs, wp).value.re);

      FamilySpec gs = fs;
      gs.kind = FamilyKind::plain;
      gs.weight = g;
      G.push_back(eval_family(gs, wp).value.re);

      HyperSumSpec fb;
      fb.weight = f;
      fb.combine = CombineMode::sum_pm;
      fb.kernel = KernelKind::cosh_csch_pow;
      fb.kernel_pow = 2 * j;
      fb.arg_a = inv_a;
      Fbar.push_back(sum_hyperbolic(fb, wp).value);

      HyperSumSpec gb = fb;
      gb.weight = g;
      gb.kernel = KernelKind::csch_pow;
      Gbar.push_back(sum_hyperbolic(gb, wp).value);
    }

    // Row factor pi^{2j}/a^{2j} carried by the un-normalized coefficients.
    std::vector<BigFloat> rowfac;
    for (int j = 1; j <= k_max; ++j)
      rowfac.push_back(pow_si(pi * BigFloat(inv_a, wp), 2 * j));

    RationalMatrix A = build_matrix_A(k_max);
    RationalMatrix B = build_matrix_B(k_max);
    for (int j = 1; j <= k_max; ++j) {
      Clock::time_point t0 = Clock::now();
      BigFloat accA(0L, wp), accB(0L, wp);
      for (int l = 1; l <= j; ++l) {
        accA += BigFloat(A.at(j - 1, l - 1), wp) * Fbar[l - 1];
        accB += BigFloat(B.at(j - 1, l - 1), wp) * Gbar[l - 1];
      }
      rb.add("matrix-closure-alternating-k" + std::to_string(j) + "-a" + atag,
             "series", "", F[j - 1], rowfac[j - 1] * accA, tol, tol_text, t0);
      rb.add("matrix-closure-plain-k" + std::to_string(j) + "-a" + atag,
             "series", "", G[j - 1], rowfac[j - 1] * accB, tol, tol_text, t0);
    }

    int k_rel = k_max < 3 ? k_max : 3;
    RationalMatrix Ai = invert_lower_triangular(build_matrix_A(k_rel));
    RationalMatrix Bi = invert_lower_triangular(build_matrix_B(k_rel));
    for (int i = 1; i <= k_rel; ++i) {
      Clock::time_point t0 = Clock::now();
      BigFloat x(0L, wp), y(0L, wp);
      for (int l = 1; l <= i; ++l) {
        BigFloat d_inv = BigFloat(1L, wp) / rowfac[l - 1];
        x += BigFloat(Ai.at(i - 1, l - 1), wp) * d_inv * F[l - 1];
        y += BigFloat(Bi.at(i - 1, l - 1), wp) * d_inv * G[l - 1];
      }
      rb.add("matrix-inverse-k" + std::to_string(i) + "-a" + atag, "series", "",
             x, y, tol, tol_text, t0);
    }

    {
      Clock::time_point t0 = Clock::now();
      rb.add("matrix-pair-k1-a" + atag, "series", "", F[0], G[0], tol, tol_text,
             t0);
      if (k_max >= 2) {
        BigFloat half_fac = ldexp2(rowfac[0], -1);  // pi^2 / (2 a^2)
        rb.add("matrix-pair-k2-a" + atag, "series", "", F[1],
               G[1] - half_fac * G[0], tol, tol_text, t0);
        rb.add("matrix-pair-k2-alt-a" + atag, "series", "",
               F[1] + half_fac * F[0], G[1], tol, tol_text, t0);
      }
    }
  }

  for (const VerificationRow& row : rep.rows)
    if (!row.pass) ++rep.failures;
  return rep;
}

std::string render_report(const VerificationReport& rep,
                          const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["failures"] = rep.failures;
    j["entries"] = nlohmann::ordered_json::array();
    for (const EntryOutcome& e : rep.entries)
      j["entries"].push_back({{"id", e.id}, {"ok", e.ok}, {"note", e.note}});
    j["rows"] = nlohmann::ordered_json::array();
    for (const VerificationRow& r : rep.rows)
      j["rows"].push_back({{"id", r.id},
                           {"route", r.route},
                           {"reading", r.reading},
                           {"lhs", r.lhs},
                           {"rhs", r.rhs},
                           {"abs_diff", r.abs_diff},
                           {"tolerance", r.tolerance},
                           {"pass", r.pass},
                           {"elapsed_ms", r.elapsed_ms}});
    return j.dump(2) + "\n";
  }
  if (format == "csv") {
    std::ostringstream os;
    os << "id,route,reading,lhs,rhs,abs_diff,tolerance,pass,elapsed_ms\n";
    for (const VerificationRow& r : rep.rows)
      os << r.id << ',' << r.route << ',' << r.reading << ',' << r.lhs << ','
         << r.rhs << ',' << r.abs_diff << ',' << r.tolerance << ','
         << (r.pass ? "true" : "false") << ',' << r.elapsed_ms << '\n';
    return os.str();
  }
  if (format == "markdown") {
    std::ostringstream os;
    os << "| id | route | reading | abs_diff | tolerance | pass |\n";
    os << "|---|---|---|---|---|---|\n";
    for (const VerificationRow& r : rep.rows)
      os << "| " << r.id << " | " << r.route << " | " << r.reading << " | "
         << r.abs_diff << " | " << r.tolerance << " | "
         << (r.pass ? "yes" : "NO") << " |\n";
    os << "\nfailures: " << rep.failures << "\n";
    return os.str();
  }
  if (format == "plain") {
    std::ostringstream os;
    for (const VerificationRow& r : rep.rows) {
      os << (r.pass ? "pass " : "FAIL ") << r.id;
      if (!r.reading.empty()) os << " [" << r.reading << "]";
      os << " (" << r.route << ") diff=" << r.abs_diff << " tol=" << r.tolerance
         << "\n";
    }
    for (const EntryOutcome& e : rep.entries)
      if (!e.ok) os << "entry " << e.id << ": " << e.note << "\n";
    os << "failures: " << rep.failures << "\n";
    return os.str();
  }
  throw std::invalid_argument("render_report: unknown format '" + format + "'");
}

}  // namespace eishyp
