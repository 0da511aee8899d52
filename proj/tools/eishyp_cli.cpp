#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "eishyp/catalog.hpp"
#include "eishyp/coefficients.hpp"
#include "eishyp/family.hpp"
#include "eishyp/lattice.hpp"
#include "eishyp/trig_deriv.hpp"
#include "eishyp/verify.hpp"

namespace {

using namespace eishyp;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct CliConfig {
  long precision_bits = 256;
  std::string tol_series = "2^-200";
  double tol_oracle = 1e-5;
  std::string catalog_path;
  std::string format = "json";
  std::uint64_t seed = 0;  // reserved for randomized checks; reports are deterministic
  long budget = 100000000;
  std::string mode = "both";
  bool timings = false;
  long lattice_Nm = 40;
  long lattice_Nn = 10000;
  std::string out_path;
};

// "2^-200" or a decimal literal like "1e-60".
BigFloat parse_tolerance(const std::string& text) {
  if (text.rfind("2^", 0) == 0) {
    long e = 0;
    try {
      size_t used = 0;
      e = std::stol(text.substr(2), &used);
      if (used != text.size() - 2) throw std::invalid_argument(text);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad tolerance '" + text + "'");
    }
    return two_pow(e, 64);
  }
  return BigFloat(text, 64);
}

VerifyMode mode_from_name(const std::string& name) {
  if (name == "series") return VerifyMode::series;
  if (name == "oracle") return VerifyMode::oracle;
  if (name == "both") return VerifyMode::both;
  throw std::invalid_argument("bad mode '" + name + "'");
}

size_t print_digits(long prec) {
  return static_cast<size_t>(static_cast<double>(prec) * 0.30103) + 2;
}

// "re" or "re,im", optional surrounding parentheses.
ComplexBF parse_complex(const std::string& text, mpfr_prec_t prec) {
  std::string s = text;
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  ComplexBF z{BigFloat(prec), BigFloat(prec)};
  auto comma = s.find(',');
  if (comma == std::string::npos) {
    z.re = BigFloat(s, prec);
  } else {
    z.re = BigFloat(s.substr(0, comma), prec);
    z.im = BigFloat(s.substr(comma + 1), prec);
  }
  return z;
}

void emit(const std::string& text, const CliConfig& cfg) {
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out_path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open output file '" + cfg.out_path + "'");
  f << text;
  if (!f) throw std::invalid_argument("write failed on '" + cfg.out_path + "'");
}

struct KV {
  std::string key;
  std::string value;
};

std::string render_kv(const std::vector<KV>& kv, const std::string& format) {
  std::ostringstream out;
  if (format == "json") {
    nlohmann::ordered_json j;
    for (const auto& p : kv) j[p.key] = p.value;
    out << j.dump(2) << "\n";
  } else if (format == "csv") {
    out << "key,value\n";
    for (const auto& p : kv) out << p.key << "," << p.value << "\n";
  } else if (format == "markdown") {
    out << "| key | value |\n|---|---|\n";
    for (const auto& p : kv) out << "| " << p.key << " | " << p.value << " |\n";
  } else {
    for (const auto& p : kv) out << p.key << ": " << p.value << "\n";
  }
  return out.str();
}

// ---- coeff ----------------------------------------------------------------

int run_coeff(const CliConfig& cfg, int k_max, int m, bool recurrence) {
  auto value = [&](int k, int l) {
    return recurrence ? coefficient_A_recurrence(k, m, l) : coefficient_A(k, m, l);
  };
  std::ostringstream out;
  if (cfg.format == "json") {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["k_max"] = k_max;
    j["route"] = recurrence ? "recurrence" : "direct";
    j["rows"] = nlohmann::ordered_json::array();
    for (int l = 0; l <= k_max; ++l) {
      nlohmann::ordered_json row;
      row["l"] = l;
      row["values"] = nlohmann::ordered_json::array();
      for (int k = 0; k <= k_max; ++k) row["values"].push_back(to_string(value(k, l)));
      j["rows"].push_back(row);
    }
    out << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    out << "l";
    for (int k = 0; k <= k_max; ++k) out << ",k=" << k;
    out << "\n";
    for (int l = 0; l <= k_max; ++l) {
      out << l;
      for (int k = 0; k <= k_max; ++k) out << "," << to_string(value(k, l));
      out << "\n";
    }
  } else if (cfg.format == "markdown") {
    out << "| l \\ k |";
    for (int k = 0; k <= k_max; ++k) out << " " << k << " |";
    out << "\n|---|";
    for (int k = 0; k <= k_max; ++k) out << "---|";
    out << "\n";
    for (int l = 0; l <= k_max; ++l) {
      out << "| " << l << " |";
      for (int k = 0; k <= k_max; ++k) out << " " << to_string(value(k, l)) << " |";
      out << "\n";
    }
  } else {
    out << "# A_{k,m}(l), m=" << m << ", rows l, columns k=0.." << k_max << "\n";
    for (int l = 0; l <= k_max; ++l) {
      out << "l=" << l << ":";
      for (int k = 0; k <= k_max; ++k) out << " " << to_string(value(k, l));
      out << "\n";
    }
  }
  emit(out.str(), cfg);
  return kExitOk;
}

// ---- deriv ----------------------------------------------------------------

TrigKind trig_kind_from_name(const std::string& name, int m) {
  TrigKind kind;
  if (name == "csc") {
    kind.base = TrigBase::csc_odd_power;
    kind.m = m;
    return kind;
  }
  if (m != 1) throw std::invalid_argument("-m applies to the csc kind only");
  kind.m = 1;
  if (name == "cot") kind.base = TrigBase::cot;
  else if (name == "sec") kind.base = TrigBase::sec;
  else if (name == "tan") kind.base = TrigBase::tan;
  else throw std::invalid_argument("bad kind '" + name + "' (cot, csc, sec, tan)");
  return kind;
}

int run_deriv(const CliConfig& cfg, const std::string& kind_name, int order,
              const std::string& s_text, int m, bool check) {
  mpfr_prec_t prec = cfg.precision_bits;
  TrigKind kind = trig_kind_from_name(kind_name, m);
  ComplexBF s = parse_complex(s_text, prec);
  ComplexBF v = deriv_formula(kind, order, s, prec);
  size_t digits = print_digits(prec);

  std::vector<KV> kv;
  kv.push_back({"kind", kind_name});
  if (kind.base == TrigBase::csc_odd_power) kv.push_back({"m", std::to_string(m)});
  kv.push_back({"order", std::to_string(order)});
  kv.push_back({"s_re", s.re.to_string(digits)});
  kv.push_back({"s_im", s.im.to_string(digits)});
  kv.push_back({"value_re", v.re.to_string(digits)});
  kv.push_back({"value_im", v.im.to_string(digits)});

  int rc = kExitOk;
  if (check) {
    ComplexBF w = deriv_oracle(kind, order, s, prec);
    BigFloat diff = abs(v - w);
    BigFloat scale = abs(v);
    if (scale < BigFloat(1, prec)) scale = BigFloat(1, prec);
    BigFloat rel = diff / scale;
    BigFloat tol = two_pow(-(prec - 16), 64);
    bool pass = rel <= tol;
    kv.push_back({"oracle_rel_dev", rel.to_string(6)});
    kv.push_back({"oracle_tolerance", tol.to_string(6)});
    kv.push_back({"oracle_pass", pass ? "true" : "false"});
    if (!pass) rc = kExitVerifyFail;
  }
  emit(render_kv(kv, cfg.format), cfg);
  return rc;
}

// ---- eval -----------------------------------------------------------------

int run_eval(const CliConfig& cfg, const std::string& family_name, int exponent,
             const std::string& weight_text, const std::string& a_text, bool shifted,
             const std::string& b_text, bool cross_check, const std::string& kernel_arg) {
  FamilySpec spec;
  spec.kind = family_kind_from_name(family_name);
  spec.exponent = exponent;
  spec.a = rational_from_string(a_text);
  spec.weight = WeightFn::parse(weight_text);
  spec.shifted = shifted;
  spec.b = rational_from_string(b_text);

  OddLineArg odd_arg = OddLineArg::half_spacing;
  if (kernel_arg == "full") odd_arg = OddLineArg::full_spacing;
  else if (kernel_arg != "half") throw std::invalid_argument("bad --kernel-arg (half, full)");

  mpfr_prec_t prec = cfg.precision_bits;
  FamilyEval ev = eval_family(spec, prec, odd_arg);
  size_t digits = print_digits(prec);

  std::vector<KV> kv;
  kv.push_back({"family", family_name});
  kv.push_back({"exponent", std::to_string(exponent)});
  kv.push_back({"a", to_string(spec.a)});
  if (spec.shifted) kv.push_back({"b", to_string(spec.b)});
  kv.push_back({"weight", spec.weight.to_string()});
  kv.push_back({"value_re", ev.value.re.to_string(digits)});
  kv.push_back({"value_im", ev.value.im.to_string(digits)});
  kv.push_back({"tail_bound", ev.tail_bound.to_string(4)});
  kv.push_back({"terms", std::to_string(ev.terms)});

  int rc = kExitOk;
  if (cross_check) {
    LatticeTruncation trunc{cfg.lattice_Nm, cfg.lattice_Nn};
    LatticeResult lat = eval_double_sum(spec, trunc, cfg.budget);
    BigFloat diff = abs(ev.value - lat.value);
    BigFloat tol(128);
    mpfr_set_d(tol.raw(), cfg.tol_oracle, MPFR_RNDN);
    bool pass = diff <= tol;
    kv.push_back({"lattice_re", lat.value.re.to_string(20)});
    kv.push_back({"lattice_im", lat.value.im.to_string(20)});
    kv.push_back({"lattice_error_estimate", std::to_string(lat.error_estimate)});
    kv.push_back({"lattice_terms", std::to_string(lat.terms)});
    kv.push_back({"cross_check_diff", diff.to_string(6)});
    kv.push_back({"cross_check_tolerance", tol.to_string(6)});
    kv.push_back({"cross_check_pass", pass ? "true" : "false"});
    if (!pass) rc = kExitVerifyFail;
  }
  emit(render_kv(kv, cfg.format), cfg);
  return rc;
}

// ---- verify ---------------------------------------------------------------

int run_verify(const CliConfig& cfg, bool all, const std::vector<std::string>& ids,
               int matrix_k_max) {
  VerifyOptions opt;
  opt.precision = cfg.precision_bits;
  opt.tol_series = parse_tolerance(cfg.tol_series);
  opt.tol_oracle = cfg.tol_oracle;
  opt.budget = cfg.budget;
  opt.trunc = LatticeTruncation{cfg.lattice_Nm, cfg.lattice_Nn};
  opt.mode = mode_from_name(cfg.mode);
  opt.timings = cfg.timings;

  bool want_catalog = all || !ids.empty();
  int matrix_k = all ? 3 : matrix_k_max;

  VerificationReport report;
  if (want_catalog) {
    std::string path = cfg.catalog_path.empty()
                           ? default_data_dir() + "/catalog.txt"
                           : cfg.catalog_path;
    std::vector<CatalogEntry> entries = load_catalog(path);
    if (!all) {
      std::vector<CatalogEntry> picked;
      for (const auto& want : ids) {
        bool found = false;
        for (const auto& e : entries) {
          if (e.id == want) {
            picked.push_back(e);
            found = true;
            break;
          }
        }
        if (!found) throw std::invalid_argument("no catalog entry with id '" + want + "'");
      }
      entries = picked;
    }
    report = verify_catalog(entries, opt);
  }
  if (matrix_k > 0) {
    std::vector<Rational> a_values = {make_rational(1, 1), make_rational(2, 1),
                                      make_rational(1, 2)};
    VerificationReport mat =
        verify_matrix_relations(matrix_k, a_values, opt.precision, opt.timings);
    report.rows.insert(report.rows.end(), mat.rows.begin(), mat.rows.end());
    report.entries.insert(report.entries.end(), mat.entries.begin(), mat.entries.end());
    report.failures += mat.failures;
  }
  emit(render_report(report, cfg.format), cfg);
  return report.failures == 0 ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and high-precision identities for weighted lattice sums"};
  app.require_subcommand(1);

  CliConfig cfg;
  app.add_option("--precision-bits", cfg.precision_bits, "working precision in bits")
      ->check(CLI::Range(64L, 1048576L))
      ->envname("EISHYP_PRECISION_BITS");
  app.add_option("--tol-series", cfg.tol_series, "series tolerance, '2^-N' or decimal")
      ->envname("EISHYP_TOL_SERIES");
  app.add_option("--tol-oracle", cfg.tol_oracle, "lattice cross-check tolerance")
      ->envname("EISHYP_TOL_ORACLE");
  app.add_option("--catalog", cfg.catalog_path, "catalog file path")
      ->envname("EISHYP_CATALOG");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "markdown", "plain"}))
      ->envname("EISHYP_FORMAT");
  app.add_option("--seed", cfg.seed, "seed for randomized checks")
      ->envname("EISHYP_SEED");
  app.add_option("--budget", cfg.budget, "lattice term budget")
      ->check(CLI::PositiveNumber)
      ->envname("EISHYP_BUDGET");
  app.add_option("--mode", cfg.mode, "verification route")
      ->check(CLI::IsMember({"series", "oracle", "both"}))
      ->envname("EISHYP_MODE");
  app.add_flag("--timings", cfg.timings, "report wall-clock timings (non-deterministic)")
      ->envname("EISHYP_TIMINGS");
  app.add_option("--Nm", cfg.lattice_Nm, "lattice truncation in the weighted index")
      ->check(CLI::PositiveNumber)
      ->envname("EISHYP_NM");
  app.add_option("--Nn", cfg.lattice_Nn, "lattice truncation in the line index")
      ->check(CLI::Range(8L, 1000000000L))
      ->envname("EISHYP_NN");
  app.add_option("--out", cfg.out_path, "write the report to this file instead of stdout")
      ->envname("EISHYP_OUT");

  int rc = kExitOk;

  auto* coeff = app.add_subcommand("coeff", "print the coefficient table A_{k,m}(l)");
  coeff->fallthrough();
  int coeff_k_max = 7;
  int coeff_m = 1;
  bool coeff_rec = false;
  coeff->add_option("k_max", coeff_k_max, "largest k")->required()->check(CLI::Range(0, 64));
  coeff->add_option("-m,--m", coeff_m, "family index m >= 1")->check(CLI::Range(1, 64));
  coeff->add_flag("--recurrence", coeff_rec, "use the two-term recurrence route");
  coeff->callback([&] { rc = run_coeff(cfg, coeff_k_max, coeff_m, coeff_rec); });

  auto* deriv = app.add_subcommand("deriv", "closed-form trigonometric derivative");
  deriv->fallthrough();
  std::string deriv_kind;
  int deriv_order = 0;
  std::string deriv_s;
  int deriv_m = 1;
  bool deriv_check = false;
  deriv->add_option("kind", deriv_kind, "cot, csc, sec or tan")->required();
  deriv->add_option("order", deriv_order, "derivative order")->required()->check(CLI::Range(0, 256));
  deriv->add_option("s", deriv_s, "evaluation point, 're' or 're,im'")->required();
  deriv->add_option("-m,--m", deriv_m, "csc power index: the function is 1/sin^{2m-1}")
      ->check(CLI::Range(1, 64));
  deriv->add_flag("--check", deriv_check, "cross-check against the Taylor-series oracle");
  deriv->callback(
      [&] { rc = run_deriv(cfg, deriv_kind, deriv_order, deriv_s, deriv_m, deriv_check); });

  auto* eval = app.add_subcommand("eval", "evaluate a weighted lattice double series");
  eval->fallthrough();
  std::string eval_family;
  int eval_exponent = 2;
  std::string eval_weight;
  std::string eval_a = "1";
  bool eval_shifted = false;
  std::string eval_b = "1";
  bool eval_cross = false;
  std::string eval_kernel_arg = "half";
  eval->add_option("family", eval_family, "alternating, plain, alternating-odd or plain-odd")
      ->required();
  eval->add_option("exponent", eval_exponent, "exponent of the lattice point")
      ->required()
      ->check(CLI::Range(1, 64));
  eval->add_option("weight", eval_weight, "weight on the real index, e.g. 'm^2 * csch(1)'")
      ->required();
  eval->add_option("-a,--a", eval_a, "imaginary line spacing, a rational");
  eval->add_flag("--shifted", eval_shifted, "real part runs over 2bm + b, m over all integers");
  eval->add_option("-b,--b", eval_b, "real spacing of the shifted form");
  eval->add_flag("--cross-check", eval_cross, "also sum the lattice directly and compare");
  eval->add_option("--kernel-arg", eval_kernel_arg,
                   "odd-line kernel argument reading: half (m pi/2a) or full (m pi/a)");
  eval->callback([&] {
    rc = run_eval(cfg, eval_family, eval_exponent, eval_weight, eval_a, eval_shifted, eval_b,
                  eval_cross, eval_kernel_arg);
  });

  auto* verify = app.add_subcommand("verify", "check catalog identities and matrix relations");
  verify->fallthrough();
  bool verify_all = false;
  std::vector<std::string> verify_ids;
  int verify_matrix = 0;
  auto* opt_all = verify->add_flag("--all", verify_all, "full catalog plus matrix checks to k=3");
  auto* opt_ids = verify->add_option("--ids", verify_ids, "comma-separated catalog entry ids")
                      ->delimiter(',');
  auto* opt_mat = verify->add_option("--matrix", verify_matrix, "matrix relation checks up to this k")
                      ->check(CLI::Range(1, 16));
  opt_all->excludes(opt_ids)->excludes(opt_mat);
  verify->callback([&] {
    if (!verify_all && verify_ids.empty() && verify_matrix == 0)
      throw CLI::ValidationError("verify", "pass --all, --ids or --matrix");
    rc = run_verify(cfg, verify_all, verify_ids, verify_matrix);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const eishyp::BudgetExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }
  return rc;
}
