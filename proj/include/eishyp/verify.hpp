#pragma once

#include <string>
#include <vector>

#include "eishyp/bigfloat.hpp"
#include "eishyp/catalog.hpp"
#include "eishyp/lattice.hpp"

namespace eishyp {

enum class VerifyMode { series, oracle, both };

struct VerifyOptions {
  mpfr_prec_t precision = 256;
  BigFloat tol_series = two_pow(-200, 64);
  double tol_oracle = 1e-5;
  long budget = 100000000;
  LatticeTruncation trunc;
  VerifyMode mode = VerifyMode::both;
  bool timings = false;  // when false, elapsed_ms is reported as 0
};

struct VerificationRow {
  std::string id;
  std::string route;    // "series" or "oracle"
  std::string reading;  // "", "primary", "alternate", "half-spacing", "full-spacing"
  std::string lhs;
  std::string rhs;
  std::string abs_diff;
  std::string tolerance;
  bool pass = false;
  long elapsed_ms = 0;
};

struct EntryOutcome {
  std::string id;
  bool ok = false;
  std::string note;
};

struct VerificationReport {
  std::vector<VerificationRow> rows;
  std::vector<EntryOutcome> entries;
  int failures = 0;  // entries (or standalone rows) that did not check out
};

// Checks every entry. Series route: high-precision reduction against the
// exact constant; entries with an alternate reading or a scaling flag must
// pass under exactly one reading. Oracle route: direct lattice summation for
// double entries (plain cutoff summation for single ones) at tol_oracle.
VerificationReport verify_catalog(const std::vector<CatalogEntry>& entries,
                                  const VerifyOptions& opt);

// Matrix identity checks with the built-in test weights g = sech(m pi/a),
// f = g / cosh(m pi/a): closure of the even-exponent reductions against the
// normalized triangular matrices for k <= k_max, the componentwise
// inverse-matrix relation for k <= min(k_max, 3), and the three displayed
// low-order pairings between the two families.
VerificationReport verify_matrix_relations(int k_max,
                                           const std::vector<Rational>& a_values,
                                           mpfr_prec_t precision,
                                           bool timings = false);

// "json" (stable schema, 2-space indent), "csv", "markdown", or "plain".
std::string render_report(const VerificationReport& report,
                          const std::string& format);

}  // namespace eishyp
