#pragma once

#include <optional>
#include <string>
#include <vector>

#include "eishyp/const_expr.hpp"
#include "eishyp/family_spec.hpp"

namespace eishyp {

// One closed-form identity. Single entries sum the weight over m >= 1; double
// entries sum the family over the full lattice. The right side is an exact
// constant; alt_rhs, when present, records a competing reading of which
// exactly one can be correct. adjudicate_scaling marks odd-line entries whose
// reduction is run under both kernel-argument readings, again requiring
// exactly one to reproduce the right side.
struct CatalogEntry {
  std::string id;
  bool is_double = false;
  FamilySpec family;  // populated for double entries
  WeightFn weight;    // the summand for single entries
  ConstExpr rhs;
  std::optional<ConstExpr> alt_rhs;
  bool pure_imaginary = false;
  bool adjudicate_scaling = false;
  std::string description;
};

// Text catalog: [entry] blocks of 'key = value' lines, '#' comments. Keys:
// id, kind (single|double), family, exponent, a, shifted, b, weight, rhs,
// alt_rhs, pure_imaginary, adjudicate_scaling, description. Throws
// std::runtime_error with the offending line on malformed input.
std::vector<CatalogEntry> load_catalog(const std::string& path);

// Resolves the data directory: EISHYP_DATA_DIR when set, else "data".
std::string default_data_dir();

}  // namespace eishyp
