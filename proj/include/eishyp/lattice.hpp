#pragma once

#include <stdexcept>

#include "eishyp/complexbf.hpp"
#include "eishyp/family_spec.hpp"

namespace eishyp {

// Rectangular cutoff for the direct double sum: |m| <= Nm (shifted form:
// 0 <= m <= Nm on the folded index), inner line index up to Nn.
struct LatticeTruncation {
  long Nm = 40;
  long Nn = 10000;
};

struct LatticeResult {
  ComplexBF value;
  double error_estimate = 0.0;  // heuristic, from tail corrections
  long terms = 0;               // lattice points evaluated
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Direct summation over the lattice, independent of the reduction engine:
// symmetric pairing in n, Euler-Maclaurin integral corrections for the
// plain lines, one averaging step for the alternating ones, and a weighted
// tail estimate in m. Throws BudgetExceeded once more than budget lattice
// points would be evaluated.
LatticeResult eval_double_sum(const FamilySpec& spec,
                              const LatticeTruncation& trunc,
                              long budget = 100000000,
                              mpfr_prec_t prec = 128);

}  // namespace eishyp
