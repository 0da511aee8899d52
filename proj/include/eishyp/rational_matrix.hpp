#pragma once

#include <utility>
#include <vector>

#include "eishyp/rational.hpp"

namespace eishyp {

// Dense exact-rational matrix, row major. Small sizes only (the transformation
// matrices are k x k with k <= 8 in practice).
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

  static RationalMatrix identity(int n) {
    RationalMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  RationalMatrix operator*(const RationalMatrix& o) const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;
  bool operator==(const RationalMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// k x k normalized transformation matrices, 1-indexed coefficients placed at
// 0-indexed entries: build_matrix_A(k).at(i-1, j-1) == a_coeff_norm(i, j).
RationalMatrix build_matrix_A(int k);
RationalMatrix build_matrix_B(int k);

// Exact inverse of a lower-triangular matrix with nonzero diagonal, by forward
// substitution. Throws std::invalid_argument if the shape or zero structure is
// wrong.
RationalMatrix invert_lower_triangular(const RationalMatrix& m);

// k-th (last, 1-indexed) rows of A_k^{-1} and B_k^{-1}.
std::pair<std::vector<Rational>, std::vector<Rational>> relation_row(int k);

}  // namespace eishyp
