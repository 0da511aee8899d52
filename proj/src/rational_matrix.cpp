#include "eishyp/rational_matrix.hpp"

#include <stdexcept>

#include "eishyp/coefficients.hpp"

namespace eishyp {

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& p = at(i, k);
      if (p == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += p * o.at(k, j);
    }
  return r;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix apply: shape mismatch");
  std::vector<Rational> r(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
  return r;
}

RationalMatrix build_matrix_A(int k) {
  if (k < 1) throw std::invalid_argument("build_matrix_A: k must be >= 1");
  RationalMatrix m(k, k);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= i; ++j) m.at(i - 1, j - 1) = a_coeff_norm(i, j);
  return m;
}

RationalMatrix build_matrix_B(int k) {
  if (k < 1) throw std::invalid_argument("build_matrix_B: k must be >= 1");
  RationalMatrix m(k, k);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= i; ++j) m.at(i - 1, j - 1) = b_coeff_norm(i, j);
  return m;
}

RationalMatrix invert_lower_triangular(const RationalMatrix& m) {
  const int n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("invert_lower_triangular: not square");
  for (int i = 0; i < n; ++i) {
    if (m.at(i, i) == 0) throw std::invalid_argument("invert_lower_triangular: zero diagonal");
    for (int j = i + 1; j < n; ++j)
      if (m.at(i, j) != 0) throw std::invalid_argument("invert_lower_triangular: not lower triangular");
  }
  RationalMatrix inv(n, n);
  // Column c of the inverse solves L x = e_c.
  for (int c = 0; c < n; ++c) {
    for (int i = c; i < n; ++i) {
      Rational rhs = (i == c) ? Rational(1) : Rational(0);
      for (int j = c; j < i; ++j) rhs -= m.at(i, j) * inv.at(j, c);
      inv.at(i, c) = rhs / m.at(i, i);
    }
  }
  return inv;
}

std::pair<std::vector<Rational>, std::vector<Rational>> relation_row(int k) {
  if (k < 1) throw std::invalid_argument("relation_row: k must be >= 1");
  RationalMatrix ai = invert_lower_triangular(build_matrix_A(k));
  RationalMatrix bi = invert_lower_triangular(build_matrix_B(k));
  std::vector<Rational> fa(static_cast<size_t>(k)), gb(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) {
    fa[j] = ai.at(k - 1, j);
    gb[j] = bi.at(k - 1, j);
  }
  return {fa, gb};
}

}  // namespace eishyp
