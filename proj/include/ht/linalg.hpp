#pragma once
#include <optional>
#include <utility>
#include <vector>

#include "ht/matrix.hpp"

namespace ht {

struct RrefResult {
  Mat reduced;
  std::vector<std::size_t> pivots;  // pivot column per pivot row, ascending
};

// Reduced row-echelon form over the rationals. The result is the canonical
// RREF, so it is independent of elimination order.
RrefResult rref(const Mat& m);

std::size_t rank(const Mat& m);

// Basis of {v : m v = 0}, as column vectors. Canonical: one vector per free
// column, free columns ascending, free coordinate set to 1.
std::vector<Mat> kernel_basis(const Mat& m);

// One exact solution of m x = b if the system is consistent (free variables
// set to zero), nullopt otherwise.
std::optional<std::vector<Rat>> solve(const Mat& m, const std::vector<Rat>& b);

// Exact determinant via fraction-free (Bareiss) elimination on the
// denominator-cleared integer matrix.
Rat determinant(const Mat& m);

// Inertia (p, q) of a symmetric matrix: numbers of positive and negative
// eigenvalues, computed by exact congruence diagonalization.
std::pair<int, int> inertia(const Mat& sym);

// Incremental row-echelon accumulator for large, highly redundant systems:
// rows are inserted one at a time and reduced against the current pivot rows.
// Pivot rows are kept normalized (leading coefficient 1).
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t cols) : cols_(cols) {}

  // Reduces the row in place and inserts it if nonzero. Returns true if the
  // row increased the rank.
  bool add_row(std::vector<Rat> row);

  std::size_t rank() const { return rows_.size(); }
  std::size_t cols() const { return cols_; }

  // Full back-substitution; afterwards rows form the canonical RREF.
  void reduce_fully();

  // Kernel of the accumulated row space (same convention as kernel_basis).
  // Calls reduce_fully internally.
  std::vector<std::vector<Rat>> kernel();

  const std::vector<std::vector<Rat>>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivot_cols() const { return pivot_cols_; }

 private:
  std::size_t cols_;
  std::vector<std::vector<Rat>> rows_;        // sorted by pivot column
  std::vector<std::size_t> pivot_cols_;
};

}  // namespace ht
