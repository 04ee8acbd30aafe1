#pragma once

// Exact sparse Gauss-Jordan elimination over the rationals.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace kgroth {

using SparseVector = std::map<int, mpq_class>;

/// Factors a rows x cols matrix A once (E A = RREF(A)) and then solves A c = b
/// for any number of right-hand sides.
class ExactSolver {
 public:
  /// `columns[j]` holds the nonzero entries (row -> value) of column j.
  ExactSolver(int rows, std::vector<SparseVector> columns);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int rank() const { return static_cast<int>(pivot_cols_.size()); }

  /// The solution with free variables set to zero, or nullopt when the system
  /// is inconsistent.
  std::optional<std::vector<mpq_class>> solve(const SparseVector& b) const;

 private:
  int rows_;
  int cols_;
  std::vector<int> pivot_cols_;          // pivot column of reduced row r
  std::vector<SparseVector> transform_;  // rows of E for the pivot rows
  std::vector<SparseVector> left_null_;  // rows of E whose reduced row is zero
};

}  // namespace kgroth
