#include "kgroth/linsolve.hpp"

#include "kgroth/errors.hpp"

namespace kgroth {

namespace {

// x -= f * y
void subtract_multiple(SparseVector& x, const mpq_class& f, const SparseVector& y) {
  for (const auto& [k, v] : y) {
    auto [it, inserted] = x.try_emplace(k, 0);
    it->second -= f * v;
    if (it->second == 0) x.erase(it);
  }
}

void scale(SparseVector& x, const mpq_class& f) {
  for (auto& entry : x) entry.second *= f;
}

mpq_class dot(const SparseVector& x, const SparseVector& y) {
  mpq_class sum = 0;
  const SparseVector& small = x.size() <= y.size() ? x : y;
  const SparseVector& large = x.size() <= y.size() ? y : x;
  for (const auto& [k, v] : small) {
    if (auto it = large.find(k); it != large.end()) sum += v * it->second;
  }
  return sum;
}

}  // namespace

ExactSolver::ExactSolver(int rows, std::vector<SparseVector> columns)
    : rows_(rows), cols_(static_cast<int>(columns.size())) {
  std::vector<SparseVector> a(rows);
  std::vector<SparseVector> e(rows);
  for (int j = 0; j < cols_; ++j) {
    for (const auto& [r, v] : columns[j]) {
      if (r < 0 || r >= rows) throw InvariantViolation("ExactSolver: row index out of range");
      if (v != 0) a[r][j] = v;
    }
  }
  for (int r = 0; r < rows; ++r) e[r][r] = 1;

  std::vector<bool> used(rows, false);
  std::vector<int> pivot_rows;
  for (int j = 0; j < cols_; ++j) {
    int p = -1;
    for (int r = 0; r < rows; ++r) {
      if (used[r] || !a[r].count(j)) continue;
      if (p < 0 || a[r].size() < a[p].size()) p = r;
    }
    if (p < 0) continue;
    used[p] = true;
    const mpq_class inv = 1 / mpq_class(a[p].at(j));
    scale(a[p], inv);
    scale(e[p], inv);
    for (int r = 0; r < rows; ++r) {
      if (r == p) continue;
      auto it = a[r].find(j);
      if (it == a[r].end()) continue;
      const mpq_class f = it->second;
      subtract_multiple(a[r], f, a[p]);
      subtract_multiple(e[r], f, e[p]);
    }
    pivot_cols_.push_back(j);
    pivot_rows.push_back(p);
  }
  for (int p : pivot_rows) transform_.push_back(std::move(e[p]));
  for (int r = 0; r < rows; ++r) {
    if (!used[r]) left_null_.push_back(std::move(e[r]));
  }
}

std::optional<std::vector<mpq_class>> ExactSolver::solve(const SparseVector& b) const {
  for (const auto& row : left_null_) {
    if (dot(row, b) != 0) return std::nullopt;
  }
  std::vector<mpq_class> c(cols_, 0);
  for (std::size_t k = 0; k < pivot_cols_.size(); ++k) c[pivot_cols_[k]] = dot(transform_[k], b);
  return c;
}

}  // namespace kgroth
