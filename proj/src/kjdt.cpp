#include "kgroth/kjdt.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "kgroth/errors.hpp"

namespace kgroth {

// ---------------------------------------------------------------- SlideState

SlideState::SlideState(int rows, int cols) : rows_(rows), cols_(cols), grid_(static_cast<std::size_t>(rows) * cols, kEmpty) {
  if (rows < 0 || cols < 0) throw InputError("negative rectangle dimensions");
}

SlideState SlideState::from_tableau(const Tableau& t, int rows, int cols) {
  if (t.num_rows() > rows || t.num_cols() > cols) throw InputError("tableau does not fit in the rectangle");
  SlideState s(rows, cols);
  for (int r = 0; r < t.num_rows(); ++r) {
    for (int c = 0; c < static_cast<int>(t.rows()[r].size()); ++c) s.set({r, c}, t.at(r, c));
  }
  return s;
}

SlideState SlideState::from_grid(std::vector<std::vector<int>> grid) {
  const int rows = static_cast<int>(grid.size());
  const int cols = rows ? static_cast<int>(grid.front().size()) : 0;
  SlideState s(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (static_cast<int>(grid[r].size()) != cols) throw InputError("ragged slide grid");
    for (int c = 0; c < cols; ++c) {
      if (grid[r][c] < kBullet) throw InputError("bad slide cell value");
      s.set({r, c}, grid[r][c]);
    }
  }
  return s;
}

bool SlideState::has_bullets() const {
  return std::find(grid_.begin(), grid_.end(), kBullet) != grid_.end();
}

int SlideState::max_label() const {
  return grid_.empty() ? 0 : std::max(0, *std::max_element(grid_.begin(), grid_.end()));
}

std::vector<Cell> SlideState::labeled_cells() const {
  std::vector<Cell> out;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (is_label(r, c)) out.push_back({r, c});
    }
  }
  return out;
}

namespace {

// reach[r] = largest column holding a label in rows >= r, or -1. Cell (r, c)
// lies in the order ideal generated by the labels iff c <= reach[r].
std::vector<int> ideal_reach(const SlideState& s) {
  std::vector<int> reach(s.rows(), -1);
  int best = -1;
  for (int r = s.rows() - 1; r >= 0; --r) {
    for (int c = s.cols() - 1; c > best; --c) {
      if (s.is_label(r, c)) {
        best = c;
        break;
      }
    }
    reach[r] = best;
  }
  return reach;
}

}  // namespace

bool SlideState::is_increasing() const {
  const auto reach = ideal_reach(*this);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      const bool in_ideal = c <= reach[r];
      if (!in_ideal && at(r, c) != kEmpty) return false;
      if (in_ideal && !is_label(r, c)) {
        // Inner (unlabeled) part of the skew shape must itself be an order ideal.
        if (r > 0 && is_label(r - 1, c)) return false;
        if (c > 0 && is_label(r, c - 1)) return false;
      }
      if (!is_label(r, c)) continue;
      if (c + 1 < cols_ && is_label(r, c + 1) && at(r, c) >= at(r, c + 1)) return false;
      if (r + 1 < rows_ && is_label(r + 1, c) && at(r, c) >= at(r + 1, c)) return false;
    }
  }
  return true;
}

bool SlideState::is_reverse_straight() const {
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (is_label(r, c)) continue;
      if (r > 0 && is_label(r - 1, c)) return false;
      if (c > 0 && is_label(r, c - 1)) return false;
    }
  }
  return true;
}

std::vector<int> SlideState::leftmost_labeled_column() const {
  for (int c = 0; c < cols_; ++c) {
    std::vector<int> out;
    for (int r = 0; r < rows_; ++r) {
      if (is_label(r, c)) out.push_back(at(r, c));
    }
    if (!out.empty()) return out;
  }
  return {};
}

std::vector<int> SlideState::row_reading_word() const {
  std::vector<int> out;
  for (int r = rows_ - 1; r >= 0; --r) {
    for (int c = 0; c < cols_; ++c) {
      if (is_label(r, c)) out.push_back(at(r, c));
    }
  }
  return out;
}

std::string SlideState::to_string() const {
  std::string out;
  for (int r = 0; r < rows_; ++r) {
    if (r) out += "/";
    for (int c = 0; c < cols_; ++c) {
      if (c) out += ",";
      const int v = at(r, c);
      out += v == kEmpty ? "." : v == kBullet ? "*" : std::to_string(v);
    }
  }
  return out;
}

std::vector<Cell> outer_corners(const SlideState& s) {
  const auto reach = ideal_reach(s);
  std::vector<Cell> out;
  for (int r = 0; r < s.rows(); ++r) {
    const int c = reach[r] + 1;
    if (c >= s.cols()) continue;
    if (r > 0 && c > reach[r - 1]) continue;
    out.push_back({r, c});
  }
  return out;
}

// -------------------------------------------------------------------- switch

Ribbon switch_ribbon(const Ribbon& ribbon) {
  std::map<Cell, std::size_t> where;
  for (std::size_t k = 0; k < ribbon.size(); ++k) {
    if (!where.emplace(ribbon[k].cell, k).second) {
      throw StructuralError("ribbon repeats a cell", {{ribbon[k].cell.row, ribbon[k].cell.col}});
    }
  }
  auto has = [&](int r, int c) { return where.count({r, c}) > 0; };

  std::map<int, std::vector<std::pair<int, int>>> by_row;
  std::map<int, std::vector<std::pair<int, int>>> by_col;
  for (const auto& rc : ribbon) {
    const auto [r, c] = rc.cell;
    by_row[r].emplace_back(r, c);
    by_col[c].emplace_back(r, c);
    if (has(r, c + 1) && has(r + 1, c) && has(r + 1, c + 1)) {
      throw StructuralError("ribbon contains a 2x2 block", {{r, c}, {r, c + 1}, {r + 1, c}, {r + 1, c + 1}});
    }
    for (const Cell next : {Cell{r, c + 1}, Cell{r + 1, c}}) {
      auto it = where.find(next);
      if (it != where.end() && ribbon[it->second].symbol == rc.symbol) {
        throw StructuralError("adjacent ribbon boxes carry the same symbol", {{r, c}, {next.row, next.col}});
      }
    }
  }
  for (const auto* lines : {&by_row, &by_col}) {
    for (const auto& [line, cells] : *lines) {
      if (cells.size() > 2) throw StructuralError("ribbon has more than two boxes in a row or column", cells);
    }
  }

  Ribbon out = ribbon;
  std::vector<bool> seen(ribbon.size(), false);
  for (std::size_t start = 0; start < ribbon.size(); ++start) {
    if (seen[start]) continue;
    std::vector<std::size_t> component{start};
    seen[start] = true;
    for (std::size_t head = 0; head < component.size(); ++head) {
      const auto [r, c] = ribbon[component[head]].cell;
      for (const Cell next : {Cell{r - 1, c}, Cell{r + 1, c}, Cell{r, c - 1}, Cell{r, c + 1}}) {
        auto it = where.find(next);
        if (it != where.end() && !seen[it->second]) {
          seen[it->second] = true;
          component.push_back(it->second);
        }
      }
    }
    if (component.size() < 2) continue;
    for (std::size_t k : component) {
      out[k].symbol = ribbon[k].symbol == RibbonSymbol::Bullet ? RibbonSymbol::Label : RibbonSymbol::Bullet;
    }
  }
  return out;
}

// --------------------------------------------------------------------- slides

SlideState rev_kjdt(const SlideState& s, const std::vector<Cell>& corners) {
  if (s.has_bullets()) throw InputError("rev_kjdt: state already holds bullets");
  if (corners.empty()) throw InputError("rev_kjdt: empty corner set");
  const auto available = outer_corners(s);
  SlideState out = s;
  for (const auto& corner : corners) {
    if (std::find(available.begin(), available.end(), corner) == available.end()) {
      throw InputError("rev_kjdt: (" + std::to_string(corner.row) + "," + std::to_string(corner.col) +
                       ") is not an outer corner");
    }
    out.set(corner, SlideState::kBullet);
  }

  for (int v = s.max_label(); v >= 1; --v) {
    Ribbon ribbon;
    for (int r = 0; r < out.rows(); ++r) {
      for (int c = 0; c < out.cols(); ++c) {
        const int x = out.at(r, c);
        if (x == SlideState::kBullet) ribbon.push_back({{r, c}, RibbonSymbol::Bullet});
        else if (x == v) ribbon.push_back({{r, c}, RibbonSymbol::Label});
      }
    }
    for (const auto& rc : switch_ribbon(ribbon)) {
      out.set(rc.cell, rc.symbol == RibbonSymbol::Bullet ? SlideState::kBullet : v);
    }
  }

  for (int r = 0; r < out.rows(); ++r) {
    for (int c = 0; c < out.cols(); ++c) {
      if (out.at(r, c) == SlideState::kBullet) out.set({r, c}, SlideState::kEmpty);
    }
  }
  if (!out.is_increasing()) {
    throw InvariantViolation("rev_kjdt produced a non-increasing state: " + out.to_string());
  }
  return out;
}

std::vector<SlideState> rev_krect_trace(const SlideState& s, CornerPolicy policy) {
  if (s.has_bullets()) throw InputError("rev_krect: state already holds bullets");
  const long cap = static_cast<long>(s.rows()) * s.cols() * s.rows() * s.cols();
  std::vector<SlideState> trace{s};
  while (!trace.back().is_reverse_straight()) {
    if (static_cast<long>(trace.size()) > cap) throw InvariantViolation("rev_krect exceeded its iteration cap");
    auto corners = outer_corners(trace.back());
    if (corners.empty()) throw InvariantViolation("rev_krect: no outer corner but not reverse straight");
    auto by_col = [](const Cell& a, const Cell& b) { return a.col < b.col; };
    const Cell pick = policy == CornerPolicy::Leftmost
                          ? *std::min_element(corners.begin(), corners.end(), by_col)
                          : *std::max_element(corners.begin(), corners.end(), by_col);
    trace.push_back(rev_kjdt(trace.back(), {pick}));
  }
  return trace;
}

SlideState rev_krect_leftmost(const SlideState& s) { return rev_krect_trace(s, CornerPolicy::Leftmost).back(); }

// ------------------------------------------------------------------- left key

Tableau left_key(const Tableau& p, CornerPolicy policy) {
  if (!p.is_increasing()) throw InputError("left_key needs an increasing tableau: " + p.to_string());
  if (p.empty()) return p;
  std::vector<std::vector<int>> columns{p.column(0)};
  for (int k = 2; k <= p.num_cols(); ++k) {
    const auto start = SlideState::from_tableau(p.leading_columns(k), p.num_rows(), k);
    const auto rect = rev_krect_trace(start, policy).back();
    auto column = rect.leftmost_labeled_column();
    if (column.size() != p.column(k - 1).size()) {
      throw InvariantViolation("left key column " + std::to_string(k) + " has the wrong length for " + p.to_string());
    }
    columns.push_back(std::move(column));
  }
  std::vector<std::vector<int>> rows(p.num_rows());
  for (const auto& column : columns) {
    for (std::size_t r = 0; r < column.size(); ++r) rows[r].push_back(column[r]);
  }
  Tableau key(std::move(rows));
  if (policy == CornerPolicy::Leftmost && !is_key(key)) {
    throw InvariantViolation("left key of " + p.to_string() + " is not a key: " + key.to_string());
  }
  return key;
}

Composition left_key_content(const Tableau& p) { return content(left_key(p)); }

}  // namespace kgroth
