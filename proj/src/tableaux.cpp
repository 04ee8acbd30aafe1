#include "kgroth/tableaux.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "kgroth/errors.hpp"

namespace kgroth {

// ------------------------------------------------------------------- Tableau

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty() || (r > 0 && rows_[r].size() > rows_[r - 1].size())) {
      throw InputError("tableau rows must be nonempty and weakly decreasing in length");
    }
    for (int v : rows_[r]) {
      if (v < 1) throw InputError("tableau labels must be positive");
    }
  }
}

Partition Tableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int Tableau::size() const {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

std::vector<int> Tableau::column(int col) const {
  std::vector<int> out;
  for (const auto& row : rows_) {
    if (col < static_cast<int>(row.size())) out.push_back(row[col]);
  }
  return out;
}

Tableau Tableau::leading_columns(int k) const {
  std::vector<std::vector<int>> rows;
  for (const auto& row : rows_) {
    rows.emplace_back(row.begin(), row.begin() + std::min<std::size_t>(k, row.size()));
  }
  return Tableau(std::move(rows));
}

namespace {

// Checks every horizontally and vertically adjacent pair with the given
// comparisons (true = strict).
bool adjacent_pairs_ok(const std::vector<std::vector<int>>& rows, bool row_strict, bool col_strict) {
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0) {
        int left = rows[r][c - 1];
        if (row_strict ? left >= rows[r][c] : left > rows[r][c]) return false;
      }
      if (r > 0) {
        int above = rows[r - 1][c];
        if (col_strict ? above >= rows[r][c] : above > rows[r][c]) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool Tableau::is_increasing() const { return adjacent_pairs_ok(rows_, true, true); }

bool Tableau::is_row_strict_column_weak() const { return adjacent_pairs_ok(rows_, true, false); }

bool Tableau::is_semistandard() const { return adjacent_pairs_ok(rows_, false, true); }

std::string Tableau::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += "/";
    out += join_ints(rows_[r]);
  }
  return out;
}

Tableau Tableau::parse(std::string_view text) {
  std::vector<std::vector<int>> rows;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return Tableau();
  std::size_t start = 0;
  while (true) {
    std::size_t slash = text.find('/', start);
    auto row = parse_int_list(text.substr(start, slash == std::string_view::npos ? text.npos : slash - start));
    if (row.empty()) throw InputError("empty row in tableau '" + std::string(text) + "'");
    rows.push_back(std::move(row));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return Tableau(std::move(rows));
}

// ---------------------------------------------------------- SetValuedTableau

SetValuedTableau::SetValuedTableau(std::vector<std::vector<Cell>> rows) : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty() || (r > 0 && rows_[r].size() > rows_[r - 1].size())) {
      throw InputError("set-valued tableau rows must be nonempty and weakly decreasing in length");
    }
    for (auto& cell : rows_[r]) {
      if (cell.empty()) throw InputError("set-valued tableau cells must be nonempty");
      std::sort(cell.begin(), cell.end());
    }
  }
}

Partition SetValuedTableau::shape() const {
  std::vector<int> parts;
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Partition(std::move(parts));
}

int SetValuedTableau::label_count() const {
  int n = 0;
  for (const auto& row : rows_) {
    for (const auto& cell : row) n += static_cast<int>(cell.size());
  }
  return n;
}

std::vector<int> SetValuedTableau::weight(int m) const {
  std::vector<int> out(m, 0);
  for (const auto& row : rows_) {
    for (const auto& cell : row) {
      for (int v : cell) {
        if (v > m) throw InputError("label exceeds weight length");
        ++out[v - 1];
      }
    }
  }
  return out;
}

std::string SetValuedTableau::to_string() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += "/";
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out += ",";
      out += "{" + join_ints(rows_[r][c], "|") + "}";
    }
  }
  return out;
}

// ------------------------------------------------------------- reading words

Word word_of(const Tableau& t) {
  Word out;
  for (int c = t.num_cols() - 1; c >= 0; --c) {
    for (int v : t.column(c)) out.push_back(v);
  }
  return out;
}

Word row_hecke_word(const Tableau& t) {
  Word out;
  for (const auto& row : t.rows()) out.insert(out.end(), row.rbegin(), row.rend());
  return out;
}

std::vector<int> row_reading_word(const Tableau& t) {
  std::vector<int> out;
  for (auto it = t.rows().rbegin(); it != t.rows().rend(); ++it) out.insert(out.end(), it->begin(), it->end());
  return out;
}

int longest_decreasing(const std::vector<int>& word) {
  std::vector<int> best(word.size(), 1);
  int overall = 0;
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (word[j] > word[i]) best[i] = std::max(best[i], best[j] + 1);
    }
    overall = std::max(overall, best[i]);
  }
  return overall;
}

int lds(const Tableau& t) { return longest_decreasing(row_reading_word(t)); }

// -------------------------------------------------------------- enumerations

namespace {

// Row-major fill of a straight shape. `lower` gives the smallest admissible
// label for a cell from its left and upper neighbours (0 = absent).
template <typename Lower>
void fill_row_major(const Partition& shape, int max_entry, Lower lower, std::vector<Tableau>& out) {
  std::vector<std::vector<int>> rows;
  for (int p : shape.parts()) rows.emplace_back(p, 0);
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < shape.length(); ++r) {
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(r, c);
  }
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      out.emplace_back(rows);
      return;
    }
    auto [r, c] = cells[k];
    const int left = c > 0 ? rows[r][c - 1] : 0;
    const int above = r > 0 ? rows[r - 1][c] : 0;
    for (int v = std::max(lower(left, above), 1); v <= max_entry; ++v) {
      rows[r][c] = v;
      rec(k + 1);
    }
    rows[r][c] = 0;
  };
  rec(0);
}

}  // namespace

std::vector<Tableau> enumerate_increasing(const Partition& shape, int max_entry) {
  std::vector<Tableau> out;
  fill_row_major(shape, max_entry, [](int left, int above) { return std::max(left, above) + 1; }, out);
  return out;
}

std::vector<Tableau> enumerate_row_strict(const Partition& shape, int max_entry) {
  std::vector<Tableau> out;
  fill_row_major(shape, max_entry, [](int left, int above) { return std::max(left + 1, above); }, out);
  return out;
}

std::vector<Tableau> enumerate_semistandard(const Partition& shape, int max_entry) {
  std::vector<Tableau> out;
  fill_row_major(shape, max_entry, [](int left, int above) { return std::max(left, above + 1); }, out);
  return out;
}

std::vector<SetValuedTableau> enumerate_set_valued(const Partition& shape, int max_entry) {
  std::vector<SetValuedTableau> out;
  std::vector<std::vector<SetValuedTableau::Cell>> rows;
  for (int p : shape.parts()) rows.emplace_back(p);
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < shape.length(); ++r) {
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(r, c);
  }
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      out.emplace_back(rows);
      return;
    }
    auto [r, c] = cells[k];
    // Row weak: max(left) <= min(cell). Column strict: max(above) < min(cell).
    int lowest = 1;
    if (c > 0) lowest = std::max(lowest, rows[r][c - 1].back());
    if (r > 0) lowest = std::max(lowest, rows[r - 1][c].back() + 1);
    auto& cell = rows[r][c];
    // Nonempty subsets of [lowest, max_entry] in lex order of sorted vectors.
    std::function<void(int)> subsets = [&](int from) {
      for (int v = from; v <= max_entry; ++v) {
        cell.push_back(v);
        rec(k + 1);
        subsets(v + 1);
        cell.pop_back();
      }
    };
    subsets(lowest);
  };
  rec(0);
  return out;
}

bool canonical_tableau_less(const Tableau& a, const Tableau& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const Partition sa = a.shape();
  const Partition sb = b.shape();
  if (sa != sb) return sa > sb;
  return a.rows() < b.rows();
}

namespace {

// Builds tableaux column by column from the right, so each partial tableau
// determines a prefix of word(P). The Demazure product of a prefix is Bruhat
// below the product of the whole word, which prunes the search.
class HeckeTableauSearch {
 public:
  HeckeTableauSearch(const Permutation& w, bool reduced_only)
      : w_(w), n_(w.size()), reduced_only_(reduced_only), target_length_(coxeter_length(w)) {}

  std::vector<Tableau> run() {
    std::vector<int> identity(n_);
    std::iota(identity.begin(), identity.end(), 1);
    if (w_.is_identity()) out_.emplace_back();
    for (int ncols = 1; ncols <= n_ - 1; ++ncols) {
      columns_.assign(ncols + 1, {});
      place_column(ncols, identity, 0);
    }
    std::sort(out_.begin(), out_.end(), canonical_tableau_less);
    return std::move(out_);
  }

 private:
  // Column `col` (1-based) goes next; columns col+1.. are in columns_.
  void place_column(int col, const std::vector<int>& product, int letters) {
    const int right_height = col + 1 < static_cast<int>(columns_.size())
                                 ? static_cast<int>(columns_[col + 1].size())
                                 : 0;
    const int min_height = std::max(right_height, 1);
    const int max_height = n_ - col;
    for (int h = min_height; h <= max_height; ++h) {
      columns_[col].assign(h, 0);
      fill_cell(col, 0, product, letters);
    }
    columns_[col].clear();
  }

  void fill_cell(int col, int row, const std::vector<int>& product, int letters) {
    auto& column = columns_[col];
    if (row == static_cast<int>(column.size())) {
      column_done(col, product, letters);
      return;
    }
    const auto& right = col + 1 < static_cast<int>(columns_.size()) ? columns_[col + 1]
                                                                     : columns_[0];
    int lo = row + col;  // label at 1-based (row+1, col) is at least row + col
    if (row > 0) lo = std::max(lo, column[row - 1] + 1);
    int hi = n_ - 1;
    if (col + 1 < static_cast<int>(columns_.size()) && row < static_cast<int>(right.size())) {
      hi = std::min(hi, right[row] - 1);
    }
    for (int v = lo; v <= hi; ++v) {
      column[row] = v;
      fill_cell(col, row + 1, product, letters);
    }
  }

  void column_done(int col, std::vector<int> product, int letters) {
    for (int a : columns_[col]) {
      if (product[a - 1] < product[a]) {
        std::swap(product[a - 1], product[a]);
      } else if (reduced_only_) {
        return;
      }
      ++letters;
    }
    if (reduced_only_ && letters > target_length_) return;
    Permutation u(product);
    if (!bruhat_leq(u, w_)) return;
    if (col > 1) {
      place_column(col - 1, product, letters);
      return;
    }
    if (!(u == w_)) return;
    std::vector<std::vector<int>> rows(columns_[1].size());
    for (std::size_t c = 1; c < columns_.size(); ++c) {
      for (std::size_t r = 0; r < columns_[c].size(); ++r) rows[r].push_back(columns_[c][r]);
    }
    out_.emplace_back(std::move(rows));
  }

  const Permutation& w_;
  int n_;
  bool reduced_only_;
  int target_length_;
  std::vector<std::vector<int>> columns_;  // 1-based column index
  std::vector<Tableau> out_;
};

}  // namespace

std::vector<Tableau> conjecture_tableaux(const Permutation& w) {
  return HeckeTableauSearch(w, false).run();
}

std::vector<Tableau> reduced_word_tableaux(const Permutation& w) {
  return HeckeTableauSearch(w, true).run();
}

std::vector<Tableau> row_strict_hecke_tableaux(const Permutation& w, int max_rows) {
  std::vector<Tableau> out;
  const int letters = w.size() - 1;
  if (letters <= 0) {
    if (w.is_identity()) out.emplace_back();
    return out;
  }
  for (const auto& shape : partitions_in_box(max_rows, letters)) {
    for (auto& t : enumerate_row_strict(shape, letters)) {
      if (is_hecke_word(row_hecke_word(t), w)) out.push_back(std::move(t));
    }
  }
  std::sort(out.begin(), out.end(), canonical_tableau_less);
  return out;
}

Composition content(const Tableau& t) {
  std::vector<int> counts;
  for (const auto& row : t.rows()) {
    for (int v : row) {
      if (static_cast<int>(counts.size()) < v) counts.resize(v, 0);
      ++counts[v - 1];
    }
  }
  return Composition(std::move(counts));
}

bool is_key(const Tableau& t) {
  for (int c = 1; c < t.num_cols(); ++c) {
    auto left = t.column(c - 1);
    auto right = t.column(c);
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    if (!std::includes(left.begin(), left.end(), right.begin(), right.end())) return false;
  }
  return true;
}

Tableau key_tableau(const Composition& alpha) {
  const Partition shape = sort_to_partition(alpha);
  std::vector<std::vector<int>> rows(shape.length());
  for (int j = 1; j <= shape[0]; ++j) {
    int r = 0;
    for (int i = 1; i <= alpha.length(); ++i) {
      if (alpha.at(i) >= j) rows[r++].push_back(i);
    }
  }
  return Tableau(std::move(rows));
}

}  // namespace kgroth
