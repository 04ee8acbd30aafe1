#pragma once

// Straight-shape tableaux and the enumerations the expansion formulas range
// over: increasing, set-valued semistandard, row-strict/column-weak.

#include <string>
#include <string_view>
#include <vector>

#include "kgroth/shapes.hpp"
#include "kgroth/symgroup.hpp"

namespace kgroth {

/// Straight-shape filling by positive integers. Rows are stored top to bottom;
/// row lengths must be weakly decreasing. Which ordering conditions hold
/// (increasing, row-strict, semistandard) is checked by the predicates below.
class Tableau {
 public:
  Tableau() = default;
  explicit Tableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  Partition shape() const;
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return rows_.empty() ? 0 : static_cast<int>(rows_.front().size()); }
  /// Number of boxes.
  int size() const;
  bool empty() const { return rows_.empty(); }
  /// Entry at (row, col), 0-based.
  int at(int row, int col) const { return rows_[row][col]; }
  /// Column `col` (0-based) read top to bottom.
  std::vector<int> column(int col) const;
  /// The first `k` columns.
  Tableau leading_columns(int k) const;

  /// Rows and columns strictly increasing.
  bool is_increasing() const;
  /// Rows strictly increasing, columns weakly increasing.
  bool is_row_strict_column_weak() const;
  /// Rows weakly increasing, columns strictly increasing.
  bool is_semistandard() const;

  friend auto operator<=>(const Tableau&, const Tableau&) = default;
  friend bool operator==(const Tableau&, const Tableau&) = default;

  /// "1,2,4/3"; the empty tableau renders as "".
  std::string to_string() const;
  static Tableau parse(std::string_view text);

 private:
  std::vector<std::vector<int>> rows_;
};

/// Filling of a straight shape by nonempty sets (each stored sorted).
class SetValuedTableau {
 public:
  using Cell = std::vector<int>;

  SetValuedTableau() = default;
  explicit SetValuedTableau(std::vector<std::vector<Cell>> rows);

  const std::vector<std::vector<Cell>>& rows() const { return rows_; }
  Partition shape() const;
  /// Total number of labels over all cells.
  int label_count() const;
  /// Entry i-1 counts occurrences of label i (length m).
  std::vector<int> weight(int m) const;

  /// "{1|2},{2}/{3}".
  std::string to_string() const;

 private:
  std::vector<std::vector<Cell>> rows_;
};

/// word(P): columns from rightmost to leftmost, each read top to bottom.
Word word_of(const Tableau& t);

/// Rows from top to bottom, each read right to left. On increasing tableaux
/// it has the same Demazure product as word_of; on row-strict, column-weak
/// tableaux it is the reading that generates the stable Grothendieck
/// polynomial.
Word row_hecke_word(const Tableau& t);

/// Labels of the bottom-to-top, left-to-right row reading word.
std::vector<int> row_reading_word(const Tableau& t);

/// Length of the longest strictly decreasing subsequence.
int longest_decreasing(const std::vector<int>& word);

/// LDS of the bottom-to-top row reading word.
int lds(const Tableau& t);

/// Increasing fillings of `shape` with labels in [1, max_entry], in row-major
/// lexicographic order.
std::vector<Tableau> enumerate_increasing(const Partition& shape, int max_entry);

/// Row-strict, column-weak fillings with labels in [1, max_entry].
std::vector<Tableau> enumerate_row_strict(const Partition& shape, int max_entry);

/// Semistandard fillings with labels in [1, max_entry].
std::vector<Tableau> enumerate_semistandard(const Partition& shape, int max_entry);

/// Set-valued semistandard fillings with labels in [1, max_entry].
std::vector<SetValuedTableau> enumerate_set_valued(const Partition& shape, int max_entry);

/// Increasing tableaux P of straight shape with entries <= n-1 whose word is
/// a Hecke word for w (n = w.size()). Such tableaux fit inside the staircase
/// (n-1, ..., 1). Ordered by size, then shape in decreasing lex order, then
/// row-major lex order of the filling.
std::vector<Tableau> conjecture_tableaux(const Permutation& w);

/// As conjecture_tableaux, but restricted to tableaux whose word is reduced
/// (number of boxes equal to the length of w).
std::vector<Tableau> reduced_word_tableaux(const Permutation& w);

/// Row-strict, column-weak tableaux with entries <= n-1 and at most
/// `max_rows` rows whose row_hecke_word is a Hecke word for w.
std::vector<Tableau> row_strict_hecke_tableaux(const Permutation& w, int max_rows);

/// content(T): entry i-1 counts label i.
Composition content(const Tableau& t);

/// Column label sets nested right-into-left.
bool is_key(const Tableau& t);

/// The key tableau with content alpha: column j holds {i : alpha_i >= j}.
Tableau key_tableau(const Composition& alpha);

/// Order used by every enumeration: size, shape (decreasing lex), rows.
bool canonical_tableau_less(const Tableau& a, const Tableau& b);

}  // namespace kgroth
