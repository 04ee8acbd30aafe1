#pragma once

// Reverse K-theoretic jeu de taquin inside an ambient rectangle, and the left
// key K_-(P) of a straight increasing tableau.
//
// All cell coordinates in this header are 0-based (row, col) pairs.

#include <string>
#include <vector>

#include "kgroth/shapes.hpp"
#include "kgroth/tableaux.hpp"

namespace kgroth {

struct Cell {
  int row = 0;
  int col = 0;
  friend auto operator<=>(const Cell&, const Cell&) = default;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// A rectangle of cells, each empty, a bullet, or a positive label.
class SlideState {
 public:
  static constexpr int kEmpty = 0;
  static constexpr int kBullet = -1;

  SlideState(int rows, int cols);
  /// Places a straight tableau in the top-left corner of a rows x cols
  /// rectangle. InputError if it does not fit.
  static SlideState from_tableau(const Tableau& t, int rows, int cols);
  /// Builds a state from explicit rows (kEmpty / kBullet / label).
  static SlideState from_grid(std::vector<std::vector<int>> grid);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int r, int c) const { return grid_[index(r, c)]; }
  int at(Cell cell) const { return at(cell.row, cell.col); }
  void set(Cell cell, int value) { grid_[index(cell.row, cell.col)] = value; }
  bool is_label(int r, int c) const { return at(r, c) > 0; }
  bool has_bullets() const;
  int max_label() const;
  std::vector<Cell> labeled_cells() const;

  /// Labels occupy a skew region (order ideal minus order ideal) and strictly
  /// increase between edge-adjacent cells, left to right and top to bottom.
  bool is_increasing() const;
  /// True when the cells without labels form a top-left justified diagram.
  bool is_reverse_straight() const;
  /// Labels of the leftmost column that holds any label, top to bottom.
  std::vector<int> leftmost_labeled_column() const;
  /// Bottom-to-top, left-to-right reading word of the labels.
  std::vector<int> row_reading_word() const;

  const std::vector<int>& grid() const { return grid_; }
  /// Rows joined by "/", cells by ",", "." for empty, "*" for a bullet.
  std::string to_string() const;

  friend bool operator==(const SlideState&, const SlideState&) = default;

 private:
  int index(int r, int c) const { return r * cols_ + c; }
  int rows_;
  int cols_;
  std::vector<int> grid_;
};

/// Cells of the rectangle outside the order ideal generated by the labels
/// whose north and west neighbours lie in that ideal or off the rectangle.
/// Outer corners occupy pairwise distinct rows and columns.
std::vector<Cell> outer_corners(const SlideState& s);

enum class RibbonSymbol { Bullet, Label };

struct RibbonCell {
  Cell cell;
  RibbonSymbol symbol;
  friend bool operator==(const RibbonCell&, const RibbonCell&) = default;
};

using Ribbon = std::vector<RibbonCell>;

/// Flips the symbol of every box in each non-singleton connected component.
/// Throws StructuralError (with the offending cells) unless the input is a
/// short ribbon: no 2x2 block, at most two boxes per row and column, and
/// edge-adjacent boxes carry different symbols.
Ribbon switch_ribbon(const Ribbon& ribbon);

/// One reverse K-jeu-de-taquin slide into the given outer corners.
/// InputError if the state already has bullets, `corners` is empty, or a
/// corner is not an outer corner. A ribbon that fails the short-ribbon check
/// surfaces as StructuralError.
SlideState rev_kjdt(const SlideState& s, const std::vector<Cell>& corners);

enum class CornerPolicy { Leftmost, Rightmost };

/// Reverse K-rectification: single-corner slides chosen by `policy` until the
/// state is reverse straight. The returned trace starts with `s` and holds the
/// state after each slide.
std::vector<SlideState> rev_krect_trace(const SlideState& s, CornerPolicy policy = CornerPolicy::Leftmost);

/// Final state of rev_krect_trace with the leftmost-corner policy.
SlideState rev_krect_leftmost(const SlideState& s);

/// The left key K_-(P) of a straight increasing tableau.
Tableau left_key(const Tableau& p, CornerPolicy policy = CornerPolicy::Leftmost);

/// content(K_-(P)).
Composition left_key_content(const Tableau& p);

}  // namespace kgroth
