#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace kgroth {

/// Weakly decreasing sequence of positive integers.
class Partition {
 public:
  Partition() = default;
  /// Trailing zeros are dropped; anything else that is not weakly decreasing
  /// and nonnegative throws InputError.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// Number of boxes.
  int size() const;
  bool empty() const { return parts_.empty(); }
  /// Row length, 0 beyond the last part.
  int operator[](int row) const;
  /// Column lengths (the conjugate partition).
  Partition conjugate() const;
  bool contains(const Partition& other) const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

  /// "2,1,1"; the empty partition renders as "".
  std::string to_string() const;
  static Partition parse(std::string_view text);

 private:
  std::vector<int> parts_;
};

/// Weak composition with trailing zeros trimmed.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> entries);

  const std::vector<int>& entries() const { return entries_; }
  /// Trimmed length.
  int length() const { return static_cast<int>(entries_.size()); }
  /// |alpha|.
  int total() const;
  /// Entry i (1-based), 0 beyond the stored range.
  int at(int i) const;
  bool is_weakly_decreasing() const;
  /// alpha with entries i and i+1 exchanged (1-based).
  Composition swapped(int i) const;
  /// Composition with `zeros` zero entries prepended.
  Composition shifted(int zeros) const;

  friend auto operator<=>(const Composition&, const Composition&) = default;
  friend bool operator==(const Composition&, const Composition&) = default;

  /// "1,0,2,1"; the empty composition renders as "".
  std::string to_string() const;
  static Composition parse(std::string_view text);

 private:
  std::vector<int> entries_;
};

/// lambda(alpha): entries sorted decreasingly with zeros dropped.
Partition sort_to_partition(const Composition& alpha);

/// Partitions of `n` with at most `max_parts` parts and parts at most
/// `max_part`, in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n, int max_parts, int max_part);

/// Every partition contained in the rows x cols rectangle, ordered by size and
/// then decreasing lexicographically.
std::vector<Partition> partitions_in_box(int rows, int cols);

/// Every partition contained in the staircase (n-1, n-2, ..., 1), same order.
std::vector<Partition> partitions_in_staircase(int n);

/// Weak compositions of `n` with exactly `length` entries (before trimming),
/// in increasing lexicographic order of the untrimmed vectors.
std::vector<Composition> compositions_of(int n, int length);

/// Comma-separated list of nonnegative integers ("" yields an empty list).
std::vector<int> parse_int_list(std::string_view text);
std::string join_ints(const std::vector<int>& values, std::string_view sep = ",");

}  // namespace kgroth
