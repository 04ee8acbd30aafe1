#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kgroth {

/// Malformed or out-of-range input supplied by a caller.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A precondition on a combinatorial structure failed (e.g. a ribbon that is
/// not short). Carries the offending cells as (row, col) pairs, 0-based.
class StructuralError : public InputError {
 public:
  StructuralError(const std::string& what, std::vector<std::pair<int, int>> cells)
      : InputError(what), cells_(std::move(cells)) {}
  const std::vector<std::pair<int, int>>& cells() const { return cells_; }

 private:
  std::vector<std::pair<int, int>> cells_;
};

/// An internal invariant was broken. Always indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A polynomial is not in the span of the requested basis.
class NotInSpanError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kgroth
