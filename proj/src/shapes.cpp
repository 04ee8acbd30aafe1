#include "kgroth/shapes.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "kgroth/errors.hpp"

namespace kgroth {

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (item.empty() || item.size() > 6 ||
        !std::all_of(item.begin(), item.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
      throw InputError("expected a comma-separated list of nonnegative integers, got '" + std::string(text) + "'");
    }
    out.push_back(std::stoi(std::string(item)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join_ints(const std::vector<int>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(values[i]);
  }
  return out;
}

// ----------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || (i > 0 && parts_[i] > parts_[i - 1])) {
      throw InputError("not a partition: " + join_ints(parts_));
    }
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

int Partition::operator[](int row) const {
  return row >= 0 && row < length() ? parts_[row] : 0;
}

Partition Partition::conjugate() const {
  std::vector<int> cols(parts_.empty() ? 0 : parts_.front(), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++cols[j];
  }
  return Partition(std::move(cols));
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i) {
    if (other.parts_[i] > parts_[i]) return false;
  }
  return true;
}

std::string Partition::to_string() const { return join_ints(parts_); }

Partition Partition::parse(std::string_view text) { return Partition(parse_int_list(text)); }

// --------------------------------------------------------------- Composition

Composition::Composition(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int v : entries_) {
    if (v < 0) throw InputError("composition entries must be nonnegative");
  }
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

int Composition::total() const { return std::accumulate(entries_.begin(), entries_.end(), 0); }

int Composition::at(int i) const { return i >= 1 && i <= length() ? entries_[i - 1] : 0; }

bool Composition::is_weakly_decreasing() const {
  return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>());
}

Composition Composition::swapped(int i) const {
  if (i < 1) throw InputError("composition index must be at least 1");
  std::vector<int> e = entries_;
  if (static_cast<int>(e.size()) < i + 1) e.resize(i + 1, 0);
  std::swap(e[i - 1], e[i]);
  return Composition(std::move(e));
}

Composition Composition::shifted(int zeros) const {
  std::vector<int> e(zeros, 0);
  e.insert(e.end(), entries_.begin(), entries_.end());
  return Composition(std::move(e));
}

std::string Composition::to_string() const { return join_ints(entries_); }

Composition Composition::parse(std::string_view text) { return Composition(parse_int_list(text)); }

Partition sort_to_partition(const Composition& alpha) {
  std::vector<int> parts;
  for (int v : alpha.entries()) {
    if (v > 0) parts.push_back(v);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int max_parts, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  if (max_parts == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions_rec(remaining - p, max_parts - 1, p, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_parts, int max_part) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> current;
  partitions_rec(n, max_parts, max_part, current, out);
  return out;
}

std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  for (int n = 0; n <= rows * cols; ++n) {
    auto level = partitions_of(n, rows, cols);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::vector<Partition> partitions_in_staircase(int n) {
  std::vector<Partition> out;
  Partition staircase;
  {
    std::vector<int> parts;
    for (int r = n - 1; r >= 1; --r) parts.push_back(r);
    staircase = Partition(std::move(parts));
  }
  for (const auto& p : partitions_in_box(std::max(n - 1, 0), std::max(n - 1, 0))) {
    if (staircase.contains(p)) out.push_back(p);
  }
  return out;
}

std::vector<Composition> compositions_of(int n, int length) {
  std::vector<Composition> out;
  if (length <= 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> current(length, 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == length - 1) {
      current[pos] = remaining;
      out.emplace_back(current);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      current[pos] = v;
      rec(pos + 1, remaining - v);
    }
  };
  rec(0, n);
  return out;
}

}  // namespace kgroth
