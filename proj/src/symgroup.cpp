#include "kgroth/symgroup.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include "kgroth/errors.hpp"

namespace kgroth {

Permutation::Permutation(std::vector<int> one_line) : one_line_(std::move(one_line)) {
  std::vector<bool> seen(one_line_.size() + 1, false);
  for (int v : one_line_) {
    if (v < 1 || v > size() || seen[v]) {
      throw InputError("not a permutation: " + join_ints(one_line_));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> v(std::max(n, 0));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::extended(int n) const {
  if (n <= size()) return *this;
  std::vector<int> v = one_line_;
  for (int i = size() + 1; i <= n; ++i) v.push_back(i);
  return Permutation(std::move(v));
}

Permutation Permutation::trimmed() const {
  std::vector<int> v = one_line_;
  while (!v.empty() && v.back() == static_cast<int>(v.size())) v.pop_back();
  return Permutation(std::move(v));
}

Permutation Permutation::times_simple(int i) const {
  if (i < 1) throw InputError("simple transposition index must be at least 1");
  Permutation out = extended(i + 1);
  std::swap(out.one_line_[i - 1], out.one_line_[i]);
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i) {
    if (one_line_[i] != i + 1) return false;
  }
  return true;
}

bool operator==(const Permutation& a, const Permutation& b) {
  const int n = std::max(a.size(), b.size());
  for (int i = 1; i <= n; ++i) {
    if (a(i) != b(i)) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  if (size() <= 9) {
    std::string out;
    for (int v : one_line_) out += static_cast<char>('0' + v);
    return out;
  }
  return join_ints(one_line_);
}

Permutation Permutation::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InputError("empty permutation text");
  if (text.find(',') != std::string_view::npos) return Permutation(parse_int_list(text));
  std::vector<int> v;
  for (char ch : text) {
    if (ch < '1' || ch > '9') throw InputError("bad permutation digit in '" + std::string(text) + "'");
    v.push_back(ch - '0');
  }
  return Permutation(std::move(v));
}

std::size_t PermutationHash::operator()(const Permutation& w) const {
  std::size_t h = 0;
  for (int v : w.trimmed().one_line()) h = h * 1000003u + static_cast<std::size_t>(v);
  return h;
}

int coxeter_length(const Permutation& w) {
  const auto& v = w.one_line();
  int count = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = i + 1; j < v.size(); ++j) count += v[i] > v[j];
  }
  return count;
}

Permutation longest_element(int n) {
  if (n < 1) throw InputError("longest_element needs n >= 1");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

namespace {

void check_letters(const Word& word, int n) {
  for (int a : word) {
    if (a < 1 || a > n - 1) {
      throw InputError("letter " + std::to_string(a) + " out of range for S_" + std::to_string(n));
    }
  }
}

}  // namespace

Permutation demazure_product(const Word& word, int n) {
  check_letters(word, n);
  std::vector<int> v(std::max(n, 0));
  std::iota(v.begin(), v.end(), 1);
  for (int a : word) {
    if (v[a - 1] < v[a]) std::swap(v[a - 1], v[a]);
  }
  return Permutation(std::move(v));
}

Permutation plain_product(const Word& word, int n) {
  check_letters(word, n);
  std::vector<int> v(std::max(n, 0));
  std::iota(v.begin(), v.end(), 1);
  for (int a : word) std::swap(v[a - 1], v[a]);
  return Permutation(std::move(v));
}

bool is_hecke_word(const Word& word, const Permutation& w) {
  return demazure_product(word, w.size()) == w;
}

bool is_reduced(const Word& word, const Permutation& w) {
  return static_cast<int>(word.size()) == coxeter_length(w) && plain_product(word, w.size()) == w;
}

bool bruhat_leq(const Permutation& u, const Permutation& w) {
  const int n = std::max(u.size(), w.size());
  std::vector<int> pu;
  std::vector<int> pw;
  for (int i = 1; i < n; ++i) {
    pu.insert(std::upper_bound(pu.begin(), pu.end(), u(i)), u(i));
    pw.insert(std::upper_bound(pw.begin(), pw.end(), w(i)), w(i));
    for (int j = 0; j < i; ++j) {
      if (pu[j] > pw[j]) return false;
    }
  }
  return true;
}

std::vector<int> descents(const Permutation& w) {
  std::vector<int> out;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) > w(i + 1)) out.push_back(i);
  }
  return out;
}

std::optional<GrassmannianData> grassmannian_data(const Permutation& w) {
  const auto d = descents(w);
  if (d.size() != 1) return std::nullopt;
  const int k = d.front();
  std::vector<int> parts;
  for (int i = 1; i <= k; ++i) parts.push_back(w(k - i + 1) - (k - i + 1));
  return GrassmannianData{k, Partition(std::move(parts))};
}

Permutation grassmannian_from_partition(const Partition& lambda, int k) {
  if (k < 0 || lambda.length() > k) {
    throw InputError("partition " + lambda.to_string() + " has more than k=" + std::to_string(k) + " parts");
  }
  const int n = k + lambda[0];
  std::vector<int> v(n, 0);
  std::vector<bool> used(n + 1, false);
  for (int j = 1; j <= k; ++j) {
    v[j - 1] = lambda[k - j] + j;
    used[v[j - 1]] = true;
  }
  int next = 1;
  for (int j = k + 1; j <= n; ++j) {
    while (used[next]) ++next;
    v[j - 1] = next++;
  }
  return Permutation(std::move(v));
}

Permutation shift(const Permutation& w, int n) {
  std::vector<int> v(std::max(n, 0));
  std::iota(v.begin(), v.end(), 1);
  for (int x : w.one_line()) v.push_back(x + n);
  return Permutation(std::move(v));
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1) throw InputError("all_permutations needs n >= 1");
  std::vector<Permutation> out;
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::string word_to_string(const Word& word) { return join_ints(word); }

Word parse_word(std::string_view text) { return parse_int_list(text); }

}  // namespace kgroth
