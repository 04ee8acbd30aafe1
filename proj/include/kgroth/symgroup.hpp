#pragma once

// Type A symmetric group: permutations in one-line notation, Coxeter length,
// reduced and Hecke words, Grassmannian permutations.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kgroth/shapes.hpp"

namespace kgroth {

/// Letters of a word in the simple generators; letter a stands for s_a / u_a.
using Word = std::vector<int>;

/// A permutation of {1..n} in one-line notation. The explicit n travels with
/// the value, but equality treats w and w x 1 as the same element.
class Permutation {
 public:
  Permutation() = default;
  /// Throws InputError unless `one_line` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(one_line_.size()); }
  const std::vector<int>& one_line() const { return one_line_; }
  /// w(i), 1-based; fixed beyond size().
  int operator()(int i) const { return i >= 1 && i <= size() ? one_line_[i - 1] : i; }

  /// Extends by fixed points to n (n >= size()).
  Permutation extended(int n) const;
  /// Drops trailing fixed points (identity becomes the empty permutation).
  Permutation trimmed() const;
  /// w * s_i: exchanges positions i and i+1.
  Permutation times_simple(int i) const;
  bool is_identity() const;

  friend bool operator==(const Permutation& a, const Permutation& b);

  /// "31524" when n <= 9, otherwise "3,1,5,2,4,...".
  std::string to_string() const;
  /// Accepts both text forms.
  static Permutation parse(std::string_view text);

 private:
  std::vector<int> one_line_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& w) const;
};

/// Inversion count.
int coxeter_length(const Permutation& w);

/// w_0 in S_n.
Permutation longest_element(int n);

/// The element represented by `word` in the Hecke (0-Hecke) monoid of S_n:
/// fold w <- w s_a exactly when that raises length. Letters must lie in
/// [1, n-1]; otherwise InputError.
Permutation demazure_product(const Word& word, int n);

/// Ordinary product s_{a_1} ... s_{a_N} in S_n.
Permutation plain_product(const Word& word, int n);

bool is_hecke_word(const Word& word, const Permutation& w);
bool is_reduced(const Word& word, const Permutation& w);

/// Bruhat order u <= w via the tableau criterion (sorted prefixes).
bool bruhat_leq(const Permutation& u, const Permutation& w);

/// Descent positions i with w(i) > w(i+1), increasing.
std::vector<int> descents(const Permutation& w);

struct GrassmannianData {
  int k = 0;
  Partition shape;
};

/// (k, lambda(w)) when w has exactly one descent. The identity yields
/// nullopt; callers wanting the empty shape use lambda = {} with any k.
std::optional<GrassmannianData> grassmannian_data(const Permutation& w);

/// Unique permutation Grassmannian at k with lambda(w) = lambda, on
/// k + lambda_1 letters. InputError if lambda has more than k parts.
Permutation grassmannian_from_partition(const Partition& lambda, int k);

/// 1^n x w.
Permutation shift(const Permutation& w, int n);

/// S_n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

/// "4,2,4,1,3".
std::string word_to_string(const Word& word);
Word parse_word(std::string_view text);

}  // namespace kgroth
