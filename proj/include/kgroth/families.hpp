#pragma once

// Polynomial families indexed by permutations, compositions and partitions:
// Grothendieck, Schubert, Lascoux, key, stable Grothendieck, G_lambda, Schur.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <shared_mutex>
#include <string>
#include <vector>

#include "kgroth/algebra.hpp"
#include "kgroth/shapes.hpp"
#include "kgroth/symgroup.hpp"

namespace kgroth {

enum class PivotRule { SmallestAscent, LargestAscent };

/// Memo tables for the operator recursions.
///
/// Safe for concurrent use: lookups take a shared lock, inserts are
/// insert-if-absent under an exclusive lock, and entries are never erased or
/// mutated, so returned references stay valid for the cache's lifetime.
class FamilyCache {
 public:
  FamilyCache() = default;
  FamilyCache(const FamilyCache&) = delete;
  FamilyCache& operator=(const FamilyCache&) = delete;

  /// The beta-Grothendieck polynomial in x_1..x_{n-1} (ambient at least 1),
  /// n = w.size(). Keyed by the full one-line notation.
  const MVPolynomial& grothendieck(const Permutation& w);
  /// The beta-Lascoux polynomial; ambient is the trimmed length of alpha.
  const MVPolynomial& lascoux(const Composition& alpha);
  /// The key polynomial (Demazure character), the beta = 0 Lascoux.
  const MVPolynomial& key(const Composition& alpha);

  std::size_t groth_entries() const;
  std::size_t lascoux_entries() const;
  std::size_t key_entries() const;

  /// JSON-lines dump of the Grothendieck and Lascoux memos.
  void save(std::ostream& out) const;
  /// Merges a dump written by save(). Throws InputError on a bad header,
  /// unknown record kind, or malformed record.
  void load(std::istream& in);
  void save_file(const std::string& path) const;
  /// No-op when the file does not exist.
  void load_file(const std::string& path);

 private:
  template <typename Map>
  const MVPolynomial* find(const Map& map, const typename Map::key_type& k) const;
  template <typename Map>
  const MVPolynomial& insert(Map& map, typename Map::key_type k, MVPolynomial p);

  mutable std::shared_mutex mutex_;
  std::map<std::vector<int>, MVPolynomial> groth_;
  std::map<Composition, MVPolynomial> lascoux_;
  std::map<Composition, MVPolynomial> key_;
};

/// Uncached recursion with an explicit pivot choice, for path-independence
/// checks.
MVPolynomial grothendieck_by_pivot(const Permutation& w, PivotRule rule);
MVPolynomial lascoux_by_pivot(const Composition& alpha, PivotRule rule);

/// beta_zero(grothendieck(w)).
MVPolynomial schubert(const Permutation& w, FamilyCache& cache);

/// Monomial sum over compatible pairs (a, i): a a Hecke word for w, i weakly
/// increasing with i_j <= a_j, and i_j < i_{j+1} whenever a_j <= a_{j+1};
/// weight beta^{N - l(w)} x^i.
MVPolynomial groth_compatible(const Permutation& w);

/// As groth_compatible with a restricted to reduced words: the Schubert
/// polynomial.
MVPolynomial schubert_compatible(const Permutation& w);

/// Stable Grothendieck polynomial in x_1..x_m: compatible pairs without the
/// i_j <= a_j bound, all i_j <= m.
MVPolynomial stable_groth(const Permutation& w, int m);

/// Sum over set-valued semistandard tableaux of shape lambda with entries
/// <= m of beta^{#labels - |lambda|} x^T.
MVPolynomial buch_G(const Partition& lambda, int m);

/// Schur polynomial s_lambda(x_1..x_m) from semistandard tableaux.
MVPolynomial schur(const Partition& lambda, int m);

/// restrict_vars(key(0^N alpha), n) == schur(lambda(alpha), n). Requires
/// N >= n, otherwise InputError.
bool stabilization_check(const Composition& alpha, int n, int N, FamilyCache& cache);

}  // namespace kgroth
