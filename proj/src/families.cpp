#include "kgroth/families.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <mutex>
#include <ostream>

#include "kgroth/errors.hpp"
#include "kgroth/serialize.hpp"
#include "kgroth/tableaux.hpp"

namespace kgroth {

namespace {

constexpr int kCacheVersion = 1;

int groth_ambient(int n) { return std::max(1, n - 1); }

MVPolynomial staircase(int n) {
  Exponent e(groth_ambient(n), 0);
  for (int i = 1; i < n; ++i) e[i - 1] = n - i;
  MVPolynomial p(groth_ambient(n));
  p.add_term(std::move(e), 1);
  return p;
}

MVPolynomial dominant_monomial(const Composition& alpha) {
  MVPolynomial p(std::max(1, alpha.length()));
  p.add_term(alpha.entries(), 1);
  return p;
}

int groth_pivot(const Permutation& w, PivotRule rule) {
  int pick = 0;
  for (int i = 1; i < w.size(); ++i) {
    if (w(i) < w(i + 1)) {
      pick = i;
      if (rule == PivotRule::SmallestAscent) break;
    }
  }
  return pick;
}

int lascoux_pivot(const Composition& alpha, PivotRule rule) {
  int pick = 0;
  for (int i = 1; i < alpha.length(); ++i) {
    if (alpha.at(i) < alpha.at(i + 1)) {
      pick = i;
      if (rule == PivotRule::SmallestAscent) break;
    }
  }
  return pick;
}

// d_i(x_i f): the beta = 0 specialization of pi_tilde.
MVPolynomial demazure_op(const MVPolynomial& f, int i) {
  return divided_difference(MVPolynomial::variable(i, f.ambient()) * f, i);
}

}  // namespace

// ------------------------------------------------------------- FamilyCache

template <typename Map>
const MVPolynomial* FamilyCache::find(const Map& map, const typename Map::key_type& k) const {
  std::shared_lock lock(mutex_);
  auto it = map.find(k);
  return it == map.end() ? nullptr : &it->second;
}

template <typename Map>
const MVPolynomial& FamilyCache::insert(Map& map, typename Map::key_type k, MVPolynomial p) {
  std::unique_lock lock(mutex_);
  return map.try_emplace(std::move(k), std::move(p)).first->second;
}

const MVPolynomial& FamilyCache::grothendieck(const Permutation& w) {
  if (const auto* hit = find(groth_, w.one_line())) return *hit;
  const int n = std::max(1, w.size());
  const int i = groth_pivot(w, PivotRule::SmallestAscent);
  MVPolynomial p = i == 0 ? staircase(n) : pi(grothendieck(w.times_simple(i)), i).with_ambient(groth_ambient(n));
  return insert(groth_, w.one_line(), std::move(p));
}

const MVPolynomial& FamilyCache::lascoux(const Composition& alpha) {
  if (const auto* hit = find(lascoux_, alpha)) return *hit;
  const int i = lascoux_pivot(alpha, PivotRule::SmallestAscent);
  MVPolynomial p = i == 0 ? dominant_monomial(alpha)
                          : pi_tilde(lascoux(alpha.swapped(i)), i).with_ambient(std::max(1, alpha.length()));
  return insert(lascoux_, alpha, std::move(p));
}

const MVPolynomial& FamilyCache::key(const Composition& alpha) {
  if (const auto* hit = find(key_, alpha)) return *hit;
  const int i = lascoux_pivot(alpha, PivotRule::SmallestAscent);
  MVPolynomial p = i == 0 ? dominant_monomial(alpha)
                          : demazure_op(key(alpha.swapped(i)), i).with_ambient(std::max(1, alpha.length()));
  return insert(key_, alpha, std::move(p));
}

std::size_t FamilyCache::groth_entries() const {
  std::shared_lock lock(mutex_);
  return groth_.size();
}

std::size_t FamilyCache::lascoux_entries() const {
  std::shared_lock lock(mutex_);
  return lascoux_.size();
}

std::size_t FamilyCache::key_entries() const {
  std::shared_lock lock(mutex_);
  return key_.size();
}

void FamilyCache::save(std::ostream& out) const {
  std::shared_lock lock(mutex_);
  out << Json{{"format", "kgroth-cache"}, {"version", kCacheVersion}}.dump() << '\n';
  for (const auto& [one_line, p] : groth_) {
    Json rec{{"kind", "groth"}, {"key", Permutation(one_line).to_string()}, {"poly", polynomial_to_json(p)}};
    out << rec.dump() << '\n';
  }
  for (const auto& [alpha, p] : lascoux_) {
    Json rec{{"kind", "lascoux"}, {"key", alpha.to_string()}, {"poly", polynomial_to_json(p)}};
    out << rec.dump() << '\n';
  }
}

void FamilyCache::load(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InputError("cache: missing header");
  try {
    const auto header = Json::parse(line);
    if (header.value("format", "") != "kgroth-cache") throw InputError("cache: not a kgroth cache file");
    if (header.value("version", -1) != kCacheVersion) {
      throw InputError("cache: unsupported version " + header.value("version", Json()).dump());
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("cache: bad header: ") + e.what());
  }
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    Json rec;
    try {
      rec = Json::parse(line);
      const auto kind = rec.at("kind").get<std::string>();
      const auto key_text = rec.at("key").get<std::string>();
      MVPolynomial p = polynomial_from_json(rec.at("poly"));
      if (kind == "groth") {
        const auto w = Permutation::parse(key_text);
        if (p.ambient() != groth_ambient(w.size())) throw InputError("wrong ambient for " + key_text);
        insert(groth_, w.one_line(), std::move(p));
      } else if (kind == "lascoux") {
        const auto alpha = Composition::parse(key_text);
        if (p.ambient() != std::max(1, alpha.length())) throw InputError("wrong ambient for " + key_text);
        insert(lascoux_, alpha, std::move(p));
      } else {
        throw InputError("unknown record kind '" + kind + "'");
      }
    } catch (const Json::exception& e) {
      throw InputError("cache line " + std::to_string(line_no) + ": " + e.what());
    } catch (const InputError& e) {
      throw InputError("cache line " + std::to_string(line_no) + ": " + e.what());
    }
  }
}

void FamilyCache::save_file(const std::string& path) const {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw InputError("cannot write cache file " + path);
    save(out);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw InputError("cannot replace cache file " + path);
}

void FamilyCache::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) return;
  load(in);
}

// ---------------------------------------------------------- pivot variants

MVPolynomial grothendieck_by_pivot(const Permutation& w, PivotRule rule) {
  std::map<std::vector<int>, MVPolynomial> memo;
  auto rec = [&](auto&& self, const Permutation& u) -> MVPolynomial {
    if (auto it = memo.find(u.one_line()); it != memo.end()) return it->second;
    const int n = std::max(1, u.size());
    const int i = groth_pivot(u, rule);
    MVPolynomial p = i == 0 ? staircase(n) : pi(self(self, u.times_simple(i)), i).with_ambient(groth_ambient(n));
    memo.emplace(u.one_line(), p);
    return p;
  };
  return rec(rec, w);
}

MVPolynomial lascoux_by_pivot(const Composition& alpha, PivotRule rule) {
  const int i = lascoux_pivot(alpha, rule);
  if (i == 0) return dominant_monomial(alpha);
  return pi_tilde(lascoux_by_pivot(alpha.swapped(i), rule), i).with_ambient(std::max(1, alpha.length()));
}

MVPolynomial schubert(const Permutation& w, FamilyCache& cache) { return beta_zero(cache.grothendieck(w)); }

// ----------------------------------------------------- compatible sequences

namespace {

struct CompatibleSearch {
  const Permutation& target;
  int n;
  int max_i;
  bool letter_bounds_index;  // i_j <= a_j
  bool reduced_only;
  int target_length;
  MVPolynomial out;
  std::vector<int> counts;

  CompatibleSearch(const Permutation& w, int max_i, bool letter_bounds_index, bool reduced_only)
      : target(w),
        n(w.size()),
        max_i(max_i),
        letter_bounds_index(letter_bounds_index),
        reduced_only(reduced_only),
        target_length(coxeter_length(w)),
        out(std::max(1, max_i)),
        counts(std::max(1, max_i), 0) {}

  void run(std::vector<int>& u, int length_u, int last_a, int last_i, int letters) {
    if (length_u == target_length && Permutation(u) == target) {
      out.add_term(counts, BetaScalar::monomial(letters - target_length));
    }
    for (int a = 1; a <= n - 1; ++a) {
      const bool raises = u[a - 1] < u[a];
      if (reduced_only && !raises) continue;
      if (raises) {
        std::swap(u[a - 1], u[a]);
        if (!bruhat_leq(Permutation(u), target)) {
          std::swap(u[a - 1], u[a]);
          continue;
        }
      }
      const int lo = letters == 0 ? 1 : (a >= last_a ? last_i + 1 : last_i);
      const int hi = letter_bounds_index ? std::min(a, max_i) : max_i;
      for (int i = lo; i <= hi; ++i) {
        ++counts[i - 1];
        run(u, length_u + (raises ? 1 : 0), a, i, letters + 1);
        --counts[i - 1];
      }
      if (raises) std::swap(u[a - 1], u[a]);
    }
  }

  MVPolynomial result() {
    std::vector<int> u(n);
    for (int k = 0; k < n; ++k) u[k] = k + 1;
    run(u, 0, 0, 0, 0);
    return out;
  }
};

}  // namespace

MVPolynomial groth_compatible(const Permutation& w) {
  return CompatibleSearch(w, groth_ambient(w.size()), true, false).result();
}

MVPolynomial schubert_compatible(const Permutation& w) {
  return CompatibleSearch(w, groth_ambient(w.size()), true, true).result();
}

MVPolynomial stable_groth(const Permutation& w, int m) {
  if (m < 1) throw InputError("stable_groth needs m >= 1");
  return CompatibleSearch(w, m, false, false).result();
}

// -------------------------------------------------------- symmetric families

MVPolynomial buch_G(const Partition& lambda, int m) {
  if (m < 0) throw InputError("buch_G needs m >= 0");
  MVPolynomial out(std::max(1, m));
  for (const auto& t : enumerate_set_valued(lambda, m)) {
    out.add_term(t.weight(m), BetaScalar::monomial(t.label_count() - lambda.size()));
  }
  return out;
}

MVPolynomial schur(const Partition& lambda, int m) {
  if (m < 0) throw InputError("schur needs m >= 0");
  MVPolynomial out(std::max(1, m));
  for (const auto& t : enumerate_semistandard(lambda, m)) {
    Exponent e(std::max(1, m), 0);
    for (const auto& row : t.rows()) {
      for (int v : row) ++e[v - 1];
    }
    out.add_term(std::move(e), 1);
  }
  return out;
}

bool stabilization_check(const Composition& alpha, int n, int N, FamilyCache& cache) {
  if (n < 1 || N < n) throw InputError("stabilization_check needs N >= n >= 1");
  return restrict_vars(cache.key(alpha.shifted(N)), n) == schur(sort_to_partition(alpha), n);
}

}  // namespace kgroth
