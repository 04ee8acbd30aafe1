#include <doctest.h>

#include <algorithm>
#include <set>

#include "kgroth/errors.hpp"
#include "kgroth/shapes.hpp"
#include "kgroth/tableaux.hpp"
#include "oracles.hpp"

using namespace kgroth;

namespace {

Tableau T(const char* text) { return Tableau::parse(text); }

const char* kExampleP = "1,2,3,5,7/2,4,5,6/4,6";
const char* kExampleKey = "1,1,1,1,2/2,2,2,2/4,4";

bool rows_ok(const Tableau& t, bool strict) {
  for (const auto& row : t.rows()) {
    for (std::size_t c = 1; c < row.size(); ++c) {
      if (strict ? row[c - 1] >= row[c] : row[c - 1] > row[c]) return false;
    }
  }
  return true;
}

bool cols_ok(const Tableau& t, bool strict) {
  for (int r = 1; r < t.num_rows(); ++r) {
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      const int up = t.at(r - 1, static_cast<int>(c));
      const int down = t.at(r, static_cast<int>(c));
      if (strict ? up >= down : up > down) return false;
    }
  }
  return true;
}

std::set<Tableau> brute(const Partition& shape, int max_entry, bool row_strict, bool col_strict) {
  std::set<Tableau> out;
  oracle::for_each_filling(shape, max_entry, [&](const Tableau& t) {
    if (rows_ok(t, row_strict) && cols_ok(t, col_strict)) out.insert(t);
  });
  return out;
}

std::set<Tableau> as_set(const std::vector<Tableau>& v) { return {v.begin(), v.end()}; }

// Count of set-valued semistandard fillings by trying every nonempty subset
// in every cell.
long brute_set_valued(const Partition& shape, int max_entry, std::map<std::vector<int>, long>* weights = nullptr) {
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < shape.length(); ++r) {
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(r, c);
  }
  const unsigned full = 1u << max_entry;
  std::vector<unsigned> choice(cells.size(), 1);
  auto lo = [](unsigned m) { return __builtin_ctz(m); };
  auto hi = [](unsigned m) { return 31 - __builtin_clz(m); };
  long count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      std::map<std::pair<int, int>, unsigned> at;
      for (std::size_t j = 0; j < cells.size(); ++j) at[cells[j]] = choice[j];
      for (const auto& [rc, m] : at) {
        auto right = at.find({rc.first, rc.second + 1});
        if (right != at.end() && hi(m) > lo(right->second)) return;
        auto down = at.find({rc.first + 1, rc.second});
        if (down != at.end() && hi(m) >= lo(down->second)) return;
      }
      ++count;
      if (weights) {
        std::vector<int> w(max_entry, 0);
        for (unsigned m : choice) {
          for (int b = 0; b < max_entry; ++b) w[b] += (m >> b) & 1u;
        }
        ++(*weights)[w];
      }
      return;
    }
    for (unsigned m = 1; m < full; ++m) {
      choice[k] = m;
      rec(k + 1);
    }
  };
  if (cells.empty()) return 1;
  if (max_entry < 1) return 0;
  rec(0);
  return count;
}

}  // namespace

TEST_CASE("sort_to_partition") {
  CHECK(sort_to_partition(Composition({1, 0, 2, 1})) == Partition({2, 1, 1}));
  CHECK(sort_to_partition(Composition({0, 0})).empty());
  CHECK(sort_to_partition(Composition({4, 5, 0, 2})) == Partition({5, 4, 2}));
}

TEST_CASE("partitions and compositions") {
  CHECK(Composition({1, 0, 2, 0, 0}) == Composition({1, 0, 2}));
  CHECK(Composition({1, 0, 2}).total() == 3);
  CHECK(Composition({1, 0, 2}).shifted(2) == Composition({0, 0, 1, 0, 2}));
  CHECK(Composition({1, 0, 2}).swapped(2) == Composition({1, 2}));
  CHECK(Composition::parse("3,0,1").to_string() == "3,0,1");
  CHECK(Partition({3, 1}).conjugate() == Partition({2, 1, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), InputError);
  CHECK_THROWS_AS(Composition::parse("1,-1"), InputError);
  CHECK(partitions_of(4, 4, 4).size() == 5);
  CHECK(partitions_of(4, 2, 3).size() == 2);
  CHECK(compositions_of(3, 3).size() == 10);
  CHECK(partitions_in_staircase(4).size() == 14);
}

TEST_CASE("word_of") {
  CHECK(word_of(T(kExampleP)) == Word{7, 5, 6, 3, 5, 2, 4, 6, 1, 2, 4});
  CHECK(word_of(T("1,2/2")) == Word{2, 1, 2});
  CHECK(word_of(T("1")) == Word{1});
}

TEST_CASE("enumerate_increasing") {
  CHECK(enumerate_increasing(Partition({2, 1}), 2) == std::vector<Tableau>{T("1,2/2")});
  CHECK(enumerate_increasing(Partition({1}), 3) == std::vector<Tableau>{T("1"), T("2"), T("3")});
  CHECK(enumerate_increasing(Partition({1, 1, 1}), 2).empty());
}

TEST_CASE("enumerations agree with brute force") {
  for (const auto& shape : partitions_in_box(3, 3)) {
    if (shape.size() > 6) continue;
    for (int m = 1; m <= 4; ++m) {
      const auto inc = enumerate_increasing(shape, m);
      REQUIRE(as_set(inc) == brute(shape, m, true, true));
      REQUIRE(std::is_sorted(inc.begin(), inc.end()));
      REQUIRE(as_set(enumerate_row_strict(shape, m)) == brute(shape, m, true, false));
      REQUIRE(as_set(enumerate_semistandard(shape, m)) == brute(shape, m, false, true));
      for (const auto& t : inc) {
        for (int r = 0; r < t.num_rows(); ++r) {
          for (std::size_t c = 0; c < t.rows()[r].size(); ++c) REQUIRE(t.at(r, static_cast<int>(c)) >= r + static_cast<int>(c) + 1);
        }
      }
    }
  }
}

TEST_CASE("conjecture_tableaux") {
  const auto w31524 = conjecture_tableaux(Permutation::parse("31524"));
  CHECK(as_set(w31524) == std::set<Tableau>{T("1,2,4/3"), T("1,2/3,4"), T("1,2,4/3,4")});
  CHECK(conjecture_tableaux(Permutation::parse("321")) == std::vector<Tableau>{T("1,2/2")});
  const auto id = conjecture_tableaux(Permutation::identity(3));
  REQUIRE(id.size() == 1);
  CHECK(id.front().empty());
}

TEST_CASE("conjecture_tableaux is exhaustive on S3 and S4") {
  for (int n = 3; n <= 4; ++n) {
    std::map<std::vector<int>, std::set<Tableau>> filtered;
    for (const auto& shape : partitions_in_staircase(n)) {
      oracle::for_each_filling(shape, n - 1, [&](const Tableau& t) {
        if (!rows_ok(t, true) || !cols_ok(t, true)) return;
        filtered[oracle::hecke_class(word_of(t), n).one_line()].insert(t);
      });
    }
    for (const auto& w : all_permutations(n)) REQUIRE(as_set(conjecture_tableaux(w)) == filtered[w.one_line()]);
  }
}

TEST_CASE("lds") {
  CHECK(lds(Tableau()) == 0);
  CHECK(row_reading_word(T("1,2/2")) == std::vector<int>{2, 1, 2});
  CHECK(lds(T("1,2/2")) == 2);
  CHECK(longest_decreasing({1, 2, 2}) == 1);
  CHECK(longest_decreasing({5, 3, 4, 1, 1}) == 3);
}

TEST_CASE("longest_decreasing agrees with subset search") {
  std::mt19937 rng(3301);
  std::uniform_int_distribution<int> len(0, 12);
  std::uniform_int_distribution<int> val(1, 6);
  for (int t = 0; t < 1000; ++t) {
    std::vector<int> word(len(rng));
    for (auto& v : word) v = val(rng);
    REQUIRE(longest_decreasing(word) == oracle::lds(word));
  }
}

TEST_CASE("enumerate_set_valued") {
  std::set<std::string> one;
  for (const auto& t : enumerate_set_valued(Partition({1}), 2)) one.insert(t.to_string());
  CHECK(one == std::set<std::string>{"{1}", "{2}", "{1|2}"});
  CHECK(enumerate_set_valued(Partition({1}), 1).size() == 1);
  CHECK(enumerate_set_valued(Partition({1, 1}), 1).empty());
  for (int m = 1; m <= 6; ++m) CHECK(enumerate_set_valued(Partition({1}), m).size() == (1u << m) - 1);
}

TEST_CASE("set-valued enumeration agrees with subset brute force") {
  for (const auto& shape : partitions_in_box(2, 3)) {
    if (shape.size() > 4) continue;
    for (int m = 1; m <= 3; ++m) {
      std::map<std::vector<int>, long> expected;
      const long count = brute_set_valued(shape, m, &expected);
      const auto got = enumerate_set_valued(shape, m);
      REQUIRE(static_cast<long>(got.size()) == count);
      std::map<std::vector<int>, long> weights;
      for (const auto& t : got) {
        REQUIRE(t.shape() == shape);
        ++weights[t.weight(m)];
      }
      if (!shape.empty()) REQUIRE(weights == expected);
    }
  }
}

TEST_CASE("enumerate_row_strict") {
  CHECK(enumerate_row_strict(Partition({1, 1}), 1) == std::vector<Tableau>{T("1/1")});
  CHECK(enumerate_row_strict(Partition({2}), 2) == std::vector<Tableau>{T("1,2")});
  CHECK(as_set(enumerate_row_strict(Partition({2, 1}), 2)) == std::set<Tableau>{T("1,2/1"), T("1,2/2")});
}

TEST_CASE("content") {
  CHECK(content(T(kExampleKey)) == Composition({4, 5, 0, 2}));
  CHECK(content(T("1,1/2")) == Composition({2, 1}));
  CHECK(content(Tableau()) == Composition());
}

TEST_CASE("is_key") {
  CHECK(is_key(T(kExampleKey)));
  CHECK(is_key(T("1,2/2")));
  CHECK_FALSE(is_key(T("1,3/2")));
  CHECK(is_key(T("1/2/4")));
}

TEST_CASE("key round trip") {
  for (int total = 0; total <= 6; ++total) {
    for (const auto& alpha : compositions_of(total, 4)) {
      const Tableau k = key_tableau(alpha);
      REQUIRE(is_key(k));
      REQUIRE(content(k) == alpha);
      REQUIRE(k.shape() == sort_to_partition(alpha));
    }
  }
  CHECK(key_tableau(Composition({4, 5, 0, 2})) == T(kExampleKey));
}

TEST_CASE("tableau text format") {
  CHECK(T(kExampleP).to_string() == kExampleP);
  CHECK(T(kExampleP).shape() == Partition({5, 4, 2}));
  CHECK(T(kExampleP).column(1) == std::vector<int>{2, 4, 6});
  CHECK(T(kExampleP).leading_columns(2) == T("1,2/2,4/4,6"));
  CHECK_THROWS_AS(T("1,2/2,3,4"), InputError);
  CHECK_THROWS_AS(T("1,a"), InputError);
}

TEST_CASE("row_hecke_word") {
  CHECK(row_hecke_word(T("1,2/2")) == Word{2, 1, 2});
  CHECK(row_hecke_word(T("1,3,4/2,4")) == Word{4, 3, 1, 4, 2});
  for (int n = 2; n <= 5; ++n) {
    for (const auto& shape : partitions_in_staircase(n)) {
      for (const auto& t : enumerate_increasing(shape, n - 1)) {
        REQUIRE(demazure_product(row_hecke_word(t), n) == demazure_product(word_of(t), n));
      }
    }
  }
}

TEST_CASE("row_strict_hecke_tableaux") {
  const auto t = row_strict_hecke_tableaux(Permutation::parse("21"), 3);
  CHECK(t == std::vector<Tableau>{T("1"), T("1/1"), T("1/1/1")});
  CHECK(row_strict_hecke_tableaux(Permutation::identity(3), 2) == std::vector<Tableau>{Tableau()});
}
