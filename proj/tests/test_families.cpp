#include <doctest.h>

#include <sstream>

#include "kgroth/errors.hpp"
#include "kgroth/families.hpp"
#include "oracles.hpp"

using namespace kgroth;
using oracle::poly;

namespace {

Permutation P(const char* text) { return Permutation::parse(text); }
Composition C(std::vector<int> v) { return Composition(std::move(v)); }

}  // namespace

TEST_CASE("grothendieck") {
  FamilyCache cache;
  CHECK(cache.grothendieck(P("21")) == poly("x1"));
  CHECK(cache.grothendieck(Permutation::identity(4)) == poly("1"));
  CHECK(cache.grothendieck(P("132")) == poly("x1 + x2 + b*x1*x2"));
  CHECK(cache.grothendieck(P("321")) == poly("x1^2*x2"));
  CHECK(cache.grothendieck(P("132")).ambient() == 2);
}

TEST_CASE("schubert") {
  FamilyCache cache;
  CHECK(schubert(P("21"), cache) == poly("x1"));
  CHECK(schubert(P("132"), cache) == poly("x1 + x2"));
  CHECK(schubert(Permutation::identity(3), cache) == poly("1"));
}

TEST_CASE("lascoux") {
  FamilyCache cache;
  CHECK(cache.lascoux(C({2, 1})) == poly("x1^2*x2"));
  CHECK(cache.lascoux(C({0, 1})) == poly("x1 + x2 + b*x1*x2"));
  CHECK(cache.lascoux(C({1, 2})) == poly("x1^2*x2 + x1*x2^2 + b*x1^2*x2^2"));
  CHECK(cache.lascoux(C({})) == poly("1"));
}

TEST_CASE("key") {
  FamilyCache cache;
  CHECK(cache.key(C({2, 1})) == poly("x1^2*x2"));
  CHECK(cache.key(C({0, 1})) == poly("x1 + x2"));
  CHECK(cache.key(C({0, 0, 1})) == poly("x1 + x2 + x3"));
}

TEST_CASE("key is the beta = 0 part of lascoux") {
  FamilyCache cache;
  for (int total = 0; total <= 5; ++total) {
    for (const auto& alpha : compositions_of(total, 4)) REQUIRE(cache.key(alpha) == beta_zero(cache.lascoux(alpha)));
  }
}

TEST_CASE("groth_compatible") {
  CHECK(groth_compatible(P("21")) == poly("x1"));
  CHECK(groth_compatible(Permutation::identity(3)) == poly("1"));
  FamilyCache cache;
  CHECK(groth_compatible(P("31524")) == cache.grothendieck(P("31524")));
}

TEST_CASE("compatible sequences agree with a brute-force word filter for n <= 4") {
  for (int n = 2; n <= 4; ++n) {
    const int max_len = (n - 1) * (n - 1);
    for (const auto& w : all_permutations(n)) {
      REQUIRE(groth_compatible(w) == oracle::compatible_sum(w, n - 1, true, max_len));
    }
  }
  for (const auto& w : all_permutations(3)) {
    for (int m = 1; m <= 2; ++m) REQUIRE(stable_groth(w, m) == oracle::compatible_sum(w, m, false, 5));
  }
}

TEST_CASE("schubert_compatible is the beta = 0 part") {
  FamilyCache cache;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& w : all_permutations(n)) REQUIRE(schubert_compatible(w) == schubert(w, cache));
  }
}

TEST_CASE("stable_groth") {
  CHECK(stable_groth(P("21"), 2) == poly("x1 + x2 + b*x1*x2"));
  CHECK(stable_groth(Permutation::identity(3), 3) == poly("1"));
  const auto g = stable_groth(P("23514"), 5);
  MVPolynomial degree4(5);
  for (const auto& [e, c] : g.terms()) {
    int d = 0;
    for (int v : e) d += v;
    if (d == 4) degree4.add_term(e, BetaScalar(c.coefficient(0)));
  }
  CHECK(degree4 == schur(Partition({2, 1, 1}), 5));
  CHECK_THROWS_AS(stable_groth(P("21"), 0), InputError);
}

TEST_CASE("buch_G") {
  CHECK(buch_G(Partition({1}), 2) == poly("x1 + x2 + b*x1*x2"));
  CHECK(buch_G(Partition(), 3) == poly("1"));
  CHECK(buch_G(Partition({1, 1}), 1).is_zero());
}

TEST_CASE("schur") {
  CHECK(schur(Partition({1}), 2) == poly("x1 + x2"));
  const auto s211 = schur(Partition({2, 1, 1}), 3);
  CHECK(s211.size() == 3);
  FamilyCache cache;
  CHECK(s211 == cache.key(C({1, 1, 2})));
  CHECK(schur(Partition(), 2) == poly("1"));
}

TEST_CASE("Grassmannian grothendieck polynomials are Buch's G") {
  FamilyCache cache;
  int checked = 0;
  for (int n = 2; n <= 5; ++n) {
    for (const auto& w : all_permutations(n)) {
      const auto g = grassmannian_data(w);
      if (!g) continue;
      REQUIRE(cache.grothendieck(w) == buch_G(g->shape, g->k));
      ++checked;
    }
  }
  CHECK(checked == 1 + 4 + 11 + 26);
}

TEST_CASE("antidominant keys are Schur polynomials") {
  FamilyCache cache;
  for (int m = 1; m <= 4; ++m) {
    for (int total = 0; total <= 5; ++total) {
      for (const auto& lambda : partitions_of(total, m, total)) {
        std::vector<int> reversed(m, 0);
        for (int j = 0; j < lambda.length(); ++j) reversed[m - 1 - j] = lambda[j];
        REQUIRE(cache.key(C(reversed)).with_ambient(m) == schur(lambda, m));
      }
    }
  }
}

TEST_CASE("stabilization_check") {
  FamilyCache cache;
  CHECK(stabilization_check(C({1}), 2, 2, cache));
  CHECK(stabilization_check(C({}), 2, 3, cache));
  CHECK(stabilization_check(C({1, 0, 2, 1}), 3, 4, cache));
  CHECK_THROWS_AS(stabilization_check(C({1}), 3, 2, cache), InputError);
}

TEST_CASE("path independence") {
  FamilyCache cache;
  for (const auto& w : all_permutations(4)) {
    REQUIRE(grothendieck_by_pivot(w, PivotRule::LargestAscent) == cache.grothendieck(w));
    REQUIRE(grothendieck_by_pivot(w, PivotRule::SmallestAscent) == cache.grothendieck(w));
  }
  for (int total = 0; total <= 5; ++total) {
    for (const auto& alpha : compositions_of(total, 4)) {
      REQUIRE(lascoux_by_pivot(alpha, PivotRule::LargestAscent) == cache.lascoux(alpha));
    }
  }
}

TEST_CASE("adjusted homogeneity") {
  FamilyCache cache;
  for (const auto& w : all_permutations(5)) {
    const auto parts = adjusted_components(cache.grothendieck(w));
    REQUIRE(parts.size() == 1);
    REQUIRE(parts.begin()->first == coxeter_length(w));
  }
  for (int total = 0; total <= 5; ++total) {
    for (const auto& alpha : compositions_of(total, 4)) {
      const auto parts = adjusted_components(cache.lascoux(alpha));
      REQUIRE(parts.size() == 1);
      REQUIRE(parts.begin()->first == total);
    }
  }
}

TEST_CASE("stable families are symmetric") {
  for (const auto& w : all_permutations(4)) {
    const auto g = stable_groth(w, 3);
    for (int i = 1; i < 3; ++i) REQUIRE(swap_vars(g, i) == g);
  }
  for (const auto& lambda : partitions_in_box(3, 3)) {
    const auto g = buch_G(lambda, 3);
    for (int i = 1; i < 3; ++i) REQUIRE(swap_vars(g, i) == g);
  }
}

TEST_CASE("stable limit") {
  FamilyCache cache;
  for (const auto& w : all_permutations(3)) {
    for (int m = 1; m <= 2; ++m) {
      for (int k = m; k <= 3; ++k) {
        REQUIRE(restrict_vars(cache.grothendieck(shift(w, k)), m) == stable_groth(w, m));
      }
    }
  }
}

TEST_CASE("cache persistence") {
  FamilyCache cache;
  cache.grothendieck(P("31524"));
  cache.lascoux(C({1, 0, 2, 1}));
  std::stringstream buffer;
  cache.save(buffer);
  const std::string saved = buffer.str();
  CHECK(saved.rfind("{\"format\":\"kgroth-cache\",\"version\":1}\n", 0) == 0);

  FamilyCache loaded;
  std::stringstream in(saved);
  loaded.load(in);
  CHECK(loaded.groth_entries() == cache.groth_entries());
  CHECK(loaded.lascoux_entries() == cache.lascoux_entries());
  CHECK(loaded.grothendieck(P("31524")) == cache.grothendieck(P("31524")));
  std::stringstream again;
  loaded.save(again);
  CHECK(again.str() == saved);

  FamilyCache fresh;
  CHECK(fresh.grothendieck(P("31524")).to_string() == loaded.grothendieck(P("31524")).to_string());
}

TEST_CASE("cache rejects bad files") {
  FamilyCache cache;
  std::stringstream wrong_version("{\"format\":\"kgroth-cache\",\"version\":2}\n");
  CHECK_THROWS_AS(cache.load(wrong_version), InputError);
  std::stringstream wrong_format("{\"format\":\"other\",\"version\":1}\n");
  CHECK_THROWS_AS(cache.load(wrong_format), InputError);
  std::stringstream empty("");
  CHECK_THROWS_AS(cache.load(empty), InputError);
  std::stringstream bad_kind(
      "{\"format\":\"kgroth-cache\",\"version\":1}\n"
      "{\"kind\":\"zeta\",\"key\":\"21\",\"poly\":{\"vars\":1,\"terms\":[]}}\n");
  CHECK_THROWS_AS(cache.load(bad_kind), InputError);
  std::stringstream bad_ambient(
      "{\"format\":\"kgroth-cache\",\"version\":1}\n"
      "{\"kind\":\"groth\",\"key\":\"321\",\"poly\":{\"vars\":5,\"terms\":[]}}\n");
  CHECK_THROWS_AS(cache.load(bad_ambient), InputError);
  cache.load_file("/nonexistent/kgroth-cache-file");
  CHECK(cache.groth_entries() == 0);
}
