#include <doctest.h>

#include <algorithm>
#include <random>

#include "kgroth/errors.hpp"
#include "kgroth/kjdt.hpp"
#include "kgroth/tableaux.hpp"

using namespace kgroth;

namespace {

constexpr int B = SlideState::kBullet;

Tableau T(const char* text) { return Tableau::parse(text); }

Ribbon sorted(Ribbon r) {
  std::sort(r.begin(), r.end(), [](const RibbonCell& a, const RibbonCell& b) { return a.cell < b.cell; });
  return r;
}

RibbonCell L(int r, int c) { return {{r, c}, RibbonSymbol::Label}; }
RibbonCell D(int r, int c) { return {{r, c}, RibbonSymbol::Bullet}; }

// The (3,2,1)/(2,1) tableau in a 4x3 rectangle used by the worked slide.
SlideState worked_input() { return SlideState::from_grid({{0, 0, 2}, {0, 2, 0}, {1, 0, 0}, {0, 0, 0}}); }
SlideState worked_output() { return SlideState::from_grid({{0, 0, 0}, {0, 0, 2}, {0, 2, 0}, {1, 0, 0}}); }

// Random straight increasing tableau with at most `rows` rows and `cols`
// columns and labels up to `max_entry`.
Tableau random_increasing(std::mt19937& rng, int rows, int cols, int max_entry) {
  std::uniform_int_distribution<int> len(0, cols);
  std::vector<int> parts;
  int prev = cols;
  for (int r = 0; r < rows; ++r) {
    const int l = std::min(prev, len(rng));
    if (l == 0) break;
    parts.push_back(l);
    prev = l;
  }
  std::vector<std::vector<int>> grid;
  for (std::size_t r = 0; r < parts.size(); ++r) {
    std::vector<int> row(parts[r]);
    for (int c = 0; c < parts[r]; ++c) {
      const int up = r > 0 ? grid[r - 1][c] : 0;
      const int left = c > 0 ? row[c - 1] : 0;
      const int lo = std::max(up, left) + 1;
      std::uniform_int_distribution<int> step(0, 2);
      row[c] = std::min(lo + step(rng), std::max(lo, max_entry));
    }
    grid.push_back(std::move(row));
  }
  return Tableau(grid);
}

}  // namespace

TEST_CASE("outer_corners") {
  const auto corners = outer_corners(worked_input());
  CHECK(corners == std::vector<Cell>{{1, 2}, {2, 1}, {3, 0}});
  CHECK(outer_corners(SlideState::from_grid({{1, 2}, {2, 3}})).empty());
  CHECK(outer_corners(SlideState(1, 1)) == std::vector<Cell>{{0, 0}});
}

TEST_CASE("switch_ribbon reproduces the worked example") {
  const Ribbon r{L(0, 3), L(1, 1), D(1, 2), L(2, 0), D(2, 1)};
  const Ribbon expected{L(0, 3), D(1, 1), L(1, 2), D(2, 0), L(2, 1)};
  CHECK(sorted(switch_ribbon(r)) == sorted(expected));
}

TEST_CASE("switch_ribbon small cases") {
  CHECK(switch_ribbon({L(0, 0)}) == Ribbon{L(0, 0)});
  CHECK(switch_ribbon({D(4, 4)}) == Ribbon{D(4, 4)});
  CHECK(sorted(switch_ribbon({L(0, 0), D(1, 0)})) == sorted({D(0, 0), L(1, 0)}));
  CHECK(switch_ribbon({}).empty());
}

TEST_CASE("switch_ribbon rejects non-short ribbons") {
  CHECK_THROWS_AS(switch_ribbon({L(0, 0), D(0, 1), D(1, 0), L(1, 1)}), StructuralError);
  CHECK_THROWS_AS(switch_ribbon({L(0, 0), D(0, 1), L(0, 2)}), StructuralError);
  CHECK_THROWS_AS(switch_ribbon({L(0, 0), D(1, 0), L(2, 0)}), StructuralError);
  CHECK_THROWS_AS(switch_ribbon({L(0, 0), L(0, 1)}), StructuralError);
  CHECK_THROWS_AS(switch_ribbon({L(0, 0), D(0, 0)}), StructuralError);
  try {
    switch_ribbon({L(3, 1), L(3, 2)});
    FAIL("expected StructuralError");
  } catch (const StructuralError& e) {
    CHECK_FALSE(e.cells().empty());
  }
}

TEST_CASE("rev_kjdt reproduces the worked three-bullet slide") {
  CHECK(rev_kjdt(worked_input(), {{1, 2}, {2, 1}, {3, 0}}) == worked_output());
}

TEST_CASE("rev_kjdt small cases") {
  const auto s = SlideState::from_grid({{1, 2}, {2, 0}});
  CHECK(rev_kjdt(s, {{1, 1}}) == SlideState::from_grid({{0, 1}, {1, 2}}));
  const auto far = SlideState::from_grid({{0, 0, 1}, {0, 0, 0}});
  CHECK(rev_kjdt(far, {{1, 0}}) == far);
  CHECK_THROWS_AS(rev_kjdt(s, {}), InputError);
  CHECK_THROWS_AS(rev_kjdt(s, {{0, 0}}), InputError);
  CHECK_THROWS_AS(rev_kjdt(SlideState::from_grid({{1, B}}), {}), InputError);
}

TEST_CASE("the worked continuation slides end in a single row") {
  SlideState s = worked_output();
  s = rev_kjdt(s, {{2, 2}});
  CHECK(s == SlideState::from_grid({{0, 0, 0}, {0, 0, 0}, {0, 0, 2}, {1, 0, 0}}));
  s = rev_kjdt(s, {{3, 1}});
  CHECK(s == SlideState::from_grid({{0, 0, 0}, {0, 0, 0}, {0, 0, 2}, {0, 1, 0}}));
  s = rev_kjdt(s, {{3, 2}});
  CHECK(s == SlideState::from_grid({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 1, 2}}));
  CHECK(s.is_reverse_straight());
}

TEST_CASE("rev_krect_leftmost") {
  const auto rect = rev_krect_leftmost(worked_output());
  CHECK(rect == SlideState::from_grid({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}, {0, 1, 2}}));
  CHECK(rect.to_string() == ".,.,./.,.,./.,.,./.,1,2");
  CHECK(rev_krect_leftmost(rect) == rect);
  const auto small = SlideState::from_tableau(T("1,2/2"), 2, 2);
  CHECK(rev_krect_leftmost(small) == SlideState::from_grid({{0, 1}, {1, 2}}));
  const auto trace = rev_krect_trace(worked_output());
  REQUIRE(trace.size() >= 2);
  CHECK(trace.front() == worked_output());
  for (const auto& state : trace) {
    REQUIRE(state.is_increasing());
    REQUIRE_FALSE(state.has_bullets());
  }
}

TEST_CASE("slide state predicates") {
  CHECK(worked_input().is_increasing());
  CHECK_FALSE(SlideState::from_grid({{2, 1}}).is_increasing());
  CHECK(SlideState::from_grid({{0, 1}, {1, 0}}).is_increasing());
  CHECK_FALSE(SlideState::from_grid({{1, 0}, {0, 1}}).is_increasing());
  CHECK(worked_output().leftmost_labeled_column() == std::vector<int>{1});
  CHECK(worked_input().row_reading_word() == std::vector<int>{1, 2, 2});
  CHECK_FALSE(worked_input().is_reverse_straight());
  CHECK(SlideState::from_grid({{0, 0}, {0, 1}}).is_reverse_straight());
  CHECK(SlideState::from_grid({{1, B}}).to_string() == "1,*");
}

TEST_CASE("left_key") {
  CHECK(left_key(T("1,2,3,5,7/2,4,5,6/4,6")) == T("1,1,1,1,2/2,2,2,2/4,4"));
  CHECK(left_key(T("1,2/2")) == T("1,1/2"));
  CHECK(left_key(T("1/3/4")) == T("1/3/4"));
  CHECK(left_key(Tableau()) == Tableau());
}

TEST_CASE("left_key_content") {
  CHECK(left_key_content(T("1,2,3,5,7/2,4,5,6/4,6")) == Composition({4, 5, 0, 2}));
  CHECK(left_key_content(T("1,2,4/3")) == Composition({3, 0, 1}));
  CHECK(left_key_content(T("1,2/3,4")) == Composition({2, 0, 2}));
  CHECK(left_key_content(T("1,2,4/3,4")) == Composition({3, 0, 2}));
  CHECK(left_key_content(T("1,2/2")) == Composition({2, 1}));
}

TEST_CASE("left_key rejects non-increasing input") {
  CHECK_THROWS_AS(left_key(T("2,1")), InputError);
  CHECK_THROWS_AS(left_key(T("1,2/1")), InputError);
}

TEST_CASE("property: lds is invariant under random slides") {
  std::mt19937 rng(4401);
  int slides = 0;
  for (int t = 0; t < 1000; ++t) {
    const Tableau p = random_increasing(rng, 4, 4, 8);
    SlideState s = SlideState::from_tableau(p, 6, 6);
    const int expected = lds(p);
    for (int step = 0; step < 4; ++step) {
      const auto corners = outer_corners(s);
      if (corners.empty() || s.labeled_cells().empty()) break;
      std::vector<Cell> chosen;
      std::bernoulli_distribution take(0.5);
      for (const auto& c : corners) {
        if (take(rng)) chosen.push_back(c);
      }
      if (chosen.empty()) chosen.push_back(corners[rng() % corners.size()]);
      s = rev_kjdt(s, chosen);
      ++slides;
      REQUIRE(s.is_increasing());
      REQUIRE(longest_decreasing(s.row_reading_word()) == expected);
    }
  }
  CHECK(slides >= 1000);
}

TEST_CASE("property: left keys of conjecture tableaux up to S6 keep their shape and are keys") {
  std::size_t checked = 0;
  for (int n = 3; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      for (const auto& p : conjecture_tableaux(w)) {
        const Tableau k = left_key(p);
        REQUIRE(k.shape() == p.shape());
        REQUIRE(is_key(k));
        REQUIRE(k.column(0) == p.column(0));
        ++checked;
      }
    }
  }
  CHECK(checked >= 1000);
}

TEST_CASE("corner policy independence is measured") {
  std::size_t compared = 0;
  std::size_t differing = 0;
  std::size_t failed = 0;
  for (int n = 3; n <= 6; ++n) {
    for (const auto& w : all_permutations(n)) {
      for (const auto& p : conjecture_tableaux(w)) {
        ++compared;
        try {
          if (left_key(p, CornerPolicy::Rightmost) != left_key(p)) ++differing;
        } catch (const InvariantViolation&) {
          ++failed;
        }
      }
    }
  }
  MESSAGE("rightmost vs leftmost corner policy: " << compared << " tableaux, " << differing << " differ, " << failed
                                                  << " not a key");
  CHECK(compared > 0);
}
