#include <gtest/gtest.h>

#include "pfaff/engine.hpp"
#include "pfaff/families.hpp"
#include "pfaff/ladder.hpp"
#include "pfaff/render.hpp"
#include "support.hpp"

using namespace pfaff;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no pfaff::Error thrown";
  return ErrorCode::BadParams;
}

LadderIdealSpec spec(int n, std::vector<std::pair<int, int>> corners, std::vector<int> t) {
  return LadderIdealSpec::make(n, corners, t);
}

}  // namespace

TEST(MakeLadder, FullSquare) {
  Ladder l = make_ladder(5, {{1, 5}});
  EXPECT_EQ(l.upper_cell_count(), 10);
}

TEST(MakeLadder, NotchedSquare) {
  Ladder l = make_ladder(6, {{1, 5}, {2, 6}});
  EXPECT_EQ(l.upper_cell_count(), 14);
  EXPECT_FALSE(l.contains(1, 6));
  EXPECT_TRUE(l.contains(2, 6));
}

TEST(MakeLadder, Errors) {
  EXPECT_EQ(code_of([] { make_ladder(4, {{3, 2}}); }), ErrorCode::CornerOutOfRange);
  EXPECT_EQ(code_of([] { make_ladder(4, {{1, 5}}); }), ErrorCode::CornerOutOfRange);
  EXPECT_EQ(code_of([] { make_ladder(5, {{1, 4}, {1, 4}}); }), ErrorCode::CoincidentCorners);
  EXPECT_EQ(code_of([] { make_ladder(6, {{1, 6}, {2, 5}}); }), ErrorCode::NotSortable);
  EXPECT_EQ(code_of([] { make_ladder(6, {}); }), ErrorCode::EmptySpec);
}

TEST(MakeLadder, SortsCorners) {
  Ladder l = make_ladder(6, {{2, 6}, {1, 5}});
  ASSERT_EQ(l.corners().size(), 2u);
  EXPECT_EQ(l.corners()[0], (UpperCorner{1, 5}));
}

TEST(Normalize, SizeBound) {
  EXPECT_TRUE(normalize(spec(3, {{1, 3}}, {2})).empty());
  auto s = spec(5, {{1, 5}}, {2});
  EXPECT_EQ(normalize(s), s);
  auto with_big = LadderIdealSpec::from_blocks(5, {{{1, 4}, 2}, {{2, 5}, 2}, {{1, 5}, 3}});
  NormalizeInfo info;
  EXPECT_EQ(normalize(with_big, &info), spec(5, {{1, 4}, {2, 5}}, {2, 2}));
  EXPECT_EQ(info.size_dropped, 1);
}

TEST(Normalize, RedundantCorner) {
  // (1,5) with t=2 lies inside (1,6) with t=2: every 4-pfaffian of rows 1..5
  // is one of rows 1..6.
  auto s = LadderIdealSpec::from_blocks(6, {{{1, 5}, 2}, {{1, 6}, 2}});
  NormalizeInfo info;
  EXPECT_EQ(normalize(s, &info), spec(6, {{1, 6}}, {2}));
  EXPECT_EQ(info.redundant_dropped, 1);
  // Smaller t on a larger square is not redundant.
  auto n2 = make_family(Family::N, {.t = 2});
  EXPECT_EQ(n2.size(), 2u);
}

TEST(Normalize, Idempotent) {
  for (const auto& s : specgen::enumerate_specs_up_to(6)) {
    EXPECT_EQ(normalize(normalize(s)), normalize(s));
    EXPECT_TRUE(is_normalized(s));
  }
  auto raw = LadderIdealSpec::from_blocks(7, {{{1, 5}, 2}, {{1, 7}, 2}, {{2, 4}, 2}, {{3, 7}, 1}});
  EXPECT_EQ(normalize(normalize(raw)), normalize(raw));
}

TEST(Tilde, Examples) {
  for (int t = 1; t <= 5; ++t) {
    Ladder l = tilde(make_family(Family::M, {.t = t}));
    ASSERT_EQ(l.corners().size(), 1u);
    EXPECT_EQ(l.corners()[0], (UpperCorner{t, t + 2}));
  }
  Ladder l = tilde(make_family(Family::Ln, {.t = 2, .n = 6}));
  ASSERT_EQ(l.corners().size(), 2u);
  EXPECT_EQ(l.corners()[0], (UpperCorner{2, 4}));
  EXPECT_EQ(l.corners()[1], (UpperCorner{3, 5}));
  auto lin = spec(6, {{1, 4}, {2, 6}}, {1, 1});
  EXPECT_EQ(tilde(lin), lin.ladder());
  EXPECT_EQ(code_of([] { tilde(LadderIdealSpec{}); }), ErrorCode::EmptySpec);
}

TEST(Height, Examples) {
  for (int t = 1; t <= 6; ++t) EXPECT_EQ(height(make_family(Family::M, {.t = t})), 3);
  EXPECT_EQ(height(make_family(Family::Ln, {.t = 2, .n = 6})), 5);
  EXPECT_EQ(height(make_family(Family::SM, {.t = 2})), 6);
  EXPECT_EQ(height(LadderIdealSpec{}), 0);
}

TEST(Height, BruteForceAndTranslation) {
  for (const auto& s : specgen::enumerate_specs_up_to(7)) {
    int count = 0;
    for (int i = 1; i <= s.n(); ++i)
      for (int j = i + 1; j <= s.n(); ++j) {
        bool in = false;
        for (const auto& bl : s.blocks()) {
          int lo = bl.corner.a + bl.t - 1, hi = bl.corner.b - bl.t + 1;
          if (lo <= i && j <= hi) in = true;
        }
        count += in;
      }
    EXPECT_EQ(height(s), count);
    std::vector<Block> shifted;
    for (const auto& bl : s.blocks()) shifted.push_back({{bl.corner.a + 2, bl.corner.b + 2}, bl.t});
    EXPECT_EQ(height(LadderIdealSpec::from_blocks(s.n() + 2, shifted)), height(s));
  }
}

TEST(Families, Examples) {
  EXPECT_EQ(make_family(Family::Lk, {.t = 2, .k = 1}), make_family(Family::M, {.t = 2}));
  EXPECT_EQ(make_family(Family::Ljk, {.t = 2, .j = 1, .k = 1}), spec(5, {{1, 3}, {1, 5}}, {1, 2}));
  EXPECT_EQ(make_family(Family::N, {.t = 2}), spec(5, {{1, 3}, {1, 5}}, {1, 2}));
  EXPECT_EQ(canonical_key(make_family(Family::Hjk, {.t = 3, .j = 2, .k = 0})),
            canonical_key(make_family(Family::Lk, {.t = 2, .k = 2})));
  EXPECT_EQ(make_family("L^n", {.t = 2, .n = 6}), spec(6, {{1, 5}, {2, 6}}, {2, 2}));
  EXPECT_EQ(make_family(Family::I, {.t = 2, .n = 5}), make_family(Family::M, {.t = 2}));
}

TEST(Families, Identities) {
  auto key = [](Family f, FamilyParams p) { return canonical_key(make_family(f, p)); };
  for (int t = 1; t <= 5; ++t) {
    EXPECT_EQ(key(Family::Lk, {.t = t, .k = 1}), key(Family::M, {.t = t}));
    EXPECT_EQ(key(Family::Lk, {.t = t, .k = 2}), key(Family::Ln, {.t = t, .n = 2 * t + 2}));
    EXPECT_EQ(key(Family::Ljk, {.t = t, .j = 0, .k = 1}), key(Family::M, {.t = t}));
    for (int k = 1; k <= 4; ++k) {
      EXPECT_EQ(key(Family::Ljk, {.t = t, .j = 0, .k = k}), key(Family::Lk, {.t = t, .k = k}));
      EXPECT_EQ(key(Family::Hjk, {.t = t, .j = 0, .k = k}), key(Family::Lk, {.t = t, .k = k}));
      EXPECT_EQ(key(Family::Hjk, {.t = t + 1, .j = k, .k = 0}), key(Family::Lk, {.t = t, .k = k}));
      EXPECT_EQ(key(Family::Ljk, {.t = t + 1, .j = k, .k = 0}), key(Family::Ljk, {.t = t, .j = 0, .k = k}));
    }
    if (t >= 2) {
      EXPECT_EQ(key(Family::Ljk, {.t = t, .j = 1, .k = 1}), key(Family::N, {.t = t}));
      // L_t(1,0) is the single corner (1, 2t-1) with t-1, i.e. M_{t-1}.
      EXPECT_EQ(key(Family::Ljk, {.t = t, .j = 1, .k = 0}), key(Family::M, {.t = t - 1}));
    }
  }
}

TEST(Families, Errors) {
  EXPECT_EQ(code_of([] { make_family("Q", {.t = 2}); }), ErrorCode::UnknownFamily);
  EXPECT_EQ(code_of([] { make_family(Family::M, {.t = 0}); }), ErrorCode::BadParams);
  EXPECT_EQ(code_of([] { make_family(Family::I, {.t = 3, .n = 5}); }), ErrorCode::BadParams);
  EXPECT_EQ(code_of([] { make_family(Family::Lk, {.t = 2, .k = 0}); }), ErrorCode::BadParams);
  EXPECT_EQ(code_of([] { make_family(Family::Ljk, {.t = 1, .j = 1, .k = 1}); }), ErrorCode::BadParams);
}

TEST(BiliaisonStep, FullSquare) {
  auto s = spec(5, {{1, 5}}, {2});
  BiliaisonStep st = biliaison_step(s, 1);
  EXPECT_EQ(st.reduced, spec(5, {{2, 4}}, {1}));
  EXPECT_EQ(st.divisor, make_family(Family::Ln, {.t = 2, .n = 5}));
  EXPECT_EQ(st.deg_f, 1);
  EXPECT_EQ(st.deg_g, 2);
  EXPECT_EQ(st.height, 1);
  EXPECT_TRUE(st.admissible);
  EXPECT_EQ(biliaison_step(make_family(Family::M, {.t = 2}), 1).divisor, st.divisor);
}

TEST(BiliaisonStep, Errors) {
  auto s = spec(5, {{1, 3}, {1, 5}}, {1, 2});
  EXPECT_EQ(code_of([&] { biliaison_step(s, 1); }), ErrorCode::StepNotApplicable);
  EXPECT_EQ(code_of([&] { biliaison_step(s, 0); }), ErrorCode::BadCornerIndex);
  EXPECT_EQ(code_of([&] { biliaison_step(s, 3); }), ErrorCode::BadCornerIndex);
}

TEST(BiliaisonStep, FullSquareGivesLtnAndSmallerSquare) {
  for (int t = 2; t <= 5; ++t)
    for (int n = 2 * t + 1; n <= 2 * t + 5; ++n) {
      auto st = biliaison_step(make_family(Family::I, {.t = t, .n = n}), 1);
      EXPECT_EQ(canonical_key(st.divisor), canonical_key(make_family(Family::Ln, {.t = t, .n = n})));
      EXPECT_EQ(canonical_key(st.reduced), canonical_key(make_family(Family::I, {.t = t - 1, .n = n - 2})));
    }
}

TEST(BiliaisonStep, HeightsAlongAdmissibleSteps) {
  std::size_t steps = 0;
  for (const auto& s : specgen::enumerate_specs_up_to(8)) {
    for (int k = 1; k <= static_cast<int>(s.size()); ++k) {
      if (s.blocks()[static_cast<std::size_t>(k - 1)].t < 2) continue;
      auto st = biliaison_step(s, k);
      if (!st.admissible) continue;
      ++steps;
      ASSERT_EQ(height(st.reduced), height(s));
      ASSERT_EQ(height(st.divisor), height(s) - 1);
    }
  }
  EXPECT_GT(steps, 1000u);
}

TEST(BiliaisonStep, MaxTCornerAlwaysAdmissible) {
  for (const auto& s : specgen::enumerate_specs_up_to(8)) {
    if (s.all_linear()) continue;
    int k = choose_corner(s, CornerPolicy::MaxT);
    ASSERT_GT(k, 0);
    int tmax = 0;
    for (const auto& bl : s.blocks()) tmax = std::max(tmax, bl.t);
    EXPECT_EQ(s.blocks()[static_cast<std::size_t>(k - 1)].t, tmax);
  }
}

TEST(CanonicalKey, Examples) {
  EXPECT_EQ(canonical_key(make_family(Family::M, {.t = 2})), canonical_key(make_family(Family::Lk, {.t = 2, .k = 1})));
  EXPECT_EQ(canonical_key(spec(6, {{1, 5}}, {2})), canonical_key(spec(6, {{2, 6}}, {2})));
  EXPECT_NE(canonical_key(make_family(Family::M, {.t = 2})), canonical_key(make_family(Family::SM, {.t = 2})));
}

TEST(EnumerateSpecs, Counts) {
  const std::vector<std::size_t> expected{1, 4, 17, 74, 360, 1886, 10574};
  for (int n = 2; n <= 8; ++n) EXPECT_EQ(specgen::enumerate_specs(n).size(), expected[static_cast<std::size_t>(n - 2)]);
}

TEST(Render, FullSquare) {
  std::string pic = render_ascii(make_ladder(3, {{1, 3}}));
  EXPECT_EQ(pic, "  123\n1 ##1\n2 ###\n3 ###\n");
}

TEST(Render, NotchedSquare) {
  std::string pic = render_ascii(make_ladder(6, {{1, 5}, {2, 6}}));
  EXPECT_NE(pic.find("1 ####1."), std::string::npos);
  EXPECT_NE(pic.find("6 .#####"), std::string::npos);
}

TEST(Render, InnerBoundaryMarker) {
  std::string pic = render_ascii(make_family(Family::Ljk, {.t = 3, .j = 3, .k = 4}));
  EXPECT_NE(pic.find(':'), std::string::npos);
  EXPECT_NE(pic.find('#'), std::string::npos);
  EXPECT_NE(pic.find("7: (6,12) t=3"), std::string::npos);
}
