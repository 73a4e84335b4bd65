#include <gtest/gtest.h>

#include "bpring/ladder.hpp"

using namespace bpring;

namespace {

std::vector<std::pair<BimoduleLabel, BimoduleLabel>> all_pairs(int p) {
  std::vector<std::pair<BimoduleLabel, BimoduleLabel>> out;
  for (const auto& a : basis_labels(p))
    for (const auto& b : basis_labels(p)) out.emplace_back(a, b);
  return out;
}

LadderCategory make(int p, const BimoduleLabel& a, const BimoduleLabel& b) {
  return LadderCategory(catalogue_entry(p, a), catalogue_entry(p, b));
}

}  // namespace

TEST(Ladder, ObjectCountIsProductOfSimpleCounts) {
  const int p = 3;
  EXPECT_EQ(make(p, BimoduleLabel::t(), BimoduleLabel::t()).object_count(), 81);
  EXPECT_EQ(make(p, BimoduleLabel::r(), BimoduleLabel::f(0)).object_count(), 3);
  EXPECT_EQ(make(p, BimoduleLabel::f(1), BimoduleLabel::x(2)).object_count(), 3);
}

TEST(Ladder, HomBasisMatchesAdmissibilityBruteForce) {
  const int p = 3;
  for (const auto& [a, b] : all_pairs(p)) {
    const auto cat = make(p, a, b);
    const auto& m = cat.left_module();
    const auto& n = cat.right_module();
    for (const auto& src : cat.objects()) {
      for (const auto& tgt : cat.objects()) {
        std::vector<int> expected;
        for (int rung = 0; rung < p; ++rung) {
          if (m.right(tgt.m, rung) == src.m && n.left(rung, src.n) == tgt.n) expected.push_back(rung);
        }
        EXPECT_EQ(cat.hom_basis(src, tgt), expected);
      }
    }
  }
}

TEST(Ladder, EachRungReachesExactlyOneTarget) {
  const int p = 5;
  const auto cat = make(p, BimoduleLabel::t(), BimoduleLabel::x(2));
  for (const auto& src : cat.objects()) {
    for (int rung = 0; rung < p; ++rung) {
      int hits = 0;
      for (const auto& tgt : cat.objects()) hits += cat.admissible(src, tgt, rung) ? 1 : 0;
      EXPECT_EQ(hits, 1);
      EXPECT_TRUE(cat.admissible(src, cat.target_of(src, rung), rung));
    }
  }
}

TEST(Ladder, CompositionIsAssociativeExhaustivelyAtTwo) {
  const int p = 2;
  for (const auto& [a, b] : all_pairs(p)) {
    const auto cat = make(p, a, b);
    for (const auto& o : cat.objects()) {
      for (int r1 = 0; r1 < p; ++r1)
        for (int r2 = 0; r2 < p; ++r2)
          for (int r3 = 0; r3 < p; ++r3) {
            const auto f = cat.basic(o, r1);
            const auto g = cat.basic(f.target, r2);
            const auto h = cat.basic(g.target, r3);
            EXPECT_EQ(cat.compose(cat.compose(f, g), h), cat.compose(f, cat.compose(g, h)))
                << label_print(a) << "," << label_print(b);
          }
    }
  }
}

TEST(Ladder, CompositionIsAssociativeAtThree) {
  const int p = 3;
  for (const auto& [a, b] : all_pairs(p)) {
    const auto cat = make(p, a, b);
    const auto o = cat.objects().front();
    for (int r1 = 0; r1 < p; ++r1)
      for (int r2 = 0; r2 < p; ++r2)
        for (int r3 = 0; r3 < p; ++r3) {
          const auto f = cat.basic(o, r1);
          const auto g = cat.basic(f.target, r2);
          const auto h = cat.basic(g.target, r3);
          EXPECT_EQ(cat.compose(cat.compose(f, g), h), cat.compose(f, cat.compose(g, h)));
        }
  }
}

TEST(Ladder, IdentityAndInverse) {
  const int p = 5;
  for (const auto& [a, b] : {std::pair{BimoduleLabel::f(2), BimoduleLabel::x(3)}, std::pair{BimoduleLabel::t(), BimoduleLabel::r()},
                             std::pair{BimoduleLabel::f(1), BimoduleLabel::f(4)}}) {
    const auto cat = make(p, a, b);
    for (const auto& o : cat.objects()) {
      for (int rung = 0; rung < p; ++rung) {
        const auto f = cat.basic(o, rung);
        EXPECT_EQ(cat.compose(cat.identity(o), f), f);
        EXPECT_EQ(cat.compose(f, cat.identity(f.target)), f);
        const auto back = cat.inverse_basic(f);
        EXPECT_EQ(cat.compose(f, back), cat.identity(o));
        EXPECT_EQ(cat.compose(back, f), cat.identity(f.target));
      }
    }
  }
}

TEST(Ladder, MismatchedCompositionThrows) {
  const auto cat = make(3, BimoduleLabel::t(), BimoduleLabel::t());
  const auto f = cat.basic({0, 0}, 1);
  try {
    (void)cat.compose(f, cat.basic({0, 0}, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::composition_error);
  }
  LadderMorphism bad = cat.zero({0, 0}, {0, 0});
  bad.coeffs.emplace(1, CyclotomicScalar::one(3));
  EXPECT_THROW(cat.check(bad), Error);
}

TEST(Ladder, EndAlgebrasOfRightTimesF0AreGroupAlgebras) {
  for (int p : {2, 3, 5}) {
    const auto cat = make(p, BimoduleLabel::r(), BimoduleLabel::f(0));
    for (const auto& o : cat.objects()) {
      const auto alg = cat.end_algebra(o);
      EXPECT_EQ(alg.dimension(), p);
      EXPECT_TRUE(alg.commutative());
      EXPECT_TRUE(alg.untwisted());
    }
  }
}

TEST(Ladder, EndAlgebrasOfTTAreTrivial) {
  const int p = 3;
  const auto cat = make(p, BimoduleLabel::t(), BimoduleLabel::t());
  for (const auto& o : cat.objects()) EXPECT_EQ(cat.end_algebra(o).dimension(), 1);
}

TEST(Ladder, OuterActionsAreFunctorial) {
  for (int p : {2, 3}) {
    for (const auto& [a, b] : all_pairs(p)) {
      const auto cat = make(p, a, b);
      for (const auto& o : cat.objects()) {
        for (int r1 = 0; r1 < p; ++r1)
          for (int r2 = 0; r2 < p; ++r2) {
            const auto f = cat.basic(o, r1);
            const auto g = cat.basic(f.target, r2);
            const auto fg = cat.compose(f, g);
            for (int x = 0; x < p; ++x) {
              EXPECT_EQ(cat.act_left(x, fg), cat.compose(cat.act_left(x, f), cat.act_left(x, g)));
              EXPECT_EQ(cat.act_right(fg, x), cat.compose(cat.act_right(f, x), cat.act_right(g, x)));
            }
          }
      }
    }
  }
}

TEST(Ladder, PrimeMismatchRejected) {
  EXPECT_THROW(LadderCategory(catalogue_entry(3, BimoduleLabel::t()), catalogue_entry(5, BimoduleLabel::t())), Error);
}
