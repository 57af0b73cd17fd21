#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "dblcat/error.hpp"
#include "dblcat/finset.hpp"
#include "generators.hpp"

namespace dblcat {
namespace {

using testing::random_map;
using testing::Rng;

FinMap constant(std::uint32_t dom, std::uint32_t cod, std::uint32_t v) {
  return FinMap{cod, std::vector<std::uint32_t>(dom, v)};
}

std::uint32_t matching_pairs(const FinMap& f, const FinMap& g) {
  std::uint32_t n = 0;
  for (std::uint32_t a = 0; a < f.dom(); ++a) {
    for (std::uint32_t b = 0; b < g.dom(); ++b) n += f(a) == g(b);
  }
  return n;
}

// Classes of A + B under f c ~ g c, by repeated relabeling.
std::uint32_t pushout_classes(const FinMap& f, const FinMap& g) {
  const std::uint32_t na = f.cod;
  std::vector<std::uint32_t> label(na + g.cod);
  std::iota(label.begin(), label.end(), 0u);
  for (std::uint32_t c = 0; c < f.dom(); ++c) {
    const std::uint32_t from = label[na + g(c)];
    const std::uint32_t to = label[f(c)];
    for (auto& l : label) {
      if (l == from) l = to;
    }
  }
  return static_cast<std::uint32_t>(std::set<std::uint32_t>(label.begin(), label.end()).size());
}

TEST(FinMap, CompositionIsDiagrammatic) {
  const FinMap f{3, {2, 0}};
  const FinMap g{2, {1, 1, 0}};
  EXPECT_EQ(then(f, g), (FinMap{2, {0, 1}}));
  EXPECT_THROW(then(f, f), Error);
}

TEST(FinMap, ClassesAreRecognised) {
  EXPECT_TRUE(is_injective(FinMap{3, {2, 0}}));
  EXPECT_FALSE(is_surjective(FinMap{3, {2, 0}}));
  EXPECT_TRUE(is_surjective(FinMap{2, {1, 0, 1}}));
  EXPECT_TRUE(is_monotone(FinMap{3, {0, 0, 2}}));
  EXPECT_FALSE(is_monotone(FinMap{3, {1, 0}}));
  EXPECT_THROW(check_map(FinMap{1, {1}}), Error);
}

TEST(FinMap, RankRoundTrips) {
  for (std::uint32_t dom = 0; dom <= 3; ++dom) {
    for (std::uint32_t cod = 1; cod <= 3; ++cod) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < dom; ++i) count *= cod;
      for (std::uint64_t r = 0; r < count; ++r) EXPECT_EQ(map_rank(map_unrank(r, dom, cod)), r);
    }
  }
  EXPECT_EQ(map_rank(FinMap{2, {1, 0}}), 2u);
}

TEST(FinSetObj, DuplicatesAreRejected) {
  EXPECT_THROW(FinSetObj<int>({1, 2, 1}), Error);
  EXPECT_EQ(finset_range(3).index_of(2), 2u);
}

TEST(Pullback, IdentitiesGiveTheDiagonal) {
  const auto p = finset_pullback(identity_map(3), identity_map(3));
  EXPECT_EQ(p.carrier.size(), 3u);
  for (std::uint32_t i = 0; i < 3; ++i) EXPECT_EQ(p.carrier[i], std::make_pair(i, i));
}

TEST(Pullback, ConstantsGiveTheProduct) {
  EXPECT_EQ(finset_pullback(constant(2, 1, 0), constant(3, 1, 0)).carrier.size(), 6u);
}

TEST(Pullback, AgainstASwap) {
  const auto p = finset_pullback(identity_map(2), FinMap{2, {1, 0}});
  EXPECT_EQ(p.carrier.size(), 2u);
  EXPECT_EQ(p.carrier[0], std::make_pair(0u, 1u));
}

TEST(Pullback, CodomainMismatchThrows) {
  try {
    finset_pullback(identity_map(2), identity_map(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::CodomainMismatch);
  }
}

TEST(Pullback, SizeMatchesPairCountOnRandomCospans) {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t c = testing::uniform(rng, 1, 3);
    const FinMap f = random_map(rng, testing::uniform(rng, 0, 3), c);
    const FinMap g = random_map(rng, testing::uniform(rng, 0, 3), c);
    const auto p = finset_pullback(f, g);
    EXPECT_EQ(p.carrier.size(), matching_pairs(f, g));
    EXPECT_EQ(then(p.p1, f), then(p.p2, g));
  }
}

TEST(Pushout, EmptySpanGivesTheDisjointUnion) {
  EXPECT_EQ(finset_pushout(FinMap{2, {}}, FinMap{3, {}}).carrier.size(), 5u);
}

TEST(Pushout, IdentitiesGiveTheSetItself) {
  EXPECT_EQ(finset_pushout(identity_map(3), identity_map(3)).carrier.size(), 3u);
}

TEST(Pushout, GluingOnePoint) {
  const auto p = finset_pushout(FinMap{2, {0}}, FinMap{2, {1}});
  EXPECT_EQ(p.carrier.size(), 3u);
  EXPECT_EQ(p.i1(0), p.i2(1));
}

TEST(Pushout, DomainMismatchThrows) {
  try {
    finset_pushout(identity_map(2), identity_map(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DomainMismatch);
  }
}

TEST(Pushout, ClassCountMatchesRelabelingOracleOnRandomSpans) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t c = testing::uniform(rng, 0, 3);
    const FinMap f = random_map(rng, c, testing::uniform(rng, 1, 3));
    const FinMap g = random_map(rng, c, testing::uniform(rng, 1, 3));
    const auto p = finset_pushout(f, g);
    EXPECT_EQ(p.carrier.size(), pushout_classes(f, g));
    EXPECT_EQ(then(f, p.i1), then(g, p.i2));
  }
}

TEST(Product, Sizes) {
  EXPECT_EQ(finset_product(finset_range(0), finset_range(3)).carrier.size(), 0u);
  EXPECT_EQ(finset_product(finset_range(1), finset_range(3)).carrier.size(), 3u);
  const auto p = finset_product(finset_range(2), finset_range(3));
  EXPECT_EQ(p.carrier.size(), 6u);
  const FinMap a{2, {1, 0, 1}};
  const FinMap b{3, {2, 2, 0}};
  const FinMap ab = p.pair(a, b);
  EXPECT_EQ(then(ab, p.p1), a);
  EXPECT_EQ(then(ab, p.p2), b);
}

TEST(FinSetCategory, SkeletonCounts) {
  const auto zero = finset_skeleton(0, 4);
  EXPECT_EQ(zero.category().object_count(), 1u);
  EXPECT_EQ(zero.category().morphism_count(), 1u);
  const auto two = finset_skeleton(2, 4);
  EXPECT_EQ(two.category().hom(two.object(2), two.object(2)).size(), 4u);
  EXPECT_TRUE(validate_category(two.category()).empty());
  EXPECT_EQ(FinSetCategory(3, MapClass::injective).category().hom(ObjId{2}, ObjId{3}).size(), 6u);
  EXPECT_EQ(FinSetCategory(3, MapClass::surjective).category().hom(ObjId{3}, ObjId{2}).size(), 6u);
}

TEST(FinSetCategory, BoundIsEnforced) {
  try {
    finset_skeleton(5, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ObjectOutOfBounds);
  }
  EXPECT_THROW(finset_skeleton(1, 4).object(2), Error);
}

TEST(FinSetCategory, FindLocatesMapsOfTheClass) {
  const FinSetCategory c(2, MapClass::injective);
  EXPECT_TRUE(c.find(FinMap{2, {1, 0}}));
  EXPECT_FALSE(c.find(FinMap{2, {1, 1}}));
  const auto f = *c.find(FinMap{2, {1, 0}});
  EXPECT_EQ(c.map(f), (FinMap{2, {1, 0}}));
}

TEST(ChosenLimits, FiniteSetPullbacksSatisfyTheUniversalProperty) {
  const FinSetCategory c(2, MapClass::injective);
  const ChosenLimits lim = finset_pullbacks(c);
  EXPECT_TRUE(lim.has_pullbacks);
  const FinCategory& cat = c.category();
  for (std::uint32_t f = 0; f < cat.morphism_count(); ++f) {
    for (std::uint32_t g = 0; g < cat.morphism_count(); ++g) {
      if (cat.tgt(MorId{f}) != cat.tgt(MorId{g})) continue;
      EXPECT_TRUE(verify_pullback(cat, MorId{f}, MorId{g}, lim.pullback(MorId{f}, MorId{g})));
    }
  }
}

TEST(ChosenLimits, FiniteSetPushoutsSatisfyTheUniversalProperty) {
  const FinSetCategory c(2, MapClass::surjective);
  const ChosenLimits lim = finset_pushouts(c);
  const FinCategory& cat = c.category();
  for (std::uint32_t f = 0; f < cat.morphism_count(); ++f) {
    for (std::uint32_t g = 0; g < cat.morphism_count(); ++g) {
      if (cat.src(MorId{f}) != cat.src(MorId{g})) continue;
      EXPECT_TRUE(verify_pushout(cat, MorId{f}, MorId{g}, lim.pushout(MorId{f}, MorId{g})));
    }
  }
}

TEST(ChosenLimits, CarrierBeyondTheBoundThrows) {
  try {
    finset_pullbacks(FinSetCategory(2, MapClass::all));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ObjectOutOfBounds);
  }
}

TEST(ChosenLimits, PosetPullbacksAreMeets) {
  const FinCategory c = chain_category(3);
  const ChosenLimits lim = search_pullbacks(c);
  for (std::uint32_t f = 0; f < c.morphism_count(); ++f) {
    for (std::uint32_t g = 0; g < c.morphism_count(); ++g) {
      if (c.tgt(MorId{f}) != c.tgt(MorId{g})) continue;
      const Cone& p = lim.pullback(MorId{f}, MorId{g});
      EXPECT_EQ(p.apex.v, std::min(c.src(MorId{f}).v, c.src(MorId{g}).v));
    }
  }
  EXPECT_THROW(lim.pushout(MorId{0}, MorId{0}), Error);
}

TEST(ChosenLimits, DiscreteCategoryHasNoProducts) {
  try {
    search_products(discrete_category(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingProducts);
  }
  const ChosenLimits lim = search_products(terminal_category());
  EXPECT_TRUE(verify_product(terminal_category(), ObjId{0}, ObjId{0}, lim.product(ObjId{0}, ObjId{0})));
}

}  // namespace
}  // namespace dblcat
