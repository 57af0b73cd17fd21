#include <gtest/gtest.h>

#include <map>

#include "dblcat/error.hpp"
#include "dblcat/examples.hpp"
#include "oracles.hpp"

namespace dblcat {
namespace {

std::uint64_t pow2(std::uint64_t e) { return std::uint64_t{1} << e; }

TEST(Kleisli, IdentityMonadGivesTheSquares) {
  for (std::uint32_t size = 0; size <= 2; ++size) {
    const FinSetCategory c(size, MapClass::all);
    const DoubleCategory k = kleisli_double_cat(c, IdentityMonad{});
    const DoubleCategory s = square_double_cat(c.category_ptr());
    EXPECT_EQ(k.tables(), s.tables());
    EXPECT_EQ(k.squares(), s.squares());
  }
}

TEST(Kleisli, PowersetHorizontalCountsArePowersOfTwo) {
  const KleisliData data = kleisli_double_cat_data(FinSetCategory(2, MapClass::all), PowersetMonad{});
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint64_t> per_pair;
  for (std::uint32_t h = 0; h < data.dbl->horizontal_count(); ++h) {
    const auto& o = data.dbl->squares().object(DispObjId{h});
    ++per_pair[{o.x1.v, o.x2.v}];
    EXPECT_EQ(data.arrow[h].size(), o.x1.v);
  }
  for (std::uint32_t x = 0; x <= 2; ++x) {
    for (std::uint32_t y = 0; y <= 2; ++y) EXPECT_EQ((per_pair[{x, y}]), pow2(x * y)) << x << " " << y;
  }
  EXPECT_EQ(data.dbl->horizontal_count(), 31u);
}

TEST(Kleisli, PowersetCompositionIsRelationalComposition) {
  const KleisliData data = kleisli_double_cat_data(FinSetCategory(2, MapClass::all), PowersetMonad{});
  const DoubleCategory& d = *data.dbl;
  std::size_t checked = 0;
  for (const auto& e : d.tables().hcomp_obj) {
    const auto z = d.squares().object(e.k).x2.v;
    EXPECT_EQ(data.arrow[e.hk.v], testing::compose_relations(data.arrow[e.h.v], data.arrow[e.k.v], z));
    ++checked;
  }
  // (x, y, z) triples weighted by 2^(xy) * 2^(yz).
  std::size_t expected = 0;
  for (std::uint32_t x = 0; x <= 2; ++x) {
    for (std::uint32_t y = 0; y <= 2; ++y) {
      for (std::uint32_t z = 0; z <= 2; ++z) expected += pow2(x * y) * pow2(y * z);
    }
  }
  EXPECT_EQ(checked, expected);
}

TEST(Kleisli, UnitorsAndAssociatorAreIdentities) {
  const DoubleCategory d = kleisli_double_cat(FinSetCategory(2, MapClass::all), PowersetMonad{});
  for (std::uint32_t i = 0; i < d.horizontal_count(); ++i) {
    const DispObjId h{i};
    EXPECT_EQ(d.lunitor(h)->sq, d.squares().id(h));
    EXPECT_EQ(d.runitor(h)->inv, d.squares().id(h));
  }
  for (const auto& e : d.tables().associator) EXPECT_EQ(e.cell.sq, e.cell.inv);
  EXPECT_TRUE(is_strict(d));
  EXPECT_TRUE(validate_double_category(d).empty());
}

TEST(Kleisli, ExceptionMonadIsValid) {
  const LawReport r = validate_double_category(kleisli_double_cat(FinSetCategory(2, MapClass::all), ExceptionMonad{1}));
  EXPECT_TRUE(r.empty()) << r.to_text();
}

std::vector<std::vector<bool>> leq_of(const FinCategory& p) { return order_relation(p); }

std::uint32_t bound(const std::vector<std::vector<bool>>& leq, std::uint32_t a, std::uint32_t b, bool lower) {
  std::uint32_t best = kNone;
  for (std::uint32_t m = 0; m < leq.size(); ++m) {
    const bool below = lower ? leq[m][a] && leq[m][b] : leq[a][m] && leq[b][m];
    if (!below) continue;
    if (best == kNone || (lower ? leq[best][m] : leq[m][best])) best = m;
  }
  return best;
}

TEST(Spans, CompositeApexIsTheMeet) {
  const auto p = named_poset("meet5");
  const DoubleCategory d = spans_double_cat(p, search_pullbacks(*p));
  const SpanData data = make_spans_data(p);
  const auto leq = leq_of(*p);
  ASSERT_FALSE(d.tables().hcomp_obj.empty());
  for (const auto& e : d.tables().hcomp_obj) {
    EXPECT_EQ(data.shape[e.hk.v].apex.v, bound(leq, data.shape[e.h.v].apex.v, data.shape[e.k.v].apex.v, true));
  }
  EXPECT_TRUE(validate_double_category(d).empty());
  EXPECT_TRUE(is_strict(d));
  EXPECT_TRUE(check_univalent_double(d));
}

TEST(Cospans, CompositeApexIsTheJoin) {
  const auto p = named_poset("join5");
  const DoubleCategory d = structured_cospans_double_cat(identity_functor(p), search_pushouts(*p));
  const SpanData data = make_struct_cospans_data(identity_functor(p));
  ASSERT_EQ(*data.disp, d.squares());
  const auto leq = leq_of(*p);
  for (const auto& e : d.tables().hcomp_obj) {
    EXPECT_EQ(data.shape[e.hk.v].apex.v, bound(leq, data.shape[e.h.v].apex.v, data.shape[e.k.v].apex.v, false));
  }
  EXPECT_TRUE(validate_double_category(d).empty());
  EXPECT_TRUE(check_univalent_double(d));
}

TEST(Spans, OverFiniteSetsApexIsThePullback) {
  const FinSetCategory c(2, MapClass::injective);
  const DoubleCategory d = spans_double_cat(c.category_ptr(), finset_pullbacks(c));
  const SpanData data = make_spans_data(c.category_ptr());
  ASSERT_EQ(*data.disp, d.squares());
  for (const auto& e : d.tables().hcomp_obj) {
    const FinMap& right = c.map(data.shape[e.h.v].right);
    const FinMap& left = c.map(data.shape[e.k.v].left);
    std::uint32_t pairs = 0;
    for (std::uint32_t a = 0; a < right.dom(); ++a) {
      for (std::uint32_t b = 0; b < left.dom(); ++b) pairs += right(a) == left(b);
    }
    EXPECT_EQ(data.shape[e.hk.v].apex.v, pairs);
  }
  const LawReport r = validate_double_category(d);
  EXPECT_TRUE(r.empty()) << r.to_text();
  EXPECT_FALSE(is_strict(d));
}

TEST(Spans, StructuralSquaresAreInvertible) {
  const FinSetCategory c(2, MapClass::injective);
  const DoubleCategory d = spans_double_cat(c.category_ptr(), finset_pullbacks(c));
  for (const auto& e : d.tables().runitor) {
    const auto inv = is_disp_iso(d.squares(), e.cell.sq);
    ASSERT_TRUE(inv);
    EXPECT_EQ(*inv, e.cell.inv);
  }
}

TEST(Cospans, OverFiniteSetsApexIsThePushout) {
  const FinSetCategory c(2, MapClass::surjective);
  const DoubleCategory d = structured_cospans_double_cat(identity_functor(c.category_ptr()), finset_pushouts(c));
  const SpanData data = make_struct_cospans_data(identity_functor(c.category_ptr()));
  for (const auto& e : d.tables().hcomp_obj) {
    const FinMap& f = c.map(data.shape[e.h.v].right);
    const FinMap& g = c.map(data.shape[e.k.v].left);
    EXPECT_EQ(data.shape[e.hk.v].apex.v, finset_pushout(f, g).i1.cod);
  }
  EXPECT_TRUE(validate_double_category(d).empty());
}

TEST(Lenses, CompositeFollowsThePointwiseFormula) {
  const FinSetCategory c(2, MapClass::all);
  const DoubleCategory d = lenses_double_cat(c);
  const LensData data = make_lenses_data(c);
  ASSERT_EQ(*data.disp, d.squares());
  ASSERT_GT(d.tables().hcomp_obj.size(), 10u);
  for (const auto& e : d.tables().hcomp_obj) {
    const Lens& h = data.lens[e.h.v];
    const Lens& k = data.lens[e.k.v];
    const Lens& hk = data.lens[e.hk.v];
    const std::uint32_t s = d.squares().object(e.h).x1.v;
    const std::uint32_t v = d.squares().object(e.h).x2.v;
    const std::uint32_t w = d.squares().object(e.k).x2.v;
    const FinMap& get_h = c.map(h.get);
    const FinMap& get_k = c.map(k.get);
    EXPECT_EQ(c.map(hk.get), then(get_h, get_k));
    ASSERT_EQ(hk.put.dom(), w * s);
    for (std::uint32_t z = 0; z < w; ++z) {
      for (std::uint32_t a = 0; a < s; ++a) {
        const std::uint32_t b = k.put(z * v + get_h(a));
        EXPECT_EQ(hk.put(z * s + a), h.put(b * s + a));
      }
    }
    EXPECT_TRUE(lens_put_get(c, ObjId{s}, ObjId{w}, hk));
    EXPECT_TRUE(lens_get_put(c, ObjId{s}, ObjId{w}, hk));
  }
  EXPECT_TRUE(validate_double_category(d).empty());
}

TEST(Lenses, NeedProducts) {
  try {
    lenses_double_cat(FinSetCategory(2, MapClass::injective));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingProducts);
  }
}

TEST(NamedPosets, KnownAndUnknownNames) {
  for (const auto& name : poset_names()) {
    const auto p = named_poset(name);
    EXPECT_TRUE(validate_category(*p).empty()) << name;
    EXPECT_TRUE(is_gaunt(*p)) << name;
  }
  EXPECT_EQ(named_poset("poset4")->object_count(), 4u);
  EXPECT_EQ(named_poset("meet5")->object_count(), 5u);
  try {
    named_poset("lattice7");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  }
}

TEST(Squares, OverPosetsAreStrictAndValid) {
  for (const auto& name : poset_names()) {
    const DoubleCategory d = square_double_cat(named_poset(name));
    EXPECT_TRUE(validate_double_category(d).empty()) << name;
    EXPECT_TRUE(is_strict(d)) << name;
  }
}

TEST(Spans, MissingPullbackIsReported) {
  const auto p = named_poset("join5");
  try {
    spans_double_cat(p, search_pullbacks(*p));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::PullbackUnavailable);
  }
}

}  // namespace
}  // namespace dblcat
