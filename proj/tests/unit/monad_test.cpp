#include <gtest/gtest.h>

#include <set>

#include "dblcat/error.hpp"
#include "dblcat/examples.hpp"
#include "dblcat/monad.hpp"
#include "generators.hpp"

namespace dblcat {
namespace {

std::set<std::uint64_t> members(std::uint64_t mask) {
  std::set<std::uint64_t> out;
  for (std::uint64_t i = 0; i < 64; ++i) {
    if (mask >> i & 1) out.insert(i);
  }
  return out;
}

std::uint64_t mask_of(const std::set<std::uint64_t>& s) {
  std::uint64_t m = 0;
  for (auto i : s) m |= std::uint64_t{1} << i;
  return m;
}

// Unit always picks element 0.
class CollapsingUnit final : public Monad {
 public:
  std::string name() const override { return "collapsing"; }
  std::optional<std::uint64_t> carrier(std::uint64_t n) const override { return n; }
  std::uint64_t map(const std::vector<std::uint64_t>& f, std::uint64_t, std::uint64_t t) const override {
    return f.at(t);
  }
  std::uint64_t unit(std::uint64_t, std::uint64_t) const override { return 0; }
  std::uint64_t join(std::uint64_t, std::uint64_t tt) const override { return tt; }
};

// Exceptions E+E -> E swapped when they come from the outer layer.
class SwappedJoin final : public Monad {
 public:
  std::string name() const override { return "swapped"; }
  std::optional<std::uint64_t> carrier(std::uint64_t n) const override { return n + 2; }
  std::uint64_t map(const std::vector<std::uint64_t>& f, std::uint64_t cod, std::uint64_t t) const override {
    return inner_.map(f, cod, t);
  }
  std::uint64_t unit(std::uint64_t, std::uint64_t a) const override { return a; }
  std::uint64_t join(std::uint64_t n, std::uint64_t tt) const override {
    if (tt < n + 2) return tt;
    return n + (1 - (tt - n - 2));
  }

 private:
  ExceptionMonad inner_{2};
};

TEST(Powerset, MapIsDirectImage) {
  const PowersetMonad p;
  testing::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto dom = testing::uniform(rng, 0, 5);
    const auto cod = testing::uniform(rng, 1, 5);
    const auto f32 = testing::random_map(rng, dom, cod);
    const std::vector<std::uint64_t> f(f32.img.begin(), f32.img.end());
    const std::uint64_t t = testing::uniform(rng, 0, (1u << dom) - 1);
    std::set<std::uint64_t> image;
    for (auto a : members(t)) image.insert(f[a]);
    EXPECT_EQ(p.map(f, cod, t), mask_of(image));
  }
}

TEST(Powerset, JoinIsUnion) {
  const PowersetMonad p;
  for (std::uint64_t n = 0; n <= 3; ++n) {
    const std::uint64_t subsets = std::uint64_t{1} << n;
    for (std::uint64_t tt = 0; tt < (std::uint64_t{1} << subsets); ++tt) {
      std::set<std::uint64_t> u;
      for (auto s : members(tt)) {
        for (auto a : members(s)) u.insert(a);
      }
      EXPECT_EQ(p.join(n, tt), mask_of(u));
    }
  }
}

TEST(Powerset, RejectsOutOfRangeInput) {
  const PowersetMonad p;
  try {
    p.map({0, 1}, 2, 0b100);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::IndexOutOfRange);
  }
  EXPECT_THROW(p.unit(2, 2), Error);
  try {
    p.join(7, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ObjectOutOfBounds);
  }
  EXPECT_FALSE(p.carrier(64));
  EXPECT_EQ(p.carrier(3), 8u);
}

TEST(Exception, MapPassesExceptionsThrough) {
  const ExceptionMonad m(2);
  EXPECT_EQ(m.map({1, 0, 1}, 2, 0), 1u);
  EXPECT_EQ(m.map({1, 0, 1}, 2, 3), 2u);
  EXPECT_EQ(m.map({1, 0, 1}, 2, 4), 3u);
  EXPECT_EQ(m.join(1, 0), 0u);
  EXPECT_EQ(m.join(1, 2), 2u);
  EXPECT_EQ(m.join(1, 4), 2u);
}

TEST(Validate, StandardMonadsPass) {
  const FinSetCategory c(3, MapClass::all);
  const LawReport id = validate_monad(IdentityMonad{}, c);
  EXPECT_TRUE(id.empty()) << id.to_text();
  const LawReport ex = validate_monad(ExceptionMonad{1}, c);
  EXPECT_TRUE(ex.empty()) << ex.to_text();
  const LawReport p = validate_monad(PowersetMonad{}, c);
  EXPECT_TRUE(p.empty()) << p.to_text();
  // P P P 3 has 2^256 elements.
  EXPECT_GT(p.tally("monad.associativity")->skipped, 0u);
  EXPECT_GT(p.tally("monad.associativity")->checked, 0u);
}

TEST(Validate, CollapsingUnitIsCaught) {
  const LawReport r = validate_monad(CollapsingUnit{}, FinSetCategory(2, MapClass::all));
  EXPECT_TRUE(r.has_violation("monad.unit_naturality"));
  EXPECT_TRUE(r.has_violation("monad.unit_left"));
  EXPECT_FALSE(r.has_violation("monad.functor_id"));
}

TEST(Validate, SwappedJoinBreaksTheUnitLaw) {
  const LawReport r = validate_monad(SwappedJoin{}, FinSetCategory(1, MapClass::all));
  EXPECT_TRUE(r.has_violation("monad.unit_right")) << r.to_text();
  for (const auto& v : r.violations()) EXPECT_EQ(v.witness.size(), 2u);
}

TEST(Kleisli, BadMonadIsRefused) {
  try {
    kleisli_double_cat(FinSetCategory(2, MapClass::all), CollapsingUnit{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MonadLawViolation);
  }
}

TEST(Kleisli, HomSetCapIsEnforced) {
  try {
    kleisli_double_cat(FinSetCategory(2, MapClass::all), PowersetMonad{}, 8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ObjectOutOfBounds);
  }
}

TEST(Kleisli, ComposeIsRelationalComposite) {
  const PowersetMonad p;
  testing::Rng rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = testing::uniform(rng, 0, 4);
    const auto y = testing::uniform(rng, 0, 4);
    const auto z = testing::uniform(rng, 0, 4);
    std::vector<std::uint64_t> h(x), k(y);
    for (auto& r : h) r = testing::uniform(rng, 0, (1u << y) - 1);
    for (auto& r : k) r = testing::uniform(rng, 0, (1u << z) - 1);
    const auto hk = kleisli_compose(p, h, k, z);
    ASSERT_EQ(hk.size(), x);
    for (std::uint32_t a = 0; a < x; ++a) {
      for (std::uint32_t c = 0; c < z; ++c) {
        bool related = false;
        for (std::uint32_t b = 0; b < y; ++b) related = related || ((h[a] >> b & 1) && (k[b] >> c & 1));
        EXPECT_EQ(hk[a] >> c & 1, related ? 1u : 0u);
      }
    }
    std::vector<std::uint64_t> reused{7, 7, 7, 7, 7, 7};
    kleisli_compose_into(p, h, k, z, reused);
    EXPECT_EQ(reused, hk);
  }
}

TEST(Kleisli, UnitIsNeutral) {
  const PowersetMonad p;
  const std::vector<std::uint64_t> h{0b01, 0b11, 0b00};
  const std::vector<std::uint64_t> eta_x{0b001, 0b010, 0b100};
  const std::vector<std::uint64_t> eta_y{0b01, 0b10};
  EXPECT_EQ(kleisli_compose(p, eta_x, h, 2), h);
  EXPECT_EQ(kleisli_compose(p, h, eta_y, 2), h);
  EXPECT_EQ(kleisli_extend(p, h, 2, 0b110), 0b11u);
  EXPECT_THROW(kleisli_compose(p, h, eta_y, 64), Error);
}

}  // namespace
}  // namespace dblcat
