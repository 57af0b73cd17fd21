#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <unistd.h>

#include "cli.hpp"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = dblcat::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  const char* dir = std::getenv("DBLCAT_FIXTURES");
  return ((dir ? fs::path(dir) : fs::path("tests/fixtures")) / name).string();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(Validate, CleanFileExitsZero) {
  const Result r = run({"validate", fixture("chain3_squares.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "violations: 0"));
}

TEST(Validate, BrokenAssociatorNamesThePentagon) {
  const Result r = run({"validate", fixture("broken_associator.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "coherence.pentagon"));
  EXPECT_TRUE(contains(r.out, "associator.typing"));
}

TEST(Validate, FailFastStopsAtTheAssociatorLayer) {
  const Result r = run({"validate", "--fail-fast", fixture("broken_associator.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.out, "associator."));
  EXPECT_FALSE(contains(r.out, "coherence.pentagon"));
}

TEST(Validate, JsonFormat) {
  const Result r = run({"validate", "--format", "json", fixture("broken_associator.json")});
  EXPECT_EQ(r.code, 1);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_FALSE(doc["ok"].get<bool>());
  EXPECT_GT(doc["violations"].size(), 0u);
}

TEST(Validate, CategoryLevel) {
  const Result r = run({"validate", "--level", "category", fixture("z2_squares.json")});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Validate, MalformedInputExitsTwo) {
  EXPECT_EQ(run({"validate", fixture("missing.json")}).code, 2);
  EXPECT_EQ(run({"validate", "--level", "quadruple", fixture("chain3_squares.json")}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Example, SummaryLine) {
  const Result r = run({"example", "squares", "--poset", "chain3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "6 horizontal morphisms, 20 squares"));
}

TEST(Example, KleisliCounts) {
  const Result r = run({"example", "kleisli", "--size", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "31 horizontal morphisms"));
}

TEST(Example, CarrierAboveTheBoundExitsTwo) {
  const Result r = run({"example", "spans", "--finset", "5"});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(contains(r.err, "error"));
  EXPECT_EQ(run({"--bound", "1", "example", "lenses", "--size", "2"}).code, 2);
}

TEST(Example, UnknownNamesExitTwo) {
  EXPECT_EQ(run({"example", "pullbacks"}).code, 2);
  EXPECT_EQ(run({"example", "spans", "--poset", "lattice7"}).code, 2);
  EXPECT_EQ(run({"example", "spans", "--maps", "sideways"}).code, 2);
}

TEST(Example, EmitThenValidate) {
  const fs::path out = fs::temp_directory_path() / ("dblcat_cli_" + std::to_string(::getpid()) + ".json");
  const Result made = run({"example", "cospans", "--poset", "join5", "--emit", out.string()});
  ASSERT_EQ(made.code, 0) << made.err;
  EXPECT_EQ(run({"validate", out.string()}).code, 0);
  EXPECT_EQ(run({"univalence", out.string()}).out, "univalent: yes\n");
  fs::remove(out);
}

TEST(Univalence, Verdicts) {
  const Result yes = run({"univalence", fixture("chain3_squares.json")});
  EXPECT_EQ(yes.code, 0);
  EXPECT_TRUE(contains(yes.out, "univalent: yes"));
  const Result no = run({"univalence", fixture("z2_squares.json")});
  EXPECT_EQ(no.code, 1);
  EXPECT_TRUE(contains(no.out, "vertical.automorphism"));
  EXPECT_TRUE(contains(no.out, "witness: [1]"));
}

TEST(CheckFunctor, Verdicts) {
  const Result id = run({"check-functor", fixture("identity_functor.json")});
  EXPECT_EQ(id.code, 0) << id.err;
  EXPECT_TRUE(contains(id.out, "adjoint equivalence: yes"));
  const Result inclusion = run({"check-functor", fixture("inclusion_functor.json")});
  EXPECT_EQ(inclusion.code, 1);
  EXPECT_TRUE(contains(inclusion.out, "vertical.essentially_surjective"));
  const Result lax = run({"check-functor", fixture("lax_functor.json")});
  EXPECT_EQ(lax.code, 1);
  EXPECT_TRUE(contains(lax.out, "strong: no"));
}

TEST(Compose, HorizontalMorphisms) {
  // In chain3 squares the horizontal morphisms are 0 -> 1 (id 1) and 1 -> 2 (id 4).
  const Result r = run({"compose", fixture("chain3_squares.json"), "1", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, ": 0 -o 2"));
}

TEST(Compose, NonAdjacentIdsExitOne) {
  const Result r = run({"compose", fixture("chain3_squares.json"), "4", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(contains(r.err, "error"));
}

TEST(Compose, OutOfRangeIdsExitTwo) {
  EXPECT_EQ(run({"compose", fixture("chain3_squares.json"), "99"}).code, 2);
  EXPECT_EQ(run({"compose", "--kind", "vsq", fixture("chain3_squares.json"), "0", "999"}).code, 2);
}

}  // namespace
