#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dblcat/detail/pair_table.hpp"
#include "dblcat/fincat.hpp"
#include "dblcat/law_report.hpp"
#include "dblcat/twosided.hpp"

namespace dblcat {

// A structural square with its stored inverse.
struct StructuralSquare {
  DispMorId sq;
  DispMorId inv;
  auto operator<=>(const StructuralSquare&) const = default;
};

struct HorCompEntry {
  DispObjId h;
  DispObjId k;
  DispObjId hk;
  auto operator<=>(const HorCompEntry&) const = default;
};

struct SqCompEntry {
  DispMorId s;
  DispMorId t;
  DispMorId st;
  auto operator<=>(const SqCompEntry&) const = default;
};

struct UnitorEntry {
  DispObjId h;
  StructuralSquare cell;
  auto operator<=>(const UnitorEntry&) const = default;
};

struct AssocEntry {
  DispObjId h1;
  DispObjId h2;
  DispObjId h3;
  StructuralSquare cell;
  auto operator<=>(const AssocEntry&) const = default;
};

// Horizontal structure over a displayed category of squares. Horizontal morphisms are the
// displayed objects, squares the displayed morphisms. Entry lists are kept sorted.
struct DoubleTables {
  std::vector<DispObjId> hid_obj;  // per object
  std::vector<DispMorId> hid_sq;   // per vertical morphism
  std::vector<HorCompEntry> hcomp_obj;
  std::vector<SqCompEntry> hcomp_sq;
  std::vector<UnitorEntry> lunitor;
  std::vector<UnitorEntry> runitor;
  std::vector<AssocEntry> associator;

  bool operator==(const DoubleTables&) const = default;
};

// Pseudo double category: vertical category, squares as a displayed category over (V, V),
// horizontal identities and composition, unitors and associator.
// The constructor checks index validity only; laws are checked by validate_double_category.
class DoubleCategory {
 public:
  DoubleCategory(TwoSidedPtr squares, DoubleTables tables);

  const FinCategory& vertical() const { return squares_->base1(); }
  const CategoryPtr& vertical_ptr() const { return squares_->base1_ptr(); }
  const TwoSidedDispCat& squares() const { return *squares_; }
  const TwoSidedPtr& squares_ptr() const { return squares_; }
  const DoubleTables& tables() const { return tables_; }

  std::uint32_t horizontal_count() const { return squares_->object_count(); }
  std::uint32_t square_count() const { return squares_->morphism_count(); }

  DispObjId hid(ObjId x) const { return tables_.hid_obj[x.v]; }
  DispMorId hid_sq(MorId v) const { return tables_.hid_sq[v.v]; }
  std::optional<DispObjId> hcomp(DispObjId h, DispObjId k) const;
  std::optional<DispMorId> hcomp_sq(DispMorId s, DispMorId t) const;
  std::optional<StructuralSquare> lunitor(DispObjId h) const;
  std::optional<StructuralSquare> runitor(DispObjId h) const;
  std::optional<StructuralSquare> associator(DispObjId h1, DispObjId h2, DispObjId h3) const;

  // Horizontal morphisms with source x.
  const std::vector<DispObjId>& starting_at(ObjId x) const { return starting_at_[x.v]; }

  bool operator==(const DoubleCategory& other) const;

 private:
  struct TripleHash {
    std::size_t operator()(const std::array<std::uint32_t, 3>& t) const noexcept;
  };

  TwoSidedPtr squares_;
  DoubleTables tables_;
  detail::PairTable hcomp_obj_;
  detail::PairTable hcomp_sq_;
  std::vector<std::uint32_t> lunitor_index_;
  std::vector<std::uint32_t> runitor_index_;
  std::unordered_map<std::array<std::uint32_t, 3>, std::uint32_t, TripleHash> assoc_index_;
  std::vector<std::vector<DispObjId>> starting_at_;
};

using DoublePtr = std::shared_ptr<const DoubleCategory>;

struct ValidateOptions {
  // Stop after the first layer that reports a violation.
  bool fail_fast = false;
};

// Layers in order: category, twosided, hid, hcomp, lunitor, runitor, associator, coherence.
LawReport validate_double_category(const DoubleCategory& d, const ValidateOptions& options = {});

// Unitors and associator are identities (and horizontal composition strictly unital and associative).
// Clauses: "lunitor" / "runitor" witness h, "associator" witness (h1, h2, h3).
Verdict is_strict(const DoubleCategory& d);

// Gaunt vertical category and univalent squares. Clauses prefixed "vertical." or "squares.".
Verdict check_univalent_double(const DoubleCategory& d);

// Checked composites; throw NotComposable naming the mismatched boundary.
DispObjId hcomp(const DoubleCategory& d, DispObjId h, DispObjId k);
DispMorId hcomp_sq(const DoubleCategory& d, DispMorId s, DispMorId t);
DispMorId vcomp_sq(const DoubleCategory& d, DispMorId s, DispMorId t);

// Callbacks producing the horizontal structure of a double category over given squares.
class HorizontalStructure {
 public:
  virtual ~HorizontalStructure() = default;
  virtual DispObjId hid(ObjId x) const = 0;
  virtual DispMorId hid_sq(MorId v) const = 0;
  virtual DispObjId hcomp(DispObjId h, DispObjId k) const = 0;
  virtual DispMorId hcomp_sq(DispMorId s, DispMorId t) const = 0;
  virtual StructuralSquare lunitor(DispObjId h) const = 0;
  virtual StructuralSquare runitor(DispObjId h) const = 0;
  virtual StructuralSquare associator(DispObjId h1, DispObjId h2, DispObjId h3) const = 0;
};

// Tabulates every entry the structure defines over the squares.
DoubleCategory assemble_double(TwoSidedPtr squares, const HorizontalStructure& structure);

struct HorMor {
  ObjId src;
  ObjId tgt;
  auto operator<=>(const HorMor&) const = default;
};

// top : src(left) -|-> src(right), bottom : tgt(left) -|-> tgt(right)
struct Square {
  DispObjId top;
  DispObjId bottom;
  MorId left;
  MorId right;
  auto operator<=>(const Square&) const = default;
};

// The flat presentation: every data item of a double category as its own table.
struct UnfoldedDoubleCat {
  FinCategory vertical;
  std::vector<HorMor> horizontal;
  std::map<ObjId, DispObjId> hor_identity;
  std::map<std::pair<DispObjId, DispObjId>, DispObjId> hor_composition;
  std::vector<Square> squares;
  std::map<DispObjId, DispMorId> sq_vertical_identity;
  std::map<std::pair<DispMorId, DispMorId>, DispMorId> sq_vertical_composition;
  std::map<MorId, DispMorId> sq_horizontal_identity;
  std::map<std::pair<DispMorId, DispMorId>, DispMorId> sq_horizontal_composition;
  std::map<DispObjId, StructuralSquare> left_unitor;
  std::map<DispObjId, StructuralSquare> right_unitor;
  std::map<std::array<DispObjId, 3>, StructuralSquare> associator;

  bool operator==(const UnfoldedDoubleCat&) const = default;
  static constexpr std::size_t kTableCount = 12;
};

// Both directions throw LawViolation when the input fails its law suite.
UnfoldedDoubleCat to_unfolded(const DoubleCategory& d);
DoubleCategory from_unfolded(const UnfoldedDoubleCat& u);

// Per-table equality of two unfolded views, in declaration order.
std::array<bool, UnfoldedDoubleCat::kTableCount> compare_tables(const UnfoldedDoubleCat& a,
                                                                const UnfoldedDoubleCat& b);

}  // namespace dblcat
