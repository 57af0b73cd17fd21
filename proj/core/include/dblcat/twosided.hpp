#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dblcat/detail/pair_table.hpp"
#include "dblcat/fincat.hpp"
#include "dblcat/finset.hpp"
#include "dblcat/ids.hpp"
#include "dblcat/law_report.hpp"

namespace dblcat {

struct DispObject {
  ObjId x1;
  ObjId x2;
  auto operator<=>(const DispObject&) const = default;
};

// A displayed morphism (square) over (f1, f2) from src to tgt.
struct DispMorphism {
  MorId f1;
  MorId f2;
  DispObjId src;
  DispObjId tgt;
  auto operator<=>(const DispMorphism&) const = default;
};

struct DispCompEntry {
  DispMorId f;
  DispMorId g;
  DispMorId fg;
  auto operator<=>(const DispCompEntry&) const = default;
};

// Displayed objects over pairs of objects of two bases, displayed morphisms over pairs of morphisms.
// The constructor checks index validity only; laws are checked by validate_twosided.
class TwoSidedDispCat {
 public:
  TwoSidedDispCat() = default;
  TwoSidedDispCat(CategoryPtr base1, CategoryPtr base2, std::vector<DispObject> objects,
                  std::vector<DispMorphism> morphisms, std::vector<DispMorId> identity,
                  std::vector<DispCompEntry> comp);

  const FinCategory& base1() const { return *base1_; }
  const FinCategory& base2() const { return *base2_; }
  const CategoryPtr& base1_ptr() const { return base1_; }
  const CategoryPtr& base2_ptr() const { return base2_; }

  std::uint32_t object_count() const { return static_cast<std::uint32_t>(objects_.size()); }
  std::uint32_t morphism_count() const { return static_cast<std::uint32_t>(morphisms_.size()); }
  const DispObject& object(DispObjId a) const { return objects_[a.v]; }
  const DispMorphism& morphism(DispMorId s) const { return morphisms_[s.v]; }
  DispMorId id(DispObjId a) const { return identity_[a.v]; }

  std::optional<DispMorId> compose(DispMorId s, DispMorId t) const;
  // Checked composite; throws NotComposable.
  DispMorId then(DispMorId s, DispMorId t) const;

  const std::vector<DispObjId>& objects_over(ObjId x1, ObjId x2) const;
  const std::vector<DispMorId>& out(DispObjId a) const { return out_[a.v]; }
  const std::vector<DispMorId>& in(DispObjId a) const { return in_[a.v]; }
  // Squares whose first (left) base morphism is f.
  const std::vector<DispMorId>& over_first(MorId f) const { return by_f1_[f.v]; }
  const std::vector<DispMorId>& over_second(MorId f) const { return by_f2_[f.v]; }
  // All displayed morphisms with the given boundary.
  const std::vector<DispMorId>& with_boundary(const DispMorphism& boundary) const;

  const std::vector<DispObject>& objects() const { return objects_; }
  const std::vector<DispMorphism>& morphisms() const { return morphisms_; }
  const std::vector<DispMorId>& identities() const { return identity_; }
  const std::vector<DispCompEntry>& comp_entries() const { return comp_; }

  bool operator==(const TwoSidedDispCat& other) const;

 private:
  struct BoundaryHash {
    std::size_t operator()(const DispMorphism& b) const noexcept;
  };

  CategoryPtr base1_;
  CategoryPtr base2_;
  std::vector<DispObject> objects_;
  std::vector<DispMorphism> morphisms_;
  std::vector<DispMorId> identity_;
  std::vector<DispCompEntry> comp_;
  detail::PairTable table_;
  std::vector<std::vector<DispObjId>> over_;
  std::vector<std::vector<DispMorId>> out_;
  std::vector<std::vector<DispMorId>> in_;
  std::vector<std::vector<DispMorId>> by_f1_;
  std::vector<std::vector<DispMorId>> by_f2_;
  std::unordered_map<DispMorphism, std::vector<DispMorId>, BoundaryHash> by_boundary_;
};

using TwoSidedPtr = std::shared_ptr<const TwoSidedDispCat>;

LawReport validate_twosided(const TwoSidedDispCat& d);

struct TotalCategory {
  CategoryPtr category;  // object i is displayed object i, morphism j is displayed morphism j
  FinFunctor proj1;
  FinFunctor proj2;
};

TotalCategory total_category(const TwoSidedDispCat& d);

// Least-index inverse over the base inverses. Throws BaseNotIso.
std::optional<DispMorId> is_disp_iso(const TwoSidedDispCat& d, DispMorId s);

// Exactly one displayed iso over identities from a to b when a = b, none otherwise.
// Clauses: "identity_isos" witness (a, count), "distinct_isomorphic" witness (a, b, iso).
Verdict is_univalent_twosided(const TwoSidedDispCat& d);

struct TwoSidedDispFunctor {
  TwoSidedPtr dom;
  TwoSidedPtr cod;
  FinFunctor base1;
  FinFunctor base2;
  std::vector<DispObjId> on_obj;
  std::vector<DispMorId> on_mor;

  DispObjId operator()(DispObjId a) const { return on_obj[a.v]; }
  DispMorId operator()(DispMorId s) const { return on_mor[s.v]; }
};

// include_bases = false leaves the two base functors unchecked.
LawReport validate_disp_functor(const TwoSidedDispFunctor& f, bool include_bases = true);

struct TwoSidedDispNatTrans {
  std::shared_ptr<const TwoSidedDispFunctor> dom;
  std::shared_ptr<const TwoSidedDispFunctor> cod;
  FinNatTrans base1;
  FinNatTrans base2;
  std::vector<DispMorId> component;
};

LawReport validate_disp_nat_trans(const TwoSidedDispNatTrans& t);

// Incremental construction of a displayed category whose morphisms carry a payload
// (a base morphism for spans and cospans, 0 for proof-valued squares).
class DisplayedBuilder {
 public:
  DisplayedBuilder(CategoryPtr base1, CategoryPtr base2) : base1_(std::move(base1)), base2_(std::move(base2)) {}

  DispObjId add_object(ObjId x1, ObjId x2);
  DispMorId add_morphism(MorId f1, MorId f2, DispObjId src, DispObjId tgt, std::uint32_t payload = 0);
  std::optional<DispMorId> find(MorId f1, MorId f2, DispObjId src, DispObjId tgt, std::uint32_t payload = 0) const;
  std::uint32_t payload(DispMorId s) const { return payloads_[s.v]; }
  const DispMorphism& morphism(DispMorId s) const { return morphisms_[s.v]; }
  const DispObject& object(DispObjId a) const { return objects_[a.v]; }
  std::uint32_t object_count() const { return static_cast<std::uint32_t>(objects_.size()); }

  // Identity and composite are looked up by boundary and payload; throws LawViolation if absent.
  TwoSidedDispCat finish(const std::function<std::uint32_t(DispObjId)>& id_payload,
                         const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& compose_payload) const;
  // Proof-valued squares: payload 0 everywhere.
  TwoSidedDispCat finish() const;

 private:
  struct KeyHash {
    std::size_t operator()(const std::pair<DispMorphism, std::uint32_t>& k) const noexcept;
  };
  CategoryPtr base1_;
  CategoryPtr base2_;
  std::vector<DispObject> objects_;
  std::vector<DispMorphism> morphisms_;
  std::vector<std::uint32_t> payloads_;
  std::unordered_map<std::pair<DispMorphism, std::uint32_t>, DispMorId, KeyHash> index_;
};

// Displayed objects over (x, y) are morphisms F x -> G y; squares are proofs of commutation.
// Objects ordered by (x, y, morphism id); squares by (src, tgt, f1, f2).
struct CommaData {
  std::shared_ptr<TwoSidedDispCat> disp;
  std::vector<MorId> arrow_of;  // displayed object -> the morphism it is
};

CommaData make_comma(const FinFunctor& f, const FinFunctor& g);
TwoSidedDispCat make_arrow(CategoryPtr c);

struct SpanShape {
  ObjId apex;
  MorId left;   // apex -> x (or L x -> apex for cospans)
  MorId right;  // apex -> y (or L y -> apex for cospans)
  auto operator<=>(const SpanShape&) const = default;
};

// Spans x <- z -> y; squares carry the apex map as payload. Objects ordered by (x, y, z, left, right).
struct SpanData {
  std::shared_ptr<TwoSidedDispCat> disp;
  std::vector<SpanShape> shape;
  std::vector<MorId> apex_map;  // displayed morphism -> apex map
};

SpanData make_spans_data(CategoryPtr c);
TwoSidedDispCat make_spans(CategoryPtr c);

// Structured cospans L x -> z <- L y over the domain of L.
SpanData make_struct_cospans_data(const FinFunctor& l);
TwoSidedDispCat make_struct_cospans(const FinFunctor& l);

// Lens from s to v: get : s -> v and put : v x s -> s (pairs (b, a) ranked b * |s| + a).
struct Lens {
  MorId get;
  FinMap put;
  auto operator<=>(const Lens&) const = default;
};

bool lens_put_get(const FinSetCategory& c, ObjId s, ObjId v, const Lens& l);
bool lens_get_put(const FinSetCategory& c, ObjId s, ObjId v, const Lens& l);
bool lens_put_put(const FinSetCategory& c, ObjId s, ObjId v, const Lens& l);

struct LensData {
  std::shared_ptr<TwoSidedDispCat> disp;
  std::vector<Lens> lens;
};

// Requires the category of all maps (products of finite sets); throws MissingProducts otherwise.
LensData make_lenses_data(const FinSetCategory& c);
TwoSidedDispCat make_lenses(const FinSetCategory& c);

}  // namespace dblcat
