#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dblcat/detail/pair_table.hpp"
#include "dblcat/ids.hpp"
#include "dblcat/law_report.hpp"

namespace dblcat {

struct Arrow {
  ObjId src;
  ObjId tgt;
  auto operator<=>(const Arrow&) const = default;
};

// Composition entry: f then g is fg.
struct CompEntry {
  MorId f;
  MorId g;
  MorId fg;
  auto operator<=>(const CompEntry&) const = default;
};

// A finite category given by explicit tables. Composition is diagrammatic.
// The constructor checks index validity only; laws are checked by validate_category.
class FinCategory {
 public:
  FinCategory() = default;
  FinCategory(std::uint32_t object_count, std::vector<Arrow> morphisms, std::vector<MorId> identity,
              std::vector<CompEntry> comp);

  std::uint32_t object_count() const { return object_count_; }
  std::uint32_t morphism_count() const { return static_cast<std::uint32_t>(morphisms_.size()); }

  const Arrow& arrow(MorId f) const { return morphisms_[f.v]; }
  ObjId src(MorId f) const { return morphisms_[f.v].src; }
  ObjId tgt(MorId f) const { return morphisms_[f.v].tgt; }
  MorId id(ObjId x) const { return identity_[x.v]; }

  // Raw table lookup; defined for whatever pairs the table lists.
  std::optional<MorId> compose(MorId f, MorId g) const;
  // Checked composite; throws NotComposable.
  MorId then(MorId f, MorId g) const;

  const std::vector<MorId>& hom(ObjId x, ObjId y) const { return hom_[x.v * object_count_ + y.v]; }
  const std::vector<MorId>& out(ObjId x) const { return out_[x.v]; }
  const std::vector<MorId>& in(ObjId x) const { return in_[x.v]; }

  const std::vector<Arrow>& morphisms() const { return morphisms_; }
  const std::vector<MorId>& identities() const { return identity_; }
  // Composition entries sorted by (f, g).
  const std::vector<CompEntry>& comp_entries() const { return comp_; }

  bool operator==(const FinCategory& other) const;

 private:
  std::uint32_t object_count_ = 0;
  std::vector<Arrow> morphisms_;
  std::vector<MorId> identity_;
  std::vector<CompEntry> comp_;
  detail::PairTable table_;
  std::vector<std::vector<MorId>> hom_;
  std::vector<std::vector<MorId>> out_;
  std::vector<std::vector<MorId>> in_;
};

using CategoryPtr = std::shared_ptr<const FinCategory>;

LawReport validate_category(const FinCategory& c);

// Least-index two-sided inverse of f.
std::optional<MorId> find_inverse(const FinCategory& c, MorId f);

// No isomorphism between distinct objects and no nonidentity automorphism.
// Witness: the least-index offending isomorphism.
Verdict is_gaunt(const FinCategory& c);

struct FinFunctor {
  CategoryPtr dom;
  CategoryPtr cod;
  std::vector<ObjId> on_obj;
  std::vector<MorId> on_mor;

  ObjId operator()(ObjId x) const { return on_obj[x.v]; }
  MorId operator()(MorId f) const { return on_mor[f.v]; }
  bool operator==(const FinFunctor& other) const;
};

// Throws IndexOutOfRange when the tables do not fit dom/cod.
void check_indices(const FinFunctor& f);
LawReport validate_functor(const FinFunctor& f);
FinFunctor identity_functor(CategoryPtr c);
FinFunctor compose(const FinFunctor& f, const FinFunctor& g);  // f then g

// Fully faithful and essentially surjective. Clauses: "fully_faithful" with witness (x, y),
// "essentially_surjective" with witness the unreached object.
Verdict is_equivalence(const FinFunctor& f);

struct FinNatTrans {
  std::shared_ptr<const FinFunctor> dom;
  std::shared_ptr<const FinFunctor> cod;
  std::vector<MorId> component;
};

LawReport validate_nat_trans(const FinNatTrans& t);

// Small carriers.
FinCategory terminal_category();
FinCategory discrete_category(std::uint32_t n);
FinCategory walking_arrow();
// n objects with exactly one morphism between any two.
FinCategory contractible_groupoid(std::uint32_t n);
// leq[i][j] true iff i <= j. Throws LawViolation unless the relation is a partial order.
FinCategory poset_category(const std::vector<std::vector<bool>>& leq);
FinCategory chain_category(std::uint32_t n);
// One object; table[a][b] = a then b, element 0 the unit.
FinCategory monoid_category(const std::vector<std::vector<std::uint32_t>>& table);

// Reachability relation of a poset category (x <= y iff hom(x, y) nonempty).
std::vector<std::vector<bool>> order_relation(const FinCategory& c);

}  // namespace dblcat
