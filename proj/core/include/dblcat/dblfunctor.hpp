#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "dblcat/detail/pair_table.hpp"
#include "dblcat/doublecat.hpp"
#include "dblcat/fincat.hpp"
#include "dblcat/law_report.hpp"
#include "dblcat/twosided.hpp"

namespace dblcat {

struct ComparisonEntry {
  DispObjId h;
  DispObjId k;
  DispMorId sq;
  auto operator<=>(const ComparisonEntry&) const = default;
};

// Vertical functor, action on horizontal morphisms and squares, and comparison squares
// hid(F x) => F(hid x) and F h (x) F k => F(h (x) k), none of which need be invertible.
class LaxDoubleFunctor {
 public:
  LaxDoubleFunctor(DoublePtr dom, DoublePtr cod, FinFunctor vertical, std::vector<DispObjId> on_hor,
                   std::vector<DispMorId> on_sq, std::vector<DispMorId> id_comparison,
                   std::vector<ComparisonEntry> comp_comparison);

  const DoubleCategory& dom() const { return *dom_; }
  const DoubleCategory& cod() const { return *cod_; }
  const DoublePtr& dom_ptr() const { return dom_; }
  const DoublePtr& cod_ptr() const { return cod_; }
  const FinFunctor& vertical() const { return vertical_; }
  const std::vector<DispObjId>& on_hor() const { return on_hor_; }
  const std::vector<DispMorId>& on_sq() const { return on_sq_; }
  const std::vector<DispMorId>& id_comparison() const { return id_comparison_; }
  const std::vector<ComparisonEntry>& comp_comparison() const { return comp_comparison_; }

  ObjId operator()(ObjId x) const { return vertical_(x); }
  MorId operator()(MorId v) const { return vertical_(v); }
  DispObjId operator()(DispObjId h) const { return on_hor_[h.v]; }
  DispMorId operator()(DispMorId s) const { return on_sq_[s.v]; }
  DispMorId id_comparison(ObjId x) const { return id_comparison_[x.v]; }
  std::optional<DispMorId> comp_comparison(DispObjId h, DispObjId k) const;

  TwoSidedDispFunctor disp_functor() const;
  bool operator==(const LaxDoubleFunctor& other) const;

 private:
  DoublePtr dom_;
  DoublePtr cod_;
  FinFunctor vertical_;
  std::vector<DispObjId> on_hor_;
  std::vector<DispMorId> on_sq_;
  std::vector<DispMorId> id_comparison_;
  std::vector<ComparisonEntry> comp_comparison_;
  detail::PairTable comp_index_;
};

using FunctorPtr = std::shared_ptr<const LaxDoubleFunctor>;

LawReport validate_lax_functor(const LaxDoubleFunctor& f);

// Every comparison square is a displayed iso. Clauses: "id_comparison" witness (x),
// "comp_comparison" witness (h, k).
Verdict is_strong(const LaxDoubleFunctor& f);

// Throws BoundaryMismatch unless cod f = dom g.
LaxDoubleFunctor compose_functors(const LaxDoubleFunctor& f, const LaxDoubleFunctor& g);
LaxDoubleFunctor identity_functor(DoublePtr d);

// Component per object (F x -> G x) and per horizontal morphism (square from F h to G h).
struct DoubleTransformation {
  FunctorPtr dom;
  FunctorPtr cod;
  std::vector<MorId> vertical;
  std::vector<DispMorId> on_hor;
};

// Throws BoundaryMismatch when dom and cod do not share domain and codomain,
// IndexOutOfRange when the tables do not fit.
LawReport validate_double_transformation(const DoubleTransformation& t);
DoubleTransformation identity_transformation(FunctorPtr f);

// Pointwise invertibility. Clauses: "vertical" witness (x), "square" witness (h).
Verdict is_invertible_2cell(const DoubleTransformation& t);

// Strong, with vertical part an equivalence, bijective on squares over each boundary, and every
// horizontal morphism of the codomain reached up to a displayed iso over base isos.
// Clauses in checking order: "strong", "vertical.fully_faithful", "vertical.essentially_surjective",
// "squares.fully_faithful" witness (a, b, f1, f2), "squares.essentially_surjective" witness (h).
Verdict is_adjoint_equivalence(const LaxDoubleFunctor& f);

}  // namespace dblcat
