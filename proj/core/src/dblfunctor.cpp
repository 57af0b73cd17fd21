#include "dblcat/dblfunctor.hpp"

#include <algorithm>
#include <string>

#include "dblcat/detail/square_algebra.hpp"
#include "dblcat/error.hpp"

namespace dblcat {

namespace {

using detail::OptObj;
using detail::OptSq;
using detail::str;

bool same(const DoublePtr& a, const DoublePtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace

LaxDoubleFunctor::LaxDoubleFunctor(DoublePtr dom, DoublePtr cod, FinFunctor vertical, std::vector<DispObjId> on_hor,
                                   std::vector<DispMorId> on_sq, std::vector<DispMorId> id_comparison,
                                   std::vector<ComparisonEntry> comp_comparison)
    : dom_(std::move(dom)),
      cod_(std::move(cod)),
      vertical_(std::move(vertical)),
      on_hor_(std::move(on_hor)),
      on_sq_(std::move(on_sq)),
      id_comparison_(std::move(id_comparison)),
      comp_comparison_(std::move(comp_comparison)) {
  if (!dom_ || !cod_) throw Error(ErrorKind::IndexOutOfRange, "double functor without domain or codomain");
  if (!vertical_.dom || !vertical_.cod) throw Error(ErrorKind::IndexOutOfRange, "vertical functor without categories");
  if (!(*vertical_.dom == dom_->vertical()) || !(*vertical_.cod == cod_->vertical())) {
    throw Error(ErrorKind::BoundaryMismatch, "vertical functor does not match the vertical categories");
  }
  check_indices(vertical_);
  const auto nh = cod_->horizontal_count();
  const auto ns = cod_->square_count();
  if (on_hor_.size() != dom_->horizontal_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "on_hor needs one entry per horizontal morphism");
  }
  if (on_sq_.size() != dom_->square_count()) throw Error(ErrorKind::IndexOutOfRange, "on_sq needs one entry per square");
  if (id_comparison_.size() != dom_->vertical().object_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "id_comparison needs one entry per object");
  }
  for (auto h : on_hor_) {
    if (h.v >= nh) throw Error(ErrorKind::IndexOutOfRange, "horizontal image " + str(h.v));
  }
  for (auto s : on_sq_) {
    if (s.v >= ns) throw Error(ErrorKind::IndexOutOfRange, "square image " + str(s.v));
  }
  for (auto s : id_comparison_) {
    if (s.v >= ns) throw Error(ErrorKind::IndexOutOfRange, "id_comparison square " + str(s.v));
  }
  std::sort(comp_comparison_.begin(), comp_comparison_.end());
  const auto dh = dom_->horizontal_count();
  comp_index_ = detail::PairTable(dh, dh);
  for (const auto& e : comp_comparison_) {
    if (e.h.v >= dh || e.k.v >= dh || e.sq.v >= ns) {
      throw Error(ErrorKind::IndexOutOfRange, "comp_comparison entry (" + str(e.h.v) + ", " + str(e.k.v) + ")");
    }
    if (!comp_index_.insert(e.h.v, e.k.v, e.sq.v)) {
      throw Error(ErrorKind::DuplicateEntry, "comp_comparison lists (" + str(e.h.v) + ", " + str(e.k.v) + ") twice");
    }
  }
}

std::optional<DispMorId> LaxDoubleFunctor::comp_comparison(DispObjId h, DispObjId k) const {
  auto v = comp_index_.get(h.v, k.v);
  if (!v) return std::nullopt;
  return DispMorId{*v};
}

TwoSidedDispFunctor LaxDoubleFunctor::disp_functor() const {
  return {dom_->squares_ptr(), cod_->squares_ptr(), vertical_, vertical_, on_hor_, on_sq_};
}

bool LaxDoubleFunctor::operator==(const LaxDoubleFunctor& other) const {
  return same(dom_, other.dom_) && same(cod_, other.cod_) && vertical_ == other.vertical_ &&
         on_hor_ == other.on_hor_ && on_sq_ == other.on_sq_ && id_comparison_ == other.id_comparison_ &&
         comp_comparison_ == other.comp_comparison_;
}

namespace {

struct FunctorAlgebra {
  const LaxDoubleFunctor& F;
  detail::SquareAlgebra E;

  explicit FunctorAlgebra(const LaxDoubleFunctor& f)
      : F(f), E{f.cod(), f.cod().squares(), f.cod().vertical()} {}

  OptSq on(OptSq s) const {
    if (!s) return std::nullopt;
    return F(*s);
  }
  OptObj on(OptObj h) const {
    if (!h) return std::nullopt;
    return F(*h);
  }
  OptSq cc(OptObj h, OptObj k) const {
    if (!h || !k) return std::nullopt;
    return F.comp_comparison(*h, *k);
  }
};

}  // namespace

LawReport validate_lax_functor(const LaxDoubleFunctor& F) {
  LawReport r = validate_functor(F.vertical());
  r.merge(validate_disp_functor(F.disp_functor(), false));
  const auto idtyping = r.law("lax.id_comparison_typing");
  const auto cdomain = r.law("lax.comp_comparison_domain");
  const auto ctotal = r.law("lax.comp_comparison_total");
  const auto ctyping = r.law("lax.comp_comparison_typing");
  const auto idnat = r.law("lax.id_naturality");
  const auto cnat = r.law("lax.comp_naturality");
  const auto uleft = r.law("lax.unit_left");
  const auto uright = r.law("lax.unit_right");
  const auto assoc = r.law("lax.associativity");

  const DoubleCategory& D = F.dom();
  const TwoSidedDispCat& d = D.squares();
  const FinCategory& V = D.vertical();
  const FunctorAlgebra A(F);
  const auto& E = A.E;
  const DoubleCategory& C = F.cod();
  const FinCategory& W = C.vertical();
  const detail::SquareAlgebra S{D, d, V};

  for (std::uint32_t x = 0; x < V.object_count(); ++x) {
    const ObjId fx = F(ObjId{x});
    E.check_boundary(r, idtyping, {x}, F.id_comparison(ObjId{x}),
                     DispMorphism{W.id(fx), W.id(fx), C.hid(fx), F(D.hid(ObjId{x}))}, "identity comparison");
  }
  for (const auto& e : F.comp_comparison()) {
    if (d.object(e.h).x2 != d.object(e.k).x1) {
      r.fail(cdomain, {e.h.v, e.k.v}, "comparison for non-adjacent horizontal morphisms", FailureKind::Boundary);
    } else {
      r.pass(cdomain);
    }
  }
  for (std::uint32_t hi = 0; hi < d.object_count(); ++hi) {
    const DispObjId h{hi};
    for (DispObjId k : D.starting_at(d.object(h).x2)) {
      auto c = F.comp_comparison(h, k);
      if (!c) {
        r.fail(ctotal, {h.v, k.v}, "adjacent pair without comparison", FailureKind::Boundary);
        continue;
      }
      r.pass(ctotal);
      auto top = E.ho(F(h), F(k));
      auto bottom = A.on(S.ho(h, k));
      std::optional<DispMorphism> want;
      if (top && bottom) {
        want = DispMorphism{W.id(F(d.object(h).x1)), W.id(F(d.object(k).x2)), *top, *bottom};
      }
      E.check_boundary(r, ctyping, {h.v, k.v}, *c, want, "composition comparison");
    }
  }
  for (std::uint32_t vi = 0; vi < V.morphism_count(); ++vi) {
    const MorId v{vi};
    const OptSq lhs = E.vc(C.hid_sq(F(v)), F.id_comparison(V.tgt(v)));
    const OptSq rhs = E.vc(F.id_comparison(V.src(v)), F(D.hid_sq(v)));
    E.compare(r, idnat, {vi}, lhs, rhs);
  }
  for (std::uint32_t si = 0; si < d.morphism_count(); ++si) {
    const DispMorId s{si};
    const auto& bs = d.morphism(s);
    for (DispMorId t : d.over_first(bs.f2)) {
      const auto& bt = d.morphism(t);
      const OptSq lhs = E.vc(E.hc(F(s), F(t)), A.cc(bs.tgt, bt.tgt));
      const OptSq rhs = E.vc(A.cc(bs.src, bt.src), A.on(S.hc(s, t)));
      E.compare(r, cnat, {s.v, t.v}, lhs, rhs);
    }
  }
  for (std::uint32_t hi = 0; hi < d.object_count(); ++hi) {
    const DispObjId h{hi};
    const ObjId x = d.object(h).x1;
    const ObjId y = d.object(h).x2;
    const OptSq fh = C.squares().id(F(h));
    const OptSq left = E.vc(E.vc(E.hc(F.id_comparison(x), fh), A.cc(D.hid(x), h)), A.on(S.lam(h)));
    E.compare(r, uleft, {hi}, left, E.lam(F(h)));
    const OptSq right = E.vc(E.vc(E.hc(fh, F.id_comparison(y)), A.cc(h, D.hid(y))), A.on(S.rho(h)));
    E.compare(r, uright, {hi}, right, E.rho(F(h)));
  }
  for (std::uint32_t i = 0; i < d.object_count(); ++i) {
    const DispObjId h1{i};
    for (DispObjId h2 : D.starting_at(d.object(h1).x2)) {
      for (DispObjId h3 : D.starting_at(d.object(h2).x2)) {
        const OptSq lhs = E.vc(E.vc(E.hc(E.id(F(h1)), A.cc(h2, h3)), A.cc(h1, S.ho(h2, h3))), A.on(S.alpha(h1, h2, h3)));
        const OptSq rhs = E.vc(E.vc(E.alpha(F(h1), F(h2), F(h3)), E.hc(A.cc(h1, h2), E.id(F(h3)))),
                               A.cc(S.ho(h1, h2), h3));
        E.compare(r, assoc, {h1.v, h2.v, h3.v}, lhs, rhs);
      }
    }
  }
  return r;
}

namespace {

bool invertible_square(const TwoSidedDispCat& d, DispMorId s) {
  try {
    return is_disp_iso(d, s).has_value();
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::BaseNotIso) return false;
    throw;
  }
}

}  // namespace

Verdict is_strong(const LaxDoubleFunctor& F) {
  const TwoSidedDispCat& e = F.cod().squares();
  for (std::uint32_t x = 0; x < F.id_comparison().size(); ++x) {
    if (!invertible_square(e, F.id_comparison(ObjId{x}))) {
      return Verdict::no("id_comparison", {x}, "identity comparison at object " + str(x) + " is not invertible");
    }
  }
  for (const auto& c : F.comp_comparison()) {
    if (!invertible_square(e, c.sq)) {
      return Verdict::no("comp_comparison", {c.h.v, c.k.v},
                         "composition comparison at (" + str(c.h.v) + ", " + str(c.k.v) + ") is not invertible");
    }
  }
  return Verdict::yes();
}

LaxDoubleFunctor compose_functors(const LaxDoubleFunctor& F, const LaxDoubleFunctor& G) {
  if (!same(F.cod_ptr(), G.dom_ptr())) {
    throw Error(ErrorKind::BoundaryMismatch, "codomain of the first functor is not the domain of the second");
  }
  const TwoSidedDispCat& e = G.cod().squares();
  std::vector<DispObjId> on_hor;
  for (auto h : F.on_hor()) on_hor.push_back(G(h));
  std::vector<DispMorId> on_sq;
  for (auto s : F.on_sq()) on_sq.push_back(G(s));
  std::vector<DispMorId> idc;
  for (std::uint32_t x = 0; x < F.id_comparison().size(); ++x) {
    idc.push_back(e.then(G.id_comparison(F(ObjId{x})), G(F.id_comparison(ObjId{x}))));
  }
  std::vector<ComparisonEntry> cc;
  for (const auto& c : F.comp_comparison()) {
    auto g = G.comp_comparison(F(c.h), F(c.k));
    if (!g) throw Error(ErrorKind::BoundaryMismatch, "second functor lacks a comparison for an image pair");
    cc.push_back({c.h, c.k, e.then(*g, G(c.sq))});
  }
  return LaxDoubleFunctor(F.dom_ptr(), G.cod_ptr(), compose(F.vertical(), G.vertical()), std::move(on_hor),
                          std::move(on_sq), std::move(idc), std::move(cc));
}

LaxDoubleFunctor identity_functor(DoublePtr D) {
  const TwoSidedDispCat& d = D->squares();
  std::vector<DispObjId> on_hor;
  for (std::uint32_t h = 0; h < d.object_count(); ++h) on_hor.push_back(DispObjId{h});
  std::vector<DispMorId> on_sq;
  for (std::uint32_t s = 0; s < d.morphism_count(); ++s) on_sq.push_back(DispMorId{s});
  std::vector<DispMorId> idc;
  for (std::uint32_t x = 0; x < D->vertical().object_count(); ++x) idc.push_back(d.id(D->hid(ObjId{x})));
  std::vector<ComparisonEntry> cc;
  for (const auto& e : D->tables().hcomp_obj) cc.push_back({e.h, e.k, d.id(e.hk)});
  FinFunctor v = identity_functor(D->vertical_ptr());
  return LaxDoubleFunctor(D, D, std::move(v), std::move(on_hor), std::move(on_sq), std::move(idc), std::move(cc));
}

LawReport validate_double_transformation(const DoubleTransformation& t) {
  if (!t.dom || !t.cod) throw Error(ErrorKind::IndexOutOfRange, "transformation without functors");
  const LaxDoubleFunctor& F = *t.dom;
  const LaxDoubleFunctor& G = *t.cod;
  if (!same(F.dom_ptr(), G.dom_ptr()) || !same(F.cod_ptr(), G.cod_ptr())) {
    throw Error(ErrorKind::BoundaryMismatch, "transformation between functors that are not parallel");
  }
  const DoubleCategory& D = F.dom();
  const DoubleCategory& C = F.cod();
  const TwoSidedDispCat& d = D.squares();
  if (t.vertical.size() != D.vertical().object_count() || t.on_hor.size() != d.object_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "transformation tables do not match the domain size");
  }
  for (auto m : t.vertical) {
    if (m.v >= C.vertical().morphism_count()) throw Error(ErrorKind::IndexOutOfRange, "component " + str(m.v));
  }
  for (auto s : t.on_hor) {
    if (s.v >= C.square_count()) throw Error(ErrorKind::IndexOutOfRange, "square component " + str(s.v));
  }
  LawReport r = validate_nat_trans(FinNatTrans{std::make_shared<const FinFunctor>(F.vertical()),
                                               std::make_shared<const FinFunctor>(G.vertical()), t.vertical});
  const auto typing = r.law("transformation.sq_typing");
  const auto nat = r.law("transformation.sq_naturality");
  const auto idc = r.law("transformation.id_compat");
  const auto ccompat = r.law("transformation.comp_compat");
  const detail::SquareAlgebra E{C, C.squares(), C.vertical()};
  const detail::SquareAlgebra S{D, d, D.vertical()};
  const FunctorAlgebra AF(F);
  const FunctorAlgebra AG(G);
  auto tau = [&](OptObj h) -> OptSq {
    if (!h) return std::nullopt;
    return t.on_hor[h->v];
  };

  for (std::uint32_t hi = 0; hi < d.object_count(); ++hi) {
    const auto& o = d.object(DispObjId{hi});
    E.check_boundary(r, typing, {hi}, t.on_hor[hi],
                     DispMorphism{t.vertical[o.x1.v], t.vertical[o.x2.v], F(DispObjId{hi}), G(DispObjId{hi})},
                     "square component");
  }
  for (std::uint32_t si = 0; si < d.morphism_count(); ++si) {
    const DispMorId s{si};
    const auto& b = d.morphism(s);
    E.compare(r, nat, {si}, E.vc(F(s), t.on_hor[b.tgt.v]), E.vc(t.on_hor[b.src.v], G(s)));
  }
  for (std::uint32_t x = 0; x < D.vertical().object_count(); ++x) {
    const ObjId o{x};
    const OptSq lhs = E.vc(C.hid_sq(t.vertical[x]), G.id_comparison(o));
    const OptSq rhs = E.vc(F.id_comparison(o), t.on_hor[D.hid(o).v]);
    E.compare(r, idc, {x}, lhs, rhs);
  }
  for (std::uint32_t hi = 0; hi < d.object_count(); ++hi) {
    const DispObjId h{hi};
    for (DispObjId k : D.starting_at(d.object(h).x2)) {
      const OptSq lhs = E.vc(E.hc(t.on_hor[h.v], t.on_hor[k.v]), AG.cc(h, k));
      const OptSq rhs = E.vc(AF.cc(h, k), tau(S.ho(h, k)));
      E.compare(r, ccompat, {h.v, k.v}, lhs, rhs);
    }
  }
  return r;
}

DoubleTransformation identity_transformation(FunctorPtr f) {
  DoubleTransformation t{f, f, {}, {}};
  const DoubleCategory& C = f->cod();
  for (std::uint32_t x = 0; x < f->dom().vertical().object_count(); ++x) {
    t.vertical.push_back(C.vertical().id((*f)(ObjId{x})));
  }
  for (std::uint32_t h = 0; h < f->dom().horizontal_count(); ++h) t.on_hor.push_back(C.squares().id((*f)(DispObjId{h})));
  return t;
}

Verdict is_invertible_2cell(const DoubleTransformation& t) {
  const DoubleCategory& C = t.dom->cod();
  for (std::uint32_t x = 0; x < t.vertical.size(); ++x) {
    if (!find_inverse(C.vertical(), t.vertical[x])) {
      return Verdict::no("vertical", {x}, "component at object " + str(x) + " is not invertible");
    }
  }
  for (std::uint32_t h = 0; h < t.on_hor.size(); ++h) {
    if (!invertible_square(C.squares(), t.on_hor[h])) {
      return Verdict::no("square", {h}, "component at horizontal morphism " + str(h) + " is not invertible");
    }
  }
  return Verdict::yes();
}

Verdict is_adjoint_equivalence(const LaxDoubleFunctor& F) {
  if (Verdict v = is_strong(F); !v) {
    v.detail = v.clause + ": " + v.detail;
    v.clause = "strong";
    return v;
  }
  if (Verdict v = is_equivalence(F.vertical()); !v) {
    v.clause = "vertical." + v.clause;
    return v;
  }
  const TwoSidedDispCat& d = F.dom().squares();
  const TwoSidedDispCat& e = F.cod().squares();
  const FinCategory& V = F.dom().vertical();
  const FinCategory& W = F.cod().vertical();
  for (std::uint32_t a = 0; a < d.object_count(); ++a) {
    const auto& oa = d.object(DispObjId{a});
    for (std::uint32_t b = 0; b < d.object_count(); ++b) {
      const auto& ob = d.object(DispObjId{b});
      for (MorId f1 : V.hom(oa.x1, ob.x1)) {
        for (MorId f2 : V.hom(oa.x2, ob.x2)) {
          const auto& src = d.with_boundary({f1, f2, DispObjId{a}, DispObjId{b}});
          const auto& tgt = e.with_boundary({F(f1), F(f2), F(DispObjId{a}), F(DispObjId{b})});
          std::vector<DispMorId> images;
          for (DispMorId s : src) images.push_back(F(s));
          std::sort(images.begin(), images.end());
          const bool injective = std::adjacent_find(images.begin(), images.end()) == images.end();
          if (!injective || images.size() != tgt.size()) {
            return Verdict::no("squares.fully_faithful", {a, b, f1.v, f2.v},
                               "squares from " + str(a) + " to " + str(b) + " over (" + str(f1.v) + ", " +
                                   str(f2.v) + ") do not correspond bijectively to their images");
          }
        }
      }
    }
  }
  for (std::uint32_t hp = 0; hp < e.object_count(); ++hp) {
    const auto& target = e.object(DispObjId{hp});
    bool reached = false;
    for (std::uint32_t h = 0; h < d.object_count() && !reached; ++h) {
      const DispObjId fh = F(DispObjId{h});
      const auto& of = e.object(fh);
      for (MorId i1 : W.hom(of.x1, target.x1)) {
        if (reached) break;
        if (!find_inverse(W, i1)) continue;
        for (MorId i2 : W.hom(of.x2, target.x2)) {
          if (reached) break;
          if (!find_inverse(W, i2)) continue;
          for (DispMorId s : e.with_boundary({i1, i2, fh, DispObjId{hp}})) {
            if (is_disp_iso(e, s)) {
              reached = true;
              break;
            }
          }
        }
      }
    }
    if (!reached) {
      return Verdict::no("squares.essentially_surjective", {hp},
                         "horizontal morphism " + str(hp) + " is not isomorphic to any image");
    }
  }
  return Verdict::yes();
}

}  // namespace dblcat
