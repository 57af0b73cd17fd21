#include "tiny.hpp"

#include <memory>
#include <stdexcept>

#include "dblcat/examples.hpp"
#include "dblcat/finset.hpp"

namespace dblcat::testing {

namespace {

// Mixed-radix product over choice lists; calls visit with the current index vector.
template <class Visit>
void for_each_choice(const std::vector<std::size_t>& radix, std::uint64_t cap, Visit visit) {
  std::uint64_t total = 1;
  for (auto r : radix) {
    if (r == 0) return;
    total *= r;
    if (total > cap) throw std::length_error("candidate space exceeds the cap");
  }
  std::vector<std::size_t> digit(radix.size(), 0);
  for (std::uint64_t n = 0; n < total; ++n) {
    visit(digit);
    for (std::size_t i = 0; i < radix.size(); ++i) {
      if (++digit[i] < radix[i]) break;
      digit[i] = 0;
    }
  }
}

template <class T>
std::vector<T> renamed(const std::vector<T>& items, const std::vector<std::uint32_t>& perm) {
  std::vector<T> out(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) out[perm[i]] = items[i];
  return out;
}

std::vector<std::uint32_t> inverse(const std::vector<std::uint32_t>& p) {
  std::vector<std::uint32_t> q(p.size());
  for (std::uint32_t i = 0; i < p.size(); ++i) q[p[i]] = i;
  return q;
}


// Functor a -> b given by renaming maps, with identity comparisons.
FunctorPtr renaming_functor(const DoublePtr& a, const DoublePtr& b, const Permutations& p) {
  const auto& db = b->squares();
  FinFunctor v{a->vertical_ptr(), b->vertical_ptr(), {}, {}};
  for (auto o : p.obj) v.on_obj.push_back(ObjId{o});
  for (auto m : p.mor) v.on_mor.push_back(MorId{m});
  std::vector<DispObjId> on_hor;
  for (auto h : p.hor) on_hor.push_back(DispObjId{h});
  std::vector<DispMorId> on_sq;
  for (auto s : p.sq) on_sq.push_back(DispMorId{s});
  std::vector<DispMorId> idc;
  for (std::uint32_t x = 0; x < a->vertical().object_count(); ++x) {
    idc.push_back(db.id(DispObjId{p.hor[a->hid(ObjId{x}).v]}));
  }
  std::vector<ComparisonEntry> cc;
  for (const auto& e : a->tables().hcomp_obj) cc.push_back({e.h, e.k, db.id(DispObjId{p.hor[e.hk.v]})});
  return std::make_shared<const LaxDoubleFunctor>(a, b, std::move(v), std::move(on_hor), std::move(on_sq),
                                                  std::move(idc), std::move(cc));
}

}  // namespace

DoublePtr share(DoubleCategory d) { return std::make_shared<const DoubleCategory>(std::move(d)); }

DoublePtr chain2_cospans() {
  static const DoublePtr d = [] {
    auto c = std::make_shared<const FinCategory>(chain_category(2));
    return share(structured_cospans_double_cat(identity_functor(c), search_pushouts(*c)));
  }();
  return d;
}

std::vector<NamedDouble> tiny_doubles() {
  static const std::vector<NamedDouble> all = [] {
    auto sq = [](FinCategory c) { return share(square_double_cat(std::make_shared<const FinCategory>(std::move(c)))); };
    std::vector<NamedDouble> out;
    out.push_back({"squares(terminal)", sq(terminal_category())});
    out.push_back({"squares(discrete2)", sq(discrete_category(2))});
    out.push_back({"squares(arrow)", sq(walking_arrow())});
    out.push_back({"squares(iso2)", sq(contractible_groupoid(2))});
    out.push_back({"squares(Z2)", sq(monoid_category({{0, 1}, {1, 0}}))});
    out.push_back({"cospans(chain2)", chain2_cospans()});
    FinSetCategory sets(1, MapClass::all);
    PowersetMonad p;
    out.push_back({"kleisli(powerset, <=1)", share(kleisli_double_cat(sets, p))});
    return out;
  }();
  return all;
}

FunctorPtr non_strong_functor() {
  const DoublePtr dom = tiny_doubles().front().dbl;
  const DoublePtr cod = chain2_cospans();
  const auto& e = cod->squares();
  const ObjId zero{0};
  const DispObjId unit = cod->hid(zero);
  DispObjId widened{kNone};
  for (DispObjId h : e.objects_over(zero, zero)) {
    if (h != unit) widened = h;
  }
  const MorId id0 = cod->vertical().id(zero);
  const DispMorId idc = e.with_boundary({id0, id0, unit, widened}).at(0);
  const DispMorId cc = e.id(widened);
  FinFunctor v{dom->vertical_ptr(), cod->vertical_ptr(), {zero}, {id0}};
  return std::make_shared<const LaxDoubleFunctor>(dom, cod, std::move(v), std::vector<DispObjId>{widened},
                                                  std::vector<DispMorId>{cc}, std::vector<DispMorId>{idc},
                                                  std::vector<ComparisonEntry>{{DispObjId{0}, DispObjId{0}, cc}});
}

FunctorPtr not_surjective_functor() {
  const DoublePtr dom = tiny_doubles()[0].dbl;
  const DoublePtr cod = tiny_doubles()[1].dbl;
  const ObjId zero{0};
  const DispObjId h = cod->hid(zero);
  const DispMorId s = cod->squares().id(h);
  FinFunctor v{dom->vertical_ptr(), cod->vertical_ptr(), {zero}, {cod->vertical().id(zero)}};
  return std::make_shared<const LaxDoubleFunctor>(dom, cod, std::move(v), std::vector<DispObjId>{h},
                                                  std::vector<DispMorId>{s}, std::vector<DispMorId>{s},
                                                  std::vector<ComparisonEntry>{{DispObjId{0}, DispObjId{0}, s}});
}

Permutations random_permutations(const DoubleCategory& d, Rng& rng) {
  return {random_permutation(rng, d.vertical().object_count()), random_permutation(rng, d.vertical().morphism_count()),
          random_permutation(rng, d.horizontal_count()), random_permutation(rng, d.square_count())};
}

DoubleCategory relabel(const DoubleCategory& d, const Permutations& p) {
  const FinCategory& v = d.vertical();
  const TwoSidedDispCat& s = d.squares();
  auto o = [&](ObjId x) { return ObjId{p.obj[x.v]}; };
  auto m = [&](MorId f) { return MorId{p.mor[f.v]}; };
  auto h = [&](DispObjId a) { return DispObjId{p.hor[a.v]}; };
  auto q = [&](DispMorId a) { return DispMorId{p.sq[a.v]}; };
  auto cell = [&](const StructuralSquare& c) { return StructuralSquare{q(c.sq), q(c.inv)}; };

  std::vector<Arrow> arrows;
  for (const auto& a : v.morphisms()) arrows.push_back({o(a.src), o(a.tgt)});
  std::vector<MorId> ids;
  for (auto i : v.identities()) ids.push_back(m(i));
  std::vector<CompEntry> comp;
  for (const auto& e : v.comp_entries()) comp.push_back({m(e.f), m(e.g), m(e.fg)});
  auto vert = std::make_shared<const FinCategory>(v.object_count(), renamed(arrows, p.mor), renamed(ids, p.obj),
                                                  std::move(comp));

  std::vector<DispObject> objs;
  for (const auto& a : s.objects()) objs.push_back({o(a.x1), o(a.x2)});
  std::vector<DispMorphism> mors;
  for (const auto& b : s.morphisms()) mors.push_back({m(b.f1), m(b.f2), h(b.src), h(b.tgt)});
  std::vector<DispMorId> sids;
  for (auto i : s.identities()) sids.push_back(q(i));
  std::vector<DispCompEntry> scomp;
  for (const auto& e : s.comp_entries()) scomp.push_back({q(e.f), q(e.g), q(e.fg)});
  auto sq = std::make_shared<const TwoSidedDispCat>(vert, vert, renamed(objs, p.hor), renamed(mors, p.sq),
                                                    renamed(sids, p.hor), std::move(scomp));

  const DoubleTables& t = d.tables();
  DoubleTables out;
  std::vector<DispObjId> hid;
  for (auto a : t.hid_obj) hid.push_back(h(a));
  out.hid_obj = renamed(hid, p.obj);
  std::vector<DispMorId> hsq;
  for (auto a : t.hid_sq) hsq.push_back(q(a));
  out.hid_sq = renamed(hsq, p.mor);
  for (const auto& e : t.hcomp_obj) out.hcomp_obj.push_back({h(e.h), h(e.k), h(e.hk)});
  for (const auto& e : t.hcomp_sq) out.hcomp_sq.push_back({q(e.s), q(e.t), q(e.st)});
  for (const auto& e : t.lunitor) out.lunitor.push_back({h(e.h), cell(e.cell)});
  for (const auto& e : t.runitor) out.runitor.push_back({h(e.h), cell(e.cell)});
  for (const auto& e : t.associator) out.associator.push_back({h(e.h1), h(e.h2), h(e.h3), cell(e.cell)});
  return DoubleCategory(std::move(sq), std::move(out));
}

Relabeled relabel_with_functors(const DoublePtr& d, const Permutations& p) {
  DoublePtr image = share(relabel(*d, p));
  Permutations back{inverse(p.obj), inverse(p.mor), inverse(p.hor), inverse(p.sq)};
  return {image, renaming_functor(d, image, p), renaming_functor(image, d, back)};
}

std::vector<FinFunctor> enumerate_vertical_functors(const CategoryPtr& a, const CategoryPtr& b) {
  std::vector<FinFunctor> out;
  const std::uint32_t na = a->object_count();
  const std::uint32_t nb = b->object_count();
  std::vector<std::size_t> obj_radix(na, nb);
  for_each_choice(obj_radix, 1u << 20, [&](const std::vector<std::size_t>& objs) {
    std::vector<std::vector<MorId>> options;
    std::vector<std::size_t> radix;
    for (const auto& f : a->morphisms()) {
      options.push_back(b->hom(ObjId{static_cast<std::uint32_t>(objs[f.src.v])},
                               ObjId{static_cast<std::uint32_t>(objs[f.tgt.v])}));
      radix.push_back(options.back().size());
    }
    for_each_choice(radix, 1u << 20, [&](const std::vector<std::size_t>& mors) {
      FinFunctor f{a, b, {}, {}};
      for (auto o : objs) f.on_obj.push_back(ObjId{static_cast<std::uint32_t>(o)});
      for (std::size_t i = 0; i < mors.size(); ++i) f.on_mor.push_back(options[i][mors[i]]);
      for (std::uint32_t x = 0; x < na; ++x) {
        if (f(a->id(ObjId{x})) != b->id(f(ObjId{x}))) return;
      }
      for (const auto& e : a->comp_entries()) {
        if (b->compose(f(e.f), f(e.g)) != f(e.fg)) return;
      }
      out.push_back(std::move(f));
    });
  });
  return out;
}

std::vector<FunctorPtr> enumerate_lax_functors(const DoublePtr& d, const DoublePtr& e, std::uint64_t cap) {
  std::vector<FunctorPtr> out;
  const auto& ds = d->squares();
  const auto& es = e->squares();
  const auto& W = e->vertical();
  for (const FinFunctor& v : enumerate_vertical_functors(d->vertical_ptr(), e->vertical_ptr())) {
    // Horizontal images first; squares and comparisons depend on them.
    std::vector<std::vector<DispObjId>> hor_options;
    std::vector<std::size_t> hor_radix;
    for (const auto& o : ds.objects()) {
      hor_options.push_back(es.objects_over(v(o.x1), v(o.x2)));
      hor_radix.push_back(hor_options.back().size());
    }
    for_each_choice(hor_radix, cap, [&](const std::vector<std::size_t>& hd) {
      std::vector<DispObjId> on_hor;
      for (std::size_t i = 0; i < hd.size(); ++i) on_hor.push_back(hor_options[i][hd[i]]);
      std::vector<std::vector<DispMorId>> options;
      for (const auto& b : ds.morphisms()) {
        options.push_back(es.with_boundary({v(b.f1), v(b.f2), on_hor[b.src.v], on_hor[b.tgt.v]}));
      }
      const std::size_t nsq = options.size();
      for (std::uint32_t x = 0; x < d->vertical().object_count(); ++x) {
        const ObjId fx = v(ObjId{x});
        options.push_back(es.with_boundary({W.id(fx), W.id(fx), e->hid(fx), on_hor[d->hid(ObjId{x}).v]}));
      }
      const std::size_t nid = options.size();
      const auto& pairs = d->tables().hcomp_obj;
      for (const auto& c : pairs) {
        auto top = e->hcomp(on_hor[c.h.v], on_hor[c.k.v]);
        if (!top) {
          options.emplace_back();
          continue;
        }
        options.push_back(es.with_boundary({W.id(v(ds.object(c.h).x1)), W.id(v(ds.object(c.k).x2)), *top,
                                            on_hor[c.hk.v]}));
      }
      std::vector<std::size_t> radix;
      for (const auto& o : options) radix.push_back(o.size());
      for_each_choice(radix, cap, [&](const std::vector<std::size_t>& pick) {
        std::vector<DispMorId> on_sq;
        std::vector<DispMorId> idc;
        std::vector<ComparisonEntry> cc;
        for (std::size_t i = 0; i < nsq; ++i) on_sq.push_back(options[i][pick[i]]);
        for (std::size_t i = nsq; i < nid; ++i) idc.push_back(options[i][pick[i]]);
        for (std::size_t i = nid; i < options.size(); ++i) {
          cc.push_back({pairs[i - nid].h, pairs[i - nid].k, options[i][pick[i]]});
        }
        auto f = std::make_shared<const LaxDoubleFunctor>(d, e, v, on_hor, std::move(on_sq), std::move(idc),
                                                          std::move(cc));
        if (validate_lax_functor(*f).empty()) out.push_back(std::move(f));
      });
    });
  }
  return out;
}

std::vector<DoubleTransformation> enumerate_transformations(const FunctorPtr& f, const FunctorPtr& g,
                                                            std::uint64_t cap) {
  std::vector<DoubleTransformation> out;
  const DoubleCategory& D = f->dom();
  const DoubleCategory& E = f->cod();
  const auto& ds = D.squares();
  std::vector<std::vector<MorId>> vert_options;
  std::vector<std::size_t> vert_radix;
  for (std::uint32_t x = 0; x < D.vertical().object_count(); ++x) {
    vert_options.push_back(E.vertical().hom((*f)(ObjId{x}), (*g)(ObjId{x})));
    vert_radix.push_back(vert_options.back().size());
  }
  for_each_choice(vert_radix, cap, [&](const std::vector<std::size_t>& vd) {
    std::vector<MorId> vertical;
    for (std::size_t i = 0; i < vd.size(); ++i) vertical.push_back(vert_options[i][vd[i]]);
    std::vector<std::vector<DispMorId>> options;
    std::vector<std::size_t> radix;
    for (std::uint32_t h = 0; h < ds.object_count(); ++h) {
      const auto& o = ds.object(DispObjId{h});
      options.push_back(
          E.squares().with_boundary({vertical[o.x1.v], vertical[o.x2.v], (*f)(DispObjId{h}), (*g)(DispObjId{h})}));
      radix.push_back(options.back().size());
    }
    for_each_choice(radix, cap, [&](const std::vector<std::size_t>& pick) {
      DoubleTransformation t{f, g, vertical, {}};
      for (std::size_t i = 0; i < pick.size(); ++i) t.on_hor.push_back(options[i][pick[i]]);
      out.push_back(std::move(t));
    });
  });
  return out;
}

}  // namespace dblcat::testing
