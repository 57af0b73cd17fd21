#include "dblcat/twosided.hpp"

#include <string>

#include "dblcat/error.hpp"

namespace dblcat {

namespace {

std::size_t mix(std::size_t h, std::uint64_t v) {
  return h ^ (std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

const std::vector<DispObjId> kNoObjects;
const std::vector<DispMorId> kNoMorphisms;

}  // namespace

std::size_t TwoSidedDispCat::BoundaryHash::operator()(const DispMorphism& b) const noexcept {
  return mix(mix(0, pack_pair(b.f1.v, b.f2.v)), pack_pair(b.src.v, b.tgt.v));
}

TwoSidedDispCat::TwoSidedDispCat(CategoryPtr base1, CategoryPtr base2, std::vector<DispObject> objects,
                                 std::vector<DispMorphism> morphisms, std::vector<DispMorId> identity,
                                 std::vector<DispCompEntry> comp)
    : base1_(std::move(base1)),
      base2_(std::move(base2)),
      objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identity_(std::move(identity)),
      comp_(std::move(comp)) {
  if (!base1_ || !base2_) throw Error(ErrorKind::IndexOutOfRange, "displayed category without base categories");
  const auto no = object_count();
  const auto nm = morphism_count();
  for (std::uint32_t i = 0; i < no; ++i) {
    if (objects_[i].x1.v >= base1_->object_count() || objects_[i].x2.v >= base2_->object_count()) {
      throw Error(ErrorKind::IndexOutOfRange, "displayed object " + std::to_string(i) + " lies over a missing object");
    }
  }
  for (std::uint32_t i = 0; i < nm; ++i) {
    const auto& m = morphisms_[i];
    if (m.f1.v >= base1_->morphism_count() || m.f2.v >= base2_->morphism_count() || m.src.v >= no ||
        m.tgt.v >= no) {
      throw Error(ErrorKind::IndexOutOfRange, "displayed morphism " + std::to_string(i) + " refers to a missing cell");
    }
  }
  if (identity_.size() != no) {
    throw Error(ErrorKind::IndexOutOfRange, "displayed identity table has " + std::to_string(identity_.size()) +
                                                " entries for " + std::to_string(no) + " displayed objects");
  }
  for (auto s : identity_) {
    if (s.v >= nm) throw Error(ErrorKind::IndexOutOfRange, "displayed identity outside the displayed morphisms");
  }
  std::sort(comp_.begin(), comp_.end());
  table_ = detail::PairTable(nm, nm);
  for (const auto& e : comp_) {
    if (e.f.v >= nm || e.g.v >= nm || e.fg.v >= nm) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "displayed composition entry (" + std::to_string(e.f.v) + ", " + std::to_string(e.g.v) + ")");
    }
    if (!table_.insert(e.f.v, e.g.v, e.fg.v)) {
      throw Error(ErrorKind::DuplicateEntry, "displayed composition entry (" + std::to_string(e.f.v) + ", " +
                                                 std::to_string(e.g.v) + ") listed twice");
    }
  }
  over_.assign(static_cast<std::size_t>(base1_->object_count()) * base2_->object_count(), {});
  for (std::uint32_t i = 0; i < no; ++i) {
    over_[objects_[i].x1.v * base2_->object_count() + objects_[i].x2.v].push_back(DispObjId{i});
  }
  out_.assign(no, {});
  in_.assign(no, {});
  by_f1_.assign(base1_->morphism_count(), {});
  by_f2_.assign(base2_->morphism_count(), {});
  for (std::uint32_t i = 0; i < nm; ++i) {
    const auto& m = morphisms_[i];
    out_[m.src.v].push_back(DispMorId{i});
    in_[m.tgt.v].push_back(DispMorId{i});
    by_f1_[m.f1.v].push_back(DispMorId{i});
    by_f2_[m.f2.v].push_back(DispMorId{i});
    by_boundary_[m].push_back(DispMorId{i});
  }
}

std::optional<DispMorId> TwoSidedDispCat::compose(DispMorId s, DispMorId t) const {
  auto v = table_.get(s.v, t.v);
  if (!v) return std::nullopt;
  return DispMorId{*v};
}

DispMorId TwoSidedDispCat::then(DispMorId s, DispMorId t) const {
  if (s.v >= morphism_count() || t.v >= morphism_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "square id outside the displayed category");
  }
  if (morphism(s).tgt != morphism(t).src) {
    throw Error(ErrorKind::NotComposable, "bottom of square " + std::to_string(s.v) + " is horizontal morphism " +
                                              std::to_string(morphism(s).tgt.v) + " but top of square " +
                                              std::to_string(t.v) + " is " + std::to_string(morphism(t).src.v));
  }
  auto st = compose(s, t);
  if (!st) {
    throw Error(ErrorKind::NotComposable,
                "no composite listed for squares " + std::to_string(s.v) + " and " + std::to_string(t.v));
  }
  return *st;
}

const std::vector<DispObjId>& TwoSidedDispCat::objects_over(ObjId x1, ObjId x2) const {
  if (x1.v >= base1_->object_count() || x2.v >= base2_->object_count()) return kNoObjects;
  return over_[x1.v * base2_->object_count() + x2.v];
}

const std::vector<DispMorId>& TwoSidedDispCat::with_boundary(const DispMorphism& boundary) const {
  auto it = by_boundary_.find(boundary);
  return it == by_boundary_.end() ? kNoMorphisms : it->second;
}

bool TwoSidedDispCat::operator==(const TwoSidedDispCat& other) const {
  auto same = [](const CategoryPtr& a, const CategoryPtr& b) { return a == b || (a && b && *a == *b); };
  return same(base1_, other.base1_) && same(base2_, other.base2_) && objects_ == other.objects_ &&
         morphisms_ == other.morphisms_ && identity_ == other.identity_ && comp_ == other.comp_;
}

LawReport validate_twosided(const TwoSidedDispCat& d) {
  const FinCategory& b1 = d.base1();
  const FinCategory& b2 = d.base2();
  LawReport r;
  const auto mtyping = r.law("twosided.morphism_typing");
  const auto id_typing = r.law("twosided.id_typing");
  const auto domain = r.law("twosided.compose_domain");
  const auto total = r.law("twosided.compose_total");
  const auto typing = r.law("twosided.compose_typing");
  const auto left = r.law("twosided.left_unit");
  const auto right = r.law("twosided.right_unit");
  const auto assoc = r.law("twosided.associativity");

  const auto nm = d.morphism_count();
  for (std::uint32_t i = 0; i < nm; ++i) {
    const auto& m = d.morphism(DispMorId{i});
    const auto& s = d.object(m.src);
    const auto& t = d.object(m.tgt);
    if (s.x1 == b1.src(m.f1) && s.x2 == b2.src(m.f2) && t.x1 == b1.tgt(m.f1) && t.x2 == b2.tgt(m.f2)) {
      r.pass(mtyping);
    } else {
      r.fail(mtyping, {i}, "endpoints do not lie over the ends of its base morphisms", FailureKind::Boundary);
    }
  }
  for (std::uint32_t a = 0; a < d.object_count(); ++a) {
    const DispObjId x{a};
    const auto& m = d.morphism(d.id(x));
    if (m.src == x && m.tgt == x && m.f1 == b1.id(d.object(x).x1) && m.f2 == b2.id(d.object(x).x2)) {
      r.pass(id_typing);
    } else {
      r.fail(id_typing, {a, d.id(x).v}, "identity is not over identities from the object to itself",
             FailureKind::Boundary);
    }
  }
  for (const auto& e : d.comp_entries()) {
    if (d.morphism(e.f).tgt != d.morphism(e.g).src) {
      r.fail(domain, {e.f.v, e.g.v}, "entry for a non-composable pair", FailureKind::Boundary);
    } else {
      r.pass(domain);
    }
  }
  // Expected boundary of a composite.
  auto expected = [&](DispMorId s, DispMorId t) -> std::optional<DispMorphism> {
    const auto& ms = d.morphism(s);
    const auto& mt = d.morphism(t);
    auto f1 = b1.compose(ms.f1, mt.f1);
    auto f2 = b2.compose(ms.f2, mt.f2);
    if (!f1 || !f2) return std::nullopt;
    return DispMorphism{*f1, *f2, ms.src, mt.tgt};
  };
  auto typed = [&](DispMorId s, DispMorId t) -> std::optional<DispMorId> {
    if (d.morphism(s).tgt != d.morphism(t).src) return std::nullopt;
    auto st = d.compose(s, t);
    auto want = expected(s, t);
    if (!st || !want || d.morphism(*st) != *want) return std::nullopt;
    return st;
  };
  for (std::uint32_t i = 0; i < nm; ++i) {
    const DispMorId s{i};
    for (DispMorId t : d.out(d.morphism(s).tgt)) {
      auto st = d.compose(s, t);
      if (!st) {
        r.fail(total, {s.v, t.v}, "composable pair without composite", FailureKind::Boundary);
        continue;
      }
      r.pass(total);
      auto want = expected(s, t);
      if (want && d.morphism(*st) == *want) {
        r.pass(typing);
      } else {
        r.fail(typing, {s.v, t.v, st->v}, "composite does not lie over the composite base morphisms",
               FailureKind::Boundary);
      }
    }
  }
  for (std::uint32_t i = 0; i < nm; ++i) {
    const DispMorId s{i};
    const DispMorId il = d.id(d.morphism(s).src);
    const DispMorId ir = d.id(d.morphism(s).tgt);
    if (auto v = typed(il, s)) {
      if (*v == s) {
        r.pass(left);
      } else {
        r.fail(left, {il.v, s.v}, "id . s = " + std::to_string(v->v));
      }
    } else {
      r.fail(left, {il.v, s.v}, "id . s is not defined", FailureKind::Boundary);
    }
    if (auto v = typed(s, ir)) {
      if (*v == s) {
        r.pass(right);
      } else {
        r.fail(right, {s.v, ir.v}, "s . id = " + std::to_string(v->v));
      }
    } else {
      r.fail(right, {s.v, ir.v}, "s . id is not defined", FailureKind::Boundary);
    }
  }
  for (std::uint32_t i = 0; i < nm; ++i) {
    const DispMorId s{i};
    for (DispMorId t : d.out(d.morphism(s).tgt)) {
      auto st = typed(s, t);
      for (DispMorId u : d.out(d.morphism(t).tgt)) {
        auto tu = typed(t, u);
        std::optional<DispMorId> lhs = st ? typed(*st, u) : std::nullopt;
        std::optional<DispMorId> rhs = tu ? typed(s, *tu) : std::nullopt;
        if (!lhs || !rhs) {
          r.fail(assoc, {s.v, t.v, u.v}, "a composite is undefined", FailureKind::Boundary);
        } else if (*lhs != *rhs) {
          r.fail(assoc, {s.v, t.v, u.v},
                 "(s.t).u = " + std::to_string(lhs->v) + " but s.(t.u) = " + std::to_string(rhs->v));
        } else {
          r.pass(assoc);
        }
      }
    }
  }
  return r;
}

TotalCategory total_category(const TwoSidedDispCat& d) {
  std::vector<Arrow> arrows;
  for (const auto& m : d.morphisms()) arrows.push_back({ObjId{m.src.v}, ObjId{m.tgt.v}});
  std::vector<MorId> ids;
  for (auto s : d.identities()) ids.push_back(MorId{s.v});
  std::vector<CompEntry> comp;
  for (const auto& e : d.comp_entries()) comp.push_back({MorId{e.f.v}, MorId{e.g.v}, MorId{e.fg.v}});
  auto cat = std::make_shared<FinCategory>(d.object_count(), std::move(arrows), std::move(ids), std::move(comp));
  TotalCategory out{cat, FinFunctor{cat, d.base1_ptr(), {}, {}}, FinFunctor{cat, d.base2_ptr(), {}, {}}};
  for (const auto& o : d.objects()) {
    out.proj1.on_obj.push_back(o.x1);
    out.proj2.on_obj.push_back(o.x2);
  }
  for (const auto& m : d.morphisms()) {
    out.proj1.on_mor.push_back(m.f1);
    out.proj2.on_mor.push_back(m.f2);
  }
  return out;
}

std::optional<DispMorId> is_disp_iso(const TwoSidedDispCat& d, DispMorId s) {
  if (s.v >= d.morphism_count()) throw Error(ErrorKind::IndexOutOfRange, "square " + std::to_string(s.v));
  const auto& m = d.morphism(s);
  auto g1 = find_inverse(d.base1(), m.f1);
  auto g2 = find_inverse(d.base2(), m.f2);
  if (!g1 || !g2) {
    throw Error(ErrorKind::BaseNotIso, "square " + std::to_string(s.v) + " lies over a non-invertible " +
                                           (g1 ? "second" : "first") + " base morphism");
  }
  const DispMorId id_src = d.id(m.src);
  const DispMorId id_tgt = d.id(m.tgt);
  for (DispMorId t : d.with_boundary(DispMorphism{*g1, *g2, m.tgt, m.src})) {
    if (d.compose(s, t) == id_src && d.compose(t, s) == id_tgt) return t;
  }
  return std::nullopt;
}

Verdict is_univalent_twosided(const TwoSidedDispCat& d) {
  const FinCategory& b1 = d.base1();
  const FinCategory& b2 = d.base2();
  for (std::uint32_t a = 0; a < d.object_count(); ++a) {
    const DispObjId x{a};
    const auto& o = d.object(x);
    for (DispObjId y : d.objects_over(o.x1, o.x2)) {
      std::uint32_t isos = 0;
      std::optional<DispMorId> first;
      for (DispMorId t : d.with_boundary(DispMorphism{b1.id(o.x1), b2.id(o.x2), x, y})) {
        if (is_disp_iso(d, t)) {
          ++isos;
          if (!first) first = t;
        }
      }
      if (x == y && isos != 1) {
        return Verdict::no("identity_isos", {a, isos},
                           "displayed object " + std::to_string(a) + " has " + std::to_string(isos) +
                               " displayed isos to itself over identities");
      }
      if (x != y && isos != 0) {
        return Verdict::no("distinct_isomorphic", {a, y.v, first->v},
                           "distinct displayed objects " + std::to_string(a) + " and " + std::to_string(y.v) +
                               " are joined by displayed iso " + std::to_string(first->v));
      }
    }
  }
  return Verdict::yes();
}

LawReport validate_disp_functor(const TwoSidedDispFunctor& F, bool include_bases) {
  if (!F.dom || !F.cod) throw Error(ErrorKind::IndexOutOfRange, "displayed functor without domain or codomain");
  const TwoSidedDispCat& D = *F.dom;
  const TwoSidedDispCat& E = *F.cod;
  if (F.on_obj.size() != D.object_count() || F.on_mor.size() != D.morphism_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "displayed functor tables do not match the domain size");
  }
  for (auto a : F.on_obj) {
    if (a.v >= E.object_count()) throw Error(ErrorKind::IndexOutOfRange, "displayed object image outside codomain");
  }
  for (auto s : F.on_mor) {
    if (s.v >= E.morphism_count()) throw Error(ErrorKind::IndexOutOfRange, "displayed morphism image outside codomain");
  }
  LawReport r;
  if (include_bases) {
    r.merge(validate_functor(F.base1));
    r.merge(validate_functor(F.base2));
  }
  const auto otyping = r.law("disp_functor.obj_typing");
  const auto mtyping = r.law("disp_functor.mor_typing");
  const auto pid = r.law("disp_functor.preserves_id");
  const auto pcomp = r.law("disp_functor.preserves_comp");
  for (std::uint32_t a = 0; a < D.object_count(); ++a) {
    const auto& o = D.object(DispObjId{a});
    const auto& img = E.object(F(DispObjId{a}));
    if (img.x1 == F.base1(o.x1) && img.x2 == F.base2(o.x2)) {
      r.pass(otyping);
    } else {
      r.fail(otyping, {a}, "image does not lie over the image objects", FailureKind::Boundary);
    }
  }
  for (std::uint32_t i = 0; i < D.morphism_count(); ++i) {
    const auto& m = D.morphism(DispMorId{i});
    const auto& img = E.morphism(F(DispMorId{i}));
    if (img == DispMorphism{F.base1(m.f1), F.base2(m.f2), F(m.src), F(m.tgt)}) {
      r.pass(mtyping);
    } else {
      r.fail(mtyping, {i}, "image does not have the image boundary", FailureKind::Boundary);
    }
  }
  for (std::uint32_t a = 0; a < D.object_count(); ++a) {
    const DispObjId x{a};
    if (F(D.id(x)) == E.id(F(x))) {
      r.pass(pid);
    } else {
      r.fail(pid, {a}, "F id is not the identity");
    }
  }
  for (const auto& e : D.comp_entries()) {
    if (D.morphism(e.f).tgt != D.morphism(e.g).src) continue;
    auto img = E.compose(F(e.f), F(e.g));
    if (!img || E.morphism(F(e.f)).tgt != E.morphism(F(e.g)).src) {
      r.fail(pcomp, {e.f.v, e.g.v}, "images are not composable", FailureKind::Boundary);
    } else if (*img != F(e.fg)) {
      r.fail(pcomp, {e.f.v, e.g.v}, "F(s.t) differs from F s . F t");
    } else {
      r.pass(pcomp);
    }
  }
  return r;
}

LawReport validate_disp_nat_trans(const TwoSidedDispNatTrans& t) {
  if (!t.dom || !t.cod) throw Error(ErrorKind::IndexOutOfRange, "displayed transformation without functors");
  const TwoSidedDispFunctor& F = *t.dom;
  const TwoSidedDispFunctor& G = *t.cod;
  const TwoSidedDispCat& D = *F.dom;
  const TwoSidedDispCat& E = *F.cod;
  if (t.component.size() != D.object_count()) throw Error(ErrorKind::IndexOutOfRange, "component table size");
  for (auto c : t.component) {
    if (c.v >= E.morphism_count()) throw Error(ErrorKind::IndexOutOfRange, "component outside codomain");
  }
  LawReport r = validate_nat_trans(t.base1);
  r.merge(validate_nat_trans(t.base2));
  const auto typing = r.law("disp_trans.typing");
  const auto nat = r.law("disp_trans.naturality");
  for (std::uint32_t a = 0; a < D.object_count(); ++a) {
    const auto& o = D.object(DispObjId{a});
    const auto& m = E.morphism(t.component[a]);
    const DispMorphism want{t.base1.component[o.x1.v], t.base2.component[o.x2.v], F(DispObjId{a}), G(DispObjId{a})};
    if (m == want) {
      r.pass(typing);
    } else {
      r.fail(typing, {a, t.component[a].v}, "component has the wrong boundary", FailureKind::Boundary);
    }
  }
  for (std::uint32_t i = 0; i < D.morphism_count(); ++i) {
    const DispMorId s{i};
    const auto& m = D.morphism(s);
    auto lhs = E.compose(F(s), t.component[m.tgt.v]);
    auto rhs = E.compose(t.component[m.src.v], G(s));
    if (!lhs || !rhs || E.morphism(*lhs) != E.morphism(*rhs)) {
      r.fail(nat, {i}, "a side of the naturality square is undefined or mistyped", FailureKind::Boundary);
    } else if (*lhs != *rhs) {
      r.fail(nat, {i}, "naturality square does not commute");
    } else {
      r.pass(nat);
    }
  }
  return r;
}

std::size_t DisplayedBuilder::KeyHash::operator()(const std::pair<DispMorphism, std::uint32_t>& k) const noexcept {
  return mix(mix(mix(0, pack_pair(k.first.f1.v, k.first.f2.v)), pack_pair(k.first.src.v, k.first.tgt.v)), k.second);
}

DispObjId DisplayedBuilder::add_object(ObjId x1, ObjId x2) {
  objects_.push_back({x1, x2});
  return DispObjId{static_cast<std::uint32_t>(objects_.size() - 1)};
}

DispMorId DisplayedBuilder::add_morphism(MorId f1, MorId f2, DispObjId src, DispObjId tgt, std::uint32_t payload) {
  const DispMorId id{static_cast<std::uint32_t>(morphisms_.size())};
  DispMorphism m{f1, f2, src, tgt};
  if (!index_.emplace(std::make_pair(m, payload), id).second) {
    throw Error(ErrorKind::DuplicateEntry, "displayed morphism added twice");
  }
  morphisms_.push_back(m);
  payloads_.push_back(payload);
  return id;
}

std::optional<DispMorId> DisplayedBuilder::find(MorId f1, MorId f2, DispObjId src, DispObjId tgt,
                                                std::uint32_t payload) const {
  auto it = index_.find({DispMorphism{f1, f2, src, tgt}, payload});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

TwoSidedDispCat DisplayedBuilder::finish(
    const std::function<std::uint32_t(DispObjId)>& id_payload,
    const std::function<std::uint32_t(std::uint32_t, std::uint32_t)>& compose_payload) const {
  std::vector<DispMorId> ids;
  for (std::uint32_t a = 0; a < objects_.size(); ++a) {
    const DispObjId x{a};
    auto s = find(base1_->id(objects_[a].x1), base2_->id(objects_[a].x2), x, x, id_payload(x));
    if (!s) throw Error(ErrorKind::LawViolation, "displayed object " + std::to_string(a) + " has no identity");
    ids.push_back(*s);
  }
  std::vector<std::vector<DispMorId>> out(objects_.size());
  for (std::uint32_t i = 0; i < morphisms_.size(); ++i) out[morphisms_[i].src.v].push_back(DispMorId{i});
  std::vector<DispCompEntry> comp;
  for (std::uint32_t i = 0; i < morphisms_.size(); ++i) {
    const auto& s = morphisms_[i];
    for (DispMorId t : out[s.tgt.v]) {
      const auto& u = morphisms_[t.v];
      auto st = find(base1_->then(s.f1, u.f1), base2_->then(s.f2, u.f2), s.src, u.tgt,
                     compose_payload(payloads_[i], payloads_[t.v]));
      if (!st) {
        throw Error(ErrorKind::LawViolation,
                    "composite of displayed morphisms " + std::to_string(i) + " and " + std::to_string(t.v) +
                        " is not a displayed morphism");
      }
      comp.push_back({DispMorId{i}, t, *st});
    }
  }
  return TwoSidedDispCat(base1_, base2_, objects_, morphisms_, std::move(ids), std::move(comp));
}

TwoSidedDispCat DisplayedBuilder::finish() const {
  return finish([](DispObjId) { return 0U; }, [](std::uint32_t, std::uint32_t) { return 0U; });
}

CommaData make_comma(const FinFunctor& F, const FinFunctor& G) {
  check_indices(F);
  check_indices(G);
  if (!(F.cod == G.cod || *F.cod == *G.cod)) {
    throw Error(ErrorKind::CodomainMismatch, "comma of functors with different codomains");
  }
  const FinCategory& C1 = *F.dom;
  const FinCategory& C2 = *G.dom;
  const FinCategory& E = *F.cod;
  DisplayedBuilder b(F.dom, G.dom);
  CommaData out;
  for (std::uint32_t x = 0; x < C1.object_count(); ++x) {
    for (std::uint32_t y = 0; y < C2.object_count(); ++y) {
      for (MorId phi : E.hom(F(ObjId{x}), G(ObjId{y}))) {
        b.add_object(ObjId{x}, ObjId{y});
        out.arrow_of.push_back(phi);
      }
    }
  }
  const auto n = b.object_count();
  for (std::uint32_t a = 0; a < n; ++a) {
    const auto& oa = b.object(DispObjId{a});
    for (std::uint32_t c = 0; c < n; ++c) {
      const auto& oc = b.object(DispObjId{c});
      for (MorId f : C1.hom(oa.x1, oc.x1)) {
        for (MorId g : C2.hom(oa.x2, oc.x2)) {
          // F f . phi' = phi . G g
          if (E.compose(F(f), out.arrow_of[c]) == E.compose(out.arrow_of[a], G(g))) {
            b.add_morphism(f, g, DispObjId{a}, DispObjId{c});
          }
        }
      }
    }
  }
  out.disp = std::make_shared<TwoSidedDispCat>(b.finish());
  return out;
}

TwoSidedDispCat make_arrow(CategoryPtr c) {
  const FinFunctor id = identity_functor(std::move(c));
  return *make_comma(id, id).disp;
}

SpanData make_spans_data(CategoryPtr cp) {
  const FinCategory& C = *cp;
  DisplayedBuilder b(cp, cp);
  SpanData out;
  const auto no = C.object_count();
  for (std::uint32_t x = 0; x < no; ++x) {
    for (std::uint32_t y = 0; y < no; ++y) {
      for (std::uint32_t z = 0; z < no; ++z) {
        for (MorId l : C.hom(ObjId{z}, ObjId{x})) {
          for (MorId r : C.hom(ObjId{z}, ObjId{y})) {
            b.add_object(ObjId{x}, ObjId{y});
            out.shape.push_back({ObjId{z}, l, r});
          }
        }
      }
    }
  }
  const auto n = b.object_count();
  for (std::uint32_t a = 0; a < n; ++a) {
    const auto& oa = b.object(DispObjId{a});
    const auto& sa = out.shape[a];
    for (std::uint32_t c = 0; c < n; ++c) {
      const auto& oc = b.object(DispObjId{c});
      const auto& sc = out.shape[c];
      for (MorId f : C.hom(oa.x1, oc.x1)) {
        for (MorId g : C.hom(oa.x2, oc.x2)) {
          for (MorId m : C.hom(sa.apex, sc.apex)) {
            // left . f = m . left'  and  right . g = m . right'
            if (C.compose(sa.left, f) == C.compose(m, sc.left) && C.compose(sa.right, g) == C.compose(m, sc.right)) {
              b.add_morphism(f, g, DispObjId{a}, DispObjId{c}, m.v);
              out.apex_map.push_back(m);
            }
          }
        }
      }
    }
  }
  out.disp = std::make_shared<TwoSidedDispCat>(b.finish(
      [&](DispObjId a) { return C.id(out.shape[a.v].apex).v; },
      [&](std::uint32_t p, std::uint32_t q) { return C.then(MorId{p}, MorId{q}).v; }));
  return out;
}

TwoSidedDispCat make_spans(CategoryPtr c) { return *make_spans_data(std::move(c)).disp; }

SpanData make_struct_cospans_data(const FinFunctor& L) {
  check_indices(L);
  const FinCategory& C = *L.dom;
  const FinCategory& X = *L.cod;
  DisplayedBuilder b(L.dom, L.dom);
  SpanData out;
  for (std::uint32_t x = 0; x < C.object_count(); ++x) {
    for (std::uint32_t y = 0; y < C.object_count(); ++y) {
      for (std::uint32_t z = 0; z < X.object_count(); ++z) {
        for (MorId l : X.hom(L(ObjId{x}), ObjId{z})) {
          for (MorId r : X.hom(L(ObjId{y}), ObjId{z})) {
            b.add_object(ObjId{x}, ObjId{y});
            out.shape.push_back({ObjId{z}, l, r});
          }
        }
      }
    }
  }
  const auto n = b.object_count();
  for (std::uint32_t a = 0; a < n; ++a) {
    const auto& oa = b.object(DispObjId{a});
    const auto& sa = out.shape[a];
    for (std::uint32_t c = 0; c < n; ++c) {
      const auto& oc = b.object(DispObjId{c});
      const auto& sc = out.shape[c];
      for (MorId f : C.hom(oa.x1, oc.x1)) {
        for (MorId g : C.hom(oa.x2, oc.x2)) {
          for (MorId m : X.hom(sa.apex, sc.apex)) {
            // L f . left' = left . m  and  L g . right' = right . m
            if (X.compose(L(f), sc.left) == X.compose(sa.left, m) && X.compose(L(g), sc.right) == X.compose(sa.right, m)) {
              b.add_morphism(f, g, DispObjId{a}, DispObjId{c}, m.v);
              out.apex_map.push_back(m);
            }
          }
        }
      }
    }
  }
  out.disp = std::make_shared<TwoSidedDispCat>(b.finish(
      [&](DispObjId a) { return X.id(out.shape[a.v].apex).v; },
      [&](std::uint32_t p, std::uint32_t q) { return X.then(MorId{p}, MorId{q}).v; }));
  return out;
}

TwoSidedDispCat make_struct_cospans(const FinFunctor& l) { return *make_struct_cospans_data(l).disp; }

namespace {

// put as a function of (b, a) with b in v and a in s
std::uint32_t put_at(const FinMap& put, std::uint32_t s_size, std::uint32_t b, std::uint32_t a) {
  return put(b * s_size + a);
}

}  // namespace

bool lens_put_get(const FinSetCategory& c, ObjId s, ObjId v, const Lens& l) {
  const FinMap& get = c.map(l.get);
  for (std::uint32_t b = 0; b < v.v; ++b) {
    for (std::uint32_t a = 0; a < s.v; ++a) {
      if (get(put_at(l.put, s.v, b, a)) != b) return false;
    }
  }
  return true;
}

bool lens_get_put(const FinSetCategory& c, ObjId s, ObjId v, const Lens& l) {
  (void)v;
  const FinMap& get = c.map(l.get);
  for (std::uint32_t a = 0; a < s.v; ++a) {
    if (put_at(l.put, s.v, get(a), a) != a) return false;
  }
  return true;
}

bool lens_put_put(const FinSetCategory& c, ObjId s, ObjId v, const Lens& l) {
  (void)c;
  for (std::uint32_t b = 0; b < v.v; ++b) {
    for (std::uint32_t b2 = 0; b2 < v.v; ++b2) {
      for (std::uint32_t a = 0; a < s.v; ++a) {
        if (put_at(l.put, s.v, b2, put_at(l.put, s.v, b, a)) != put_at(l.put, s.v, b2, a)) return false;
      }
    }
  }
  return true;
}

LensData make_lenses_data(const FinSetCategory& c) {
  if (c.map_class() != MapClass::all) {
    throw Error(ErrorKind::MissingProducts, "lenses need products of finite sets; the category of " +
                                                std::string(to_string(c.map_class())) + " maps has none");
  }
  const FinCategory& C = c.category();
  DisplayedBuilder b(c.category_ptr(), c.category_ptr());
  LensData out;
  for (std::uint32_t s = 0; s < C.object_count(); ++s) {
    for (std::uint32_t v = 0; v < C.object_count(); ++v) {
      const std::uint32_t pairs = s * v;
      std::uint64_t puts = 1;
      for (std::uint32_t i = 0; i < pairs; ++i) puts *= s;
      for (MorId get : C.hom(ObjId{s}, ObjId{v})) {
        for (std::uint64_t r = 0; r < puts; ++r) {
          Lens l{get, map_unrank(r, pairs, s)};
          if (lens_put_get(c, ObjId{s}, ObjId{v}, l) && lens_get_put(c, ObjId{s}, ObjId{v}, l) &&
              lens_put_put(c, ObjId{s}, ObjId{v}, l)) {
            b.add_object(ObjId{s}, ObjId{v});
            out.lens.push_back(std::move(l));
          }
        }
      }
    }
  }
  const auto n = b.object_count();
  for (std::uint32_t a = 0; a < n; ++a) {
    const auto& oa = b.object(DispObjId{a});
    const Lens& la = out.lens[a];
    for (std::uint32_t k = 0; k < n; ++k) {
      const auto& ok = b.object(DispObjId{k});
      const Lens& lk = out.lens[k];
      for (MorId f1 : C.hom(oa.x1, ok.x1)) {
        for (MorId f2 : C.hom(oa.x2, ok.x2)) {
          // get . f2 = f1 . get'  and  put . f1 = (f2 x f1) . put'
          if (C.compose(la.get, f2) != C.compose(f1, lk.get)) continue;
          const FinMap& m1 = c.map(f1);
          const FinMap& m2 = c.map(f2);
          bool ok_put = true;
          for (std::uint32_t bv = 0; bv < oa.x2.v && ok_put; ++bv) {
            for (std::uint32_t as = 0; as < oa.x1.v && ok_put; ++as) {
              ok_put = m1(put_at(la.put, oa.x1.v, bv, as)) == put_at(lk.put, ok.x1.v, m2(bv), m1(as));
            }
          }
          if (ok_put) b.add_morphism(f1, f2, DispObjId{a}, DispObjId{k});
        }
      }
    }
  }
  out.disp = std::make_shared<TwoSidedDispCat>(b.finish());
  return out;
}

TwoSidedDispCat make_lenses(const FinSetCategory& c) { return *make_lenses_data(c).disp; }

}  // namespace dblcat
