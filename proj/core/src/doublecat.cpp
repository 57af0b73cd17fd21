#include "dblcat/doublecat.hpp"

#include <algorithm>
#include <string>

#include "dblcat/detail/square_algebra.hpp"
#include "dblcat/error.hpp"

namespace dblcat {

namespace {

using detail::str;

template <class T>
void check_sorted_unique(std::vector<T>& entries, auto key, const char* table) {
  std::sort(entries.begin(), entries.end());
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (key(entries[i - 1]) == key(entries[i])) {
      throw Error(ErrorKind::DuplicateEntry, std::string(table) + " lists the same arguments twice");
    }
  }
}

}  // namespace

std::size_t DoubleCategory::TripleHash::operator()(const std::array<std::uint32_t, 3>& t) const noexcept {
  std::size_t h = std::hash<std::uint64_t>{}(pack_pair(t[0], t[1]));
  return h ^ (std::hash<std::uint32_t>{}(t[2]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

DoubleCategory::DoubleCategory(TwoSidedPtr squares, DoubleTables tables)
    : squares_(std::move(squares)), tables_(std::move(tables)) {
  if (!squares_) throw Error(ErrorKind::IndexOutOfRange, "double category without squares");
  const TwoSidedDispCat& d = *squares_;
  if (!(d.base1_ptr() == d.base2_ptr() || d.base1() == d.base2())) {
    throw Error(ErrorKind::BoundaryMismatch, "squares must lie over the vertical category on both sides");
  }
  const FinCategory& v = d.base1();
  const auto no = d.object_count();
  const auto nm = d.morphism_count();
  auto obj_ok = [&](DispObjId h) { return h.v < no; };
  auto sq_ok = [&](DispMorId s) { return s.v < nm; };
  auto cell_ok = [&](const StructuralSquare& c) { return sq_ok(c.sq) && sq_ok(c.inv); };

  if (tables_.hid_obj.size() != v.object_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "hid_obj needs one entry per object");
  }
  if (tables_.hid_sq.size() != v.morphism_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "hid_sq needs one entry per vertical morphism");
  }
  for (auto h : tables_.hid_obj) {
    if (!obj_ok(h)) throw Error(ErrorKind::IndexOutOfRange, "hid_obj entry " + str(h.v));
  }
  for (auto s : tables_.hid_sq) {
    if (!sq_ok(s)) throw Error(ErrorKind::IndexOutOfRange, "hid_sq entry " + str(s.v));
  }
  check_sorted_unique(tables_.hcomp_obj, [](const HorCompEntry& e) { return std::make_pair(e.h, e.k); }, "hcomp_obj");
  check_sorted_unique(tables_.hcomp_sq, [](const SqCompEntry& e) { return std::make_pair(e.s, e.t); }, "hcomp_sq");
  check_sorted_unique(tables_.lunitor, [](const UnitorEntry& e) { return e.h; }, "lunitor");
  check_sorted_unique(tables_.runitor, [](const UnitorEntry& e) { return e.h; }, "runitor");
  check_sorted_unique(tables_.associator, [](const AssocEntry& e) { return std::array{e.h1, e.h2, e.h3}; },
                      "associator");

  hcomp_obj_ = detail::PairTable(no, no);
  for (const auto& e : tables_.hcomp_obj) {
    if (!obj_ok(e.h) || !obj_ok(e.k) || !obj_ok(e.hk)) {
      throw Error(ErrorKind::IndexOutOfRange, "hcomp_obj entry (" + str(e.h.v) + ", " + str(e.k.v) + ")");
    }
    hcomp_obj_.insert(e.h.v, e.k.v, e.hk.v);
  }
  hcomp_sq_ = detail::PairTable(nm, nm);
  for (const auto& e : tables_.hcomp_sq) {
    if (!sq_ok(e.s) || !sq_ok(e.t) || !sq_ok(e.st)) {
      throw Error(ErrorKind::IndexOutOfRange, "hcomp_sq entry (" + str(e.s.v) + ", " + str(e.t.v) + ")");
    }
    hcomp_sq_.insert(e.s.v, e.t.v, e.st.v);
  }
  lunitor_index_.assign(no, kNone);
  runitor_index_.assign(no, kNone);
  for (std::uint32_t i = 0; i < tables_.lunitor.size(); ++i) {
    const auto& e = tables_.lunitor[i];
    if (!obj_ok(e.h) || !cell_ok(e.cell)) throw Error(ErrorKind::IndexOutOfRange, "lunitor entry " + str(e.h.v));
    lunitor_index_[e.h.v] = i;
  }
  for (std::uint32_t i = 0; i < tables_.runitor.size(); ++i) {
    const auto& e = tables_.runitor[i];
    if (!obj_ok(e.h) || !cell_ok(e.cell)) throw Error(ErrorKind::IndexOutOfRange, "runitor entry " + str(e.h.v));
    runitor_index_[e.h.v] = i;
  }
  assoc_index_.reserve(tables_.associator.size());
  for (std::uint32_t i = 0; i < tables_.associator.size(); ++i) {
    const auto& e = tables_.associator[i];
    if (!obj_ok(e.h1) || !obj_ok(e.h2) || !obj_ok(e.h3) || !cell_ok(e.cell)) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "associator entry (" + str(e.h1.v) + ", " + str(e.h2.v) + ", " + str(e.h3.v) + ")");
    }
    assoc_index_.emplace(std::array{e.h1.v, e.h2.v, e.h3.v}, i);
  }
  starting_at_.assign(v.object_count(), {});
  for (std::uint32_t h = 0; h < no; ++h) starting_at_[d.object(DispObjId{h}).x1.v].push_back(DispObjId{h});
}

std::optional<DispObjId> DoubleCategory::hcomp(DispObjId h, DispObjId k) const {
  auto v = hcomp_obj_.get(h.v, k.v);
  if (!v) return std::nullopt;
  return DispObjId{*v};
}

std::optional<DispMorId> DoubleCategory::hcomp_sq(DispMorId s, DispMorId t) const {
  auto v = hcomp_sq_.get(s.v, t.v);
  if (!v) return std::nullopt;
  return DispMorId{*v};
}

std::optional<StructuralSquare> DoubleCategory::lunitor(DispObjId h) const {
  if (h.v >= lunitor_index_.size() || lunitor_index_[h.v] == kNone) return std::nullopt;
  return tables_.lunitor[lunitor_index_[h.v]].cell;
}

std::optional<StructuralSquare> DoubleCategory::runitor(DispObjId h) const {
  if (h.v >= runitor_index_.size() || runitor_index_[h.v] == kNone) return std::nullopt;
  return tables_.runitor[runitor_index_[h.v]].cell;
}

std::optional<StructuralSquare> DoubleCategory::associator(DispObjId h1, DispObjId h2, DispObjId h3) const {
  auto it = assoc_index_.find(std::array{h1.v, h2.v, h3.v});
  if (it == assoc_index_.end()) return std::nullopt;
  return tables_.associator[it->second].cell;
}

bool DoubleCategory::operator==(const DoubleCategory& other) const {
  return (squares_ == other.squares_ || *squares_ == *other.squares_) && tables_ == other.tables_;
}

namespace {

using Lookups = detail::SquareAlgebra;
using detail::OptObj;
using detail::OptSq;
using detail::str;

void vertical_layer(const DoubleCategory& D, LawReport& r) { r.merge(validate_category(D.vertical())); }

void twosided_layer(const DoubleCategory& D, LawReport& r) { r.merge(validate_twosided(D.squares())); }

void hid_layer(const Lookups& L, LawReport& r) {
  const auto otyping = r.law("hid.obj_typing");
  const auto styping = r.law("hid.sq_typing");
  const auto pid = r.law("hid.preserves_id");
  const auto pcomp = r.law("hid.preserves_comp");
  const FinCategory& V = L.V;
  for (std::uint32_t x = 0; x < V.object_count(); ++x) {
    const auto& o = L.d.object(L.D.hid(ObjId{x}));
    if (o.x1.v == x && o.x2.v == x) {
      r.pass(otyping);
    } else {
      r.fail(otyping, {x}, "hid(x) does not go from x to x", FailureKind::Boundary);
    }
  }
  for (std::uint32_t v = 0; v < V.morphism_count(); ++v) {
    const MorId m{v};
    L.check_boundary(r, styping, {v}, L.D.hid_sq(m),
                     DispMorphism{m, m, L.D.hid(V.src(m)), L.D.hid(V.tgt(m))}, "hid square");
  }
  for (std::uint32_t x = 0; x < V.object_count(); ++x) {
    L.compare(r, pid, {x}, L.D.hid_sq(V.id(ObjId{x})), L.d.id(L.D.hid(ObjId{x})));
  }
  for (const auto& e : V.comp_entries()) {
    if (V.tgt(e.f) != V.src(e.g)) continue;
    L.compare(r, pcomp, {e.f.v, e.g.v}, L.D.hid_sq(e.fg), L.vc(L.D.hid_sq(e.f), L.D.hid_sq(e.g)));
  }
}

void hcomp_layer(const Lookups& L, LawReport& r) {
  const auto odomain = r.law("hcomp.obj_domain");
  const auto ototal = r.law("hcomp.obj_total");
  const auto otyping = r.law("hcomp.obj_typing");
  const auto sdomain = r.law("hcomp.sq_domain");
  const auto stotal = r.law("hcomp.sq_total");
  const auto styping = r.law("hcomp.sq_typing");
  const auto pid = r.law("hcomp.preserves_id");
  const auto inter = r.law("hcomp.interchange");
  const DoubleCategory& D = L.D;
  const TwoSidedDispCat& d = L.d;

  for (const auto& e : D.tables().hcomp_obj) {
    if (d.object(e.h).x2 != d.object(e.k).x1) {
      r.fail(odomain, {e.h.v, e.k.v}, "entry for non-adjacent horizontal morphisms", FailureKind::Boundary);
    } else {
      r.pass(odomain);
    }
  }
  for (std::uint32_t hi = 0; hi < d.object_count(); ++hi) {
    const DispObjId h{hi};
    for (DispObjId k : D.starting_at(d.object(h).x2)) {
      auto hk = D.hcomp(h, k);
      if (!hk) {
        r.fail(ototal, {h.v, k.v}, "adjacent pair without composite", FailureKind::Boundary);
        continue;
      }
      r.pass(ototal);
      const auto& o = d.object(*hk);
      if (o.x1 == d.object(h).x1 && o.x2 == d.object(k).x2) {
        r.pass(otyping);
      } else {
        r.fail(otyping, {h.v, k.v, hk->v}, "composite has the wrong endpoints", FailureKind::Boundary);
      }
    }
  }
  for (const auto& e : D.tables().hcomp_sq) {
    if (d.morphism(e.s).f2 != d.morphism(e.t).f1) {
      r.fail(sdomain, {e.s.v, e.t.v}, "entry for squares that are not horizontally adjacent", FailureKind::Boundary);
    } else {
      r.pass(sdomain);
    }
  }
  const auto nm = d.morphism_count();
  for (std::uint32_t si = 0; si < nm; ++si) {
    const DispMorId s{si};
    const auto& bs = d.morphism(s);
    for (DispMorId t : d.over_first(bs.f2)) {
      auto st = D.hcomp_sq(s, t);
      if (!st) {
        r.fail(stotal, {s.v, t.v}, "adjacent squares without composite", FailureKind::Boundary);
        continue;
      }
      r.pass(stotal);
      const auto& bt = d.morphism(t);
      auto top = L.ho(bs.src, bt.src);
      auto bottom = L.ho(bs.tgt, bt.tgt);
      std::optional<DispMorphism> want;
      if (top && bottom) want = DispMorphism{bs.f1, bt.f2, *top, *bottom};
      L.check_boundary(r, styping, {s.v, t.v}, *st, want, "composite square");
    }
  }
  for (std::uint32_t hi = 0; hi < d.object_count(); ++hi) {
    const DispObjId h{hi};
    for (DispObjId k : D.starting_at(d.object(h).x2)) {
      L.compare(r, pid, {h.v, k.v}, L.hc(d.id(h), d.id(k)), L.id(L.ho(h, k)));
    }
  }
  for (std::uint32_t si = 0; si < nm; ++si) {
    const DispMorId s1{si};
    const auto& b1 = d.morphism(s1);
    for (DispMorId s2 : d.over_first(b1.f2)) {
      const auto& b2 = d.morphism(s2);
      const auto top = L.hc(s1, s2);
      for (DispMorId t1 : d.out(b1.tgt)) {
        const MorId mid = d.morphism(t1).f2;
        const auto v1 = L.vc(s1, t1);
        for (DispMorId t2 : d.out(b2.tgt)) {
          if (d.morphism(t2).f1 != mid) continue;
          L.compare(r, inter, {s1.v, s2.v, t1.v, t2.v}, L.hc(v1, L.vc(s2, t2)), L.vc(top, L.hc(t1, t2)));
        }
      }
    }
  }
}

enum class Side { Left, Right };

void unitor_layer(const Lookups& L, LawReport& r, Side side) {
  const std::string prefix = side == Side::Left ? "lunitor." : "runitor.";
  const auto total = r.law(prefix + "total");
  const auto typing = r.law(prefix + "typing");
  const auto iso = r.law(prefix + "iso");
  const auto nat = r.law(prefix + "naturality");
  const DoubleCategory& D = L.D;
  const TwoSidedDispCat& d = L.d;
  const FinCategory& V = L.V;
  auto cell = [&](DispObjId h) { return side == Side::Left ? D.lunitor(h) : D.runitor(h); };
  // hid(x) (x) h  or  h (x) hid(y)
  auto padded = [&](DispObjId h) {
    const auto& o = d.object(h);
    return side == Side::Left ? L.ho(D.hid(o.x1), h) : L.ho(h, D.hid(o.x2));
  };

  for (std::uint32_t hi = 0; hi < d.object_count(); ++hi) {
    const DispObjId h{hi};
    auto c = cell(h);
    if (!c) {
      r.fail(total, {hi}, "missing entry", FailureKind::Boundary);
      continue;
    }
    r.pass(total);
    const auto& o = d.object(h);
    auto p = padded(h);
    std::optional<DispMorphism> fwd;
    std::optional<DispMorphism> bwd;
    if (p) {
      fwd = DispMorphism{V.id(o.x1), V.id(o.x2), *p, h};
      bwd = DispMorphism{V.id(o.x1), V.id(o.x2), h, *p};
    }
    L.check_boundary(r, typing, {hi}, c->sq, fwd, "unitor square");
    L.check_boundary(r, typing, {hi}, c->inv, bwd, "unitor inverse");
    L.compare(r, iso, {hi}, L.vc(c->sq, c->inv), L.id(p));
    L.compare(r, iso, {hi}, L.vc(c->inv, c->sq), d.id(h));
  }
  for (std::uint32_t si = 0; si < d.morphism_count(); ++si) {
    const DispMorId s{si};
    const auto& bs = d.morphism(s);
    OptSq lhs;
    if (side == Side::Left) {
      lhs = L.vc(L.hc(D.hid_sq(bs.f1), s), L.lam(bs.tgt));
    } else {
      lhs = L.vc(L.hc(s, D.hid_sq(bs.f2)), L.rho(bs.tgt));
    }
    const OptSq rhs = L.vc(side == Side::Left ? L.lam(bs.src) : L.rho(bs.src), s);
    L.compare(r, nat, {si}, lhs, rhs);
  }
}

void associator_layer(const Lookups& L, LawReport& r) {
  const auto domain = r.law("associator.domain");
  const auto total = r.law("associator.total");
  const auto typing = r.law("associator.typing");
  const auto iso = r.law("associator.iso");
  const auto nat = r.law("associator.naturality");
  const DoubleCategory& D = L.D;
  const TwoSidedDispCat& d = L.d;
  const FinCategory& V = L.V;

  for (const auto& e : D.tables().associator) {
    if (d.object(e.h1).x2 != d.object(e.h2).x1 || d.object(e.h2).x2 != d.object(e.h3).x1) {
      r.fail(domain, {e.h1.v, e.h2.v, e.h3.v}, "entry for a non-composable triple", FailureKind::Boundary);
    } else {
      r.pass(domain);
    }
  }
  for (std::uint32_t i = 0; i < d.object_count(); ++i) {
    const DispObjId h1{i};
    for (DispObjId h2 : D.starting_at(d.object(h1).x2)) {
      for (DispObjId h3 : D.starting_at(d.object(h2).x2)) {
        std::vector<std::uint32_t> w{h1.v, h2.v, h3.v};
        auto c = D.associator(h1, h2, h3);
        if (!c) {
          r.fail(total, w, "missing entry", FailureKind::Boundary);
          continue;
        }
        r.pass(total);
        auto src = L.ho(h1, L.ho(h2, h3));
        auto tgt = L.ho(L.ho(h1, h2), h3);
        std::optional<DispMorphism> fwd;
        std::optional<DispMorphism> bwd;
        if (src && tgt) {
          const MorId i1 = V.id(d.object(h1).x1);
          const MorId i2 = V.id(d.object(h3).x2);
          fwd = DispMorphism{i1, i2, *src, *tgt};
          bwd = DispMorphism{i1, i2, *tgt, *src};
        }
        L.check_boundary(r, typing, w, c->sq, fwd, "associator square");
        L.check_boundary(r, typing, w, c->inv, bwd, "associator inverse");
        L.compare(r, iso, w, L.vc(c->sq, c->inv), L.id(src));
        L.compare(r, iso, w, L.vc(c->inv, c->sq), L.id(tgt));
      }
    }
  }
  for (std::uint32_t si = 0; si < d.morphism_count(); ++si) {
    const DispMorId s1{si};
    const auto& b1 = d.morphism(s1);
    for (DispMorId s2 : d.over_first(b1.f2)) {
      const auto& b2 = d.morphism(s2);
      for (DispMorId s3 : d.over_first(b2.f2)) {
        const auto& b3 = d.morphism(s3);
        const OptSq lhs = L.vc(L.hc(s1, L.hc(s2, s3)), L.alpha(b1.tgt, b2.tgt, b3.tgt));
        const OptSq rhs = L.vc(L.alpha(b1.src, b2.src, b3.src), L.hc(L.hc(s1, s2), s3));
        L.compare(r, nat, {s1.v, s2.v, s3.v}, lhs, rhs);
      }
    }
  }
}

void coherence_layer(const Lookups& L, LawReport& r) {
  const auto tri = r.law("coherence.triangle");
  const auto pent = r.law("coherence.pentagon");
  const DoubleCategory& D = L.D;
  const TwoSidedDispCat& d = L.d;
  for (std::uint32_t i = 0; i < d.object_count(); ++i) {
    const DispObjId h{i};
    const ObjId y = d.object(h).x2;
    const DispObjId e = D.hid(y);
    for (DispObjId k : D.starting_at(y)) {
      const OptSq lhs = L.hc(d.id(h), L.lam(k));
      const OptSq rhs = L.vc(L.alpha(h, e, k), L.hc(L.rho(h), d.id(k)));
      L.compare(r, tri, {h.v, k.v}, lhs, rhs);
    }
  }
  for (std::uint32_t i = 0; i < d.object_count(); ++i) {
    const DispObjId h1{i};
    for (DispObjId h2 : D.starting_at(d.object(h1).x2)) {
      const OptObj h12 = L.ho(h1, h2);
      for (DispObjId h3 : D.starting_at(d.object(h2).x2)) {
        const OptObj h23 = L.ho(h2, h3);
        const OptSq a123 = L.alpha(h1, h2, h3);
        for (DispObjId h4 : D.starting_at(d.object(h3).x2)) {
          const OptObj h34 = L.ho(h3, h4);
          const OptSq lhs = L.vc(L.alpha(h1, h2, h34), L.alpha(h12, h3, h4));
          const OptSq rhs = L.vc(L.vc(L.hc(d.id(h1), L.alpha(h2, h3, h4)), L.alpha(h1, h23, h4)),
                                 L.hc(a123, d.id(h4)));
          L.compare(r, pent, {h1.v, h2.v, h3.v, h4.v}, lhs, rhs);
        }
      }
    }
  }
}

}  // namespace

LawReport validate_double_category(const DoubleCategory& D, const ValidateOptions& options) {
  LawReport r;
  const Lookups L{D, D.squares(), D.vertical()};
  auto stop = [&] { return options.fail_fast && !r.empty(); };
  vertical_layer(D, r);
  if (stop()) return r;
  twosided_layer(D, r);
  if (stop()) return r;
  hid_layer(L, r);
  if (stop()) return r;
  hcomp_layer(L, r);
  if (stop()) return r;
  unitor_layer(L, r, Side::Left);
  if (stop()) return r;
  unitor_layer(L, r, Side::Right);
  if (stop()) return r;
  associator_layer(L, r);
  if (stop()) return r;
  coherence_layer(L, r);
  return r;
}

Verdict is_strict(const DoubleCategory& D) {
  const TwoSidedDispCat& d = D.squares();
  for (std::uint32_t i = 0; i < d.object_count(); ++i) {
    const DispObjId h{i};
    const auto& o = d.object(h);
    auto l = D.lunitor(h);
    if (D.hcomp(D.hid(o.x1), h) != h || !l || l->sq != d.id(h) || l->inv != d.id(h)) {
      return Verdict::no("lunitor", {i}, "left unitor at horizontal morphism " + str(i) + " is not an identity");
    }
    auto r = D.runitor(h);
    if (D.hcomp(h, D.hid(o.x2)) != h || !r || r->sq != d.id(h) || r->inv != d.id(h)) {
      return Verdict::no("runitor", {i}, "right unitor at horizontal morphism " + str(i) + " is not an identity");
    }
  }
  for (std::uint32_t i = 0; i < d.object_count(); ++i) {
    const DispObjId h1{i};
    for (DispObjId h2 : D.starting_at(d.object(h1).x2)) {
      for (DispObjId h3 : D.starting_at(d.object(h2).x2)) {
        auto h23 = D.hcomp(h2, h3);
        auto h12 = D.hcomp(h1, h2);
        auto lhs = h23 ? D.hcomp(h1, *h23) : std::nullopt;
        auto rhs = h12 ? D.hcomp(*h12, h3) : std::nullopt;
        auto a = D.associator(h1, h2, h3);
        if (!lhs || lhs != rhs || !a || a->sq != d.id(*lhs) || a->inv != d.id(*lhs)) {
          return Verdict::no("associator", {h1.v, h2.v, h3.v},
                             "associator at (" + str(h1.v) + ", " + str(h2.v) + ", " + str(h3.v) +
                                 ") is not an identity");
        }
      }
    }
  }
  return Verdict::yes();
}

Verdict check_univalent_double(const DoubleCategory& D) {
  if (Verdict v = is_gaunt(D.vertical()); !v) {
    v.clause = "vertical." + v.clause;
    return v;
  }
  if (Verdict v = is_univalent_twosided(D.squares()); !v) {
    v.clause = "squares." + v.clause;
    return v;
  }
  return Verdict::yes();
}

DispObjId hcomp(const DoubleCategory& D, DispObjId h, DispObjId k) {
  const auto n = D.horizontal_count();
  if (h.v >= n || k.v >= n) throw Error(ErrorKind::IndexOutOfRange, "horizontal morphism id outside the table");
  const auto& oh = D.squares().object(h);
  const auto& ok = D.squares().object(k);
  if (oh.x2 != ok.x1) {
    throw Error(ErrorKind::NotComposable, "horizontal morphism " + str(h.v) + " ends at object " + str(oh.x2.v) +
                                              " but " + str(k.v) + " starts at object " + str(ok.x1.v));
  }
  auto hk = D.hcomp(h, k);
  if (!hk) throw Error(ErrorKind::NotComposable, "no composite listed for " + str(h.v) + " and " + str(k.v));
  return *hk;
}

DispMorId hcomp_sq(const DoubleCategory& D, DispMorId s, DispMorId t) {
  const auto n = D.square_count();
  if (s.v >= n || t.v >= n) throw Error(ErrorKind::IndexOutOfRange, "square id outside the table");
  const auto& bs = D.squares().morphism(s);
  const auto& bt = D.squares().morphism(t);
  if (bs.f2 != bt.f1) {
    throw Error(ErrorKind::NotComposable, "right side of square " + str(s.v) + " is vertical morphism " +
                                              str(bs.f2.v) + " but left side of square " + str(t.v) + " is " +
                                              str(bt.f1.v));
  }
  auto st = D.hcomp_sq(s, t);
  if (!st) throw Error(ErrorKind::NotComposable, "no composite listed for squares " + str(s.v) + " and " + str(t.v));
  return *st;
}

DispMorId vcomp_sq(const DoubleCategory& D, DispMorId s, DispMorId t) { return D.squares().then(s, t); }

DoubleCategory assemble_double(TwoSidedPtr squares, const HorizontalStructure& H) {
  const TwoSidedDispCat& d = *squares;
  const FinCategory& V = d.base1();
  DoubleTables t;
  for (std::uint32_t x = 0; x < V.object_count(); ++x) t.hid_obj.push_back(H.hid(ObjId{x}));
  for (std::uint32_t v = 0; v < V.morphism_count(); ++v) t.hid_sq.push_back(H.hid_sq(MorId{v}));
  std::vector<std::vector<DispObjId>> from(V.object_count());
  for (std::uint32_t h = 0; h < d.object_count(); ++h) from[d.object(DispObjId{h}).x1.v].push_back(DispObjId{h});
  for (std::uint32_t hi = 0; hi < d.object_count(); ++hi) {
    const DispObjId h{hi};
    t.lunitor.push_back({h, H.lunitor(h)});
    t.runitor.push_back({h, H.runitor(h)});
    for (DispObjId k : from[d.object(h).x2.v]) {
      t.hcomp_obj.push_back({h, k, H.hcomp(h, k)});
      for (DispObjId l : from[d.object(k).x2.v]) t.associator.push_back({h, k, l, H.associator(h, k, l)});
    }
  }
  for (std::uint32_t si = 0; si < d.morphism_count(); ++si) {
    const DispMorId s{si};
    for (DispMorId u : d.over_first(d.morphism(s).f2)) t.hcomp_sq.push_back({s, u, H.hcomp_sq(s, u)});
  }
  return DoubleCategory(std::move(squares), std::move(t));
}

UnfoldedDoubleCat to_unfolded(const DoubleCategory& D) {
  if (LawReport r = validate_double_category(D, {true}); !r.empty()) {
    throw Error(ErrorKind::LawViolation, "double category fails its law suite: " + r.violations().front().law);
  }
  const TwoSidedDispCat& d = D.squares();
  const DoubleTables& t = D.tables();
  UnfoldedDoubleCat u{D.vertical(), {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  for (const auto& o : d.objects()) u.horizontal.push_back({o.x1, o.x2});
  for (std::uint32_t x = 0; x < t.hid_obj.size(); ++x) u.hor_identity.emplace(ObjId{x}, t.hid_obj[x]);
  for (const auto& e : t.hcomp_obj) u.hor_composition.emplace(std::make_pair(e.h, e.k), e.hk);
  for (const auto& m : d.morphisms()) u.squares.push_back({m.src, m.tgt, m.f1, m.f2});
  for (std::uint32_t h = 0; h < d.object_count(); ++h) u.sq_vertical_identity.emplace(DispObjId{h}, d.id(DispObjId{h}));
  for (const auto& e : d.comp_entries()) u.sq_vertical_composition.emplace(std::make_pair(e.f, e.g), e.fg);
  for (std::uint32_t v = 0; v < t.hid_sq.size(); ++v) u.sq_horizontal_identity.emplace(MorId{v}, t.hid_sq[v]);
  for (const auto& e : t.hcomp_sq) u.sq_horizontal_composition.emplace(std::make_pair(e.s, e.t), e.st);
  for (const auto& e : t.lunitor) u.left_unitor.emplace(e.h, e.cell);
  for (const auto& e : t.runitor) u.right_unitor.emplace(e.h, e.cell);
  for (const auto& e : t.associator) u.associator.emplace(std::array{e.h1, e.h2, e.h3}, e.cell);
  return u;
}

DoubleCategory from_unfolded(const UnfoldedDoubleCat& u) {
  auto v = std::make_shared<FinCategory>(u.vertical);
  std::vector<DispObject> objects;
  for (const auto& h : u.horizontal) objects.push_back({h.src, h.tgt});
  std::vector<DispMorphism> morphisms;
  for (const auto& s : u.squares) morphisms.push_back({s.left, s.right, s.top, s.bottom});
  std::vector<DispMorId> ids(objects.size(), DispMorId{kNone});
  for (const auto& [h, s] : u.sq_vertical_identity) {
    if (h.v >= ids.size()) throw Error(ErrorKind::IndexOutOfRange, "vertical identity for a missing morphism");
    ids[h.v] = s;
  }
  std::vector<DispCompEntry> comp;
  for (const auto& [k, s] : u.sq_vertical_composition) comp.push_back({k.first, k.second, s});
  auto squares = std::make_shared<TwoSidedDispCat>(v, v, std::move(objects), std::move(morphisms), std::move(ids),
                                                   std::move(comp));
  DoubleTables t;
  t.hid_obj.assign(v->object_count(), DispObjId{kNone});
  for (const auto& [x, h] : u.hor_identity) {
    if (x.v >= t.hid_obj.size()) throw Error(ErrorKind::IndexOutOfRange, "horizontal identity for a missing object");
    t.hid_obj[x.v] = h;
  }
  t.hid_sq.assign(v->morphism_count(), DispMorId{kNone});
  for (const auto& [m, s] : u.sq_horizontal_identity) {
    if (m.v >= t.hid_sq.size()) throw Error(ErrorKind::IndexOutOfRange, "horizontal identity square for a missing morphism");
    t.hid_sq[m.v] = s;
  }
  for (const auto& [k, h] : u.hor_composition) t.hcomp_obj.push_back({k.first, k.second, h});
  for (const auto& [k, s] : u.sq_horizontal_composition) t.hcomp_sq.push_back({k.first, k.second, s});
  for (const auto& [h, c] : u.left_unitor) t.lunitor.push_back({h, c});
  for (const auto& [h, c] : u.right_unitor) t.runitor.push_back({h, c});
  for (const auto& [k, c] : u.associator) t.associator.push_back({k[0], k[1], k[2], c});
  DoubleCategory D(std::move(squares), std::move(t));
  if (LawReport r = validate_double_category(D, {true}); !r.empty()) {
    throw Error(ErrorKind::LawViolation, "unfolded data fails the law suite: " + r.violations().front().law);
  }
  return D;
}

std::array<bool, UnfoldedDoubleCat::kTableCount> compare_tables(const UnfoldedDoubleCat& a,
                                                                const UnfoldedDoubleCat& b) {
  return {a.vertical == b.vertical,
          a.horizontal == b.horizontal,
          a.hor_identity == b.hor_identity,
          a.hor_composition == b.hor_composition,
          a.squares == b.squares,
          a.sq_vertical_identity == b.sq_vertical_identity,
          a.sq_vertical_composition == b.sq_vertical_composition,
          a.sq_horizontal_identity == b.sq_horizontal_identity,
          a.sq_horizontal_composition == b.sq_horizontal_composition,
          a.left_unitor == b.left_unitor,
          a.right_unitor == b.right_unitor,
          a.associator == b.associator};
}

}  // namespace dblcat
