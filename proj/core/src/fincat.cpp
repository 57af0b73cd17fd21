#include "dblcat/fincat.hpp"

#include <algorithm>
#include <string>

#include "dblcat/error.hpp"

namespace dblcat {

namespace {

std::string mor_str(MorId f) { return "#" + std::to_string(f.v); }

}  // namespace

FinCategory::FinCategory(std::uint32_t object_count, std::vector<Arrow> morphisms, std::vector<MorId> identity,
                         std::vector<CompEntry> comp)
    : object_count_(object_count),
      morphisms_(std::move(morphisms)),
      identity_(std::move(identity)),
      comp_(std::move(comp)) {
  const auto n = morphism_count();
  for (std::uint32_t i = 0; i < n; ++i) {
    if (morphisms_[i].src.v >= object_count_ || morphisms_[i].tgt.v >= object_count_) {
      throw Error(ErrorKind::IndexOutOfRange, "morphism " + std::to_string(i) + " has an endpoint outside the objects");
    }
  }
  if (identity_.size() != object_count_) {
    throw Error(ErrorKind::IndexOutOfRange, "identity table has " + std::to_string(identity_.size()) +
                                                " entries for " + std::to_string(object_count_) + " objects");
  }
  for (std::uint32_t x = 0; x < object_count_; ++x) {
    if (identity_[x].v >= n) throw Error(ErrorKind::IndexOutOfRange, "identity of object " + std::to_string(x));
  }
  std::sort(comp_.begin(), comp_.end());
  table_ = detail::PairTable(n, n);
  for (const auto& e : comp_) {
    if (e.f.v >= n || e.g.v >= n || e.fg.v >= n) {
      throw Error(ErrorKind::IndexOutOfRange,
                  "composition entry (" + std::to_string(e.f.v) + ", " + std::to_string(e.g.v) + ")");
    }
    if (!table_.insert(e.f.v, e.g.v, e.fg.v)) {
      throw Error(ErrorKind::DuplicateEntry,
                  "composition entry (" + std::to_string(e.f.v) + ", " + std::to_string(e.g.v) + ") listed twice");
    }
  }
  hom_.assign(static_cast<std::size_t>(object_count_) * object_count_, {});
  out_.assign(object_count_, {});
  in_.assign(object_count_, {});
  for (std::uint32_t i = 0; i < n; ++i) {
    const auto& a = morphisms_[i];
    hom_[a.src.v * object_count_ + a.tgt.v].push_back(MorId{i});
    out_[a.src.v].push_back(MorId{i});
    in_[a.tgt.v].push_back(MorId{i});
  }
}

std::optional<MorId> FinCategory::compose(MorId f, MorId g) const {
  auto v = table_.get(f.v, g.v);
  if (!v) return std::nullopt;
  return MorId{*v};
}

MorId FinCategory::then(MorId f, MorId g) const {
  if (f.v >= morphism_count() || g.v >= morphism_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "morphism id outside the category");
  }
  if (tgt(f) != src(g)) {
    throw Error(ErrorKind::NotComposable, "target of " + mor_str(f) + " is object " + std::to_string(tgt(f).v) +
                                              " but source of " + mor_str(g) + " is object " +
                                              std::to_string(src(g).v));
  }
  auto fg = compose(f, g);
  if (!fg) throw Error(ErrorKind::NotComposable, "no composite listed for " + mor_str(f) + " then " + mor_str(g));
  return *fg;
}

bool FinCategory::operator==(const FinCategory& other) const {
  return object_count_ == other.object_count_ && morphisms_ == other.morphisms_ && identity_ == other.identity_ &&
         comp_ == other.comp_;
}

LawReport validate_category(const FinCategory& c) {
  LawReport r;
  const auto id_typing = r.law("category.identity_typing");
  const auto domain = r.law("category.compose_domain");
  const auto total = r.law("category.compose_total");
  const auto typing = r.law("category.compose_typing");
  const auto left = r.law("category.left_unit");
  const auto right = r.law("category.right_unit");
  const auto assoc = r.law("category.associativity");

  for (std::uint32_t x = 0; x < c.object_count(); ++x) {
    const MorId i = c.id(ObjId{x});
    if (c.src(i).v == x && c.tgt(i).v == x) {
      r.pass(id_typing);
    } else {
      r.fail(id_typing, {x, i.v}, "identity is not an endomorphism of its object");
    }
  }
  for (const auto& e : c.comp_entries()) {
    if (c.tgt(e.f) != c.src(e.g)) {
      r.fail(domain, {e.f.v, e.g.v}, "entry for a non-composable pair", FailureKind::Boundary);
    } else {
      r.pass(domain);
    }
  }
  // Composites whose typing is right, used to decide whether a law instance can be formed.
  auto typed = [&](MorId f, MorId g) -> std::optional<MorId> {
    if (c.tgt(f) != c.src(g)) return std::nullopt;
    auto fg = c.compose(f, g);
    if (!fg || c.src(*fg) != c.src(f) || c.tgt(*fg) != c.tgt(g)) return std::nullopt;
    return fg;
  };
  const auto n = c.morphism_count();
  for (std::uint32_t fi = 0; fi < n; ++fi) {
    const MorId f{fi};
    for (MorId g : c.out(c.tgt(f))) {
      auto fg = c.compose(f, g);
      if (!fg) {
        r.fail(total, {f.v, g.v}, "composable pair without composite", FailureKind::Boundary);
        continue;
      }
      r.pass(total);
      if (c.src(*fg) == c.src(f) && c.tgt(*fg) == c.tgt(g)) {
        r.pass(typing);
      } else {
        r.fail(typing, {f.v, g.v, fg->v}, "composite has the wrong endpoints", FailureKind::Boundary);
      }
    }
  }
  for (std::uint32_t fi = 0; fi < n; ++fi) {
    const MorId f{fi};
    const MorId il = c.id(c.src(f));
    const MorId ir = c.id(c.tgt(f));
    if (auto v = typed(il, f)) {
      if (*v == f) {
        r.pass(left);
      } else {
        r.fail(left, {il.v, f.v}, "id . f = " + mor_str(*v));
      }
    } else {
      r.fail(left, {il.v, f.v}, "id . f is not defined", FailureKind::Boundary);
    }
    if (auto v = typed(f, ir)) {
      if (*v == f) {
        r.pass(right);
      } else {
        r.fail(right, {f.v, ir.v}, "f . id = " + mor_str(*v));
      }
    } else {
      r.fail(right, {f.v, ir.v}, "f . id is not defined", FailureKind::Boundary);
    }
  }
  for (std::uint32_t fi = 0; fi < n; ++fi) {
    const MorId f{fi};
    for (MorId g : c.out(c.tgt(f))) {
      for (MorId h : c.out(c.tgt(g))) {
        auto fg = typed(f, g);
        auto gh = typed(g, h);
        std::optional<MorId> lhs = fg ? typed(*fg, h) : std::nullopt;
        std::optional<MorId> rhs = gh ? typed(f, *gh) : std::nullopt;
        if (!lhs || !rhs) {
          r.fail(assoc, {f.v, g.v, h.v}, "a composite is undefined", FailureKind::Boundary);
        } else if (*lhs != *rhs) {
          r.fail(assoc, {f.v, g.v, h.v}, "(f.g).h = " + mor_str(*lhs) + " but f.(g.h) = " + mor_str(*rhs));
        } else {
          r.pass(assoc);
        }
      }
    }
  }
  return r;
}

std::optional<MorId> find_inverse(const FinCategory& c, MorId f) {
  if (f.v >= c.morphism_count()) throw Error(ErrorKind::IndexOutOfRange, "morphism " + std::to_string(f.v));
  const ObjId x = c.src(f);
  const ObjId y = c.tgt(f);
  for (MorId g : c.hom(y, x)) {
    if (c.compose(f, g) == c.id(x) && c.compose(g, f) == c.id(y)) return g;
  }
  return std::nullopt;
}

Verdict is_gaunt(const FinCategory& c) {
  for (std::uint32_t fi = 0; fi < c.morphism_count(); ++fi) {
    const MorId f{fi};
    const ObjId x = c.src(f);
    if (c.tgt(f) == x && c.id(x) == f) continue;
    if (find_inverse(c, f)) {
      if (c.tgt(f) == x) {
        return Verdict::no("automorphism", {f.v}, "nonidentity automorphism of object " + std::to_string(x.v));
      }
      return Verdict::no("distinct_objects_isomorphic", {f.v},
                         "objects " + std::to_string(x.v) + " and " + std::to_string(c.tgt(f).v) + " are isomorphic");
    }
  }
  return Verdict::yes();
}

bool FinFunctor::operator==(const FinFunctor& other) const {
  const bool same_dom = dom == other.dom || (dom && other.dom && *dom == *other.dom);
  const bool same_cod = cod == other.cod || (cod && other.cod && *cod == *other.cod);
  return same_dom && same_cod && on_obj == other.on_obj && on_mor == other.on_mor;
}

void check_indices(const FinFunctor& f) {
  if (!f.dom || !f.cod) throw Error(ErrorKind::IndexOutOfRange, "functor without domain or codomain");
  if (f.on_obj.size() != f.dom->object_count() || f.on_mor.size() != f.dom->morphism_count()) {
    throw Error(ErrorKind::IndexOutOfRange, "functor tables do not match the domain size");
  }
  for (auto x : f.on_obj) {
    if (x.v >= f.cod->object_count()) throw Error(ErrorKind::IndexOutOfRange, "object image outside codomain");
  }
  for (auto m : f.on_mor) {
    if (m.v >= f.cod->morphism_count()) throw Error(ErrorKind::IndexOutOfRange, "morphism image outside codomain");
  }
}

LawReport validate_functor(const FinFunctor& F) {
  check_indices(F);
  LawReport r;
  const auto typing = r.law("functor.typing");
  const auto pid = r.law("functor.preserves_id");
  const auto pcomp = r.law("functor.preserves_comp");
  const FinCategory& C = *F.dom;
  const FinCategory& D = *F.cod;
  for (std::uint32_t fi = 0; fi < C.morphism_count(); ++fi) {
    const MorId f{fi};
    if (D.src(F(f)) == F(C.src(f)) && D.tgt(F(f)) == F(C.tgt(f))) {
      r.pass(typing);
    } else {
      r.fail(typing, {f.v, F(f).v}, "image has the wrong endpoints", FailureKind::Boundary);
    }
  }
  for (std::uint32_t x = 0; x < C.object_count(); ++x) {
    if (F(C.id(ObjId{x})) == D.id(F(ObjId{x}))) {
      r.pass(pid);
    } else {
      r.fail(pid, {x}, "F id is not the identity");
    }
  }
  for (const auto& e : C.comp_entries()) {
    if (C.tgt(e.f) != C.src(e.g)) continue;
    auto img = D.compose(F(e.f), F(e.g));
    if (!img || D.tgt(F(e.f)) != D.src(F(e.g))) {
      r.fail(pcomp, {e.f.v, e.g.v}, "images are not composable", FailureKind::Boundary);
    } else if (*img != F(e.fg)) {
      r.fail(pcomp, {e.f.v, e.g.v}, "F(f.g) differs from F f . F g");
    } else {
      r.pass(pcomp);
    }
  }
  return r;
}

FinFunctor identity_functor(CategoryPtr c) {
  FinFunctor f{c, c, {}, {}};
  for (std::uint32_t x = 0; x < c->object_count(); ++x) f.on_obj.push_back(ObjId{x});
  for (std::uint32_t m = 0; m < c->morphism_count(); ++m) f.on_mor.push_back(MorId{m});
  return f;
}

FinFunctor compose(const FinFunctor& f, const FinFunctor& g) {
  if (!(f.cod == g.dom || (f.cod && g.dom && *f.cod == *g.dom))) {
    throw Error(ErrorKind::BoundaryMismatch, "codomain of the first functor is not the domain of the second");
  }
  FinFunctor h{f.dom, g.cod, {}, {}};
  for (auto x : f.on_obj) h.on_obj.push_back(g(x));
  for (auto m : f.on_mor) h.on_mor.push_back(g(m));
  return h;
}

Verdict is_equivalence(const FinFunctor& F) {
  check_indices(F);
  const FinCategory& C = *F.dom;
  const FinCategory& D = *F.cod;
  for (std::uint32_t x = 0; x < C.object_count(); ++x) {
    for (std::uint32_t y = 0; y < C.object_count(); ++y) {
      const auto& src_hom = C.hom(ObjId{x}, ObjId{y});
      const auto& dst_hom = D.hom(F(ObjId{x}), F(ObjId{y}));
      std::vector<bool> hit(D.morphism_count(), false);
      bool injective = true;
      for (MorId f : src_hom) {
        if (hit[F(f).v]) injective = false;
        hit[F(f).v] = true;
      }
      if (!injective || src_hom.size() != dst_hom.size()) {
        return Verdict::no("fully_faithful", {x, y},
                           injective ? "hom map is not surjective" : "hom map is not injective");
      }
    }
  }
  for (std::uint32_t y = 0; y < D.object_count(); ++y) {
    bool reached = false;
    for (std::uint32_t x = 0; x < C.object_count() && !reached; ++x) {
      for (MorId f : D.hom(F(ObjId{x}), ObjId{y})) {
        if (find_inverse(D, f)) {
          reached = true;
          break;
        }
      }
    }
    if (!reached) {
      return Verdict::no("essentially_surjective", {y},
                         "object " + std::to_string(y) + " is not isomorphic to any image object");
    }
  }
  return Verdict::yes();
}

LawReport validate_nat_trans(const FinNatTrans& t) {
  if (!t.dom || !t.cod) throw Error(ErrorKind::IndexOutOfRange, "transformation without functors");
  check_indices(*t.dom);
  check_indices(*t.cod);
  const FinFunctor& F = *t.dom;
  const FinFunctor& G = *t.cod;
  const FinCategory& C = *F.dom;
  const FinCategory& D = *F.cod;
  if (t.component.size() != C.object_count()) throw Error(ErrorKind::IndexOutOfRange, "component table size");
  for (auto m : t.component) {
    if (m.v >= D.morphism_count()) throw Error(ErrorKind::IndexOutOfRange, "component outside codomain");
  }
  LawReport r;
  const auto typing = r.law("nat_trans.typing");
  const auto nat = r.law("nat_trans.naturality");
  for (std::uint32_t x = 0; x < C.object_count(); ++x) {
    const MorId c = t.component[x];
    if (D.src(c) == F(ObjId{x}) && D.tgt(c) == G(ObjId{x})) {
      r.pass(typing);
    } else {
      r.fail(typing, {x, c.v}, "component has the wrong endpoints", FailureKind::Boundary);
    }
  }
  for (std::uint32_t fi = 0; fi < C.morphism_count(); ++fi) {
    const MorId f{fi};
    auto lhs = D.compose(F(f), t.component[C.tgt(f).v]);
    auto rhs = D.compose(t.component[C.src(f).v], G(f));
    if (!lhs || !rhs) {
      r.fail(nat, {f.v}, "a side of the naturality square is undefined", FailureKind::Boundary);
    } else if (*lhs != *rhs) {
      r.fail(nat, {f.v}, "naturality square does not commute");
    } else {
      r.pass(nat);
    }
  }
  return r;
}

namespace {

// Category of a preorder given its (already transitive, reflexive) relation; one morphism per related pair.
FinCategory thin_category(const std::vector<std::vector<bool>>& leq) {
  const auto n = static_cast<std::uint32_t>(leq.size());
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::uint32_t>> index(n, std::vector<std::uint32_t>(n, kNone));
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (leq[x][y]) {
        index[x][y] = static_cast<std::uint32_t>(arrows.size());
        arrows.push_back({ObjId{x}, ObjId{y}});
      }
    }
  }
  std::vector<MorId> ids;
  for (std::uint32_t x = 0; x < n; ++x) ids.push_back(MorId{index[x][x]});
  std::vector<CompEntry> comp;
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      if (!leq[x][y]) continue;
      for (std::uint32_t z = 0; z < n; ++z) {
        if (leq[y][z]) comp.push_back({MorId{index[x][y]}, MorId{index[y][z]}, MorId{index[x][z]}});
      }
    }
  }
  return FinCategory(n, std::move(arrows), std::move(ids), std::move(comp));
}

}  // namespace

FinCategory terminal_category() { return discrete_category(1); }

FinCategory discrete_category(std::uint32_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::uint32_t i = 0; i < n; ++i) leq[i][i] = true;
  return thin_category(leq);
}

FinCategory walking_arrow() { return chain_category(2); }

FinCategory contractible_groupoid(std::uint32_t n) {
  return thin_category(std::vector<std::vector<bool>>(n, std::vector<bool>(n, true)));
}

FinCategory poset_category(const std::vector<std::vector<bool>>& leq) {
  const auto n = leq.size();
  for (const auto& row : leq) {
    if (row.size() != n) throw Error(ErrorKind::IndexOutOfRange, "order relation is not square");
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (!leq[x][x]) throw Error(ErrorKind::LawViolation, "order relation is not reflexive at " + std::to_string(x));
    for (std::size_t y = 0; y < n; ++y) {
      if (x != y && leq[x][y] && leq[y][x]) {
        throw Error(ErrorKind::LawViolation, "order relation is not antisymmetric at " + std::to_string(x) + ", " +
                                                 std::to_string(y));
      }
      for (std::size_t z = 0; z < n; ++z) {
        if (leq[x][y] && leq[y][z] && !leq[x][z]) {
          throw Error(ErrorKind::LawViolation, "order relation is not transitive at " + std::to_string(x) + ", " +
                                                   std::to_string(y) + ", " + std::to_string(z));
        }
      }
    }
  }
  return thin_category(leq);
}

FinCategory chain_category(std::uint32_t n) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i; j < n; ++j) leq[i][j] = true;
  }
  return thin_category(leq);
}

FinCategory monoid_category(const std::vector<std::vector<std::uint32_t>>& table) {
  const auto n = static_cast<std::uint32_t>(table.size());
  if (n == 0) throw Error(ErrorKind::LawViolation, "a monoid needs a unit element");
  std::vector<Arrow> arrows(n, Arrow{ObjId{0}, ObjId{0}});
  std::vector<CompEntry> comp;
  for (std::uint32_t a = 0; a < n; ++a) {
    if (table[a].size() != n) throw Error(ErrorKind::IndexOutOfRange, "monoid table is not square");
    for (std::uint32_t b = 0; b < n; ++b) {
      if (table[a][b] >= n) throw Error(ErrorKind::IndexOutOfRange, "monoid table entry outside the carrier");
      comp.push_back({MorId{a}, MorId{b}, MorId{table[a][b]}});
    }
  }
  return FinCategory(1, std::move(arrows), {MorId{0}}, std::move(comp));
}

std::vector<std::vector<bool>> order_relation(const FinCategory& c) {
  const auto n = c.object_count();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (const auto& a : c.morphisms()) leq[a.src.v][a.tgt.v] = true;
  return leq;
}

}  // namespace dblcat
