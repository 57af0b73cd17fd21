#include "dblcat/finset.hpp"

#include <numeric>

namespace dblcat {

FinMap identity_map(std::uint32_t n) {
  FinMap f{n, std::vector<std::uint32_t>(n)};
  std::iota(f.img.begin(), f.img.end(), 0U);
  return f;
}

FinMap then(const FinMap& f, const FinMap& g) {
  if (f.cod != g.dom()) {
    throw Error(ErrorKind::NotComposable, "map into a set of size " + std::to_string(f.cod) +
                                              " followed by a map from a set of size " + std::to_string(g.dom()));
  }
  FinMap h{g.cod, {}};
  h.img.reserve(f.dom());
  for (auto a : f.img) h.img.push_back(g(a));
  return h;
}

bool is_injective(const FinMap& f) {
  std::vector<bool> seen(f.cod, false);
  for (auto b : f.img) {
    if (seen[b]) return false;
    seen[b] = true;
  }
  return true;
}

bool is_surjective(const FinMap& f) {
  std::vector<bool> seen(f.cod, false);
  for (auto b : f.img) seen[b] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

bool is_monotone(const FinMap& f) {
  for (std::size_t i = 1; i < f.img.size(); ++i) {
    if (f.img[i - 1] > f.img[i]) return false;
  }
  return true;
}

void check_map(const FinMap& f) {
  for (auto b : f.img) {
    if (b >= f.cod) throw Error(ErrorKind::IndexOutOfRange, "map image outside its codomain");
  }
}

FinSetObj<std::uint32_t> finset_range(std::uint32_t n) {
  std::vector<std::uint32_t> elems(n);
  std::iota(elems.begin(), elems.end(), 0U);
  return FinSetObj<std::uint32_t>(std::move(elems));
}

PullbackResult finset_pullback(const FinMap& f, const FinMap& g) {
  check_map(f);
  check_map(g);
  if (f.cod != g.cod) {
    throw Error(ErrorKind::CodomainMismatch, "pullback of maps into sets of sizes " + std::to_string(f.cod) + " and " +
                                                 std::to_string(g.cod));
  }
  std::vector<std::pair<std::uint32_t, std::uint32_t>> elems;
  PullbackResult out;
  out.p1.cod = f.dom();
  out.p2.cod = g.dom();
  for (std::uint32_t a = 0; a < f.dom(); ++a) {
    for (std::uint32_t b = 0; b < g.dom(); ++b) {
      if (f(a) == g(b)) {
        elems.emplace_back(a, b);
        out.p1.img.push_back(a);
        out.p2.img.push_back(b);
      }
    }
  }
  out.carrier = FinSetObj<std::pair<std::uint32_t, std::uint32_t>>(std::move(elems));
  return out;
}

namespace {

struct DisjointSet {
  std::vector<std::uint32_t> parent;

  explicit DisjointSet(std::uint32_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  // Keeps the smaller index as root, so roots are least members.
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) {
      parent[b] = a;
    } else {
      parent[a] = b;
    }
  }
};

}  // namespace

PushoutResult finset_pushout(const FinMap& f, const FinMap& g) {
  check_map(f);
  check_map(g);
  if (f.dom() != g.dom()) {
    throw Error(ErrorKind::DomainMismatch, "pushout of maps out of sets of sizes " + std::to_string(f.dom()) +
                                               " and " + std::to_string(g.dom()));
  }
  const std::uint32_t a = f.cod;
  const std::uint32_t b = g.cod;
  DisjointSet ds(a + b);
  for (std::uint32_t c = 0; c < f.dom(); ++c) ds.unite(f(c), a + g(c));

  std::vector<std::uint32_t> class_of(a + b, kNone);
  std::vector<std::vector<Tagged>> classes;
  for (std::uint32_t x = 0; x < a + b; ++x) {
    const std::uint32_t root = ds.find(x);
    if (class_of[root] == kNone) {
      class_of[root] = static_cast<std::uint32_t>(classes.size());
      classes.emplace_back();
    }
    class_of[x] = class_of[root];
    classes[class_of[x]].push_back(x < a ? Tagged{0, x} : Tagged{1, x - a});
  }
  PushoutResult out;
  const auto n = static_cast<std::uint32_t>(classes.size());
  out.i1.cod = n;
  out.i2.cod = n;
  for (std::uint32_t x = 0; x < a; ++x) out.i1.img.push_back(class_of[x]);
  for (std::uint32_t y = 0; y < b; ++y) out.i2.img.push_back(class_of[a + y]);
  out.carrier = FinSetObj<std::vector<Tagged>>(std::move(classes));
  return out;
}

std::uint64_t map_rank(const FinMap& f) {
  std::uint64_t r = 0;
  for (auto b : f.img) r = r * f.cod + b;
  return r;
}

FinMap map_unrank(std::uint64_t rank, std::uint32_t dom, std::uint32_t cod) {
  FinMap f{cod, std::vector<std::uint32_t>(dom, 0)};
  for (std::uint32_t i = dom; i-- > 0;) {
    f.img[i] = static_cast<std::uint32_t>(rank % cod);
    rank /= cod;
  }
  return f;
}

std::string_view to_string(MapClass cls) {
  switch (cls) {
    case MapClass::all: return "all";
    case MapClass::injective: return "injective";
    case MapClass::surjective: return "surjective";
    case MapClass::bijective: return "bijective";
    case MapClass::monotone: return "monotone";
  }
  return "all";
}

std::optional<MapClass> map_class_from_string(std::string_view name) {
  for (auto cls : {MapClass::all, MapClass::injective, MapClass::surjective, MapClass::bijective, MapClass::monotone}) {
    if (to_string(cls) == name) return cls;
  }
  return std::nullopt;
}

bool in_class(const FinMap& f, MapClass cls) {
  switch (cls) {
    case MapClass::all: return true;
    case MapClass::injective: return is_injective(f);
    case MapClass::surjective: return is_surjective(f);
    case MapClass::bijective: return is_injective(f) && is_surjective(f);
    case MapClass::monotone: return is_monotone(f);
  }
  return false;
}

namespace {

std::uint64_t count_maps(std::uint32_t dom, std::uint32_t cod) {
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < dom; ++i) n *= cod;
  return n;
}

}  // namespace

FinSetCategory::FinSetCategory(std::uint32_t max_size, MapClass cls) : max_size_(max_size), cls_(cls) {
  const std::uint32_t objects = max_size + 1;
  std::vector<Arrow> arrows;
  for (std::uint32_t d = 0; d < objects; ++d) {
    for (std::uint32_t c = 0; c < objects; ++c) {
      const std::uint64_t total = count_maps(d, c);
      for (std::uint64_t r = 0; r < total; ++r) {
        FinMap f = map_unrank(r, d, c);
        if (!in_class(f, cls)) continue;
        const MorId id{static_cast<std::uint32_t>(maps_.size())};
        index_.emplace(std::make_tuple(d, c, r), id);
        arrows.push_back({ObjId{d}, ObjId{c}});
        maps_.push_back(std::move(f));
      }
    }
  }
  std::vector<MorId> ids;
  for (std::uint32_t d = 0; d < objects; ++d) ids.push_back(*find(identity_map(d)));
  std::vector<CompEntry> comp;
  for (std::uint32_t fi = 0; fi < maps_.size(); ++fi) {
    for (std::uint32_t gi = 0; gi < maps_.size(); ++gi) {
      if (arrows[fi].tgt != arrows[gi].src) continue;
      auto fg = find(dblcat::then(maps_[fi], maps_[gi]));
      if (!fg) throw Error(ErrorKind::LawViolation, "map class is not closed under composition");
      comp.push_back({MorId{fi}, MorId{gi}, *fg});
    }
  }
  cat_ = std::make_shared<FinCategory>(objects, std::move(arrows), std::move(ids), std::move(comp));
}

std::optional<MorId> FinSetCategory::find(const FinMap& f) const {
  auto it = index_.find(std::make_tuple(f.dom(), f.cod, map_rank(f)));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ObjId FinSetCategory::object(std::uint32_t size) const {
  if (size > max_size_) {
    throw Error(ErrorKind::ObjectOutOfBounds, "a set of size " + std::to_string(size) +
                                                  " is above the carrier bound " + std::to_string(max_size_));
  }
  return ObjId{size};
}

FinSetCategory finset_skeleton(std::uint32_t n, std::uint32_t bound, MapClass cls) {
  if (n > bound) {
    throw Error(ErrorKind::ObjectOutOfBounds,
                "finite sets up to size " + std::to_string(n) + " exceed the carrier bound " + std::to_string(bound));
  }
  return FinSetCategory(n, cls);
}

const Cone& ChosenLimits::pullback(MorId f, MorId g) const {
  auto it = pullbacks.find({f.v, g.v});
  if (!has_pullbacks || it == pullbacks.end()) {
    throw Error(ErrorKind::PullbackUnavailable,
                "no chosen pullback for (" + std::to_string(f.v) + ", " + std::to_string(g.v) + ")");
  }
  return it->second;
}

const Cone& ChosenLimits::pushout(MorId f, MorId g) const {
  auto it = pushouts.find({f.v, g.v});
  if (!has_pushouts || it == pushouts.end()) {
    throw Error(ErrorKind::PushoutUnavailable,
                "no chosen pushout for (" + std::to_string(f.v) + ", " + std::to_string(g.v) + ")");
  }
  return it->second;
}

const Cone& ChosenLimits::product(ObjId x, ObjId y) const {
  auto it = products.find({x.v, y.v});
  if (!has_products || it == products.end()) {
    throw Error(ErrorKind::MissingProducts,
                "no chosen product for objects " + std::to_string(x.v) + " and " + std::to_string(y.v));
  }
  return it->second;
}

namespace {

bool same(const std::optional<MorId>& a, MorId b) { return a && *a == b; }

std::uint32_t count_mediating(const FinCategory& c, ObjId w, const Cone& cone, MorId q1, MorId q2, bool co) {
  std::uint32_t n = 0;
  if (!co) {
    for (MorId m : c.hom(w, cone.apex)) {
      if (same(c.compose(m, cone.p1), q1) && same(c.compose(m, cone.p2), q2)) ++n;
    }
  } else {
    for (MorId m : c.hom(cone.apex, w)) {
      if (same(c.compose(cone.p1, m), q1) && same(c.compose(cone.p2, m), q2)) ++n;
    }
  }
  return n;
}

}  // namespace

bool verify_pullback(const FinCategory& c, MorId f, MorId g, const Cone& cone) {
  const ObjId a = c.src(f);
  const ObjId b = c.src(g);
  if (c.tgt(f) != c.tgt(g)) return false;
  if (c.src(cone.p1) != cone.apex || c.src(cone.p2) != cone.apex || c.tgt(cone.p1) != a || c.tgt(cone.p2) != b) {
    return false;
  }
  if (c.compose(cone.p1, f) != c.compose(cone.p2, g)) return false;
  for (std::uint32_t wi = 0; wi < c.object_count(); ++wi) {
    const ObjId w{wi};
    for (MorId q1 : c.hom(w, a)) {
      for (MorId q2 : c.hom(w, b)) {
        if (c.compose(q1, f) != c.compose(q2, g)) continue;
        if (count_mediating(c, w, cone, q1, q2, false) != 1) return false;
      }
    }
  }
  return true;
}

bool verify_pushout(const FinCategory& c, MorId f, MorId g, const Cone& cocone) {
  const ObjId a = c.tgt(f);
  const ObjId b = c.tgt(g);
  if (c.src(f) != c.src(g)) return false;
  if (c.tgt(cocone.p1) != cocone.apex || c.tgt(cocone.p2) != cocone.apex || c.src(cocone.p1) != a ||
      c.src(cocone.p2) != b) {
    return false;
  }
  if (c.compose(f, cocone.p1) != c.compose(g, cocone.p2)) return false;
  for (std::uint32_t wi = 0; wi < c.object_count(); ++wi) {
    const ObjId w{wi};
    for (MorId q1 : c.hom(a, w)) {
      for (MorId q2 : c.hom(b, w)) {
        if (c.compose(f, q1) != c.compose(g, q2)) continue;
        if (count_mediating(c, w, cocone, q1, q2, true) != 1) return false;
      }
    }
  }
  return true;
}

bool verify_product(const FinCategory& c, ObjId x, ObjId y, const Cone& cone) {
  if (c.src(cone.p1) != cone.apex || c.src(cone.p2) != cone.apex || c.tgt(cone.p1) != x || c.tgt(cone.p2) != y) {
    return false;
  }
  for (std::uint32_t wi = 0; wi < c.object_count(); ++wi) {
    const ObjId w{wi};
    for (MorId q1 : c.hom(w, x)) {
      for (MorId q2 : c.hom(w, y)) {
        if (count_mediating(c, w, cone, q1, q2, false) != 1) return false;
      }
    }
  }
  return true;
}

ChosenLimits search_pullbacks(const FinCategory& c) {
  ChosenLimits out;
  out.has_pullbacks = true;
  for (std::uint32_t fi = 0; fi < c.morphism_count(); ++fi) {
    for (MorId g : c.in(c.tgt(MorId{fi}))) {
      const MorId f{fi};
      std::optional<Cone> found;
      for (std::uint32_t p = 0; p < c.object_count() && !found; ++p) {
        for (MorId p1 : c.hom(ObjId{p}, c.src(f))) {
          for (MorId p2 : c.hom(ObjId{p}, c.src(g))) {
            Cone cone{ObjId{p}, p1, p2};
            if (!found && verify_pullback(c, f, g, cone)) found = cone;
          }
        }
      }
      if (!found) {
        throw Error(ErrorKind::PullbackUnavailable,
                    "cospan (" + std::to_string(f.v) + ", " + std::to_string(g.v) + ") has no pullback");
      }
      out.pullbacks.emplace(std::make_pair(f.v, g.v), *found);
    }
  }
  return out;
}

ChosenLimits search_pushouts(const FinCategory& c) {
  ChosenLimits out;
  out.has_pushouts = true;
  for (std::uint32_t fi = 0; fi < c.morphism_count(); ++fi) {
    for (MorId g : c.out(c.src(MorId{fi}))) {
      const MorId f{fi};
      std::optional<Cone> found;
      for (std::uint32_t p = 0; p < c.object_count() && !found; ++p) {
        for (MorId i1 : c.hom(c.tgt(f), ObjId{p})) {
          for (MorId i2 : c.hom(c.tgt(g), ObjId{p})) {
            Cone cone{ObjId{p}, i1, i2};
            if (!found && verify_pushout(c, f, g, cone)) found = cone;
          }
        }
      }
      if (!found) {
        throw Error(ErrorKind::PushoutUnavailable,
                    "span (" + std::to_string(f.v) + ", " + std::to_string(g.v) + ") has no pushout");
      }
      out.pushouts.emplace(std::make_pair(f.v, g.v), *found);
    }
  }
  return out;
}

ChosenLimits search_products(const FinCategory& c) {
  ChosenLimits out;
  out.has_products = true;
  for (std::uint32_t x = 0; x < c.object_count(); ++x) {
    for (std::uint32_t y = 0; y < c.object_count(); ++y) {
      std::optional<Cone> found;
      for (std::uint32_t p = 0; p < c.object_count() && !found; ++p) {
        for (MorId p1 : c.hom(ObjId{p}, ObjId{x})) {
          for (MorId p2 : c.hom(ObjId{p}, ObjId{y})) {
            Cone cone{ObjId{p}, p1, p2};
            if (!found && verify_product(c, ObjId{x}, ObjId{y}, cone)) found = cone;
          }
        }
      }
      if (!found) {
        throw Error(ErrorKind::MissingProducts,
                    "objects " + std::to_string(x) + " and " + std::to_string(y) + " have no product");
      }
      out.products.emplace(std::make_pair(x, y), *found);
    }
  }
  return out;
}

ChosenLimits finset_pullbacks(const FinSetCategory& s) {
  const FinCategory& c = s.category();
  ChosenLimits out;
  out.has_pullbacks = true;
  for (std::uint32_t fi = 0; fi < c.morphism_count(); ++fi) {
    const MorId f{fi};
    for (MorId g : c.in(c.tgt(f))) {
      const PullbackResult pb = finset_pullback(s.map(f), s.map(g));
      const ObjId apex = s.object(pb.carrier.size());
      auto p1 = s.find(pb.p1);
      auto p2 = s.find(pb.p2);
      if (!p1 || !p2) {
        throw Error(ErrorKind::PullbackUnavailable, "pullback projection of (" + std::to_string(f.v) + ", " +
                                                        std::to_string(g.v) + ") is not a " +
                                                        std::string(to_string(s.map_class())) + " map");
      }
      out.pullbacks.emplace(std::make_pair(f.v, g.v), Cone{apex, *p1, *p2});
    }
  }
  return out;
}

ChosenLimits finset_pushouts(const FinSetCategory& s) {
  const FinCategory& c = s.category();
  ChosenLimits out;
  out.has_pushouts = true;
  for (std::uint32_t fi = 0; fi < c.morphism_count(); ++fi) {
    const MorId f{fi};
    for (MorId g : c.out(c.src(f))) {
      const PushoutResult po = finset_pushout(s.map(f), s.map(g));
      const ObjId apex = s.object(po.carrier.size());
      auto i1 = s.find(po.i1);
      auto i2 = s.find(po.i2);
      if (!i1 || !i2) {
        throw Error(ErrorKind::PushoutUnavailable, "pushout injection of (" + std::to_string(f.v) + ", " +
                                                       std::to_string(g.v) + ") is not a " +
                                                       std::string(to_string(s.map_class())) + " map");
      }
      out.pushouts.emplace(std::make_pair(f.v, g.v), Cone{apex, *i1, *i2});
    }
  }
  return out;
}

}  // namespace dblcat
