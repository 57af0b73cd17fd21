#include "dblcat/examples.hpp"

#include <map>
#include <string>

#include "dblcat/error.hpp"

namespace dblcat {

namespace {

std::string str(std::uint32_t v) { return std::to_string(v); }

std::string boundary_text(const DispMorphism& b) {
  return "(" + str(b.f1.v) + ", " + str(b.f2.v) + ") from " + str(b.src.v) + " to " + str(b.tgt.v);
}

// Squares are proofs: each structural square is the unique square with its boundary.
class ProofHorizontal : public HorizontalStructure {
 public:
  explicit ProofHorizontal(const TwoSidedDispCat& d) : d_(d) {}

  DispMorId hid_sq(MorId v) const override {
    const FinCategory& V = d_.base1();
    return unique({v, v, hid(V.src(v)), hid(V.tgt(v))});
  }
  DispMorId hcomp_sq(DispMorId s, DispMorId t) const override {
    const auto& bs = d_.morphism(s);
    const auto& bt = d_.morphism(t);
    return unique({bs.f1, bt.f2, hcomp(bs.src, bt.src), hcomp(bs.tgt, bt.tgt)});
  }
  StructuralSquare lunitor(DispObjId h) const override { return iso(hcomp(hid(d_.object(h).x1), h), h); }
  StructuralSquare runitor(DispObjId h) const override { return iso(hcomp(h, hid(d_.object(h).x2)), h); }
  StructuralSquare associator(DispObjId h1, DispObjId h2, DispObjId h3) const override {
    return iso(hcomp(h1, hcomp(h2, h3)), hcomp(hcomp(h1, h2), h3));
  }

 protected:
  DispMorId unique(const DispMorphism& b) const {
    const auto& found = d_.with_boundary(b);
    if (found.empty()) throw Error(ErrorKind::LawViolation, "no square with boundary " + boundary_text(b));
    return found.front();
  }
  StructuralSquare iso(DispObjId a, DispObjId b) const {
    const FinCategory& V = d_.base1();
    const MorId i1 = V.id(d_.object(a).x1);
    const MorId i2 = V.id(d_.object(a).x2);
    return {unique({i1, i2, a, b}), unique({i1, i2, b, a})};
  }

  const TwoSidedDispCat& d_;
};

class SquareHorizontal final : public ProofHorizontal {
 public:
  SquareHorizontal(const TwoSidedDispCat& d, const FinCategory& c, const std::vector<MorId>& arrow_of)
      : ProofHorizontal(d), c_(c), arrow_of_(arrow_of), of_morphism_(c.morphism_count(), DispObjId{kNone}) {
    for (std::uint32_t a = 0; a < arrow_of.size(); ++a) of_morphism_[arrow_of[a].v] = DispObjId{a};
  }
  DispObjId hid(ObjId x) const override { return of_morphism_[c_.id(x).v]; }
  DispObjId hcomp(DispObjId h, DispObjId k) const override {
    return of_morphism_[c_.then(arrow_of_[h.v], arrow_of_[k.v]).v];
  }

 private:
  const FinCategory& c_;
  const std::vector<MorId>& arrow_of_;
  std::vector<DispObjId> of_morphism_;
};

std::vector<std::uint64_t> widen(const FinMap& f) { return {f.img.begin(), f.img.end()}; }

std::uint64_t table_rank(const std::vector<std::uint64_t>& t, std::uint64_t base) {
  std::uint64_t r = 0;
  for (auto e : t) r = r * base + e;
  return r;
}

class KleisliHorizontal final : public ProofHorizontal {
 public:
  KleisliHorizontal(const TwoSidedDispCat& d, const Monad& t, const std::vector<std::vector<std::uint64_t>>& arrow,
                    const std::vector<std::vector<std::uint32_t>>& offset, const std::vector<std::uint64_t>& tsize)
      : ProofHorizontal(d), t_(t), arrow_(arrow), offset_(offset), tsize_(tsize) {}

  DispObjId hid(ObjId x) const override {
    std::vector<std::uint64_t> eta;
    for (std::uint32_t a = 0; a < x.v; ++a) eta.push_back(t_.unit(x.v, a));
    return lookup(x, x, eta);
  }
  DispObjId hcomp(DispObjId h, DispObjId k) const override {
    const ObjId x = d_.object(h).x1;
    const ObjId z = d_.object(k).x2;
    return lookup(x, z, kleisli_compose(t_, arrow_[h.v], arrow_[k.v], z.v));
  }

 private:
  DispObjId lookup(ObjId x, ObjId y, const std::vector<std::uint64_t>& table) const {
    return DispObjId{offset_[x.v][y.v] + static_cast<std::uint32_t>(table_rank(table, tsize_[y.v]))};
  }

  const Monad& t_;
  const std::vector<std::vector<std::uint64_t>>& arrow_;
  const std::vector<std::vector<std::uint32_t>>& offset_;
  const std::vector<std::uint64_t>& tsize_;
};

// Spans and cospans: squares carry a map of apexes, structural squares come from universal properties.
class ApexHorizontal : public HorizontalStructure {
 public:
  ApexHorizontal(const TwoSidedDispCat& d, const FinCategory& apexes, const SpanData& data, const ChosenLimits& lim)
      : d_(d), x_(apexes), data_(data), lim_(lim) {
    for (std::uint32_t a = 0; a < data.shape.size(); ++a) index_.emplace(data.shape[a], DispObjId{a});
  }

 protected:
  const SpanShape& shape(DispObjId h) const { return data_.shape[h.v]; }
  DispObjId object(const SpanShape& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) {
      throw Error(ErrorKind::LawViolation, "composite with apex " + str(s.apex.v) + " is not a listed horizontal morphism");
    }
    return it->second;
  }
  DispMorId square(MorId f1, MorId f2, DispObjId src, DispObjId tgt, MorId payload) const {
    const DispMorphism b{f1, f2, src, tgt};
    for (DispMorId s : d_.with_boundary(b)) {
      if (data_.apex_map[s.v] == payload) return s;
    }
    throw Error(ErrorKind::LawViolation,
                "no square with boundary " + boundary_text(b) + " and apex map " + str(payload.v));
  }
  // Square over identities with apex map u, and its inverse.
  StructuralSquare iso(DispObjId a, DispObjId b, MorId u) const {
    const FinCategory& V = d_.base1();
    const MorId i1 = V.id(d_.object(a).x1);
    const MorId i2 = V.id(d_.object(a).x2);
    auto inv = find_inverse(x_, u);
    if (!inv) throw Error(ErrorKind::LawViolation, "comparison map " + str(u.v) + " is not invertible");
    return {square(i1, i2, a, b, u), square(i1, i2, b, a, *inv)};
  }
  // Least u : from -> to with u . q = r for every (q, r).
  MorId mediate_into(ObjId from, ObjId to, const std::vector<std::pair<MorId, MorId>>& eqs) const {
    for (MorId u : x_.hom(from, to)) {
      bool ok = true;
      for (const auto& [q, r] : eqs) ok = ok && x_.compose(u, q) == r;
      if (ok) return u;
    }
    throw Error(ErrorKind::LawViolation, "no mediating map into the chosen pullback");
  }
  // Least u : from -> to with q . u = r for every (q, r).
  MorId mediate_out(ObjId from, ObjId to, const std::vector<std::pair<MorId, MorId>>& eqs) const {
    for (MorId u : x_.hom(from, to)) {
      bool ok = true;
      for (const auto& [q, r] : eqs) ok = ok && x_.compose(q, u) == r;
      if (ok) return u;
    }
    throw Error(ErrorKind::LawViolation, "no mediating map out of the chosen pushout");
  }
  MorId c(MorId f, MorId g) const { return x_.then(f, g); }

  const TwoSidedDispCat& d_;
  const FinCategory& x_;
  const SpanData& data_;
  const ChosenLimits& lim_;
  std::map<SpanShape, DispObjId> index_;
};

class SpanHorizontal final : public ApexHorizontal {
 public:
  using ApexHorizontal::ApexHorizontal;

  DispObjId hid(ObjId x) const override { return object({x, x_.id(x), x_.id(x)}); }
  DispMorId hid_sq(MorId v) const override {
    return square(v, v, hid(x_.src(v)), hid(x_.tgt(v)), v);
  }
  DispObjId hcomp(DispObjId h, DispObjId k) const override {
    const auto& sh = shape(h);
    const auto& sk = shape(k);
    const Cone& p = lim_.pullback(sh.right, sk.left);
    return object({p.apex, c(p.p1, sh.left), c(p.p2, sk.right)});
  }
  DispMorId hcomp_sq(DispMorId s, DispMorId t) const override {
    const auto& bs = d_.morphism(s);
    const auto& bt = d_.morphism(t);
    const Cone& p = lim_.pullback(shape(bs.src).right, shape(bt.src).left);
    const Cone& q = lim_.pullback(shape(bs.tgt).right, shape(bt.tgt).left);
    const MorId u = mediate_into(p.apex, q.apex,
                                 {{q.p1, c(p.p1, data_.apex_map[s.v])}, {q.p2, c(p.p2, data_.apex_map[t.v])}});
    return square(bs.f1, bt.f2, hcomp(bs.src, bt.src), hcomp(bs.tgt, bt.tgt), u);
  }
  StructuralSquare lunitor(DispObjId h) const override {
    const auto& sh = shape(h);
    const ObjId x = x_.tgt(sh.left);
    const Cone& p = lim_.pullback(x_.id(x), sh.left);
    return iso(hcomp(hid(x), h), h, p.p2);
  }
  StructuralSquare runitor(DispObjId h) const override {
    const auto& sh = shape(h);
    const ObjId y = x_.tgt(sh.right);
    const Cone& p = lim_.pullback(sh.right, x_.id(y));
    return iso(hcomp(h, hid(y)), h, p.p1);
  }
  StructuralSquare associator(DispObjId h1, DispObjId h2, DispObjId h3) const override {
    const auto& a = shape(h1);
    const auto& b = shape(h2);
    const auto& e = shape(h3);
    const Cone& q = lim_.pullback(b.right, e.left);
    const Cone& s = lim_.pullback(a.right, c(q.p1, b.left));
    const Cone& r = lim_.pullback(a.right, b.left);
    const Cone& t = lim_.pullback(c(r.p2, b.right), e.left);
    const MorId u = mediate_into(s.apex, t.apex,
                                 {{c(t.p1, r.p1), s.p1}, {c(t.p1, r.p2), c(s.p2, q.p1)}, {t.p2, c(s.p2, q.p2)}});
    return iso(hcomp(h1, hcomp(h2, h3)), hcomp(hcomp(h1, h2), h3), u);
  }
};

class CospanHorizontal final : public ApexHorizontal {
 public:
  CospanHorizontal(const TwoSidedDispCat& d, const FinFunctor& l, const SpanData& data, const ChosenLimits& lim)
      : ApexHorizontal(d, *l.cod, data, lim), l_(l) {}

  DispObjId hid(ObjId x) const override {
    const ObjId lx = l_(x);
    return object({lx, x_.id(lx), x_.id(lx)});
  }
  DispMorId hid_sq(MorId v) const override {
    const FinCategory& V = d_.base1();
    return square(v, v, hid(V.src(v)), hid(V.tgt(v)), l_(v));
  }
  DispObjId hcomp(DispObjId h, DispObjId k) const override {
    const auto& sh = shape(h);
    const auto& sk = shape(k);
    const Cone& p = lim_.pushout(sh.right, sk.left);
    return object({p.apex, c(sh.left, p.p1), c(sk.right, p.p2)});
  }
  DispMorId hcomp_sq(DispMorId s, DispMorId t) const override {
    const auto& bs = d_.morphism(s);
    const auto& bt = d_.morphism(t);
    const Cone& p = lim_.pushout(shape(bs.src).right, shape(bt.src).left);
    const Cone& q = lim_.pushout(shape(bs.tgt).right, shape(bt.tgt).left);
    const MorId u = mediate_out(p.apex, q.apex,
                                {{p.p1, c(data_.apex_map[s.v], q.p1)}, {p.p2, c(data_.apex_map[t.v], q.p2)}});
    return square(bs.f1, bt.f2, hcomp(bs.src, bt.src), hcomp(bs.tgt, bt.tgt), u);
  }
  StructuralSquare lunitor(DispObjId h) const override {
    const auto& sh = shape(h);
    const ObjId x = d_.object(h).x1;
    const Cone& p = lim_.pushout(x_.id(l_(x)), sh.left);
    auto u = find_inverse(x_, p.p2);
    if (!u) throw Error(ErrorKind::LawViolation, "pushout along an identity has a non-invertible leg");
    return iso(hcomp(hid(x), h), h, *u);
  }
  StructuralSquare runitor(DispObjId h) const override {
    const auto& sh = shape(h);
    const ObjId y = d_.object(h).x2;
    const Cone& p = lim_.pushout(sh.right, x_.id(l_(y)));
    auto u = find_inverse(x_, p.p1);
    if (!u) throw Error(ErrorKind::LawViolation, "pushout along an identity has a non-invertible leg");
    return iso(hcomp(h, hid(y)), h, *u);
  }
  StructuralSquare associator(DispObjId h1, DispObjId h2, DispObjId h3) const override {
    const auto& a = shape(h1);
    const auto& b = shape(h2);
    const auto& e = shape(h3);
    const Cone& q = lim_.pushout(b.right, e.left);
    const Cone& s = lim_.pushout(a.right, c(b.left, q.p1));
    const Cone& r = lim_.pushout(a.right, b.left);
    const Cone& t = lim_.pushout(c(b.right, r.p2), e.left);
    const MorId u = mediate_out(s.apex, t.apex,
                                {{s.p1, c(r.p1, t.p1)}, {c(q.p1, s.p2), c(r.p2, t.p1)}, {c(q.p2, s.p2), t.p2}});
    return iso(hcomp(h1, hcomp(h2, h3)), hcomp(hcomp(h1, h2), h3), u);
  }

 private:
  const FinFunctor& l_;
};

class LensHorizontal final : public ProofHorizontal {
 public:
  LensHorizontal(const TwoSidedDispCat& d, const FinSetCategory& c, const std::vector<Lens>& lens)
      : ProofHorizontal(d), c_(c) {
    for (std::uint32_t a = 0; a < lens.size(); ++a) index_.emplace(lens[a], DispObjId{a});
    lens_ = &lens;
  }

  DispObjId hid(ObjId x) const override {
    FinMap put{x.v, {}};
    for (std::uint32_t b = 0; b < x.v; ++b) {
      for (std::uint32_t a = 0; a < x.v; ++a) put.img.push_back(b);
    }
    return lookup({c_.category().id(x), std::move(put)});
  }
  DispObjId hcomp(DispObjId h, DispObjId k) const override {
    const Lens& l1 = (*lens_)[h.v];
    const Lens& l2 = (*lens_)[k.v];
    const std::uint32_t s = d_.object(h).x1.v;
    const std::uint32_t v = d_.object(h).x2.v;
    const std::uint32_t w = d_.object(k).x2.v;
    const FinMap& get1 = c_.map(l1.get);
    FinMap put{s, {}};
    for (std::uint32_t cw = 0; cw < w; ++cw) {
      for (std::uint32_t a = 0; a < s; ++a) {
        const std::uint32_t b = l2.put(cw * v + get1(a));
        put.img.push_back(l1.put(b * s + a));
      }
    }
    return lookup({c_.category().then(l1.get, l2.get), std::move(put)});
  }

 private:
  DispObjId lookup(const Lens& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) throw Error(ErrorKind::LawViolation, "composite lens violates the lens laws");
    return it->second;
  }

  const FinSetCategory& c_;
  const std::vector<Lens>* lens_;
  std::map<Lens, DispObjId> index_;
};

}  // namespace

DoubleCategory square_double_cat(CategoryPtr c) {
  const FinFunctor id = identity_functor(c);
  CommaData data = make_comma(id, id);
  SquareHorizontal h(*data.disp, *c, data.arrow_of);
  return assemble_double(data.disp, h);
}

KleisliData kleisli_double_cat_data(const FinSetCategory& c, const Monad& t, std::uint64_t max_per_pair) {
  if (LawReport r = validate_monad(t, c); !r.empty()) {
    const auto& v = r.violations().front();
    throw Error(ErrorKind::MonadLawViolation, t.name() + " fails " + v.law + ": " + v.detail);
  }
  const FinCategory& C = c.category();
  const std::uint32_t n = C.object_count();
  std::vector<std::uint64_t> tsize(n);
  for (std::uint32_t y = 0; y < n; ++y) {
    auto ty = t.carrier(y);
    if (!ty) throw Error(ErrorKind::ObjectOutOfBounds, "T " + str(y) + " is too large");
    tsize[y] = *ty;
  }
  DisplayedBuilder b(c.category_ptr(), c.category_ptr());
  KleisliData out;
  std::vector<std::vector<std::uint32_t>> offset(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t x = 0; x < n; ++x) {
    for (std::uint32_t y = 0; y < n; ++y) {
      std::uint64_t count = 1;
      for (std::uint32_t i = 0; i < x; ++i) {
        if (tsize[y] != 0 && count > max_per_pair / tsize[y]) {
          throw Error(ErrorKind::ObjectOutOfBounds, "more than " + std::to_string(max_per_pair) +
                                                        " horizontal morphisms from " + str(x) + " to " + str(y));
        }
        count *= tsize[y];
      }
      if (count > max_per_pair) {
        throw Error(ErrorKind::ObjectOutOfBounds, "more than " + std::to_string(max_per_pair) +
                                                      " horizontal morphisms from " + str(x) + " to " + str(y));
      }
      offset[x][y] = b.object_count();
      for (std::uint64_t r = 0; r < count; ++r) {
        std::vector<std::uint64_t> table(x);
        std::uint64_t rest = r;
        for (std::uint32_t i = x; i-- > 0;) {
          table[i] = rest % tsize[y];
          rest /= tsize[y];
        }
        b.add_object(ObjId{x}, ObjId{y});
        out.arrow.push_back(std::move(table));
      }
    }
  }
  std::vector<std::vector<std::uint64_t>> lifted(C.morphism_count());
  for (std::uint32_t g = 0; g < C.morphism_count(); ++g) {
    const FinMap& m = c.map(MorId{g});
    const auto wg = widen(m);
    for (std::uint64_t e = 0; e < tsize[m.dom()]; ++e) lifted[g].push_back(t.map(wg, m.cod, e));
  }
  const auto count = b.object_count();
  for (std::uint32_t a = 0; a < count; ++a) {
    const auto& oa = b.object(DispObjId{a});
    const auto& h = out.arrow[a];
    for (std::uint32_t k = 0; k < count; ++k) {
      const auto& ok = b.object(DispObjId{k});
      const auto& kt = out.arrow[k];
      for (MorId f : C.hom(oa.x1, ok.x1)) {
        const FinMap& fm = c.map(f);
        for (MorId g : C.hom(oa.x2, ok.x2)) {
          // h . T g = f . k
          bool commutes = true;
          for (std::uint32_t i = 0; i < oa.x1.v && commutes; ++i) commutes = lifted[g.v][h[i]] == kt[fm(i)];
          if (commutes) b.add_morphism(f, g, DispObjId{a}, DispObjId{k});
        }
      }
    }
  }
  auto disp = std::make_shared<TwoSidedDispCat>(b.finish());
  KleisliHorizontal hs(*disp, t, out.arrow, offset, tsize);
  out.dbl = std::make_shared<const DoubleCategory>(assemble_double(disp, hs));
  return out;
}

DoubleCategory kleisli_double_cat(const FinSetCategory& c, const Monad& t, std::uint64_t max_per_pair) {
  return *kleisli_double_cat_data(c, t, max_per_pair).dbl;
}

DoubleCategory spans_double_cat(CategoryPtr c, const ChosenLimits& limits) {
  if (!limits.has_pullbacks) throw Error(ErrorKind::PullbackUnavailable, "no chosen pullbacks supplied");
  SpanData data = make_spans_data(c);
  SpanHorizontal h(*data.disp, *c, data, limits);
  return assemble_double(data.disp, h);
}

DoubleCategory structured_cospans_double_cat(const FinFunctor& l, const ChosenLimits& limits) {
  if (!limits.has_pushouts) throw Error(ErrorKind::PushoutUnavailable, "no chosen pushouts supplied");
  SpanData data = make_struct_cospans_data(l);
  CospanHorizontal h(*data.disp, l, data, limits);
  return assemble_double(data.disp, h);
}

DoubleCategory lenses_double_cat(const FinSetCategory& c) {
  LensData data = make_lenses_data(c);
  LensHorizontal h(*data.disp, c, data.lens);
  return assemble_double(data.disp, h);
}

namespace {

std::vector<std::vector<bool>> closure(std::uint32_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& covers) {
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::uint32_t i = 0; i < n; ++i) leq[i][i] = true;
  for (const auto& [a, b] : covers) leq[a][b] = true;
  for (std::uint32_t k = 0; k < n; ++k) {
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
      }
    }
  }
  return leq;
}

}  // namespace

CategoryPtr named_poset(std::string_view name) {
  if (name == "chain3") return std::make_shared<const FinCategory>(chain_category(3));
  if (name == "poset4") return std::make_shared<const FinCategory>(poset_category(closure(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}})));
  // least element 0 below 1 and 2; 1 below 3 and 4
  if (name == "meet5") {
    return std::make_shared<const FinCategory>(poset_category(closure(5, {{0, 1}, {0, 2}, {1, 3}, {1, 4}})));
  }
  if (name == "join5") {
    return std::make_shared<const FinCategory>(poset_category(closure(5, {{1, 0}, {2, 0}, {3, 1}, {4, 1}})));
  }
  throw Error(ErrorKind::ParseError, "unknown poset '" + std::string(name) + "'");
}

std::vector<std::string> poset_names() { return {"chain3", "poset4", "meet5", "join5"}; }

}  // namespace dblcat
