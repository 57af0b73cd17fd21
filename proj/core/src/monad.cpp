#include "dblcat/monad.hpp"

#include <bit>
#include <string>

#include "dblcat/error.hpp"

namespace dblcat {

std::optional<std::uint64_t> PowersetMonad::carrier(std::uint64_t n) const {
  if (n >= 64) return std::nullopt;
  return std::uint64_t{1} << n;
}

std::uint64_t PowersetMonad::map(const std::vector<std::uint64_t>& f, std::uint64_t cod, std::uint64_t t) const {
  if (f.size() > 64 || cod > 64) throw Error(ErrorKind::ObjectOutOfBounds, "powerset of a set with more than 64 elements");
  std::uint64_t out = 0;
  for (std::uint64_t rest = t; rest != 0; rest &= rest - 1) {
    const auto i = static_cast<std::size_t>(std::countr_zero(rest));
    if (i >= f.size()) throw Error(ErrorKind::IndexOutOfRange, "subset outside the domain");
    out |= std::uint64_t{1} << f[i];
  }
  return out;
}

std::uint64_t PowersetMonad::unit(std::uint64_t n, std::uint64_t a) const {
  if (n > 64 || a >= n) throw Error(ErrorKind::IndexOutOfRange, "unit outside the set");
  return std::uint64_t{1} << a;
}

std::uint64_t PowersetMonad::join(std::uint64_t n, std::uint64_t tt) const {
  if (n > 6) throw Error(ErrorKind::ObjectOutOfBounds, "double powerset too large to index");
  std::uint64_t out = 0;
  for (std::uint64_t rest = tt; rest != 0; rest &= rest - 1) out |= static_cast<std::uint64_t>(std::countr_zero(rest));
  return out;
}

std::uint64_t ExceptionMonad::map(const std::vector<std::uint64_t>& f, std::uint64_t cod, std::uint64_t t) const {
  if (t < f.size()) return f[t];
  return cod + (t - f.size());
}

std::uint64_t ExceptionMonad::join(std::uint64_t n, std::uint64_t tt) const {
  if (tt < n + exceptions_) return tt;
  return n + (tt - n - exceptions_);
}

std::uint64_t kleisli_extend(const Monad& t, const std::vector<std::uint64_t>& k, std::uint64_t z,
                             std::uint64_t elem) {
  auto tz = t.carrier(z);
  if (!tz) throw Error(ErrorKind::ObjectOutOfBounds, "carrier of T " + std::to_string(z) + " too large");
  return t.join(z, t.map(k, *tz, elem));
}

void kleisli_compose_into(const Monad& t, const std::vector<std::uint64_t>& h, const std::vector<std::uint64_t>& k,
                          std::uint64_t z, std::vector<std::uint64_t>& out) {
  auto tz = t.carrier(z);
  if (!tz) throw Error(ErrorKind::ObjectOutOfBounds, "carrier of T " + std::to_string(z) + " too large");
  out.resize(h.size());
  for (std::size_t a = 0; a < h.size(); ++a) out[a] = t.join(z, t.map(k, *tz, h[a]));
}

std::vector<std::uint64_t> kleisli_compose(const Monad& t, const std::vector<std::uint64_t>& h,
                                           const std::vector<std::uint64_t>& k, std::uint64_t z) {
  std::vector<std::uint64_t> out;
  kleisli_compose_into(t, h, k, z, out);
  return out;
}

namespace {

std::optional<std::uint64_t> small_carrier(const Monad& t, std::optional<std::uint64_t> n) {
  if (!n || *n > kMonadEnumerationCap) return std::nullopt;
  auto c = t.carrier(*n);
  if (!c || *c > kMonadEnumerationCap) return std::nullopt;
  return c;
}

std::vector<std::uint64_t> widen(const FinMap& f) { return {f.img.begin(), f.img.end()}; }

// T f as a table over T dom.
std::vector<std::uint64_t> lift(const Monad& t, const std::vector<std::uint64_t>& f, std::uint64_t cod,
                                std::uint64_t tdom) {
  std::vector<std::uint64_t> out(tdom);
  for (std::uint64_t e = 0; e < tdom; ++e) out[e] = t.map(f, cod, e);
  return out;
}

std::vector<std::uint64_t> unit_table(const Monad& t, std::uint64_t n) {
  std::vector<std::uint64_t> out(n);
  for (std::uint64_t a = 0; a < n; ++a) out[a] = t.unit(n, a);
  return out;
}

std::vector<std::uint64_t> join_table(const Monad& t, std::uint64_t n, std::uint64_t ttn) {
  std::vector<std::uint64_t> out(ttn);
  for (std::uint64_t e = 0; e < ttn; ++e) out[e] = t.join(n, e);
  return out;
}

}  // namespace

LawReport validate_monad(const Monad& t, const FinSetCategory& c) {
  LawReport r;
  const auto fid = r.law("monad.functor_id");
  const auto fcomp = r.law("monad.functor_comp");
  const auto unat = r.law("monad.unit_naturality");
  const auto jnat = r.law("monad.join_naturality");
  const auto uleft = r.law("monad.unit_left");
  const auto uright = r.law("monad.unit_right");
  const auto assoc = r.law("monad.associativity");
  const FinCategory& cat = c.category();

  auto wit = [](std::uint64_t a, std::uint64_t b) {
    return std::vector<std::uint32_t>{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
  };

  for (std::uint32_t n = 0; n <= c.max_size(); ++n) {
    auto tn = small_carrier(t, n);
    if (!tn) {
      r.skip(fid);
      r.skip(uleft);
      r.skip(uright);
      r.skip(assoc);
      continue;
    }
    for (std::uint64_t e = 0; e < *tn; ++e) {
      if (t.map(widen(identity_map(n)), n, e) == e) {
        r.pass(fid);
      } else {
        r.fail(fid, wit(n, e), "T id moves an element");
      }
    }
    auto ttn = small_carrier(t, tn);
    if (!ttn) {
      r.skip(uleft);
      r.skip(uright);
      r.skip(assoc);
      continue;
    }
    const auto eta = unit_table(t, n);
    const auto t_eta = lift(t, eta, *tn, *tn);
    for (std::uint64_t e = 0; e < *tn; ++e) {
      if (t.join(n, t.unit(*tn, e)) == e) {
        r.pass(uleft);
      } else {
        r.fail(uleft, wit(n, e), "join after unit of T n is not the identity");
      }
      if (t.join(n, t_eta[e]) == e) {
        r.pass(uright);
      } else {
        r.fail(uright, wit(n, e), "join after T unit is not the identity");
      }
    }
    auto tttn = small_carrier(t, ttn);
    if (!tttn) {
      r.skip(assoc);
      continue;
    }
    const auto mu = join_table(t, n, *ttn);
    const auto t_mu = lift(t, mu, *tn, *tttn);
    for (std::uint64_t e = 0; e < *tttn; ++e) {
      if (t.join(n, t.join(*tn, e)) == t.join(n, t_mu[e])) {
        r.pass(assoc);
      } else {
        r.fail(assoc, wit(n, e), "the two joins out of T T T n differ");
      }
    }
  }

  for (std::uint32_t fi = 0; fi < cat.morphism_count(); ++fi) {
    const FinMap& f = c.map(MorId{fi});
    const auto tdom = small_carrier(t, f.dom());
    const auto tcod = small_carrier(t, f.cod);
    if (!tdom || !tcod) {
      r.skip(unat);
      r.skip(jnat);
      r.skip(fcomp);
      continue;
    }
    const auto wf = widen(f);
    const auto tf = lift(t, wf, f.cod, *tdom);
    for (std::uint32_t a = 0; a < f.dom(); ++a) {
      if (tf[t.unit(f.dom(), a)] == t.unit(f.cod, f(a))) {
        r.pass(unat);
      } else {
        r.fail(unat, wit(fi, a), "unit is not natural");
      }
    }
    for (MorId gi : cat.out(cat.tgt(MorId{fi}))) {
      const FinMap& g = c.map(gi);
      const auto fg = widen(then(f, g));
      const auto wg = widen(g);
      for (std::uint64_t e = 0; e < *tdom; ++e) {
        if (t.map(fg, g.cod, e) == t.map(wg, g.cod, tf[e])) {
          r.pass(fcomp);
        } else {
          r.fail(fcomp, wit(fi, gi.v), "T does not preserve this composite");
        }
      }
    }
    const auto ttdom = small_carrier(t, tdom);
    const auto ttcod = small_carrier(t, tcod);
    if (!ttdom || !ttcod) {
      r.skip(jnat);
      continue;
    }
    for (std::uint64_t e = 0; e < *ttdom; ++e) {
      if (t.join(f.cod, t.map(tf, *tcod, e)) == tf[t.join(f.dom(), e)]) {
        r.pass(jnat);
      } else {
        r.fail(jnat, wit(fi, e), "join is not natural");
      }
    }
  }
  return r;
}

}  // namespace dblcat
