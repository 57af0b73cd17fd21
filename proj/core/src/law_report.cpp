#include "dblcat/law_report.hpp"

#include <algorithm>
#include <sstream>

namespace dblcat {

LawReport::Handle LawReport::law(std::string_view name) {
  for (std::size_t i = 0; i < tallies_.size(); ++i) {
    if (tallies_[i].name == name) return i;
  }
  tallies_.push_back(LawTally{std::string(name)});
  stored_per_law_.push_back(0);
  return tallies_.size() - 1;
}

void LawReport::fail(Handle h, std::vector<std::uint32_t> witness, std::string detail, FailureKind kind) {
  ++tallies_[h].checked;
  ++tallies_[h].failed;
  ++failures_;
  if (stored_per_law_[h] < keep_per_law_) {
    ++stored_per_law_[h];
    violations_.push_back(Violation{tallies_[h].name, std::move(witness), std::move(detail), kind});
  }
}

std::uint64_t LawReport::instances_checked() const {
  std::uint64_t n = 0;
  for (const auto& t : tallies_) n += t.checked;
  return n;
}

std::uint64_t LawReport::instances_skipped() const {
  std::uint64_t n = 0;
  for (const auto& t : tallies_) n += t.skipped;
  return n;
}

const LawTally* LawReport::tally(std::string_view name) const {
  for (const auto& t : tallies_) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

bool LawReport::has_violation(std::string_view law) const {
  const LawTally* t = tally(law);
  return t != nullptr && t->failed > 0;
}

bool LawReport::has_violation_prefix(std::string_view prefix) const {
  return std::any_of(tallies_.begin(), tallies_.end(),
                     [&](const LawTally& t) { return t.failed > 0 && t.name.starts_with(prefix); });
}

void LawReport::merge(const LawReport& other) {
  for (std::size_t i = 0; i < other.tallies_.size(); ++i) {
    const Handle h = law(other.tallies_[i].name);
    tallies_[h].checked += other.tallies_[i].checked;
    tallies_[h].failed += other.tallies_[i].failed;
    tallies_[h].skipped += other.tallies_[i].skipped;
  }
  for (const auto& v : other.violations_) {
    const Handle h = law(v.law);
    if (stored_per_law_[h] < keep_per_law_) {
      ++stored_per_law_[h];
      violations_.push_back(v);
    }
  }
  failures_ += other.failures_;
}

std::vector<Violation> LawReport::sorted_violations() const {
  std::vector<Violation> out = violations_;
  std::stable_sort(out.begin(), out.end(), [](const Violation& a, const Violation& b) {
    if (a.law != b.law) return a.law < b.law;
    return a.witness < b.witness;
  });
  return out;
}

std::string LawReport::to_text() const {
  std::ostringstream os;
  os << "instances checked: " << instances_checked() << ", violations: " << failures_;
  if (const auto skipped = instances_skipped(); skipped > 0) os << ", skipped: " << skipped;
  os << '\n';
  for (const auto& v : sorted_violations()) {
    os << "  " << v.law << " [";
    for (std::size_t i = 0; i < v.witness.size(); ++i) os << (i ? " " : "") << v.witness[i];
    os << "]";
    if (v.kind == FailureKind::Boundary) os << " (boundary)";
    if (!v.detail.empty()) os << ": " << v.detail;
    os << '\n';
  }
  return os.str();
}

const std::vector<LawInfo>& law_registry() {
  static const std::vector<LawInfo> registry = {
      {"category.identity_typing", "id(x) : x -> x"},
      {"category.compose_domain", "composite entries only for f, g with tgt f = src g"},
      {"category.compose_total", "every composable pair has a composite entry"},
      {"category.compose_typing", "f.g : src f -> tgt g"},
      {"category.left_unit", "id(src f) . f = f"},
      {"category.right_unit", "f . id(tgt f) = f"},
      {"category.associativity", "(f.g).h = f.(g.h)"},
      {"functor.typing", "F f : F(src f) -> F(tgt f)"},
      {"functor.preserves_id", "F id(x) = id(F x)"},
      {"functor.preserves_comp", "F(f.g) = F f . F g"},
      {"nat_trans.typing", "t(x) : F x -> G x"},
      {"nat_trans.naturality", "F f . t(y) = t(x) . G f"},
      {"twosided.morphism_typing", "a displayed morphism over (f1, f2) lies between objects over the ends of f1, f2"},
      {"twosided.id_typing", "id(a) lies over (id x1, id x2) from a to a"},
      {"twosided.compose_domain", "composite entries only for s, t with tgt s = src t"},
      {"twosided.compose_total", "every composable pair has a composite entry"},
      {"twosided.compose_typing", "s.t lies over (f1.g1, f2.g2) from src s to tgt t"},
      {"twosided.left_unit", "id(src s) . s = s"},
      {"twosided.right_unit", "s . id(tgt s) = s"},
      {"twosided.associativity", "(s.t).u = s.(t.u)"},
      {"disp_functor.obj_typing", "F a lies over (F1 x1, F2 x2)"},
      {"disp_functor.mor_typing", "F s lies over (F1 f1, F2 f2) from F(src s) to F(tgt s)"},
      {"disp_functor.preserves_id", "F id(a) = id(F a)"},
      {"disp_functor.preserves_comp", "F(s.t) = F s . F t"},
      {"disp_trans.typing", "t(a) lies over (t1 x1, t2 x2) from F a to G a"},
      {"disp_trans.naturality", "F s . t(b) = t(a) . G s"},
      {"hid.obj_typing", "hid(x) : x -|-> x"},
      {"hid.sq_typing", "hid(v) lies over (v, v) from hid(src v) to hid(tgt v)"},
      {"hid.preserves_id", "hid(id x) = id(hid x)"},
      {"hid.preserves_comp", "hid(v.w) = hid(v) . hid(w)"},
      {"hcomp.obj_domain", "horizontal composite entries only for adjacent h, k"},
      {"hcomp.obj_total", "every adjacent pair h, k has a composite"},
      {"hcomp.obj_typing", "h (x) k : src h -|-> tgt k"},
      {"hcomp.sq_domain", "square composite entries only for horizontally adjacent squares"},
      {"hcomp.sq_total", "every horizontally adjacent pair of squares has a composite"},
      {"hcomp.sq_typing", "s (x) t lies over (left s, right t) from src s (x) src t to tgt s (x) tgt t"},
      {"hcomp.preserves_id", "id(h) (x) id(k) = id(h (x) k)"},
      {"hcomp.interchange", "(s1.t1) (x) (s2.t2) = (s1 (x) s2) . (t1 (x) t2)"},
      {"lunitor.total", "every horizontal morphism has a left unitor entry"},
      {"lunitor.typing", "l(h) : hid(x) (x) h => h over identities, inverse reversed"},
      {"lunitor.iso", "l(h) . inv = id and inv . l(h) = id"},
      {"lunitor.naturality", "(hid(v) (x) s) . l(k) = l(h) . s", true},
      {"runitor.total", "every horizontal morphism has a right unitor entry"},
      {"runitor.typing", "r(h) : h (x) hid(y) => h over identities, inverse reversed"},
      {"runitor.iso", "r(h) . inv = id and inv . r(h) = id"},
      {"runitor.naturality", "(s (x) hid(w)) . r(k) = r(h) . s", true},
      {"associator.domain", "associator entries only for composable triples"},
      {"associator.total", "every composable triple has an associator entry"},
      {"associator.typing", "a(h1,h2,h3) : h1 (x) (h2 (x) h3) => (h1 (x) h2) (x) h3 over identities"},
      {"associator.iso", "a . inv = id and inv . a = id"},
      {"associator.naturality", "(s1 (x) (s2 (x) s3)) . a(k1,k2,k3) = a(h1,h2,h3) . ((s1 (x) s2) (x) s3)", true},
      {"coherence.triangle", "id(h) (x) l(k) = a(h, hid y, k) . (r(h) (x) id(k))"},
      {"coherence.pentagon",
       "a(h1,h2,h3 (x) h4) . a(h1 (x) h2,h3,h4) = "
       "(id(h1) (x) a(h2,h3,h4)) . a(h1,h2 (x) h3,h4) . (a(h1,h2,h3) (x) id(h4))"},
      {"lax.id_comparison_typing", "c(x) : hid(F x) => F(hid x) over identities"},
      {"lax.comp_comparison_domain", "comparison entries only for adjacent h, k"},
      {"lax.comp_comparison_total", "every adjacent pair h, k has a comparison"},
      {"lax.comp_comparison_typing", "c(h,k) : F h (x) F k => F(h (x) k) over identities"},
      {"lax.id_naturality", "hid(F v) . c(y) = c(x) . F(hid v)", true},
      {"lax.comp_naturality", "(F s (x) F t) . c(h',k') = c(h,k) . F(s (x) t)", true},
      {"lax.unit_left", "(c(x) (x) id(F h)) . c(hid x, h) . F l(h) = l(F h)", true},
      {"lax.unit_right", "(id(F h) (x) c(y)) . c(h, hid y) . F r(h) = r(F h)", true},
      {"lax.associativity",
       "(id (x) c(h2,h3)) . c(h1, h2 (x) h3) . F a = a(F h1,F h2,F h3) . (c(h1,h2) (x) id) . c(h1 (x) h2, h3)",
       true},
      {"transformation.sq_typing", "t(h) lies over (t x, t y) from F h to G h"},
      {"transformation.sq_naturality", "F s . t(k) = t(h) . G s", true},
      {"transformation.id_compat", "hid(t x) . cG(x) = cF(x) . t(hid x)", true},
      {"transformation.comp_compat", "(t(h) (x) t(k)) . cG(h,k) = cF(h,k) . t(h (x) k)", true},
      {"monad.functor_id", "T id = id"},
      {"monad.functor_comp", "T(f.g) = T f . T g"},
      {"monad.unit_naturality", "unit . T f = f . unit"},
      {"monad.join_naturality", "T T f . join = join . T f"},
      {"monad.unit_left", "join(unit_{T n}(t)) = t"},
      {"monad.unit_right", "join(T unit_n (t)) = t"},
      {"monad.associativity", "join(join_{T n}(t)) = join(T join_n (t))"},
  };
  return registry;
}

const LawInfo* find_law(std::string_view name) {
  for (const auto& info : law_registry()) {
    if (info.name == name) return &info;
  }
  return nullptr;
}

}  // namespace dblcat
