#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dblcat/doublecat.hpp"

namespace dblcat::detail {

inline std::string str(std::uint32_t v) { return std::to_string(v); }

using OptSq = std::optional<DispMorId>;
using OptObj = std::optional<DispObjId>;

// Shared lookups for the law suite. Every composite is formed only when its arguments meet.
struct SquareAlgebra {
  const DoubleCategory& D;
  const TwoSidedDispCat& d;
  const FinCategory& V;

  const DispMorphism& b(DispMorId s) const { return d.morphism(s); }

  OptSq vc(OptSq s, OptSq t) const {
    if (!s || !t || b(*s).tgt != b(*t).src) return std::nullopt;
    return d.compose(*s, *t);
  }
  OptSq hc(OptSq s, OptSq t) const {
    if (!s || !t || b(*s).f2 != b(*t).f1) return std::nullopt;
    return D.hcomp_sq(*s, *t);
  }
  OptObj ho(OptObj h, OptObj k) const {
    if (!h || !k || d.object(*h).x2 != d.object(*k).x1) return std::nullopt;
    return D.hcomp(*h, *k);
  }
  OptSq id(OptObj h) const {
    if (!h) return std::nullopt;
    return d.id(*h);
  }
  OptSq lam(OptObj h) const {
    if (!h) return std::nullopt;
    auto c = D.lunitor(*h);
    return c ? OptSq(c->sq) : std::nullopt;
  }
  OptSq rho(OptObj h) const {
    if (!h) return std::nullopt;
    auto c = D.runitor(*h);
    return c ? OptSq(c->sq) : std::nullopt;
  }
  OptSq alpha(OptObj h1, OptObj h2, OptObj h3) const {
    if (!h1 || !h2 || !h3) return std::nullopt;
    auto c = D.associator(*h1, *h2, *h3);
    return c ? OptSq(c->sq) : std::nullopt;
  }

  // Boundary first, then value.
  void compare(LawReport& r, LawReport::Handle law, std::vector<std::uint32_t> witness, OptSq lhs, OptSq rhs) const {
    if (!lhs || !rhs) {
      r.fail(law, std::move(witness), std::string(!lhs ? "left" : "right") + " side cannot be formed",
             FailureKind::Boundary);
    } else if (b(*lhs) != b(*rhs)) {
      r.fail(law, std::move(witness),
             "sides have different boundaries (" + str(lhs->v) + " vs " + str(rhs->v) + ")", FailureKind::Boundary);
    } else if (*lhs != *rhs) {
      r.fail(law, std::move(witness), "left side is square " + str(lhs->v) + ", right side is square " + str(rhs->v));
    } else {
      r.pass(law);
    }
  }

  void check_boundary(LawReport& r, LawReport::Handle law, std::vector<std::uint32_t> witness, DispMorId s,
                      const std::optional<DispMorphism>& want, const char* what) const {
    if (want && b(s) == *want) {
      r.pass(law);
    } else {
      r.fail(law, std::move(witness), std::string(what) + " has the wrong boundary", FailureKind::Boundary);
    }
  }
};

}  // namespace dblcat::detail
