#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dblcat/error.hpp"
#include "dblcat/fincat.hpp"

namespace dblcat {

// Total map between finite sets {0..dom-1} -> {0..cod-1}.
struct FinMap {
  std::uint32_t cod = 0;
  std::vector<std::uint32_t> img;

  std::uint32_t dom() const { return static_cast<std::uint32_t>(img.size()); }
  std::uint32_t operator()(std::uint32_t a) const { return img[a]; }
  bool operator==(const FinMap&) const = default;
  auto operator<=>(const FinMap&) const = default;
};

FinMap identity_map(std::uint32_t n);
// f then g; throws NotComposable when cod f != dom g.
FinMap then(const FinMap& f, const FinMap& g);
bool is_injective(const FinMap& f);
bool is_surjective(const FinMap& f);
bool is_monotone(const FinMap& f);
// Throws IndexOutOfRange if an image lies outside the codomain.
void check_map(const FinMap& f);

// Finite set as an explicit element list without duplicates.
template <class T>
class FinSetObj {
 public:
  FinSetObj() = default;
  explicit FinSetObj(std::vector<T> elems) : elems_(std::move(elems)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      for (std::size_t j = i + 1; j < elems_.size(); ++j) {
        if (elems_[i] == elems_[j]) throw Error(ErrorKind::DuplicateEntry, "duplicate element in finite set");
      }
    }
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(elems_.size()); }
  const T& operator[](std::uint32_t i) const { return elems_[i]; }
  const std::vector<T>& elements() const { return elems_; }
  std::optional<std::uint32_t> index_of(const T& x) const {
    auto it = std::find(elems_.begin(), elems_.end(), x);
    if (it == elems_.end()) return std::nullopt;
    return static_cast<std::uint32_t>(it - elems_.begin());
  }

 private:
  std::vector<T> elems_;
};

// {0..n-1}
FinSetObj<std::uint32_t> finset_range(std::uint32_t n);

struct PullbackResult {
  FinSetObj<std::pair<std::uint32_t, std::uint32_t>> carrier;  // lexicographic order
  FinMap p1;
  FinMap p2;
};

// {(a, b) | f a = g b}. Throws CodomainMismatch.
PullbackResult finset_pullback(const FinMap& f, const FinMap& g);

// Element of a disjoint union: side 0 is the first summand.
using Tagged = std::pair<std::uint8_t, std::uint32_t>;

struct PushoutResult {
  // Equivalence classes, each sorted; classes ordered by least member.
  FinSetObj<std::vector<Tagged>> carrier;
  FinMap i1;
  FinMap i2;
};

// Quotient of A + B by f c ~ g c, for f : C -> A and g : C -> B. Throws DomainMismatch.
PushoutResult finset_pushout(const FinMap& f, const FinMap& g);

template <class T, class U>
struct ProductResult {
  FinSetObj<std::pair<T, U>> carrier;  // lexicographic order
  FinMap p1;
  FinMap p2;
  std::uint32_t right_size = 0;

  // <p, q> : X -> A x B
  FinMap pair(const FinMap& p, const FinMap& q) const {
    if (p.dom() != q.dom()) throw Error(ErrorKind::DomainMismatch, "pairing of maps with different domains");
    if (p.cod != p1.cod || q.cod != p2.cod) throw Error(ErrorKind::CodomainMismatch, "pairing into the wrong factors");
    FinMap out{carrier.size(), {}};
    for (std::uint32_t x = 0; x < p.dom(); ++x) out.img.push_back(p(x) * right_size + q(x));
    return out;
  }
};

template <class T, class U>
ProductResult<T, U> finset_product(const FinSetObj<T>& a, const FinSetObj<U>& b) {
  std::vector<std::pair<T, U>> elems;
  FinMap p1{a.size(), {}};
  FinMap p2{b.size(), {}};
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    for (std::uint32_t j = 0; j < b.size(); ++j) {
      elems.emplace_back(a[i], b[j]);
      p1.img.push_back(i);
      p2.img.push_back(j);
    }
  }
  return {FinSetObj<std::pair<T, U>>(std::move(elems)), std::move(p1), std::move(p2), b.size()};
}

// Lexicographic rank of a map among all maps dom -> cod (first entry most significant).
std::uint64_t map_rank(const FinMap& f);
FinMap map_unrank(std::uint64_t rank, std::uint32_t dom, std::uint32_t cod);

enum class MapClass { all, injective, surjective, bijective, monotone };

std::string_view to_string(MapClass cls);
std::optional<MapClass> map_class_from_string(std::string_view name);
bool in_class(const FinMap& f, MapClass cls);

// The sets {0..n} of sizes 0..max_size with maps of one class, as a finite category.
// Object k is the set of size k; morphisms are ordered by (src, tgt, rank).
class FinSetCategory {
 public:
  FinSetCategory(std::uint32_t max_size, MapClass cls);

  const FinCategory& category() const { return *cat_; }
  CategoryPtr category_ptr() const { return cat_; }
  std::uint32_t max_size() const { return max_size_; }
  MapClass map_class() const { return cls_; }

  const FinMap& map(MorId f) const { return maps_[f.v]; }
  // Morphism with the given table, if it belongs to the class.
  std::optional<MorId> find(const FinMap& f) const;
  // Throws ObjectOutOfBounds when the size is not an object.
  ObjId object(std::uint32_t size) const;

 private:
  std::uint32_t max_size_;
  MapClass cls_;
  std::shared_ptr<FinCategory> cat_;
  std::vector<FinMap> maps_;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint64_t>, MorId> index_;  // (dom, cod, rank)
};

// Sets of size 0..n with all maps. Throws ObjectOutOfBounds if n exceeds the bound.
FinSetCategory finset_skeleton(std::uint32_t n, std::uint32_t bound, MapClass cls = MapClass::all);

// For pullbacks: apex with legs p1 : apex -> src f, p2 : apex -> src g.
// For pushouts: apex with legs p1 : tgt f -> apex, p2 : tgt g -> apex.
// For products: apex with projections to the two factors.
struct Cone {
  ObjId apex;
  MorId p1;
  MorId p2;
  bool operator==(const Cone&) const = default;
};

// Chosen (co)limits of a finite category, stored as data.
struct ChosenLimits {
  bool has_pullbacks = false;
  bool has_pushouts = false;
  bool has_products = false;
  std::map<std::pair<std::uint32_t, std::uint32_t>, Cone> pullbacks;  // key: cospan (f, g)
  std::map<std::pair<std::uint32_t, std::uint32_t>, Cone> pushouts;   // key: span (f, g)
  std::map<std::pair<std::uint32_t, std::uint32_t>, Cone> products;   // key: objects (x, y)

  // Throws PullbackUnavailable / PushoutUnavailable / MissingProducts.
  const Cone& pullback(MorId f, MorId g) const;
  const Cone& pushout(MorId f, MorId g) const;
  const Cone& product(ObjId x, ObjId y) const;
};

// Pullbacks of every cospan by search; least-index universal cone. Throws PullbackUnavailable.
ChosenLimits search_pullbacks(const FinCategory& c);
// Pushouts of every span by search. Throws PushoutUnavailable.
ChosenLimits search_pushouts(const FinCategory& c);
// Products of every pair of objects by search. Throws MissingProducts.
ChosenLimits search_products(const FinCategory& c);

// Chosen pullbacks/pushouts of a finite-set category computed from finset_pullback / finset_pushout.
// Throws ObjectOutOfBounds when a carrier exceeds max_size, PullbackUnavailable / PushoutUnavailable
// when a leg falls outside the map class.
ChosenLimits finset_pullbacks(const FinSetCategory& c);
ChosenLimits finset_pushouts(const FinSetCategory& c);

// Universal property checked against every cone in the category.
bool verify_pullback(const FinCategory& c, MorId f, MorId g, const Cone& cone);
bool verify_pushout(const FinCategory& c, MorId f, MorId g, const Cone& cocone);
bool verify_product(const FinCategory& c, ObjId x, ObjId y, const Cone& cone);

}  // namespace dblcat
