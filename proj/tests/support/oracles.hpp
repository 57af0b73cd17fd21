#pragma once

// Brute-force reference computations, written against the raw tables only.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "dblcat/dblfunctor.hpp"
#include "dblcat/fincat.hpp"

namespace dblcat::testing {

// Identity, unit and associativity laws by direct lookup in a map built from the entries.
bool naive_is_category(const FinCategory& c);

// Relation x -> y as one bitmask row per element of x.
using Relation = std::vector<std::uint64_t>;
// Triple loop over (a, b, c).
Relation compose_relations(const Relation& r, const Relation& s, std::uint32_t z);

// Transformation laws checked directly on the tables of the codomain.
bool naive_transformation_ok(const DoubleTransformation& t);

// Searches every typed candidate g => f for a transformation whose composites with t are identities.
std::optional<DoubleTransformation> brute_force_inverse(const DoubleTransformation& t);

// f then g, recomputed from the tables.
FunctorPtr naive_compose(const FunctorPtr& f, const FunctorPtr& g);
FunctorPtr naive_identity(const DoublePtr& d);

// Some transformation f => g that is valid and has a brute-force inverse.
std::optional<DoubleTransformation> find_invertible_transformation(const FunctorPtr& f, const FunctorPtr& g);

// A functor g : cod f -> dom f from the candidates with id => f g and g f => id both invertible.
std::optional<FunctorPtr> find_weak_inverse(const FunctorPtr& f, const std::vector<FunctorPtr>& candidates);

}  // namespace dblcat::testing
