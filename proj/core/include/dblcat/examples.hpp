#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "dblcat/doublecat.hpp"
#include "dblcat/fincat.hpp"
#include "dblcat/finset.hpp"
#include "dblcat/monad.hpp"
#include "dblcat/twosided.hpp"

namespace dblcat {

// Horizontal morphisms are the morphisms of c, squares are commuting squares. Strict.
DoubleCategory square_double_cat(CategoryPtr c);

// Horizontal x -o y is a map x -> T y, listed by (x, y, rank of the map).
struct KleisliData {
  std::shared_ptr<const DoubleCategory> dbl;
  std::vector<std::vector<std::uint64_t>> arrow;  // horizontal morphism -> its table
};

inline constexpr std::uint64_t kDefaultHorizontalCap = std::uint64_t{1} << 16;

// Throws MonadLawViolation when t fails validate_monad over c, ObjectOutOfBounds when some
// hom-set x -> T y has more than max_per_pair elements.
KleisliData kleisli_double_cat_data(const FinSetCategory& c, const Monad& t,
                                    std::uint64_t max_per_pair = kDefaultHorizontalCap);
DoubleCategory kleisli_double_cat(const FinSetCategory& c, const Monad& t,
                                  std::uint64_t max_per_pair = kDefaultHorizontalCap);

// Composition by the chosen pullbacks. Throws PullbackUnavailable.
DoubleCategory spans_double_cat(CategoryPtr c, const ChosenLimits& limits);
// Composition by the chosen pushouts in the codomain of l. Throws PushoutUnavailable.
DoubleCategory structured_cospans_double_cat(const FinFunctor& l, const ChosenLimits& limits);
// Throws MissingProducts unless c has all maps.
DoubleCategory lenses_double_cat(const FinSetCategory& c);

// Small posets by name: chain3, poset4 (a diamond), meet5 (a tree with a least element),
// join5 (its opposite). Throws ParseError on an unknown name.
CategoryPtr named_poset(std::string_view name);
std::vector<std::string> poset_names();

}  // namespace dblcat
