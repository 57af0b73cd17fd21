#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>

namespace dblcat {

// Index into one of the owning structure's tables.
template <class Tag>
struct Id {
  std::uint32_t v = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::uint32_t value) : v(value) {}
  constexpr auto operator<=>(const Id&) const = default;
};

struct ObjTag;
struct MorTag;
struct DispObjTag;
struct DispMorTag;

using ObjId = Id<ObjTag>;
using MorId = Id<MorTag>;
using DispObjId = Id<DispObjTag>;
using DispMorId = Id<DispMorTag>;

inline constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

inline constexpr std::uint64_t pack_pair(std::uint32_t a, std::uint32_t b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace dblcat

template <class Tag>
struct std::hash<dblcat::Id<Tag>> {
  std::size_t operator()(dblcat::Id<Tag> id) const noexcept { return std::hash<std::uint32_t>{}(id.v); }
};
