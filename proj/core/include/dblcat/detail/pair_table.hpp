#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "dblcat/ids.hpp"

namespace dblcat::detail {

// Partial map (a, b) -> value. Dense storage when the key space is small.
class PairTable {
 public:
  PairTable() = default;
  PairTable(std::uint32_t rows, std::uint32_t cols) : rows_(rows), cols_(cols) {
    const std::uint64_t cells = static_cast<std::uint64_t>(rows) * cols;
    dense_ = cells <= kDenseLimit;
    if (dense_) cells_.assign(cells, kNone);
  }

  std::optional<std::uint32_t> get(std::uint32_t a, std::uint32_t b) const {
    if (a >= rows_ || b >= cols_) return std::nullopt;
    if (dense_) {
      const std::uint32_t v = cells_[static_cast<std::uint64_t>(a) * cols_ + b];
      if (v == kNone) return std::nullopt;
      return v;
    }
    auto it = sparse_.find(pack_pair(a, b));
    if (it == sparse_.end()) return std::nullopt;
    return it->second;
  }

  // Returns false if the key was already present.
  bool insert(std::uint32_t a, std::uint32_t b, std::uint32_t value) {
    if (dense_) {
      std::uint32_t& slot = cells_[static_cast<std::uint64_t>(a) * cols_ + b];
      if (slot != kNone) return false;
      slot = value;
      return true;
    }
    return sparse_.emplace(pack_pair(a, b), value).second;
  }

 private:
  static constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 22;
  std::uint32_t rows_ = 0;
  std::uint32_t cols_ = 0;
  bool dense_ = true;
  std::vector<std::uint32_t> cells_;
  std::unordered_map<std::uint64_t, std::uint32_t> sparse_;
};

}  // namespace dblcat::detail
