#pragma once

// Seeded generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "dblcat/fincat.hpp"
#include "dblcat/finset.hpp"

namespace dblcat::testing {

using Rng = std::mt19937;

inline std::uint32_t uniform(Rng& rng, std::uint32_t lo, std::uint32_t hi) {
  return std::uniform_int_distribution<std::uint32_t>(lo, hi)(rng);
}

inline FinMap random_map(Rng& rng, std::uint32_t dom, std::uint32_t cod) {
  FinMap f{cod, {}};
  for (std::uint32_t i = 0; i < dom; ++i) f.img.push_back(uniform(rng, 0, cod - 1));
  return f;
}

// Random partial order on n points: a random DAG over a random linear order, transitively closed.
inline std::vector<std::vector<bool>> random_order(Rng& rng, std::uint32_t n, double density = 0.35) {
  std::vector<std::uint32_t> perm(n);
  for (std::uint32_t i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::bernoulli_distribution edge(density);
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::uint32_t i = 0; i < n; ++i) {
    leq[i][i] = true;
    for (std::uint32_t j = i + 1; j < n; ++j) {
      if (edge(rng)) leq[perm[i]][perm[j]] = true;
    }
  }
  for (std::uint32_t k = 0; k < n; ++k) {
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        if (leq[i][k] && leq[k][j]) leq[i][j] = true;
      }
    }
  }
  return leq;
}

// Random monoid from a random transformation monoid on m points: the closure of a few generators.
inline std::vector<std::vector<std::uint32_t>> random_monoid(Rng& rng, std::uint32_t points, std::uint32_t gens) {
  std::vector<FinMap> elems{identity_map(points)};
  for (std::uint32_t g = 0; g < gens; ++g) elems.push_back(random_map(rng, points, points));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size() && elems.size() < 64; ++j) {
      FinMap c = then(elems[i], elems[j]);
      if (std::find(elems.begin(), elems.end(), c) == elems.end()) elems.push_back(c);
    }
  }
  std::sort(elems.begin() + 1, elems.end());
  elems.erase(std::unique(elems.begin() + 1, elems.end()), elems.end());
  elems.erase(std::remove(elems.begin() + 1, elems.end(), elems.front()), elems.end());
  std::vector<std::vector<std::uint32_t>> table(elems.size(), std::vector<std::uint32_t>(elems.size()));
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (std::size_t j = 0; j < elems.size(); ++j) {
      const FinMap c = then(elems[i], elems[j]);
      table[i][j] = static_cast<std::uint32_t>(std::find(elems.begin(), elems.end(), c) - elems.begin());
    }
  }
  return table;
}

inline std::vector<std::uint32_t> random_permutation(Rng& rng, std::uint32_t n) {
  std::vector<std::uint32_t> p(n);
  for (std::uint32_t i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace dblcat::testing
