#pragma once

#include "connspec/complex.hpp"
#include "oracles.hpp"

#include <random>
#include <vector>

namespace testing_support {

/// Closure of a few random facets on vertices 1..n, drawn with a local RNG so
/// that tests do not depend on the library's generators.
inline connspec::Complex random_complex(std::mt19937_64& rng, int max_vertices = 6, int max_facets = 4,
                                        int max_facet_size = 4) {
  std::uniform_int_distribution<int> nv(1, max_vertices);
  const int n = nv(rng);
  std::uniform_int_distribution<int> nf(1, max_facets);
  std::uniform_int_distribution<int> size(1, std::min(max_facet_size, n));
  std::vector<std::vector<connspec::Vertex>> facets;
  const int count = nf(rng);
  for (int f = 0; f < count; ++f) {
    std::vector<connspec::Vertex> all;
    for (int v = 1; v <= n; ++v) all.push_back(v);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(size(rng)));
    facets.push_back(all);
  }
  return connspec::from_facets(facets);
}

}  // namespace testing_support
