#include "connspec/complex.hpp"
#include "connspec/errors.hpp"

#include <cmath>

namespace connspec {

namespace {

using Bits = boost::dynamic_bitset<>;

struct WuEnumerator {
  const Complex& c;
  unsigned k;
  Bits even;
  Bits odd;
  std::vector<Bits> neighbours;  // pairwise mode: simplices meeting i
  std::vector<Bits> star;        // common mode: simplices containing vertex v

  long long weighted_count(const Bits& candidates) const {
    return static_cast<long long>((candidates & even).count()) - static_cast<long long>((candidates & odd).count());
  }

  long long pairwise(unsigned depth, const Bits& candidates, int sign) const {
    if (depth + 1 == k) return sign * weighted_count(candidates);
    long long total = 0;
    for (auto i = candidates.find_first(); i != Bits::npos; i = candidates.find_next(i))
      total += pairwise(depth + 1, candidates & neighbours[i], sign * c[i].omega());
    return total;
  }

  long long common(unsigned depth, const Bits& shared_vertices, int sign) const {
    Bits candidates(c.size());
    for (auto v = shared_vertices.find_first(); v != Bits::npos; v = shared_vertices.find_next(v))
      candidates |= star[v];
    if (depth + 1 == k) return sign * weighted_count(candidates);
    long long total = 0;
    for (auto i = candidates.find_first(); i != Bits::npos; i = candidates.find_next(i))
      total += common(depth + 1, shared_vertices & c.mask(i), sign * c[i].omega());
    return total;
  }
};

}  // namespace

long long wu_characteristic(const Complex& c, unsigned k, const WuOptions& options) {
  if (k == 0) throw InvalidInput("Wu characteristic order must be >= 1");
  const std::size_t n = c.size();
  if (n == 0) return 0;
  if (std::pow(static_cast<double>(n), static_cast<double>(k - 1)) > options.max_prefixes)
    throw SizeLimitExceeded("Wu characteristic of order " + std::to_string(k) + " on " + std::to_string(n) +
                            " simplices exceeds the enumeration limit");

  WuEnumerator e{c, k, Bits(n), Bits(n), {}, {}};
  for (std::size_t i = 0; i < n; ++i) (c[i].omega() > 0 ? e.even : e.odd).set(i);

  if (options.mode == WuMode::pairwise) {
    e.neighbours.assign(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (c.intersect(i, j)) e.neighbours[i].set(j);
    Bits all(n);
    all.set();
    return e.pairwise(0, all, 1);
  }

  const std::size_t v = c.vertex_count();
  e.star.assign(v, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (auto b = c.mask(i).find_first(); b != Bits::npos; b = c.mask(i).find_next(b)) e.star[b].set(i);
  Bits all_vertices(v);
  all_vertices.set();
  return e.common(0, all_vertices, 1);
}

}  // namespace connspec
