#pragma once

#include "connspec/complex.hpp"
#include "connspec/exact.hpp"
#include "connspec/report.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace connspec {

/// Exact characteristic polynomial of L.
struct SpectralFingerprint {
  CharPoly poly;

  std::size_t hash() const;
  friend bool operator==(const SpectralFingerprint&, const SpectralFingerprint&) = default;
};

/// Throws EmptyComplex.
SpectralFingerprint fingerprint(const Complex& c);

bool isospectral_check(const Complex& a, const Complex& b);

/// Exhaustive search for a vertex bijection carrying the simplices of a onto
/// those of b, pruned by per-vertex star counts. Throws LimitExceeded when
/// either complex has more than vertex_limit vertices.
bool isomorphism_check(const Complex& a, const Complex& b, std::size_t vertex_limit = 12);

/// Both isospectral pairs: equal fingerprints, non-isomorphic, matching Wu
/// characteristics ω2..ω4, and the Betti mismatch of the first pair.
CheckReport verify_reference_pairs();

struct PairRecord {
  Complex first;
  Complex second;
  std::size_t first_sample = 0;
  std::size_t second_sample = 0;
  SpectralFingerprint fingerprint;
  bool isomorphic = false;
  std::array<long long, 3> wu_first{};  // ω2, ω3, ω4
  std::array<long long, 3> wu_second{};
  std::vector<long long> betti_first;
  std::vector<long long> betti_second;
};

nlohmann::json to_json(const PairRecord& record);

enum class SearchFamily { whitney, graph };

struct SearchConfig {
  std::size_t vertices = 7;
  double edge_prob_min = 0.2;
  double edge_prob_max = 0.8;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  SearchFamily family = SearchFamily::whitney;
};

/// The complex drawn for sample `index`; depends only on (config, index).
Complex search_sample(const SearchConfig& config, std::size_t index);

/// Random search for isospectral, non-isomorphic pairs. Output depends only
/// on the config, not on the worker count. Throws InvalidInput if samples == 0.
std::vector<PairRecord> search_pairs(const SearchConfig& config);

/// Same search over an explicit sample list.
std::vector<PairRecord> search_pairs(const std::vector<Complex>& samples, std::size_t workers = 1);

}  // namespace connspec
