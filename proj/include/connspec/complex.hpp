#pragma once

// Finite abstract simplicial complexes, their products and the purely
// combinatorial invariants (Euler characteristic, parity counts, unit
// spheres, Wu characteristics).

#include <boost/dynamic_bitset.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace connspec {

using Vertex = std::int64_t;

/// A nonempty, strictly increasing list of non-negative vertex labels.
class Simplex {
 public:
  /// Sorts the labels; throws InvalidInput on empty input, negative or repeated labels.
  explicit Simplex(std::vector<Vertex> vertices);
  Simplex(std::initializer_list<Vertex> vertices) : Simplex(std::vector<Vertex>(vertices)) {}

  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  int dimension() const noexcept { return static_cast<int>(vertices_.size()) - 1; }
  int omega() const noexcept { return dimension() % 2 == 0 ? 1 : -1; }

  bool is_face_of(const Simplex& other) const;
  bool is_proper_face_of(const Simplex& other) const { return size() < other.size() && is_face_of(other); }
  bool intersects(const Simplex& other) const;

  std::string to_string() const;

  /// Canonical order: dimension first, then lexicographic.
  friend std::strong_ordering operator<=>(const Simplex& a, const Simplex& b) {
    if (auto c = a.vertices_.size() <=> b.vertices_.size(); c != 0) return c;
    return a.vertices_ <=> b.vertices_;
  }
  friend bool operator==(const Simplex&, const Simplex&) = default;

 private:
  std::vector<Vertex> vertices_;
};

/// A downward-closed family of simplices stored in canonical order
/// (dimension ascending, then lexicographic). The order is CW-admissible:
/// every proper face of a simplex precedes it.
class Complex {
 public:
  Complex() = default;

  std::size_t size() const noexcept { return simplices_.size(); }
  bool empty() const noexcept { return simplices_.empty(); }
  const Simplex& operator[](std::size_t i) const { return simplices_[i]; }
  const std::vector<Simplex>& simplices() const noexcept { return simplices_; }
  auto begin() const noexcept { return simplices_.begin(); }
  auto end() const noexcept { return simplices_.end(); }

  std::optional<std::size_t> find(const Simplex& s) const;
  /// Position of s in the order; throws UnknownSimplex.
  std::size_t index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return find(s).has_value(); }

  const std::vector<Vertex>& vertex_labels() const noexcept { return vertices_; }
  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  /// Maximal simplex dimension, -1 for the empty complex.
  int dimension() const noexcept;
  /// f_k = number of k-dimensional simplices.
  std::vector<std::size_t> f_vector() const;
  std::vector<std::size_t> facets() const;

  /// Vertex set of simplex i as a bitset over compact vertex indices.
  const boost::dynamic_bitset<>& mask(std::size_t i) const { return masks_[i]; }
  bool intersect(std::size_t i, std::size_t j) const { return masks_[i].intersects(masks_[j]); }
  /// Simplex i is a (not necessarily proper) face of simplex j.
  bool is_face(std::size_t i, std::size_t j) const { return masks_[i].is_subset_of(masks_[j]); }
  bool is_proper_face(std::size_t i, std::size_t j) const { return masks_[i].is_proper_subset_of(masks_[j]); }

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  friend bool operator==(const Complex& a, const Complex& b) { return a.simplices_ == b.simplices_; }

 private:
  friend Complex build_sorted_complex(std::vector<Simplex> sorted, std::string name);

  std::string name_;
  std::vector<Simplex> simplices_;
  std::map<Simplex, std::size_t> index_;
  std::vector<Vertex> vertices_;
  std::vector<boost::dynamic_bitset<>> masks_;
};

/// Downward closure of the given facets; throws InvalidInput on an empty facet.
Complex from_facets(const std::vector<std::vector<Vertex>>& facets, std::string name = {});

/// Validates an explicit simplex list (no closing). Throws NotClosed or DuplicateSimplex.
Complex from_simplices(const std::vector<std::vector<Vertex>>& simplices, std::string name = {});

/// Generator families.
enum class Family { cycle, cube, simplex, whitney_random };

struct GeneratorParams {
  std::size_t n = 0;        // cycle length / vertex count of the random graph
  std::size_t d = 0;        // simplex dimension
  double edge_prob = 0.5;   // whitney_random edge probability
};

Family parse_family(std::string_view name);
std::string_view family_name(Family family);

/// cycle(n): vertices 1..n with edges {i,i+1} and {1,n}; cube: the 3-cube
/// graph complex; simplex(d): closure of {1..d+1}; whitney_random: clique
/// complex of G(n, edge_prob), deterministic in seed.
Complex generate(Family family, const GeneratorParams& params, std::uint64_t seed = 0);

/// Complex with vertices 1..n and the given edges (no higher simplices).
Complex graph_complex(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                      std::string name = {});

/// Clique complex of the graph on vertices 1..n.
Complex whitney_complex(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges,
                        std::string name = {});

/// Edges of an Erdős–Rényi graph on vertices 1..n, deterministic in seed.
std::vector<std::pair<Vertex, Vertex>> random_graph_edges(std::size_t n, double edge_prob, std::uint64_t seed);

/// Relabels vertices through `relabel` (must be injective on the complex's labels).
Complex relabeled(const Complex& c, const std::map<Vertex, Vertex>& relabel);

long long euler_characteristic(const Complex& c);

struct ParityCounts {
  std::size_t even = 0;  // b: even-dimensional simplices
  std::size_t odd = 0;   // f: odd-dimensional simplices
  friend bool operator==(const ParityCounts&, const ParityCounts&) = default;
};
ParityCounts parity_counts(const Complex& c);

/// A set of simplices drawn from one complex, kept in canonical order.
struct SimplexSubset {
  std::vector<Simplex> members;

  std::size_t size() const noexcept { return members.size(); }
  bool empty() const noexcept { return members.empty(); }
  bool contains(const Simplex& s) const;
};

SimplexSubset intersection(const SimplexSubset& a, const SimplexSubset& b);

struct SphereAndManifolds {
  SimplexSubset sphere;  // S(x) = W+(x) ∪ W-(x)
  SimplexSubset wplus;   // proper cofaces of x
  SimplexSubset wminus;  // proper faces of x
};

/// Throws UnknownSimplex if x is not in the complex.
SphereAndManifolds sphere_and_manifolds(const Complex& c, const Simplex& x);

/// Euler characteristic of a simplex subset viewed as a subgraph of the
/// face-inclusion graph G1: the alternating count of chains z1 ⊊ ... ⊊ zk
/// inside the subset. Equals Σω when the subset is closed under faces.
long long chi_subset(const SimplexSubset& subset);

/// Same, for a subset given by positions in a complex.
long long chi_subset(const Complex& c, const std::vector<std::size_t>& positions);

enum class WuMode {
  pairwise,  // every pair of the k simplices intersects
  common,    // the k simplices share a vertex
};

struct WuOptions {
  WuMode mode = WuMode::pairwise;
  /// Upper limit on |G|^(k-1), the number of enumeration prefixes.
  double max_prefixes = 5e7;
};

/// ω_k(G) = Σ ω(x1)...ω(xk) over ordered k-tuples (repeats allowed) of
/// intersecting simplices. Throws SizeLimitExceeded past the prefix limit.
long long wu_characteristic(const Complex& c, unsigned k, const WuOptions& options = {});

/// A × B in the strong ring: all pairs (x, y), ordered lexicographically by
/// the factors' CW orders.
class ProductComplex {
 public:
  ProductComplex(Complex a, Complex b);

  std::size_t size() const noexcept { return a_.size() * b_.size(); }
  const Complex& first() const noexcept { return a_; }
  const Complex& second() const noexcept { return b_; }
  /// Cell i is (first()[i / |B|], second()[i % |B|]).
  std::pair<std::size_t, std::size_t> cell(std::size_t i) const { return {i / b_.size(), i % b_.size()}; }
  int dimension(std::size_t i) const;
  int omega(std::size_t i) const;

 private:
  Complex a_;
  Complex b_;
};

ProductComplex product(const Complex& a, const Complex& b);
long long euler_characteristic(const ProductComplex& p);

}  // namespace connspec
