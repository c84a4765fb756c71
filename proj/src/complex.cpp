#include "connspec/complex.hpp"

#include "connspec/errors.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace connspec {

Complex build_sorted_complex(std::vector<Simplex> sorted, std::string name);

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw InvalidInput("simplex must have at least one vertex");
  std::sort(vertices_.begin(), vertices_.end());
  if (vertices_.front() < 0) throw InvalidInput("vertex labels must be non-negative");
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
    throw InvalidInput("repeated vertex in simplex " + to_string());
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(), vertices_.end());
}

bool Simplex::intersects(const Simplex& other) const {
  auto a = vertices_.begin();
  auto b = other.vertices_.begin();
  while (a != vertices_.end() && b != other.vertices_.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

std::string Simplex::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vertices_.size(); ++i) os << (i ? "," : "") << vertices_[i];
  os << '}';
  return os.str();
}

Complex build_sorted_complex(std::vector<Simplex> sorted, std::string name) {
  Complex c;
  c.name_ = std::move(name);
  c.simplices_ = std::move(sorted);
  std::set<Vertex> labels;
  for (std::size_t i = 0; i < c.simplices_.size(); ++i) {
    c.index_.emplace(c.simplices_[i], i);
    labels.insert(c.simplices_[i].vertices().begin(), c.simplices_[i].vertices().end());
  }
  c.vertices_.assign(labels.begin(), labels.end());
  c.masks_.reserve(c.simplices_.size());
  for (const auto& s : c.simplices_) {
    boost::dynamic_bitset<> mask(c.vertices_.size());
    for (Vertex v : s.vertices()) {
      auto pos = std::lower_bound(c.vertices_.begin(), c.vertices_.end(), v) - c.vertices_.begin();
      mask.set(static_cast<std::size_t>(pos));
    }
    c.masks_.push_back(std::move(mask));
  }
  return c;
}

std::optional<std::size_t> Complex::find(const Simplex& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Complex::index_of(const Simplex& s) const {
  auto pos = find(s);
  if (!pos) throw UnknownSimplex(s.to_string());
  return *pos;
}

int Complex::dimension() const noexcept { return simplices_.empty() ? -1 : simplices_.back().dimension(); }

std::vector<std::size_t> Complex::f_vector() const {
  std::vector<std::size_t> f(static_cast<std::size_t>(dimension() + 1), 0);
  for (const auto& s : simplices_) ++f[static_cast<std::size_t>(s.dimension())];
  return f;
}

std::vector<std::size_t> Complex::facets() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    bool maximal = true;
    for (std::size_t j = i + 1; j < size() && maximal; ++j)
      if (simplices_[j].size() > simplices_[i].size() && is_proper_face(i, j)) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

namespace {

constexpr std::size_t kMaxFacetSize = 24;

std::vector<Simplex> canonical_list(const std::vector<std::vector<Vertex>>& raw) {
  std::vector<Simplex> out;
  out.reserve(raw.size());
  for (const auto& vs : raw) out.emplace_back(vs);
  return out;
}

}  // namespace

Complex from_facets(const std::vector<std::vector<Vertex>>& facets, std::string name) {
  std::set<Simplex> closure;
  for (const Simplex& facet : canonical_list(facets)) {
    if (facet.size() > kMaxFacetSize)
      throw SizeLimitExceeded("facet " + facet.to_string() + " has too many vertices to close");
    const auto& v = facet.vertices();
    const std::size_t k = v.size();
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << k); ++bits) {
      std::vector<Vertex> face;
      for (std::size_t i = 0; i < k; ++i)
        if (bits >> i & 1) face.push_back(v[i]);
      closure.emplace(std::move(face));
    }
  }
  return build_sorted_complex(std::vector<Simplex>(closure.begin(), closure.end()), std::move(name));
}

Complex from_simplices(const std::vector<std::vector<Vertex>>& raw, std::string name) {
  auto list = canonical_list(raw);
  std::sort(list.begin(), list.end());
  if (auto dup = std::adjacent_find(list.begin(), list.end()); dup != list.end())
    throw DuplicateSimplex(dup->to_string());
  std::set<Simplex> present(list.begin(), list.end());
  // Codimension-one faces suffice: closure follows by induction on dimension.
  for (const auto& s : list) {
    if (s.size() == 1) continue;
    for (std::size_t skip = 0; skip < s.size(); ++skip) {
      std::vector<Vertex> face;
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != skip) face.push_back(s.vertices()[i]);
      Simplex f(std::move(face));
      if (!present.contains(f)) throw NotClosed(f.to_string(), s.to_string());
    }
  }
  return build_sorted_complex(std::move(list), std::move(name));
}

Family parse_family(std::string_view name) {
  if (name == "cycle") return Family::cycle;
  if (name == "cube") return Family::cube;
  if (name == "simplex") return Family::simplex;
  if (name == "whitney_random" || name == "whitney") return Family::whitney_random;
  throw InvalidInput("unknown family '" + std::string(name) + "'");
}

std::string_view family_name(Family family) {
  switch (family) {
    case Family::cycle: return "cycle";
    case Family::cube: return "cube";
    case Family::simplex: return "simplex";
    case Family::whitney_random: return "whitney_random";
  }
  return "unknown";
}

Complex graph_complex(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, std::string name) {
  std::vector<std::vector<Vertex>> facets;
  for (std::size_t v = 1; v <= n; ++v) facets.push_back({static_cast<Vertex>(v)});
  for (auto [a, b] : edges) facets.push_back({a, b});
  return from_facets(facets, std::move(name));
}

Complex whitney_complex(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges, std::string name) {
  std::vector<std::vector<char>> adj(n + 1, std::vector<char>(n + 1, 0));
  for (auto [a, b] : edges) {
    if (a < 1 || b < 1 || static_cast<std::size_t>(a) > n || static_cast<std::size_t>(b) > n || a == b)
      throw InvalidInput("edge endpoints must be distinct vertices in 1..n");
    adj[a][b] = adj[b][a] = 1;
  }
  std::vector<Simplex> cliques;
  std::vector<Vertex> current;
  // Each clique is extended only by larger common neighbours, so it is listed once.
  auto extend = [&](auto&& self, std::vector<Vertex>& candidates) -> void {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      Vertex v = candidates[i];
      current.push_back(v);
      cliques.emplace_back(current);
      std::vector<Vertex> next;
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (adj[v][candidates[j]]) next.push_back(candidates[j]);
      self(self, next);
      current.pop_back();
    }
  };
  std::vector<Vertex> all;
  for (std::size_t v = 1; v <= n; ++v) all.push_back(static_cast<Vertex>(v));
  extend(extend, all);
  std::sort(cliques.begin(), cliques.end());
  return build_sorted_complex(std::move(cliques), std::move(name));
}

std::vector<std::pair<Vertex, Vertex>> random_graph_edges(std::size_t n, double edge_prob, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      // 53-bit uniform in [0,1); independent of the standard library's distributions.
      double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < edge_prob) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  return edges;
}

Complex generate(Family family, const GeneratorParams& params, std::uint64_t seed) {
  switch (family) {
    case Family::cycle: {
      if (params.n < 3) throw InvalidInput("cycle requires n >= 3");
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (std::size_t i = 1; i < params.n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(1, params.n);
      return graph_complex(params.n, edges, "cycle(" + std::to_string(params.n) + ")");
    }
    case Family::cube:
      return graph_complex(8,
                           {{1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 5},
                            {3, 7}, {4, 6}, {4, 7}, {5, 8}, {6, 8}, {7, 8}},
                           "cube");
    case Family::simplex: {
      if (params.d + 1 > kMaxFacetSize) throw InvalidInput("simplex dimension too large");
      std::vector<Vertex> facet;
      for (std::size_t v = 1; v <= params.d + 1; ++v) facet.push_back(static_cast<Vertex>(v));
      return from_facets({facet}, "simplex(" + std::to_string(params.d) + ")");
    }
    case Family::whitney_random: {
      if (params.n < 1) throw InvalidInput("whitney_random requires n >= 1");
      if (!(params.edge_prob >= 0.0 && params.edge_prob <= 1.0))
        throw InvalidInput("edge probability must lie in [0, 1]");
      if (params.n > 64) throw InvalidInput("whitney_random supports at most 64 vertices");
      auto c = whitney_complex(params.n, random_graph_edges(params.n, params.edge_prob, seed));
      c.set_name("whitney_random(" + std::to_string(params.n) + ", seed=" + std::to_string(seed) + ")");
      return c;
    }
  }
  throw InvalidInput("unknown family");
}

Complex relabeled(const Complex& c, const std::map<Vertex, Vertex>& relabel) {
  std::vector<std::vector<Vertex>> simplices;
  simplices.reserve(c.size());
  for (const auto& s : c) {
    std::vector<Vertex> image;
    for (Vertex v : s.vertices()) {
      auto it = relabel.find(v);
      if (it == relabel.end()) throw InvalidInput("relabeling misses vertex " + std::to_string(v));
      image.push_back(it->second);
    }
    simplices.push_back(std::move(image));
  }
  return from_simplices(simplices, c.name());
}

long long euler_characteristic(const Complex& c) {
  long long chi = 0;
  for (const auto& s : c) chi += s.omega();
  return chi;
}

ParityCounts parity_counts(const Complex& c) {
  ParityCounts out;
  for (const auto& s : c) (s.omega() > 0 ? out.even : out.odd)++;
  return out;
}

bool SimplexSubset::contains(const Simplex& s) const { return std::binary_search(members.begin(), members.end(), s); }

SimplexSubset intersection(const SimplexSubset& a, const SimplexSubset& b) {
  SimplexSubset out;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out.members));
  return out;
}

SphereAndManifolds sphere_and_manifolds(const Complex& c, const Simplex& x) {
  const std::size_t xi = c.index_of(x);
  SphereAndManifolds out;
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j == xi) continue;
    if (c.is_proper_face(xi, j)) {
      out.wplus.members.push_back(c[j]);
      out.sphere.members.push_back(c[j]);
    } else if (c.is_proper_face(j, xi)) {
      out.wminus.members.push_back(c[j]);
      out.sphere.members.push_back(c[j]);
    }
  }
  return out;
}

long long chi_subset(const SimplexSubset& subset) {
  const auto& m = subset.members;
  // weight[i] = signed number of chains whose top element is m[i].
  std::vector<long long> weight(m.size(), 0);
  long long chi = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    long long w = 1;
    for (std::size_t j = 0; j < i; ++j)
      if (m[j].size() < m[i].size() && m[j].is_face_of(m[i])) w -= weight[j];
    weight[i] = w;
    chi += w;
  }
  return chi;
}

long long chi_subset(const Complex& c, const std::vector<std::size_t>& positions) {
  std::vector<std::size_t> sorted = positions;
  std::sort(sorted.begin(), sorted.end());
  std::vector<long long> weight(sorted.size(), 0);
  long long chi = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    long long w = 1;
    for (std::size_t j = 0; j < i; ++j)
      if (c.is_proper_face(sorted[j], sorted[i])) w -= weight[j];
    weight[i] = w;
    chi += w;
  }
  return chi;
}

ProductComplex::ProductComplex(Complex a, Complex b) : a_(std::move(a)), b_(std::move(b)) {}

int ProductComplex::dimension(std::size_t i) const {
  auto [x, y] = cell(i);
  return a_[x].dimension() + b_[y].dimension();
}

int ProductComplex::omega(std::size_t i) const {
  auto [x, y] = cell(i);
  return a_[x].omega() * b_[y].omega();
}

ProductComplex product(const Complex& a, const Complex& b) { return ProductComplex(a, b); }

long long euler_characteristic(const ProductComplex& p) {
  long long chi = 0;
  for (std::size_t i = 0; i < p.size(); ++i) chi += p.omega(i);
  return chi;
}

}  // namespace connspec
