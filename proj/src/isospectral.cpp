#include "connspec/isospectral.hpp"

#include "connspec/connection.hpp"
#include "connspec/errors.hpp"
#include "connspec/fixtures.hpp"
#include "connspec/hodge.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <thread>
#include <unordered_map>

namespace connspec {
namespace {

// Per-vertex invariant: number of simplices of each dimension containing it.
std::vector<std::vector<std::size_t>> star_counts(const Complex& c) {
  const auto& labels = c.vertex_labels();
  const std::size_t dims = static_cast<std::size_t>(std::max(c.dimension(), 0)) + 1;
  std::vector<std::vector<std::size_t>> counts(labels.size(), std::vector<std::size_t>(dims, 0));
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& m = c.mask(i);
    for (auto v = m.find_first(); v != boost::dynamic_bitset<>::npos; v = m.find_next(v))
      ++counts[v][static_cast<std::size_t>(c[i].dimension())];
  }
  return counts;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const Complex& a, const Complex& b) : a_(a), b_(b) {
    const auto sa = star_counts(a);
    const auto sb = star_counts(b);
    const std::size_t n = a.vertex_count();
    candidates_.resize(n);
    for (std::size_t v = 0; v < n; ++v)
      for (std::size_t w = 0; w < n; ++w)
        if (sa[v] == sb[w]) candidates_[v].push_back(w);
    // Most constrained vertices first.
    order_.resize(n);
    for (std::size_t v = 0; v < n; ++v) order_[v] = v;
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t x, std::size_t y) { return candidates_[x].size() < candidates_[y].size(); });
    rank_.resize(n);
    for (std::size_t i = 0; i < n; ++i) rank_[order_[i]] = i;
    // A simplex is checked once its last vertex (in search order) is placed.
    closing_.resize(n);
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::size_t last = 0;
      const auto& m = a.mask(i);
      for (auto v = m.find_first(); v != boost::dynamic_bitset<>::npos; v = m.find_next(v))
        last = std::max(last, rank_[v]);
      closing_[last].push_back(i);
    }
    image_.assign(n, 0);
    used_.assign(n, false);
  }

  bool run() { return extend(0); }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t v = order_[depth];
    for (std::size_t w : candidates_[v]) {
      if (used_[w]) continue;
      image_[v] = w;
      used_[w] = true;
      if (consistent(depth) && extend(depth + 1)) return true;
      used_[w] = false;
    }
    return false;
  }

  bool consistent(std::size_t depth) const {
    const auto& labels_a = a_.vertex_labels();
    const auto& labels_b = b_.vertex_labels();
    for (std::size_t i : closing_[depth]) {
      std::vector<Vertex> mapped;
      for (Vertex x : a_[i].vertices()) {
        const auto idx = static_cast<std::size_t>(std::lower_bound(labels_a.begin(), labels_a.end(), x) - labels_a.begin());
        mapped.push_back(labels_b[image_[idx]]);
      }
      if (!b_.contains(Simplex(std::move(mapped)))) return false;
    }
    return true;
  }

  const Complex& a_;
  const Complex& b_;
  std::vector<std::vector<std::size_t>> candidates_;
  std::vector<std::size_t> order_, rank_;
  std::vector<std::vector<std::size_t>> closing_;
  std::vector<std::size_t> image_;
  std::vector<bool> used_;
};

std::array<long long, 3> wu_values(const Complex& c) {
  return {wu_characteristic(c, 2), wu_characteristic(c, 3), wu_characteristic(c, 4)};
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

template <typename F>
void parallel_for(std::size_t count, std::size_t workers, F&& body) {
  workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> threads;
  for (std::size_t w = 0; w < workers; ++w)
    threads.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

std::size_t SpectralFingerprint::hash() const {
  std::size_t seed = 0;
  for (const auto& c : poly.coefficients()) boost::hash_combine(seed, c.str());
  return seed;
}

SpectralFingerprint fingerprint(const Complex& c) {
  if (c.empty()) throw EmptyComplex();
  return {char_poly_exact(intersection_matrix(c))};
}

bool isospectral_check(const Complex& a, const Complex& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  return fingerprint(a) == fingerprint(b);
}

bool isomorphism_check(const Complex& a, const Complex& b, std::size_t vertex_limit) {
  if (a.vertex_count() > vertex_limit || b.vertex_count() > vertex_limit)
    throw LimitExceeded("isomorphism search is limited to " + std::to_string(vertex_limit) + " vertices");
  if (a.vertex_count() != b.vertex_count() || a.f_vector() != b.f_vector()) return false;
  return IsomorphismSearch(a, b).run();
}

CheckReport verify_reference_pairs() {
  CheckReport report{"reference_pairs"};
  struct Pair {
    std::string name;
    Complex g, h;
    std::array<long long, 3> wu;
  };
  const std::vector<Pair> pairs = {
      {"pair_a", fixtures::iso_a_g(), fixtures::iso_a_h(), {1, -5, 13}},
      {"pair_b", fixtures::iso_b_g(), fixtures::iso_b_h(), {9, -35, 105}},
  };
  for (const auto& [name, g, h, wu] : pairs) {
    const bool iso_spec = isospectral_check(g, h);
    const bool iso = isomorphism_check(g, h);
    const auto wu_g = wu_values(g);
    const auto wu_h = wu_values(h);
    const auto betti_g = betti_numbers(g);
    const auto betti_h = betti_numbers(h);
    report.stats[name] = {{"isospectral", iso_spec}, {"isomorphic", iso},     {"wu_g", wu_g},
                          {"wu_h", wu_h},            {"betti_g", betti_g},    {"betti_h", betti_h}};
    if (!iso_spec) report.fail({{"pair", name}, {"reason", "fingerprints differ"}});
    if (iso) report.fail({{"pair", name}, {"reason", "complexes are isomorphic"}});
    if (wu_g != wu || wu_h != wu) report.fail({{"pair", name}, {"reason", "Wu characteristics"}, {"expected", wu}});
  }
  const auto b1 = betti_numbers(fixtures::iso_a_g());
  const auto b2 = betti_numbers(fixtures::iso_a_h());
  if (b1 != std::vector<long long>{1, 0} || b2 != std::vector<long long>{2, 1})
    report.fail({{"pair", "pair_a"}, {"reason", "Betti vectors"}, {"betti_g", b1}, {"betti_h", b2}});
  return report;
}

nlohmann::json to_json(const PairRecord& r) {
  std::vector<std::string> coefficients;
  for (const auto& c : r.fingerprint.poly.coefficients()) coefficients.push_back(c.str());
  auto simplices = [](const Complex& c) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& s : c) out.push_back(s.vertices());
    return out;
  };
  return {{"samples", {r.first_sample, r.second_sample}},
          {"first", simplices(r.first)},
          {"second", simplices(r.second)},
          {"charpoly", coefficients},
          {"isomorphic", r.isomorphic},
          {"wu_first", r.wu_first},
          {"wu_second", r.wu_second},
          {"betti_first", r.betti_first},
          {"betti_second", r.betti_second}};
}

Complex search_sample(const SearchConfig& config, std::size_t index) {
  std::mt19937_64 rng(splitmix64(config.seed ^ splitmix64(index)));
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  const double p = config.edge_prob_min + (config.edge_prob_max - config.edge_prob_min) * u;
  const auto edges = random_graph_edges(config.vertices, p, rng());
  Complex c = config.family == SearchFamily::whitney ? whitney_complex(config.vertices, edges)
                                                     : graph_complex(config.vertices, edges);
  c.set_name("sample " + std::to_string(index));
  return c;
}

std::vector<PairRecord> search_pairs(const std::vector<Complex>& samples, std::size_t workers) {
  if (samples.empty()) throw InvalidInput("search needs at least one sample");
  std::vector<SpectralFingerprint> prints(samples.size());
  parallel_for(samples.size(), workers, [&](std::size_t i) { prints[i] = fingerprint(samples[i]); });

  // Each bucket keeps one representative per isomorphism class, in sample order.
  std::unordered_map<std::size_t, std::vector<std::size_t>> representatives;
  std::vector<PairRecord> pairs;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    auto& reps = representatives[prints[i].hash()];
    std::vector<std::size_t> mates;
    bool seen = false;
    for (std::size_t j : reps) {
      if (!(prints[j] == prints[i])) continue;
      if (isomorphism_check(samples[j], samples[i])) {
        seen = true;
        break;
      }
      mates.push_back(j);
    }
    if (seen) continue;
    for (std::size_t j : mates) {
      PairRecord r;
      r.first = samples[j];
      r.second = samples[i];
      r.first_sample = j;
      r.second_sample = i;
      r.fingerprint = prints[i];
      pairs.push_back(std::move(r));
    }
    reps.push_back(i);
  }
  parallel_for(pairs.size(), workers, [&](std::size_t k) {
    PairRecord& r = pairs[k];
    r.wu_first = wu_values(r.first);
    r.wu_second = wu_values(r.second);
    r.betti_first = betti_numbers(r.first);
    r.betti_second = betti_numbers(r.second);
  });
  return pairs;
}

std::vector<PairRecord> search_pairs(const SearchConfig& config) {
  if (config.samples == 0) throw InvalidInput("search needs at least one sample");
  if (!(config.edge_prob_min >= 0 && config.edge_prob_min <= config.edge_prob_max && config.edge_prob_max <= 1))
    throw InvalidInput("edge probability range must satisfy 0 <= min <= max <= 1");
  std::vector<Complex> samples(config.samples);
  parallel_for(config.samples, config.workers, [&](std::size_t i) { samples[i] = search_sample(config, i); });
  return search_pairs(samples, config.workers);
}

}  // namespace connspec
