#include "connspec/complex.hpp"
#include "connspec/errors.hpp"
#include "connspec/fixtures.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace connspec;

namespace {

std::vector<std::string> names(const Complex& c) {
  std::vector<std::string> out;
  for (const auto& s : c) out.push_back(s.to_string());
  return out;
}

std::vector<std::string> names(const SimplexSubset& s) {
  std::vector<std::string> out;
  for (const auto& x : s.members) out.push_back(x.to_string());
  return out;
}

}  // namespace

TEST(Simplex, CanonicalForm) {
  const Simplex s{3, 1, 2};
  EXPECT_EQ(s.vertices(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(s.dimension(), 2);
  EXPECT_EQ(s.omega(), 1);
  EXPECT_EQ(Simplex({2, 1}).omega(), -1);
  EXPECT_THROW(Simplex(std::vector<Vertex>{}), InvalidInput);
  EXPECT_THROW(Simplex({1, 1}), InvalidInput);
  EXPECT_THROW(Simplex({-1}), InvalidInput);
}

TEST(Complex, FromFacetsPath) {
  const Complex c = from_facets({{1, 2}, {2, 3}});
  EXPECT_EQ(names(c), (std::vector<std::string>{"{1}", "{2}", "{3}", "{1,2}", "{2,3}"}));
  EXPECT_EQ(from_facets({{1}}).size(), 1u);
  EXPECT_EQ(from_facets({{1, 2, 3}}).size(), 7u);
  EXPECT_THROW(from_facets({{}}), InvalidInput);
}

TEST(Complex, FromSimplicesValidates) {
  std::vector<std::vector<Vertex>> cube;
  for (Vertex v = 1; v <= 8; ++v) cube.push_back({v});
  for (auto [a, b] : std::vector<std::pair<Vertex, Vertex>>{
           {1, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}, {3, 5}, {3, 7}, {4, 6}, {4, 7}, {5, 8}, {6, 8}, {7, 8}})
    cube.push_back({a, b});
  const Complex c = from_simplices(cube);
  EXPECT_EQ(c.size(), 20u);
  EXPECT_EQ(c, fixtures::cube());

  try {
    from_simplices({{1, 2}});
    FAIL() << "expected NotClosed";
  } catch (const NotClosed& e) {
    EXPECT_TRUE(e.missing_face() == "{1}" || e.missing_face() == "{2}") << e.missing_face();
  }
  EXPECT_THROW(from_simplices({{1}, {1}}), DuplicateSimplex);
  EXPECT_THROW(from_simplices({{1}, {2}, {2, 1}, {1, 2}}), DuplicateSimplex);

  const Complex empty = from_simplices({});
  EXPECT_TRUE(empty.empty());
  EXPECT_EQ(euler_characteristic(empty), 0);
}

TEST(Complex, Generators) {
  const Complex c4 = generate(Family::cycle, {.n = 4});
  EXPECT_EQ(c4, fixtures::c4());
  EXPECT_EQ(c4.size(), 8u);
  EXPECT_EQ(generate(Family::simplex, {.d = 0}).size(), 1u);
  for (std::uint64_t seed : {0u, 7u, 99u})
    EXPECT_EQ(generate(Family::whitney_random, {.n = 5, .edge_prob = 1.0}, seed).size(), 31u);
  EXPECT_EQ(generate(Family::whitney_random, {.n = 6, .edge_prob = 0.5}, 11),
            generate(Family::whitney_random, {.n = 6, .edge_prob = 0.5}, 11));
  EXPECT_THROW(generate(Family::cycle, {.n = 2}), InvalidInput);
  EXPECT_THROW(parse_family("torus"), InvalidInput);
  EXPECT_EQ(parse_family("whitney"), Family::whitney_random);
}

TEST(Complex, WhitneyMatchesBruteForceCliques) {
  // A 4-clique {1,2,3,4} plus a pendant triangle {4,5,6}.
  const std::vector<std::pair<Vertex, Vertex>> edges = {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4},
                                                        {3, 4}, {4, 5}, {4, 6}, {5, 6}};
  const Complex w = whitney_complex(6, edges);
  EXPECT_EQ(oracle::as_family(w), oracle::closure({{1, 2, 3, 4}, {4, 5, 6}}));
}

TEST(Complex, EulerAndParity) {
  EXPECT_EQ(euler_characteristic(fixtures::path3()), 1);
  EXPECT_EQ(euler_characteristic(fixtures::cube()), -4);
  EXPECT_EQ(parity_counts(fixtures::path3()), (ParityCounts{3, 2}));
  EXPECT_EQ(parity_counts(fixtures::cube()), (ParityCounts{8, 12}));
  EXPECT_EQ(parity_counts(generate(Family::simplex, {.d = 2})), (ParityCounts{4, 3}));
}

TEST(Complex, SphereAndManifolds) {
  const Complex e1 = fixtures::path3();
  auto m = sphere_and_manifolds(e1, Simplex{2});
  EXPECT_EQ(names(m.sphere), (std::vector<std::string>{"{1,2}", "{2,3}"}));
  EXPECT_TRUE(m.wminus.empty());
  m = sphere_and_manifolds(e1, Simplex{1, 2});
  EXPECT_TRUE(m.wplus.empty());
  EXPECT_EQ(names(m.wminus), (std::vector<std::string>{"{1}", "{2}"}));
  EXPECT_EQ(sphere_and_manifolds(generate(Family::simplex, {.d = 2}), Simplex{1, 2, 3}).wminus.size(), 6u);
  EXPECT_THROW(sphere_and_manifolds(e1, Simplex{1, 3}), UnknownSimplex);
}

TEST(Complex, ChiSubsetIsOrderComplexCharacteristic) {
  const Complex e1 = fixtures::path3();
  // Two disjoint edges viewed as vertices of the inclusion graph: χ = 2.
  EXPECT_EQ(chi_subset(sphere_and_manifolds(e1, Simplex{2}).sphere), 2);
  EXPECT_EQ(chi_subset(SimplexSubset{}), 0);
  EXPECT_EQ(chi_subset(sphere_and_manifolds(e1, Simplex{1, 2}).wminus), 2);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const Complex c = testing_support::random_complex(rng, 5, 3, 4);
    for (const auto& x : c) {
      const auto m = sphere_and_manifolds(c, x);
      for (const SimplexSubset* s : {&m.sphere, &m.wplus, &m.wminus}) {
        if (s->size() > 16) continue;
        oracle::Family fam;
        for (const auto& y : s->members) fam.emplace_back(y.vertices().begin(), y.vertices().end());
        EXPECT_EQ(chi_subset(*s), oracle::chain_chi(fam)) << x.to_string();
      }
      // Boundary of a d-simplex: χ = 1 - ω.
      EXPECT_EQ(chi_subset(m.wminus), 1 - x.omega());
    }
  }
}

TEST(Complex, CanonicalOrderIsCwAdmissible) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex c = testing_support::random_complex(rng);
    EXPECT_EQ(oracle::as_family(c), oracle::closure(oracle::as_family(c)));
    for (std::size_t k = 0; k < c.size(); ++k)
      for (std::size_t j = 0; j < c.size(); ++j)
        if (c.is_proper_face(j, k)) {
          EXPECT_LT(j, k);
        }
    const auto pc = parity_counts(c);
    EXPECT_EQ(static_cast<long long>(pc.even) - static_cast<long long>(pc.odd), euler_characteristic(c));
    EXPECT_EQ(pc.even + pc.odd, c.size());
  }
}

TEST(Wu, IsospectralPairs) {
  for (WuMode mode : {WuMode::pairwise, WuMode::common}) {
    const WuOptions opt{.mode = mode};
    for (const Complex& c : {fixtures::iso_a_g(), fixtures::iso_a_h()}) {
      EXPECT_EQ(wu_characteristic(c, 2, opt), 1);
      EXPECT_EQ(wu_characteristic(c, 3, opt), -5);
      EXPECT_EQ(wu_characteristic(c, 4, opt), 13);
    }
    for (const Complex& c : {fixtures::iso_b_g(), fixtures::iso_b_h()}) {
      EXPECT_EQ(wu_characteristic(c, 2, opt), 9);
      EXPECT_EQ(wu_characteristic(c, 3, opt), -35);
      EXPECT_EQ(wu_characteristic(c, 4, opt), 105);
    }
  }
  for (unsigned k = 1; k <= 5; ++k) EXPECT_EQ(wu_characteristic(from_facets({{1}}), k), 1);
  EXPECT_THROW(wu_characteristic(fixtures::cube(), 0), InvalidInput);
  EXPECT_THROW(wu_characteristic(fixtures::cube(), 4, {.max_prefixes = 100}), SizeLimitExceeded);
}

TEST(Wu, MatchesBruteForceEnumeration) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const Complex c = testing_support::random_complex(rng, 5, 3, 3);
    const auto fam = oracle::as_family(c);
    EXPECT_EQ(wu_characteristic(c, 1), euler_characteristic(c));
    for (unsigned k = 2; k <= 3; ++k) {
      EXPECT_EQ(wu_characteristic(c, k), oracle::brute_wu(fam, k, false)) << "k=" << k;
      EXPECT_EQ(wu_characteristic(c, k, {.mode = WuMode::common}), oracle::brute_wu(fam, k, true)) << "k=" << k;
    }
  }
}

TEST(Product, CellsAndEulerCharacteristic) {
  const Complex e = generate(Family::simplex, {.d = 1});
  const ProductComplex p = product(e, e);
  EXPECT_EQ(p.size(), 9u);
  EXPECT_EQ(euler_characteristic(p), 1);
  EXPECT_EQ(euler_characteristic(product(fixtures::c4(), fixtures::cube())), 0);
  const ProductComplex q = product(fixtures::path3(), from_facets({{7}}));
  EXPECT_EQ(q.size(), 5u);
  EXPECT_EQ(euler_characteristic(q), 1);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex a = testing_support::random_complex(rng, 4, 2, 3);
    const Complex b = testing_support::random_complex(rng, 4, 2, 3);
    const ProductComplex ab = product(a, b);
    EXPECT_EQ(ab.size(), a.size() * b.size());
    long long sum = 0;
    for (std::size_t i = 0; i < ab.size(); ++i) {
      auto [x, y] = ab.cell(i);
      EXPECT_EQ(ab.dimension(i), a[x].dimension() + b[y].dimension());
      sum += ab.omega(i);
    }
    EXPECT_EQ(sum, euler_characteristic(a) * euler_characteristic(b));
  }
}

TEST(Complex, RelabelingPreservesStructure) {
  const Complex c = fixtures::iso_a_g();
  std::map<Vertex, Vertex> pi;
  for (Vertex v = 1; v <= 8; ++v) pi[v] = 20 - v;
  const Complex r = relabeled(c, pi);
  EXPECT_EQ(r.size(), c.size());
  EXPECT_EQ(r.f_vector(), c.f_vector());
  EXPECT_TRUE(r.contains(Simplex{19, 18}));
}
