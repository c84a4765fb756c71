#include "connspec/fixtures.hpp"
#include "connspec/hodge.hpp"
#include "connspec/spectra.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace connspec;

TEST(Boundary, EdgeSigns) {
  const auto d = boundary_matrices(generate(Family::simplex, {.d = 1}));
  ASSERT_EQ(d.d.size(), 2u);
  EXPECT_EQ(d.d[1], int_matrix({{-1}, {1}}));
}

TEST(Boundary, ChainComplex) {
  const auto d = boundary_matrices(generate(Family::simplex, {.d = 2}));
  EXPECT_EQ(d.d[1] * d.d[2], IntMatrix(3, 1));
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 30; ++trial) EXPECT_TRUE(chain_complex_check(boundary_matrices(testing_support::random_complex(rng))).pass);
  EXPECT_EQ(rank_exact(boundary_matrices(fixtures::c4()).d[1]), 3u);
}

TEST(Hodge, SmallBlocks) {
  EXPECT_EQ(hodge_matrix(boundary_matrices(from_facets({{1}}))).H, int_matrix({{0}}));
  const HodgeOperator edge = hodge_matrix(boundary_matrices(generate(Family::simplex, {.d = 1})));
  // Direct multiplication of D = [[0,0,-1],[0,0,1],[-1,1,0]].
  const IntMatrix D = int_matrix({{0, 0, -1}, {0, 0, 1}, {-1, 1, 0}});
  EXPECT_EQ(edge.H, D * D);
  EXPECT_EQ(edge.blocks[1], int_matrix({{2}}));
  const auto h0 = eigenvalues_symmetric(edge.blocks[0]).eigenvalues;
  EXPECT_NEAR(h0[0], 0.0, 1e-12);
  EXPECT_NEAR(h0[1], 2.0, 1e-12);
  const auto c4 = eigenvalues_symmetric(hodge_matrix(boundary_matrices(fixtures::c4())).blocks[0]).eigenvalues;
  const std::vector<double> expect = {0, 2, 2, 4};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(c4[i], expect[i], 1e-10);
}

TEST(Hodge, NullityMatchesBetti) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 25; ++trial) {
    const Complex c = testing_support::random_complex(rng);
    const auto d = boundary_matrices(c);
    const HodgeOperator h = hodge_matrix(d);
    const auto betti = betti_numbers(d);
    for (std::size_t k = 0; k < h.blocks.size(); ++k)
      EXPECT_EQ(static_cast<long long>(h.blocks[k].rows() - oracle::rational_rank(h.blocks[k])), betti[k]);
    EXPECT_TRUE(h.H.is_symmetric());
  }
}

TEST(Betti, Values) {
  EXPECT_EQ(betti_numbers(fixtures::c4()), (std::vector<long long>{1, 1}));
  EXPECT_EQ(betti_numbers(fixtures::cube()), (std::vector<long long>{1, 5}));
  EXPECT_EQ(betti_numbers(fixtures::iso_a_g()), (std::vector<long long>{1, 0}));
  EXPECT_EQ(betti_numbers(fixtures::iso_a_h()), (std::vector<long long>{2, 1}));
  EXPECT_EQ(betti_numbers(generate(Family::simplex, {.d = 3})), (std::vector<long long>{1, 0, 0, 0}));
  // Hollow tetrahedron is a 2-sphere.
  EXPECT_EQ(betti_numbers(from_facets({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}})), (std::vector<long long>{1, 0, 1}));
}

TEST(Betti, GraphsMatchUnionFind) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 30; ++trial) {
    const Complex c = testing_support::random_complex(rng, 7, 6, 2);
    const auto [b0, b1] = oracle::graph_betti(oracle::as_family(c));
    const auto betti = betti_numbers(c);
    EXPECT_EQ(betti[0], b0);
    EXPECT_EQ(betti.size() > 1 ? betti[1] : 0, b1);
  }
}

TEST(McKeanSinger, Checks) {
  for (const Complex& c : {fixtures::c4(), fixtures::cube(), generate(Family::simplex, {.d = 1}),
                           from_facets({{1, 2, 3}, {3, 4}, {4, 5, 6, 7}})}) {
    const auto r = mckean_singer_check(c, {0, 1, 2, 3}, {0.0, 0.3, 1.0, 5.0});
    EXPECT_TRUE(r.pass) << r.to_json().dump();
  }
  const auto r = mckean_singer_check(fixtures::c4());
  EXPECT_EQ(r.stats["str_H_power"]["1"], "0");
  EXPECT_EQ(r.stats["str_H_power"]["3"], "0");
}

TEST(EulerPoincare, Checks) {
  EXPECT_TRUE(euler_poincare_check(fixtures::c4()).pass);
  EXPECT_EQ(euler_poincare_check(fixtures::cube()).stats["euler_characteristic"], -4);
  for (std::size_t d = 0; d < 5; ++d)
    EXPECT_EQ(euler_poincare_check(generate(Family::simplex, {.d = d})).stats["euler_characteristic"], 1);
}
