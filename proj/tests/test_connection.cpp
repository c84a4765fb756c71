#include "connspec/connection.hpp"
#include "connspec/errors.hpp"
#include "connspec/fixtures.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace connspec;

TEST(ConnectionMatrix, TwoEdgePath) {
  const ConnectionOperator L = connection_matrix(fixtures::path3());
  // Order {1},{2},{3},{1,2},{2,3}.
  EXPECT_EQ(L.matrix(), int_matrix({{1, 0, 0, 1, 0},
                                    {0, 1, 0, 1, 1},
                                    {0, 0, 1, 0, 1},
                                    {1, 1, 0, 1, 1},
                                    {0, 1, 1, 1, 1}}));
  EXPECT_EQ(L.determinant(), 1);
  EXPECT_EQ(connection_matrix(from_facets({{1}})).matrix(), int_matrix({{1}}));
  EXPECT_EQ(connection_matrix(from_facets({{1}, {2}})).matrix(), IntMatrix::identity(2));
  EXPECT_THROW(connection_matrix(Complex{}), EmptyComplex);
}

TEST(ConnectionMatrix, MatchesOracleAndIsUnimodular) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const Complex c = testing_support::random_complex(rng);
    const ConnectionOperator L = connection_matrix(c);
    EXPECT_EQ(L.matrix(), oracle::connection(oracle::as_family(c)));
    EXPECT_TRUE(L.matrix().is_symmetric());
    const int expected = parity_counts(c).odd % 2 == 0 ? 1 : -1;
    EXPECT_EQ(L.determinant(), expected);
  }
}

TEST(Green, PathAgainstAdjugate) {
  const ConnectionOperator L = connection_matrix(fixtures::path3());
  const GreenOperator g = green(L);
  EXPECT_EQ(g.matrix(), oracle::adjugate_inverse(L.matrix()));
  std::vector<long long> diag;
  for (std::size_t i = 0; i < 5; ++i) diag.push_back(g(i, i).convert_to<long long>());
  EXPECT_EQ(diag, (std::vector<long long>{0, -1, 0, -1, -1}));
  // Facet {1,2} against its vertices: ω = 1.
  EXPECT_EQ(g(3, 0), 1);
  EXPECT_EQ(g(3, 1), 1);
  EXPECT_EQ(green(connection_matrix(from_facets({{1}, {2}, {3}}))).matrix(), IntMatrix::identity(3));
}

TEST(Green, Energy) {
  EXPECT_EQ(total_energy(green(connection_matrix(fixtures::path3()))), 1);
  EXPECT_EQ(total_energy(green(connection_matrix(fixtures::cube()))), -4);
  EXPECT_EQ(total_energy(green(connection_matrix(from_facets({{1}, {2}, {3}, {4}})))), 4);
}

TEST(Green, DiagonalFormulaWithChainOracle) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 30; ++trial) {
    const Complex c = testing_support::random_complex(rng, 5, 3, 4);
    const ConnectionOperator L = connection_matrix(c);
    const GreenOperator g = green(L);
    const auto fam = oracle::as_family(c);
    for (std::size_t x = 0; x < c.size(); ++x) {
      oracle::Family sphere;
      for (std::size_t y = 0; y < c.size(); ++y)
        if (y != x && (oracle::subset(fam[x], fam[y]) || oracle::subset(fam[y], fam[x]))) sphere.push_back(fam[y]);
      if (sphere.size() > 18) continue;
      EXPECT_EQ(g(x, x), 1 - oracle::chain_chi(sphere)) << c[x].to_string();
    }
    EXPECT_TRUE(green_diagonal_check(L, g).pass);
    EXPECT_TRUE(facet_lemma_check(L, g).pass);
  }
}

TEST(Green, ChecksOnFixtures) {
  for (const Complex& c : {fixtures::path3(), fixtures::cube(), fixtures::c4(), from_facets({{1, 2, 3}})}) {
    const ConnectionOperator L = connection_matrix(c);
    const GreenOperator g = green(L);
    EXPECT_TRUE(green_diagonal_check(L, g).pass) << c.name();
    EXPECT_TRUE(facet_lemma_check(L, g).pass) << c.name();
    EXPECT_TRUE(energy_check(L, g).pass) << c.name();
    EXPECT_TRUE(unimodularity_check(L, g).pass) << c.name();
    EXPECT_TRUE(super_trace_check(L, g).pass) << c.name();
  }
  const ConnectionOperator single = connection_matrix(from_facets({{4}}));
  const auto report = facet_lemma_check(single, green(single));
  EXPECT_TRUE(report.pass);
  EXPECT_TRUE(report.violations.empty());
}

TEST(Green, ReportsViolations) {
  const ConnectionOperator L = connection_matrix(fixtures::path3());
  IntMatrix wrong = green(L).matrix();
  wrong(1, 1) += 1;
  wrong(3, 0) += 1;
  const GreenOperator bad(wrong);
  const auto diag = green_diagonal_check(L, bad);
  EXPECT_FALSE(diag.pass);
  ASSERT_EQ(diag.violations.size(), 1u);
  EXPECT_EQ(diag.violations[0]["simplex"], "{2}");
  EXPECT_FALSE(facet_lemma_check(L, bad).pass);
  EXPECT_FALSE(unimodularity_check(L, bad).pass);
  const auto json = diag.to_json();
  EXPECT_EQ(json["check"], "green_diagonal");
  EXPECT_EQ(json["pass"], false);
}

TEST(SuperTrace, Values) {
  const Complex e1 = fixtures::path3();
  EXPECT_EQ(super_trace(connection_matrix(e1).matrix(), e1), 1);
  EXPECT_EQ(super_trace(IntMatrix::identity(20), fixtures::cube()), -4);
  EXPECT_EQ(super_trace(green(connection_matrix(fixtures::cube())).matrix(), fixtures::cube()), -4);
  EXPECT_THROW(super_trace(IntMatrix::identity(3), e1), DimensionMismatch);
}

TEST(Stanley, Determinant) {
  EXPECT_EQ(stanley_det(from_facets({{1}})), 0);
  EXPECT_EQ(stanley_det(from_facets({{1}, {2}})), -1);
  EXPECT_EQ(stanley_det(fixtures::path3()), 0);
  EXPECT_EQ(stanley_matrix(from_facets({{1}, {2}})), int_matrix({{0, -1}, {-1, 0}}));
  EXPECT_THROW(stanley_det(Complex{}), EmptyComplex);
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex c = testing_support::random_complex(rng, 4, 2, 3);
    if (c.size() <= 8) {
      EXPECT_EQ(stanley_det(c), oracle::cofactor_det(stanley_matrix(c)));
    }
    EXPECT_TRUE(stanley_check(c).pass);
  }
}

TEST(GreenCandidates, GuaranteedClassesHold) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex c = testing_support::random_complex(rng, 6, 4, 3);
    const ConnectionOperator L = connection_matrix(c);
    const auto report = green_candidate_report(L, green(L));
    EXPECT_TRUE(report.pass) << report.to_json().dump();
    EXPECT_EQ(report.stats["pairs"], c.size() * c.size());
  }
}

TEST(GreenCandidates, DisconnectedPairsAreZero) {
  // Two components: the inverse is block diagonal.
  const Complex c = from_facets({{1, 2, 3}, {4, 5}});
  const ConnectionOperator L = connection_matrix(c);
  const GreenOperator g = green(L);
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = 0; y < c.size(); ++y)
      if (!c[x].intersects(c[y]) && (c[x].vertices()[0] <= 3) != (c[y].vertices()[0] <= 3)) {
        EXPECT_EQ(g(x, y), 0);
      }
  const auto report = green_candidate_report(L, g);
  EXPECT_TRUE(report.pass);
  EXPECT_GT(report.stats["candidate1_agreement_percent"].get<double>(), 0.0);
}

TEST(ProductConnection, IsKronecker) {
  const Complex a = fixtures::path3();
  const Complex b = generate(Family::simplex, {.d = 1});
  const ProductComplex p = product(a, b);
  const IntMatrix l = connection_matrix(p);
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) {
      auto [x1, y1] = p.cell(i);
      auto [x2, y2] = p.cell(j);
      EXPECT_EQ(l(i, j), a[x1].intersects(a[x2]) && b[y1].intersects(b[y2]) ? 1 : 0);
    }
}
