#include "connspec/errors.hpp"
#include "connspec/fixtures.hpp"
#include "connspec/spectra.hpp"
#include "jacobi.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace connspec;

namespace {

void expect_spectrum(const Spectrum& s, std::vector<double> expected, double tol) {
  std::sort(expected.begin(), expected.end());
  ASSERT_EQ(s.size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) EXPECT_NEAR(s.eigenvalues[i], expected[i], tol) << i;
}

}  // namespace

TEST(Jacobi, ReferenceSpectra) {
  const double s2 = std::sqrt(2.0), s5 = std::sqrt(5.0), s13 = std::sqrt(13.0);
  expect_spectrum(eigenvalues_symmetric(connection_matrix(fixtures::path3()).matrix()),
                  {(1 - s5) / 2, (3 - s13) / 2, 1, (1 + s5) / 2, (3 + s13) / 2}, 1e-9);
  expect_spectrum(eigenvalues_symmetric(IntMatrix::identity(3)), {1, 1, 1}, 1e-12);
  expect_spectrum(eigenvalues_symmetric(connection_matrix(fixtures::c4()).matrix()),
                  {2 + s5, 2 - s5, 1 + s2, 1 + s2, 1 - s2, 1 - s2, 1, -1}, 1e-9);
}

TEST(Jacobi, MatchesEigen) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 25; ++trial) {
    const Complex c = testing_support::random_complex(rng, 7, 5, 4);
    const IntMatrix l = connection_matrix(c).matrix();
    const Spectrum s = eigenvalues_symmetric(l);
    const auto ref = oracle::eigen_eigenvalues(l);
    for (std::size_t i = 0; i < ref.size(); ++i) EXPECT_NEAR(s.eigenvalues[i], ref[i], 1e-8);
    EXPECT_TRUE(std::is_sorted(s.eigenvalues.begin(), s.eigenvalues.end()));
  }
}

TEST(Jacobi, Errors) {
  EXPECT_THROW(eigenvalues_symmetric(int_matrix({{1, 2}, {3, 1}})), NotSymmetric);
  EXPECT_THROW(eigenvalues_symmetric(IntMatrix::identity(2), 0.0), InvalidInput);
  EXPECT_THROW(eigenvalues_symmetric(IntMatrix(2, 3)), NotSquare);
  // One sweep is not enough for the cube.
  const IntMatrix L = connection_matrix(fixtures::cube()).matrix();
  std::vector<double> a;
  for (const BigInt& v : L.values()) a.push_back(v.convert_to<double>());
  EXPECT_THROW(detail::jacobi_eigenvalues(a, L.rows(), 1e-10, 1), NoConvergence);
}

TEST(Inertia, ReferenceExamples) {
  EXPECT_EQ(inertia(connection_matrix(fixtures::path3())), (Inertia{3, 2, 0}));
  EXPECT_EQ(inertia(connection_matrix(fixtures::cube())), (Inertia{8, 12, 0}));
  EXPECT_EQ(inertia(connection_matrix(fixtures::c4())), (Inertia{4, 4, 0}));
}

TEST(Inertia, FloatAgreesWithExact) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const Complex c = testing_support::random_complex(rng, 7, 5, 4);
    const ConnectionOperator L = connection_matrix(c);
    EXPECT_EQ(float_inertia(eigenvalues_symmetric(L.matrix())), inertia(L));
  }
  Spectrum s{{-1.0, 0.0, 1e-14, 2.0}, 1e-10};
  EXPECT_EQ(float_inertia(s), (Inertia{1, 1, 2}));
}

TEST(SpectralTheorem, Checks) {
  const auto cube = spectral_theorem_check(fixtures::cube());
  EXPECT_TRUE(cube.pass);
  EXPECT_EQ(cube.stats["p"], 8);
  EXPECT_EQ(cube.stats["n"], 12);
  const auto tri = spectral_theorem_check(generate(Family::simplex, {.d = 2}));
  EXPECT_TRUE(tri.pass);
  EXPECT_EQ(tri.stats["p"], 4);
  EXPECT_EQ(tri.stats["n"], 3);
  EXPECT_TRUE(tri.stats["float_inertia_agrees"].get<bool>());
  EXPECT_FALSE(spectral_theorem_check(Complex{}).pass);
}

TEST(LogEnergy, Values) {
  auto le = log_energy(eigenvalues_symmetric(connection_matrix(fixtures::c4()).matrix()));
  EXPECT_NEAR(le.real(), 0.0, 1e-9);
  EXPECT_NEAR(le.imag(), 0.0, 1e-9);
  le = log_energy(eigenvalues_symmetric(connection_matrix(fixtures::path3()).matrix()));
  EXPECT_NEAR(le.real(), 1.0, 1e-9);
  EXPECT_NEAR(le.imag(), 0.0, 1e-9);
  le = log_energy(Spectrum{{1.0}, 1e-10});
  EXPECT_NEAR(le.real(), 1.0, 1e-15);
  EXPECT_NEAR(le.imag(), 0.0, 1e-15);
  // Direct evaluation of (2/(iπ)) Σ log(iλ) with the principal branch.
  const std::vector<double> lambdas = {-3.0, 0.5, 2.0};
  std::complex<double> sum = 0;
  for (double l : lambdas) sum += std::log(std::complex<double>(0, l));
  const auto direct = 2.0 / (std::complex<double>(0, 1) * M_PI) * sum;
  le = log_energy(Spectrum{lambdas, 1e-10});
  EXPECT_NEAR(le.real(), direct.real(), 1e-12);
  EXPECT_NEAR(le.imag(), direct.imag(), 1e-12);
  EXPECT_THROW(log_energy(Spectrum{{0.0, 1.0}, 1e-10}), ZeroEigenvalue);
}

TEST(Products, InertiaMultiplies) {
  std::mt19937_64 rng(57);
  for (int trial = 0; trial < 8; ++trial) {
    const Complex a = testing_support::random_complex(rng, 4, 2, 3);
    const Complex b = testing_support::random_complex(rng, 4, 2, 3);
    const Inertia ia = inertia(connection_matrix(a));
    const Inertia ib = inertia(connection_matrix(b));
    const IntMatrix l = connection_matrix(product(a, b));
    EXPECT_EQ(exact_inertia(l), (Inertia{ia.p * ib.p + ia.n * ib.n, ia.p * ib.n + ia.n * ib.p, 0}));
    std::vector<double> products;
    const auto sa = eigenvalues_symmetric(connection_matrix(a).matrix()).eigenvalues;
    const auto sb = eigenvalues_symmetric(connection_matrix(b).matrix()).eigenvalues;
    for (double x : sa)
      for (double y : sb) products.push_back(x * y);
    std::sort(products.begin(), products.end());
    const auto got = eigenvalues_symmetric(l).eigenvalues;
    for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], products[i], 1e-6);
  }
}
