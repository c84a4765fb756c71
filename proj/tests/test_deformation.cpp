#include "connspec/connection.hpp"
#include "connspec/deformation.hpp"
#include "connspec/errors.hpp"
#include "connspec/fixtures.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace connspec;

TEST(Attachment, Steps) {
  const Complex c = fixtures::path3();
  const auto steps = attachment_steps(c);
  ASSERT_EQ(steps.size(), 5u);
  EXPECT_EQ(steps[3].cell, (Simplex{1, 2}));
  EXPECT_EQ(steps[3].base.size(), 3u);
  EXPECT_EQ(steps[3].connect_vector, (std::vector<int>{1, 1, 0}));
  EXPECT_EQ(attach_chi(steps[3]), 2);
  EXPECT_EQ(attach_chi(steps[0]), 0);
  for (const auto& s : steps) {
    EXPECT_EQ(attach_chi(s), 1 - s.cell.omega());
    for (const auto& y : s.attach_set.members) {
      ASSERT_TRUE(s.base.contains(y));
      EXPECT_EQ(s.connect_vector[s.base.index_of(y)], 1);
    }
  }
}

TEST(KOfT, Endpoints) {
  const Complex c = fixtures::path3();
  const auto steps = attachment_steps(c);
  const auto& step = steps[4];  // attach {2,3}
  const IntMatrix L = connection_matrix(step.base).matrix();
  EXPECT_EQ(k_of_t(L, step, Rational(1)), matrix_cast<Rational>(connection_matrix(c).matrix()));
  const RatMatrix k0 = k_of_t(L, step, Rational(0));
  for (std::size_t y = 0; y < 4; ++y) EXPECT_EQ(k0(y, 4), 0);
  EXPECT_EQ(det_rational(k0), Rational(det_exact(L)));
  // Attaching an edge (χ(A) = 2) is singular exactly at t = 1/2.
  EXPECT_EQ(det_rational(k_of_t(L, step, Rational(1, 2))), 0);
  EXPECT_THROW(k_of_t(IntMatrix::identity(2), step, Rational(1)), DimensionMismatch);
  const RatMatrix m = m_of_t(L, step, Rational(1, 3));
  EXPECT_TRUE(m.is_symmetric());
}

TEST(DetIdentity, OracleOnEdgeAttachment) {
  // Direct 3x3: attach {1,2} to two points; det K(t) = 1 - 2t.
  const auto steps = attachment_steps(generate(Family::simplex, {.d = 1}));
  for (const Rational& t : {Rational(0), Rational(1, 4), Rational(1, 2), Rational(3, 4), Rational(1)}) {
    const RatMatrix k = k_of_t(IntMatrix::identity(2), steps[2], t);
    const Rational direct = k(0, 0) * (k(1, 1) * k(2, 2) - k(1, 2) * k(2, 1)) -
                            k(0, 1) * (k(1, 0) * k(2, 2) - k(1, 2) * k(2, 0)) +
                            k(0, 2) * (k(1, 0) * k(2, 1) - k(1, 1) * k(2, 0));
    EXPECT_EQ(direct, 1 - 2 * t);
    EXPECT_EQ(det_rational(k), direct);
  }
}

TEST(DetIdentity, HoldsEverywhere) {
  for (const Complex& c : {fixtures::path3(), fixtures::cube(), fixtures::c4(), generate(Family::simplex, {.d = 3})})
    EXPECT_TRUE(det_identity_check(c).pass) << c.name();
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 15; ++trial) {
    const Complex c = testing_support::random_complex(rng, 5, 3, 3);
    const auto r = det_identity_check(c, {Rational(-2), Rational(1, 3), Rational(5, 7), Rational(3, 2)});
    EXPECT_TRUE(r.pass) << r.to_json().dump();
  }
}

TEST(Crossing, InertiaDeltas) {
  const auto cube = crossing_report(fixtures::cube());
  EXPECT_TRUE(cube.pass);
  EXPECT_EQ(cube.stats["final"]["p"], 8);
  EXPECT_EQ(cube.stats["final"]["n"], 12);
  const auto e1 = crossing_report(fixtures::path3());
  EXPECT_TRUE(e1.pass);
  EXPECT_EQ(e1.stats["steps"][3]["t1"]["n"], 1);  // first edge adds a negative
  EXPECT_EQ(e1.stats["steps"][0]["t1"]["p"], 1);
  std::mt19937_64 rng(83);
  for (int trial = 0; trial < 15; ++trial) EXPECT_TRUE(crossing_report(testing_support::random_complex(rng)).pass);
}

TEST(Tracker, Fixtures) {
  const auto single = track_branches(from_facets({{1}}));
  ASSERT_EQ(single.assignment.size(), 1u);
  EXPECT_DOUBLE_EQ(single.assignment[0].eigenvalue, 1.0);

  for (const Complex& c : {fixtures::path3(), fixtures::cube(), fixtures::c4()}) {
    const auto trace = track_branches(c, 32);
    EXPECT_TRUE(trace.is_bijection()) << c.name();
    EXPECT_TRUE(trace.sign_consistent(c)) << c.name();
    EXPECT_TRUE(trace.transfers.empty()) << c.name();
    for (const auto& step : trace.steps) {
      EXPECT_EQ(step.samples.front().t, 0.0);
      EXPECT_EQ(step.samples.back().t, 1.0);
      EXPECT_EQ(step.crossing.has_value(), step.cell.dimension() % 2 == 1);
      if (step.crossing) {
        // det M(t) vanishes at t = 1/sqrt(χ(A)) = 1/sqrt(2).
        EXPECT_LE(step.crossing->first, M_SQRT1_2);
        EXPECT_GE(step.crossing->second, M_SQRT1_2);
      }
    }
  }
  EXPECT_THROW(track_branches(fixtures::c4(), 4), InvalidInput);
}

TEST(Tracker, TwoDimensionalComplexes) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 10; ++trial) {
    const Complex c = testing_support::random_complex(rng, 6, 3, 4);
    const auto trace = track_branches(c, 16);
    EXPECT_TRUE(trace.is_bijection());
    EXPECT_TRUE(trace.sign_consistent(c));
    for (const auto& tr : trace.transfers) {
      EXPECT_EQ(c[tr.cell].dimension() % 2, 1);
    }
  }
}
