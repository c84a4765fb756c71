#pragma once

#include "connspec/complex.hpp"
#include "connspec/matrix.hpp"
#include "connspec/report.hpp"

#include <vector>

namespace connspec {

/// Signed incidence matrices. d[k] is f_{k-1} x f_k (d[0] is 0 x f_0); the
/// face omitting the i-th vertex of a sorted simplex gets sign (-1)^i. Rows
/// and columns follow the complex's order restricted to each dimension.
struct BoundaryOperators {
  std::vector<IntMatrix> d;
  std::vector<std::size_t> f_vector;

  std::size_t dimensions() const noexcept { return f_vector.size(); }
};

/// H = D^2 with D = d + d*, and its diagonal blocks H_k.
struct HodgeOperator {
  IntMatrix H;
  std::vector<IntMatrix> blocks;
};

BoundaryOperators boundary_matrices(const Complex& c);

/// d_k d_{k+1} = 0 for every k.
CheckReport chain_complex_check(const BoundaryOperators& d);

/// Dirac operator D on the full cell space.
IntMatrix dirac_matrix(const BoundaryOperators& d);

/// Squares D and verifies that the off-diagonal blocks vanish; throws
/// InvalidInput if they do not (the input was not a chain complex).
HodgeOperator hodge_matrix(const BoundaryOperators& d);

/// b_k = f_k - rank d_k - rank d_{k+1}.
std::vector<long long> betti_numbers(const Complex& c);
std::vector<long long> betti_numbers(const BoundaryOperators& d);

/// Exact str(H^m) = 0 for each m in `powers` (m = 0 checks str(I) = χ), and
/// float str(exp(-tH)) = χ within 1e-8 for each t.
CheckReport mckean_singer_check(const Complex& c, const std::vector<unsigned>& powers = {1, 2, 3},
                                const std::vector<double>& t_values = {0.0, 0.5, 1.0, 2.0});

/// χ = Σ (-1)^k b_k.
CheckReport euler_poincare_check(const Complex& c);

}  // namespace connspec
