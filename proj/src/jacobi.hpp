#pragma once

#include <cstddef>
#include <vector>

namespace connspec::detail {

/// Cyclic Jacobi on a dense symmetric n×n row-major matrix (overwritten).
/// Sweeps until the off-diagonal Frobenius norm drops below tol·‖A‖_F and
/// returns the diagonal, unsorted. Throws NoConvergence after max_sweeps.
std::vector<double> jacobi_eigenvalues(std::vector<double>& a, std::size_t n, double tol, int max_sweeps);

}  // namespace connspec::detail
