#include "jacobi.hpp"

#include "connspec/errors.hpp"

#include <cmath>

namespace connspec::detail {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) sum += 2 * a[i * n + j] * a[i * n + j];
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double>& a, std::size_t n, double tol, int max_sweeps) {
  double total = 0;
  for (double v : a) total += v * v;
  const double target = tol * std::sqrt(total);

  int sweep = 0;
  while (off_diagonal_norm(a, n) > target) {
    if (sweep++ == max_sweeps)
      throw NoConvergence("Jacobi iteration did not converge in " + std::to_string(max_sweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        // Rotation angle from the stable tangent formula.
        const double theta = (aqq - app) / (2 * apq);
        const double t = std::copysign(1.0, theta) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          const double np = c * akp - s * akq;
          const double nq = s * akp + c * akq;
          a[k * n + p] = a[p * n + k] = np;
          a[k * n + q] = a[q * n + k] = nq;
        }
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = a[q * n + p] = 0;
      }
  }
  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a[i * n + i];
  return diag;
}

}  // namespace connspec::detail
