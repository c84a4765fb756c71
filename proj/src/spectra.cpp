#include "connspec/spectra.hpp"

#include "jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace connspec {

Spectrum eigenvalues_symmetric(const RealMatrix& m, double tol) {
  if (!(tol > 0)) throw InvalidInput("eigenvalue tolerance must be positive");
  m.require_square();
  if (!m.is_symmetric()) throw NotSymmetric();
  const std::size_t n = m.rows();
  std::vector<double> a(m.values().begin(), m.values().end());
  double norm = 0;
  for (double v : a) norm += v * v;
  norm = std::sqrt(norm);

  Spectrum s;
  s.eigenvalues = detail::jacobi_eigenvalues(a, n, tol, kJacobiMaxSweeps);
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end());
  // Jacobi perturbs each eigenvalue by at most the final off-diagonal norm.
  s.tolerance = std::max(10 * tol * norm, 1e-12);
  return s;
}

Spectrum eigenvalues_symmetric(const IntMatrix& m, double tol) {
  m.require_square();
  if (!m.is_symmetric()) throw NotSymmetric();
  return eigenvalues_symmetric(matrix_cast<double>(m), tol);
}

Inertia float_inertia(const Spectrum& s) {
  Inertia in;
  for (double v : s.eigenvalues) {
    if (std::fabs(v) <= s.tolerance)
      ++in.z;
    else if (v > 0)
      ++in.p;
    else
      ++in.n;
  }
  return in;
}

Inertia inertia(const ConnectionOperator& L) { return exact_inertia(L.matrix()); }

CheckReport spectral_theorem_check(const Complex& c) {
  CheckReport report{"spectral_theorem"};
  if (c.empty()) {
    report.fail({{"error", "empty complex"}});
    return report;
  }
  const ConnectionOperator L = connection_matrix(c);
  const Inertia in = inertia(L);
  const ParityCounts counts = parity_counts(c);
  const long long chi = euler_characteristic(c);
  report.stats["p"] = in.p;
  report.stats["n"] = in.n;
  report.stats["z"] = in.z;
  report.stats["b"] = counts.even;
  report.stats["f"] = counts.odd;
  report.stats["euler_characteristic"] = chi;
  if (in.p != counts.even) report.fail({{"p", in.p}, {"b", counts.even}});
  if (in.n != counts.odd) report.fail({{"n", in.n}, {"f", counts.odd}});
  if (in.z != 0) report.fail({{"z", in.z}});
  if (static_cast<long long>(in.p) - static_cast<long long>(in.n) != chi)
    report.fail({{"p_minus_n", static_cast<long long>(in.p) - static_cast<long long>(in.n)}, {"chi", chi}});
  if (c.dimension() > 0 && (in.p == 0 || in.n == 0)) report.fail({{"definite", true}});

  const Inertia approx = float_inertia(eigenvalues_symmetric(L.matrix()));
  report.stats["float_inertia_agrees"] = approx == in;
  return report;
}

std::complex<double> log_energy(const Spectrum& s) {
  // log(iλ) = log|λ| ± iπ/2; multiplying by 2/(iπ) sends this to ±1 - (2i/π) log|λ|.
  double real = 0;
  double log_abs = 0;
  for (double v : s.eigenvalues) {
    if (std::fabs(v) <= s.tolerance) throw ZeroEigenvalue();
    real += v > 0 ? 1 : -1;
    log_abs += std::log(std::fabs(v));
  }
  return {real, -2 / std::numbers::pi * log_abs};
}

}  // namespace connspec
