#pragma once

#include "connspec/connection.hpp"
#include "connspec/exact.hpp"
#include "connspec/matrix.hpp"
#include "connspec/report.hpp"

#include <complex>
#include <vector>

namespace connspec {

/// Eigenvalues sorted ascending. `tolerance` is the absolute threshold below
/// which an eigenvalue counts as zero.
struct Spectrum {
  std::vector<double> eigenvalues;
  double tolerance = 0;

  std::size_t size() const noexcept { return eigenvalues.size(); }
};

constexpr double kDefaultJacobiTolerance = 1e-10;
constexpr int kJacobiMaxSweeps = 100;

/// Cyclic Jacobi. Throws NotSymmetric, NoConvergence, InvalidInput (tol <= 0).
Spectrum eigenvalues_symmetric(const IntMatrix& m, double tol = kDefaultJacobiTolerance);
Spectrum eigenvalues_symmetric(const RealMatrix& m, double tol = kDefaultJacobiTolerance);

/// Sign counts of a float spectrum, zero meaning |λ| <= tolerance.
Inertia float_inertia(const Spectrum& s);

/// Exact inertia of L (characteristic polynomial + Descartes' rule).
Inertia inertia(const ConnectionOperator& L);

/// p = b, n = f, z = 0 and p - n = χ; also records the float cross-check and,
/// for positive dimension, p >= 1 and n >= 1.
CheckReport spectral_theorem_check(const Complex& c);

/// (2/(iπ)) Σ log(iλ) with the principal branch. The real part is p - n and
/// the imaginary part is -(2/π) Σ log|λ|. Throws ZeroEigenvalue.
std::complex<double> log_energy(const Spectrum& s);

}  // namespace connspec
