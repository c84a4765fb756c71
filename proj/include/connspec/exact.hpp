#pragma once

// Exact dense linear algebra over arbitrary-precision integers and rationals.
// Nothing in this header touches floating point.

#include "connspec/bigint.hpp"
#include "connspec/matrix.hpp"

#include <compare>
#include <cstddef>
#include <vector>

namespace connspec {

/// Counts of positive, negative and zero eigenvalues.
struct Inertia {
  std::size_t p = 0;
  std::size_t n = 0;
  std::size_t z = 0;

  std::size_t dimension() const noexcept { return p + n + z; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Monic characteristic polynomial det(λI − M) = Σ c_k λ^k, stored c_0..c_m.
class CharPoly {
 public:
  CharPoly() : coefficients_{BigInt(1)} {}
  explicit CharPoly(std::vector<BigInt> coefficients);

  std::size_t degree() const noexcept { return coefficients_.size() - 1; }
  const BigInt& coefficient(std::size_t k) const { return coefficients_.at(k); }
  const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }
  BigInt evaluate(const BigInt& x) const;

  friend bool operator==(const CharPoly&, const CharPoly&) = default;

 private:
  std::vector<BigInt> coefficients_;
};

/// Fraction-free (Bareiss) determinant.
BigInt det_exact(const IntMatrix& m);

/// Determinant of a rational matrix; columns are cleared of denominators and
/// the resulting integer matrix goes through det_exact.
Rational det_rational(const RatMatrix& m);

/// Exact inverse of a matrix with determinant ±1. Throws NotUnimodular otherwise.
IntMatrix inverse_exact_unimodular(const IntMatrix& m);

/// Exact characteristic polynomial. Computed by Hessenberg reduction modulo
/// enough word-size primes to cover a proven coefficient bound, then CRT.
CharPoly char_poly_exact(const IntMatrix& m);

/// Inertia from Descartes' rule of signs. Only valid for real-rooted
/// polynomials, i.e. characteristic polynomials of symmetric matrices.
Inertia descartes_inertia(const CharPoly& poly);

/// Exact inertia of a symmetric integer matrix (char poly + Descartes).
Inertia exact_inertia(const IntMatrix& symmetric);

/// Rank over the rationals (Bareiss elimination with row pivoting).
std::size_t rank_exact(const IntMatrix& m);

/// tr(M^power); power 0 gives the dimension.
BigInt trace_power(const IntMatrix& m, unsigned power);

BigInt trace(const IntMatrix& m);

}  // namespace connspec
