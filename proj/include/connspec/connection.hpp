#pragma once

// The connection Laplacian L(x,y) = 1 iff x ∩ y ≠ ∅, its integer inverse g
// (the Green's function) and the exact identities relating them to the
// Euler characteristic.

#include "connspec/complex.hpp"
#include "connspec/exact.hpp"
#include "connspec/matrix.hpp"
#include "connspec/report.hpp"

namespace connspec {

/// L indexed by the complex's CW order. Construction verifies |det L| = 1.
class ConnectionOperator {
 public:
  explicit ConnectionOperator(Complex complex);

  const Complex& complex() const noexcept { return complex_; }
  const IntMatrix& matrix() const noexcept { return matrix_; }
  const BigInt& determinant() const noexcept { return det_; }
  std::size_t size() const noexcept { return matrix_.rows(); }

 private:
  Complex complex_;
  IntMatrix matrix_;
  BigInt det_;
};

/// g = L^{-1}, exact and integer.
class GreenOperator {
 public:
  explicit GreenOperator(IntMatrix g) : g_(std::move(g)) {}
  const IntMatrix& matrix() const noexcept { return g_; }
  const BigInt& operator()(std::size_t x, std::size_t y) const { return g_(x, y); }

 private:
  IntMatrix g_;
};

/// Throws EmptyComplex for the empty complex.
ConnectionOperator connection_matrix(const Complex& c);

/// Raw 0/1 intersection matrix (no unimodularity check).
IntMatrix intersection_matrix(const Complex& c);

/// Cellwise connection matrix of a product: cells meet iff both factors meet.
IntMatrix connection_matrix(const ProductComplex& p);

GreenOperator green(const ConnectionOperator& L);

/// Σ_{x,y} g(x,y).
BigInt total_energy(const GreenOperator& g);

/// Σ_x ω(x) M(x,x). Throws DimensionMismatch if M is not |G|x|G|.
BigInt super_trace(const IntMatrix& m, const Complex& c);

/// A(i,j) = -1 iff simplex i is not a subset of simplex j, else 0.
IntMatrix stanley_matrix(const Complex& c);
/// det of stanley_matrix; equals 1 - χ(G).
BigInt stanley_det(const Complex& c);

/// g(x,x) = 1 - χ(S(x)) for every simplex.
CheckReport green_diagonal_check(const ConnectionOperator& L, const GreenOperator& g);

/// g(x,y) = ω(y) for every facet x and proper face y of x.
CheckReport facet_lemma_check(const ConnectionOperator& L, const GreenOperator& g);

/// Σ g = χ.
CheckReport energy_check(const ConnectionOperator& L, const GreenOperator& g);

/// det L = (-1)^f and L g = I.
CheckReport unimodularity_check(const ConnectionOperator& L, const GreenOperator& g);

/// str(L) = str(g) = str(I) = χ.
CheckReport super_trace_check(const ConnectionOperator& L, const GreenOperator& g);

/// det(A) = 1 - χ for the Stanley matrix.
CheckReport stanley_check(const Complex& c);

/// Tabulates two experimental closed-form guesses for g(x,y) built from the
/// stable/unstable sets W±(x,y) = W±(x) ∩ W±(y). Never fails: the report's
/// `pass` only reflects the proven classes (x = y and facet/face pairs for
/// candidate 1, disconnected pairs for candidate 2).
CheckReport green_candidate_report(const ConnectionOperator& L, const GreenOperator& g);

}  // namespace connspec
