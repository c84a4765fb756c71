#pragma once

// Naive reference implementations used as test oracles. They share no code
// with the library's algorithms: cofactor expansion instead of Bareiss,
// Faddeev-LeVerrier instead of modular Hessenberg, dense rational elimination
// instead of fraction-free rank, Eigen instead of Jacobi, and brute-force
// enumeration for every combinatorial count.

#include "connspec/bigint.hpp"
#include "connspec/complex.hpp"
#include "connspec/matrix.hpp"

#include <set>
#include <vector>

namespace oracle {

using connspec::BigInt;
using connspec::IntMatrix;
using connspec::Rational;
using Set = std::vector<long long>;  // sorted vertex list
using Family = std::vector<Set>;

/// Laplace expansion along the first row (n <= 9).
BigInt cofactor_det(const IntMatrix& m);

/// Inverse through the adjugate, for unimodular input (n <= 8).
IntMatrix adjugate_inverse(const IntMatrix& m);

/// Faddeev-LeVerrier over the rationals; coefficients c_0..c_n of det(λI - M).
std::vector<BigInt> faddeev_leverrier(const IntMatrix& m);

/// Gaussian elimination over Q.
std::size_t rational_rank(const IntMatrix& m);

/// Eigenvalues via Eigen's self-adjoint solver, ascending.
std::vector<double> eigen_eigenvalues(const IntMatrix& m);

/// All nonempty subsets of the facets, deduplicated, in (size, lex) order.
Family closure(const Family& facets);

bool intersects(const Set& a, const Set& b);
bool subset(const Set& a, const Set& b);

/// Σ over chains z1 ⊊ ... ⊊ zk drawn from `members` of (-1)^(k-1),
/// enumerated explicitly (members.size() <= 20).
long long chain_chi(const Family& members);

/// Σ ω(x1)...ω(xk) over all ordered k-tuples, pairwise or common intersection.
long long brute_wu(const Family& g, unsigned k, bool common);

/// Tries every vertex permutation.
bool brute_isomorphic(const Family& a, const Family& b);

/// Betti numbers (b0, b1) of a graph through union-find.
std::pair<long long, long long> graph_betti(const Family& g);

Family as_family(const connspec::Complex& c);
IntMatrix connection(const Family& g);

}  // namespace oracle
