#pragma once

// Word-size prime field arithmetic and the modular kernels behind the exact
// characteristic polynomial and unimodular inverse. Internal header.

#include "connspec/bigint.hpp"
#include "connspec/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace connspec::detail {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Montgomery arithmetic modulo an odd prime p < 2^62. Values passed to
/// add/sub/mul/inv are in Montgomery form.
class PrimeField {
 public:
  explicit PrimeField(u64 p);

  u64 modulus() const noexcept { return p_; }
  u64 one() const noexcept { return one_; }

  u64 to_mont(u64 a) const noexcept { return reduce(static_cast<u128>(a) * r2_); }
  u64 from_mont(u64 a) const noexcept { return reduce(a); }
  u64 from_bigint(const BigInt& x) const;

  u64 add(u64 a, u64 b) const noexcept {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  u64 neg(u64 a) const noexcept { return a == 0 ? 0 : p_ - a; }
  u64 mul(u64 a, u64 b) const noexcept { return reduce(static_cast<u128>(a) * b); }
  u64 pow(u64 a, u64 e) const noexcept;
  u64 inv(u64 a) const noexcept { return pow(a, p_ - 2); }

 private:
  u64 reduce(u128 t) const noexcept {
    u64 m = static_cast<u64>(t) * nprime_;
    u64 r = static_cast<u64>((t + static_cast<u128>(m) * p_) >> 64);
    return r >= p_ ? r - p_ : r;
  }

  u64 p_;
  u64 nprime_;  // -p^{-1} mod 2^64
  u64 r2_;      // 2^128 mod p
  u64 one_;     // 2^64 mod p
};

/// The k-th largest prime below 2^62 (deterministic Miller-Rabin).
u64 crt_prime(std::size_t k);

/// Incremental Chinese remaindering of a vector of residues.
class CrtAccumulator {
 public:
  explicit CrtAccumulator(std::size_t count) : values_(count) {}

  void add(const std::vector<u64>& residues, u64 prime);
  /// Representative in (-M/2, M/2].
  BigInt symmetric(std::size_t i) const;
  std::vector<BigInt> symmetric_all() const;
  double log2_modulus() const noexcept { return log2_modulus_; }

 private:
  std::vector<BigInt> values_;
  BigInt modulus_{1};
  double log2_modulus_ = 0.0;
};

/// Characteristic polynomial coefficients c_0..c_n modulo the field's prime
/// (plain residues, not Montgomery form).
std::vector<u64> charpoly_mod(const IntMatrix& m, const PrimeField& field);

/// Inverse modulo p as plain residues (row-major), plus det mod p; nullopt if singular.
struct ModularInverse {
  std::vector<u64> entries;
  u64 det;
};
std::optional<ModularInverse> inverse_mod(const IntMatrix& m, const PrimeField& field);

/// log2 of a bound on |c_k| valid for every coefficient of det(λI − M).
double charpoly_coefficient_bits(const IntMatrix& m);

/// log2 of a Hadamard bound on every (n-1)x(n-1) minor.
double cofactor_bits(const IntMatrix& m);

}  // namespace connspec::detail
