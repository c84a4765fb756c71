#include "modular.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>

namespace connspec::detail {

namespace {

u64 mulmod_plain(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod_plain(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_plain(r, a, m);
    a = mulmod_plain(a, a, m);
    e >>= 1;
  }
  return r;
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all n < 2^64.
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod_plain(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_plain(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

double log2_binomial(std::size_t n, std::size_t k) {
  return (std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) - std::lgamma(double(n - k) + 1)) /
         std::log(2.0);
}

std::vector<double> sorted_row_log2_norms(const IntMatrix& m) {
  std::vector<double> norms;
  norms.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt sq = 0;
    for (const auto& v : m.row(r)) sq += v * v;
    double bits = sq == 0 ? -std::numeric_limits<double>::infinity()
                          : 0.5 * std::log2(static_cast<long double>(sq));
    norms.push_back(bits);
  }
  std::sort(norms.begin(), norms.end(), std::greater<>());
  return norms;
}

}  // namespace

PrimeField::PrimeField(u64 p) : p_(p) {
  u64 inv = p;  // Newton iteration for p^{-1} mod 2^64
  for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
  nprime_ = ~inv + 1;
  one_ = (~p + 1) % p;  // 2^64 mod p
  r2_ = static_cast<u64>(static_cast<u128>(one_) * one_ % p);
}

u64 PrimeField::from_bigint(const BigInt& x) const {
  u64 r = mpz_fdiv_ui(x.backend().data(), p_);
  return to_mont(r);
}

u64 PrimeField::pow(u64 a, u64 e) const noexcept {
  u64 r = one_;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 crt_prime(std::size_t k) {
  static std::mutex mutex;
  static std::vector<u64> primes;
  std::lock_guard lock(mutex);
  u64 candidate = primes.empty() ? (u64{1} << 62) - 1 : primes.back() - 2;
  while (primes.size() <= k) {
    while (!is_prime(candidate)) candidate -= 2;
    primes.push_back(candidate);
    candidate -= 2;
  }
  return primes[k];
}

void CrtAccumulator::add(const std::vector<u64>& residues, u64 prime) {
  if (modulus_ == 1) {
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = residues[i];
  } else {
    u64 m_mod_p = mpz_fdiv_ui(modulus_.backend().data(), prime);
    u64 m_inv = powmod_plain(m_mod_p, prime - 2, prime);
    for (std::size_t i = 0; i < values_.size(); ++i) {
      u64 x_mod_p = mpz_fdiv_ui(values_[i].backend().data(), prime);
      u64 diff = residues[i] >= x_mod_p ? residues[i] - x_mod_p : residues[i] + prime - x_mod_p;
      u64 t = mulmod_plain(diff, m_inv, prime);
      values_[i] += modulus_ * BigInt(t);
    }
  }
  modulus_ *= BigInt(prime);
  log2_modulus_ += std::log2(static_cast<double>(prime));
}

BigInt CrtAccumulator::symmetric(std::size_t i) const {
  BigInt half = modulus_ / 2;
  return values_[i] > half ? values_[i] - modulus_ : values_[i];
}

std::vector<BigInt> CrtAccumulator::symmetric_all() const {
  std::vector<BigInt> out;
  out.reserve(values_.size());
  for (std::size_t i = 0; i < values_.size(); ++i) out.push_back(symmetric(i));
  return out;
}

std::vector<u64> charpoly_mod(const IntMatrix& m, const PrimeField& f) {
  const std::size_t n = m.rows();
  std::vector<u64> a(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = f.from_bigint(m(r, c));
  auto at = [&](std::size_t r, std::size_t c) -> u64& { return a[r * n + c]; };

  // Reduce to upper Hessenberg form by elimination similarities.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t pivot = n;
    for (std::size_t i = j + 1; i < n; ++i)
      if (at(i, j) != 0) {
        pivot = i;
        break;
      }
    if (pivot == n) continue;
    if (pivot != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(pivot, c), at(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, pivot), at(r, j + 1));
    }
    const u64 inv = f.inv(at(j + 1, j));
    for (std::size_t i = j + 2; i < n; ++i) {
      if (at(i, j) == 0) continue;
      const u64 u = f.mul(at(i, j), inv);
      for (std::size_t c = j; c < n; ++c) at(i, c) = f.sub(at(i, c), f.mul(u, at(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) at(r, j + 1) = f.add(at(r, j + 1), f.mul(u, at(r, i)));
    }
  }

  // p_m = char poly of the leading m x m block of the Hessenberg matrix.
  std::vector<std::vector<u64>> polys(n + 1);
  polys[0] = {f.one()};
  for (std::size_t m_ = 1; m_ <= n; ++m_) {
    auto& pm = polys[m_];
    const auto& prev = polys[m_ - 1];
    pm.assign(m_ + 1, 0);
    const u64 diag = at(m_ - 1, m_ - 1);
    for (std::size_t k = 0; k < m_; ++k) {
      pm[k + 1] = f.add(pm[k + 1], prev[k]);
      pm[k] = f.sub(pm[k], f.mul(diag, prev[k]));
    }
    u64 sub_product = f.one();
    for (std::size_t i = 1; i < m_; ++i) {
      sub_product = f.mul(sub_product, at(m_ - i, m_ - i - 1));
      if (sub_product == 0) break;
      const u64 h = f.mul(sub_product, at(m_ - i - 1, m_ - 1));
      if (h == 0) continue;
      const auto& lower = polys[m_ - i - 1];
      for (std::size_t k = 0; k < lower.size(); ++k) pm[k] = f.sub(pm[k], f.mul(h, lower[k]));
    }
  }
  std::vector<u64> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) out[k] = f.from_mont(polys[n][k]);
  return out;
}

std::optional<ModularInverse> inverse_mod(const IntMatrix& m, const PrimeField& f) {
  const std::size_t n = m.rows();
  const std::size_t w = 2 * n;
  std::vector<u64> a(n * w, 0);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r * w + c] = f.from_bigint(m(r, c));
    a[r * w + n + r] = f.one();
  }
  u64 det = f.one();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    for (std::size_t r = col; r < n; ++r)
      if (a[r * w + col] != 0) {
        pivot = r;
        break;
      }
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < w; ++c) std::swap(a[pivot * w + c], a[col * w + c]);
      det = f.neg(det);
    }
    const u64 pv = a[col * w + col];
    det = f.mul(det, pv);
    const u64 inv = f.inv(pv);
    for (std::size_t c = col; c < w; ++c) a[col * w + c] = f.mul(a[col * w + c], inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const u64 factor = a[r * w + col];
      if (factor == 0) continue;
      for (std::size_t c = col; c < w; ++c)
        a[r * w + c] = f.sub(a[r * w + c], f.mul(factor, a[col * w + c]));
    }
  }
  ModularInverse out;
  out.entries.resize(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.entries[r * n + c] = f.from_mont(a[r * w + n + c]);
  out.det = f.from_mont(det);
  return out;
}

double charpoly_coefficient_bits(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1.0;
  const auto norms = sorted_row_log2_norms(m);

  // Maclaurin: for symmetric M, |e_k(λ)| <= C(n,k) (‖M‖_F^2 / n)^{k/2}.
  double maclaurin_base = std::numeric_limits<double>::infinity();
  if (m.is_symmetric()) {
    BigInt fro = 0;
    for (const auto& v : m.values()) fro += v * v;
    maclaurin_base = fro == 0 ? -std::numeric_limits<double>::infinity()
                              : 0.5 * (std::log2(static_cast<long double>(fro)) - std::log2(double(n)));
  }

  double best = 0.0;
  double hadamard = 0.0;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) hadamard += norms[k - 1];
    double minor_bits = std::min(hadamard, maclaurin_base * double(k));
    if (k == 0) minor_bits = 0.0;
    best = std::max(best, log2_binomial(n, k) + minor_bits);
  }
  return best;
}

double cofactor_bits(const IntMatrix& m) {
  const auto norms = sorted_row_log2_norms(m);
  double bits = 0.0;
  for (std::size_t k = 0; k + 1 < norms.size(); ++k) bits += std::max(norms[k], 0.0);
  return bits;
}

}  // namespace connspec::detail
