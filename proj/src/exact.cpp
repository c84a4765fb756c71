#include "connspec/exact.hpp"

#include "modular.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <regex>

namespace connspec {

namespace {

// out = (a*b - c*d) / divisor, division exact.
void bareiss_update(BigInt& out, const BigInt& a, const BigInt& b, const BigInt& c, const BigInt& d,
                    const BigInt& divisor, mpz_t scratch) {
  mpz_mul(scratch, a.backend().data(), b.backend().data());
  mpz_submul(scratch, c.backend().data(), d.backend().data());
  mpz_divexact(out.backend().data(), scratch, divisor.backend().data());
}

class MpzScratch {
 public:
  MpzScratch() { mpz_init(value_); }
  ~MpzScratch() { mpz_clear(value_); }
  MpzScratch(const MpzScratch&) = delete;
  MpzScratch& operator=(const MpzScratch&) = delete;
  mpz_ptr get() { return value_; }

 private:
  mpz_t value_;
};

bool fits_small(const IntMatrix& m, std::int64_t& max_abs) {
  max_abs = 0;
  for (const auto& v : m.values()) {
    if (abs(v) > BigInt(std::numeric_limits<std::int32_t>::max())) return false;
    max_abs = std::max<std::int64_t>(max_abs, static_cast<std::int64_t>(abs(v)));
  }
  return true;
}

// Checks m * candidate == I exactly.
bool is_inverse(const IntMatrix& m, const std::vector<BigInt>& candidate) {
  const std::size_t n = m.rows();
  std::int64_t max_m = 0;
  if (fits_small(m, max_m)) {
    BigInt max_g = 0;
    for (const auto& v : candidate) max_g = std::max(max_g, BigInt(abs(v)));
    // Accumulate in __int128 when every partial sum provably fits.
    if (max_g < (BigInt(1) << 62) && BigInt(max_m) * max_g * BigInt(n + 1) < (BigInt(1) << 120)) {
      std::vector<std::int64_t> a(n * n), g(n * n);
      for (std::size_t i = 0; i < n * n; ++i) {
        a[i] = static_cast<std::int64_t>(m.values()[i]);
        g[i] = static_cast<std::int64_t>(candidate[i]);
      }
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          __int128 sum = 0;
          for (std::size_t k = 0; k < n; ++k) sum += static_cast<__int128>(a[i * n + k]) * g[k * n + j];
          if (sum != (i == j ? 1 : 0)) return false;
        }
      return true;
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      BigInt sum = 0;
      for (std::size_t k = 0; k < n; ++k) sum += m(i, k) * candidate[k * n + j];
      if (sum != (i == j ? 1 : 0)) return false;
    }
  return true;
}

}  // namespace

namespace {

// Base-10 only: the string constructors treat a leading 0 as octal.
BigInt parse_decimal(const std::string& digits, const std::string& raw) {
  static const std::regex pattern("[+-]?[0-9]+");
  if (!std::regex_match(digits, pattern)) throw InvalidInput("cannot parse rational '" + raw + "'");
  BigInt value;
  const char* start = digits.c_str() + (digits[0] == '+' ? 1 : 0);
  mpz_set_str(value.backend().data(), start, 10);
  return value;
}

}  // namespace

Rational parse_rational(const std::string& raw) {
  std::string text;
  for (char ch : raw)
    if (ch != ' ' && ch != '\t') text.push_back(ch);
  if (text.empty()) throw InvalidInput("empty rational literal");
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    const BigInt num = parse_decimal(text.substr(0, slash), raw);
    const BigInt den = parse_decimal(text.substr(slash + 1), raw);
    if (den == 0) throw InvalidInput("zero denominator in '" + raw + "'");
    return Rational(num, den);
  }
  if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string fraction = text.substr(dot + 1);
    if (fraction.empty() || fraction.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("cannot parse rational '" + raw + "'");
    const BigInt num = parse_decimal(text.substr(0, dot) + fraction, raw);
    return Rational(num, pow(BigInt(10), static_cast<unsigned>(fraction.size())));
  }
  return Rational(parse_decimal(text, raw));
}

IntMatrix int_matrix(const std::vector<std::vector<long long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

CharPoly::CharPoly(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty() || coefficients_.back() != 1)
    throw InvalidInput("characteristic polynomial must be monic");
}

BigInt CharPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt det_exact(const IntMatrix& input) {
  input.require_square();
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix m = input;
  MpzScratch scratch;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = n;
      for (std::size_t i = k + 1; i < n; ++i)
        if (m(i, k) != 0) {
          swap_row = i;
          break;
        }
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(swap_row, c));
      sign = -sign;
    }
    const BigInt& pivot = m(k, k);
    const bool pivot_is_prev = pivot == prev;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (pivot_is_prev && m(i, k) == 0) continue;
      for (std::size_t j = k + 1; j < n; ++j)
        bareiss_update(m(i, j), m(i, j), pivot, m(i, k), m(k, j), prev, scratch.get());
      m(i, k) = 0;
    }
    prev = pivot;
  }
  return sign * m(n - 1, n - 1);
}

Rational det_rational(const RatMatrix& m) {
  m.require_square();
  const std::size_t n = m.rows();
  IntMatrix scaled(n, n);
  BigInt scale = 1;
  for (std::size_t c = 0; c < n; ++c) {
    BigInt lcm_den = 1;
    for (std::size_t r = 0; r < n; ++r) lcm_den = lcm(lcm_den, BigInt(denominator(m(r, c))));
    for (std::size_t r = 0; r < n; ++r)
      scaled(r, c) = numerator(m(r, c)) * (lcm_den / BigInt(denominator(m(r, c))));
    scale *= lcm_den;
  }
  return Rational(det_exact(scaled), scale);
}

IntMatrix inverse_exact_unimodular(const IntMatrix& m) {
  m.require_square();
  const std::size_t n = m.rows();
  if (n == 0) return m;
  const double needed_bits = detail::cofactor_bits(m) + 2.0;
  detail::CrtAccumulator acc(n * n);
  for (std::size_t k = 0;; ++k) {
    detail::PrimeField field(detail::crt_prime(k));
    auto inv = detail::inverse_mod(m, field);
    const detail::u64 p = field.modulus();
    if (!inv || (inv->det != 1 && inv->det != p - 1)) throw NotUnimodular(det_exact(m));
    acc.add(inv->entries, p);
    auto candidate = acc.symmetric_all();
    if (is_inverse(m, candidate)) {
      IntMatrix out(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(i, j) = std::move(candidate[i * n + j]);
      return out;
    }
    if (acc.log2_modulus() > needed_bits + 64) throw NotUnimodular(det_exact(m));
  }
}

CharPoly char_poly_exact(const IntMatrix& m) {
  m.require_square();
  const std::size_t n = m.rows();
  if (n == 0) return CharPoly();
  const double needed_bits = detail::charpoly_coefficient_bits(m) + 2.0 + 8.0;
  detail::CrtAccumulator acc(n + 1);
  for (std::size_t k = 0; acc.log2_modulus() < needed_bits; ++k) {
    detail::PrimeField field(detail::crt_prime(k));
    acc.add(detail::charpoly_mod(m, field), field.modulus());
  }
  return CharPoly(acc.symmetric_all());
}

Inertia descartes_inertia(const CharPoly& poly) {
  const auto& c = poly.coefficients();
  Inertia out;
  std::size_t first = 0;
  while (first < c.size() && c[first] == 0) ++first;
  out.z = first;

  auto sign_changes = [&](bool alternate) {
    std::size_t changes = 0;
    int last = 0;
    for (std::size_t k = first; k < c.size(); ++k) {
      int s = c[k].sign();
      if (s == 0) continue;
      if (alternate && (k % 2 == 1)) s = -s;
      if (last != 0 && s != last) ++changes;
      last = s;
    }
    return changes;
  };
  out.p = sign_changes(false);
  out.n = sign_changes(true);
  if (out.dimension() != poly.degree())
    throw InvalidInput("polynomial is not real-rooted; Descartes count is not exact");
  return out;
}

Inertia exact_inertia(const IntMatrix& symmetric) {
  symmetric.require_square();
  if (!symmetric.is_symmetric()) throw NotSymmetric();
  return descartes_inertia(char_poly_exact(symmetric));
}

std::size_t rank_exact(const IntMatrix& input) {
  IntMatrix m = input;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  MpzScratch scratch;
  BigInt prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r)
      if (m(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot == rows) continue;
    if (pivot != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(pivot, j), m(rank, j));
    const BigInt& pv = m(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t j = c + 1; j < cols; ++j)
        bareiss_update(m(r, j), m(r, j), pv, m(r, c), m(rank, j), prev, scratch.get());
      m(r, c) = 0;
    }
    prev = pv;
    ++rank;
  }
  return rank;
}

BigInt trace(const IntMatrix& m) {
  m.require_square();
  BigInt t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

BigInt trace_power(const IntMatrix& m, unsigned power) {
  m.require_square();
  if (power == 0) return BigInt(m.rows());
  IntMatrix acc = m;
  for (unsigned k = 1; k < power; ++k) acc = acc * m;
  return trace(acc);
}

}  // namespace connspec
