#include "connspec/hodge.hpp"

#include "connspec/exact.hpp"
#include "connspec/spectra.hpp"

#include <cmath>

namespace connspec {
namespace {

// Offsets of each dimension's block in the full cell order.
std::vector<std::size_t> block_offsets(const std::vector<std::size_t>& f) {
  std::vector<std::size_t> offsets(f.size() + 1, 0);
  for (std::size_t k = 0; k < f.size(); ++k) offsets[k + 1] = offsets[k] + f[k];
  return offsets;
}

IntMatrix block(const IntMatrix& m, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
  IntMatrix out(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = m(r0 + r, c0 + c);
  return out;
}

long long signed_sum(const std::vector<long long>& values) {
  long long s = 0;
  for (std::size_t k = 0; k < values.size(); ++k) s += k % 2 == 0 ? values[k] : -values[k];
  return s;
}

}  // namespace

BoundaryOperators boundary_matrices(const Complex& c) {
  BoundaryOperators ops;
  ops.f_vector = c.f_vector();
  const auto offsets = block_offsets(ops.f_vector);
  ops.d.emplace_back(0, ops.f_vector.empty() ? 0 : ops.f_vector[0]);
  for (std::size_t k = 1; k < ops.f_vector.size(); ++k) {
    IntMatrix dk(ops.f_vector[k - 1], ops.f_vector[k]);
    for (std::size_t j = 0; j < ops.f_vector[k]; ++j) {
      const auto& verts = c[offsets[k] + j].vertices();
      for (std::size_t i = 0; i < verts.size(); ++i) {
        std::vector<Vertex> face;
        face.reserve(verts.size() - 1);
        for (std::size_t v = 0; v < verts.size(); ++v)
          if (v != i) face.push_back(verts[v]);
        const std::size_t row = c.index_of(Simplex(std::move(face))) - offsets[k - 1];
        dk(row, j) = i % 2 == 0 ? 1 : -1;
      }
    }
    ops.d.push_back(std::move(dk));
  }
  return ops;
}

CheckReport chain_complex_check(const BoundaryOperators& d) {
  CheckReport report{"chain_complex"};
  for (std::size_t k = 1; k + 1 < d.d.size(); ++k) {
    const IntMatrix dd = d.d[k] * d.d[k + 1];
    if (dd != IntMatrix(dd.rows(), dd.cols())) report.fail({{"k", k}});
  }
  return report;
}

IntMatrix dirac_matrix(const BoundaryOperators& d) {
  const auto offsets = block_offsets(d.f_vector);
  const std::size_t n = offsets.back();
  IntMatrix D(n, n);
  for (std::size_t k = 1; k < d.d.size(); ++k) {
    const IntMatrix& dk = d.d[k];
    for (std::size_t r = 0; r < dk.rows(); ++r)
      for (std::size_t c = 0; c < dk.cols(); ++c)
        if (dk(r, c) != 0) {
          D(offsets[k - 1] + r, offsets[k] + c) = dk(r, c);
          D(offsets[k] + c, offsets[k - 1] + r) = dk(r, c);
        }
  }
  return D;
}

HodgeOperator hodge_matrix(const BoundaryOperators& d) {
  const IntMatrix D = dirac_matrix(d);
  HodgeOperator h{D * D, {}};
  const auto offsets = block_offsets(d.f_vector);
  const std::size_t dims = d.f_vector.size();
  for (std::size_t a = 0; a < dims; ++a)
    for (std::size_t b = 0; b < dims; ++b) {
      if (a == b) continue;
      for (std::size_t r = offsets[a]; r < offsets[a + 1]; ++r)
        for (std::size_t c = offsets[b]; c < offsets[b + 1]; ++c)
          if (h.H(r, c) != 0)
            throw InvalidInput("D^2 is not block diagonal: boundary maps do not form a chain complex");
    }
  for (std::size_t k = 0; k < dims; ++k)
    h.blocks.push_back(block(h.H, offsets[k], offsets[k], d.f_vector[k], d.f_vector[k]));
  return h;
}

std::vector<long long> betti_numbers(const BoundaryOperators& d) {
  const std::size_t dims = d.f_vector.size();
  std::vector<long long> ranks(dims + 1, 0);
  for (std::size_t k = 1; k < dims; ++k) ranks[k] = static_cast<long long>(rank_exact(d.d[k]));
  std::vector<long long> betti(dims);
  for (std::size_t k = 0; k < dims; ++k)
    betti[k] = static_cast<long long>(d.f_vector[k]) - ranks[k] - ranks[k + 1];
  return betti;
}

std::vector<long long> betti_numbers(const Complex& c) { return betti_numbers(boundary_matrices(c)); }

CheckReport mckean_singer_check(const Complex& c, const std::vector<unsigned>& powers,
                                const std::vector<double>& t_values) {
  CheckReport report{"mckean_singer"};
  const HodgeOperator h = hodge_matrix(boundary_matrices(c));
  const long long chi = euler_characteristic(c);

  nlohmann::json exact = nlohmann::json::object();
  for (unsigned m : powers) {
    BigInt str = 0;
    for (std::size_t k = 0; k < h.blocks.size(); ++k) {
      const BigInt t = trace_power(h.blocks[k], m);
      if (k % 2 == 0)
        str += t;
      else
        str -= t;
    }
    const long long expected = m == 0 ? chi : 0;
    exact[std::to_string(m)] = to_string(str);
    if (str != expected) report.fail({{"power", m}, {"str", to_string(str)}, {"expected", expected}});
  }
  report.stats["str_H_power"] = exact;

  std::vector<Spectrum> spectra;
  for (const auto& b : h.blocks) spectra.push_back(eigenvalues_symmetric(b));
  nlohmann::json heat = nlohmann::json::object();
  for (double t : t_values) {
    double str = 0;
    for (std::size_t k = 0; k < spectra.size(); ++k) {
      double tr = 0;
      for (double lambda : spectra[k].eigenvalues) tr += std::exp(-t * lambda);
      str += k % 2 == 0 ? tr : -tr;
    }
    heat[std::to_string(t)] = str;
    if (std::fabs(str - static_cast<double>(chi)) > 1e-8)
      report.fail({{"t", t}, {"str_exp", str}, {"expected", chi}});
  }
  report.stats["str_exp_tH"] = heat;
  report.stats["euler_characteristic"] = chi;
  return report;
}

CheckReport euler_poincare_check(const Complex& c) {
  CheckReport report{"euler_poincare"};
  const auto betti = betti_numbers(c);
  const long long chi = euler_characteristic(c);
  const long long alt = signed_sum(betti);
  report.stats["betti"] = betti;
  report.stats["euler_characteristic"] = chi;
  if (alt != chi) report.fail({{"alternating_betti_sum", alt}, {"euler_characteristic", chi}});
  return report;
}

}  // namespace connspec
