#include "connspec/connection.hpp"

#include "connspec/errors.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

namespace connspec {
namespace {

using Positions = std::vector<std::size_t>;

struct Manifolds {
  std::vector<Positions> wplus;
  std::vector<Positions> wminus;
};

Manifolds manifolds(const Complex& c) {
  Manifolds m{std::vector<Positions>(c.size()), std::vector<Positions>(c.size())};
  for (std::size_t j = 0; j < c.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (c.is_proper_face(i, j)) {
        m.wplus[i].push_back(j);
        m.wminus[j].push_back(i);
      }
  return m;
}

Positions meet(const Positions& a, const Positions& b) {
  Positions out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::string entry_name(const Complex& c, std::size_t x, std::size_t y) {
  return c[x].to_string() + "," + c[y].to_string();
}

}  // namespace

IntMatrix intersection_matrix(const Complex& c) {
  IntMatrix l(c.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    l(i, i) = 1;
    for (std::size_t j = i + 1; j < c.size(); ++j)
      if (c.intersect(i, j)) l(i, j) = l(j, i) = 1;
  }
  return l;
}

ConnectionOperator::ConnectionOperator(Complex complex)
    : complex_(std::move(complex)), matrix_(intersection_matrix(complex_)), det_(det_exact(matrix_)) {
  if (abs(det_) != 1) throw NotUnimodular(det_);
}

ConnectionOperator connection_matrix(const Complex& c) {
  if (c.empty()) throw EmptyComplex();
  return ConnectionOperator(c);
}

IntMatrix connection_matrix(const ProductComplex& p) {
  if (p.size() == 0) throw EmptyComplex();
  return kronecker(intersection_matrix(p.first()), intersection_matrix(p.second()));
}

GreenOperator green(const ConnectionOperator& L) { return GreenOperator(inverse_exact_unimodular(L.matrix())); }

BigInt total_energy(const GreenOperator& g) {
  BigInt sum = 0;
  for (const auto& v : g.matrix().values()) sum += v;
  return sum;
}

BigInt super_trace(const IntMatrix& m, const Complex& c) {
  if (m.rows() != c.size() || m.cols() != c.size())
    throw DimensionMismatch("super_trace: matrix is " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()) + ", complex has " + std::to_string(c.size()) +
                            " simplices");
  BigInt sum = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].omega() > 0)
      sum += m(i, i);
    else
      sum -= m(i, i);
  }
  return sum;
}

IntMatrix stanley_matrix(const Complex& c) {
  IntMatrix a(c.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < c.size(); ++j)
      if (!c.is_face(i, j)) a(i, j) = -1;
  return a;
}

BigInt stanley_det(const Complex& c) {
  if (c.empty()) throw EmptyComplex();
  return det_exact(stanley_matrix(c));
}

CheckReport green_diagonal_check(const ConnectionOperator& L, const GreenOperator& g) {
  CheckReport report{"green_diagonal"};
  const Complex& c = L.complex();
  const Manifolds m = manifolds(c);
  for (std::size_t x = 0; x < c.size(); ++x) {
    Positions sphere = m.wminus[x];
    sphere.insert(sphere.end(), m.wplus[x].begin(), m.wplus[x].end());
    const long long expected = 1 - chi_subset(c, sphere);
    if (g(x, x) != expected)
      report.fail({{"simplex", c[x].to_string()}, {"g", to_string(g(x, x))}, {"expected", expected}});
  }
  report.stats["simplices"] = c.size();
  return report;
}

CheckReport facet_lemma_check(const ConnectionOperator& L, const GreenOperator& g) {
  CheckReport report{"facet_lemma"};
  const Complex& c = L.complex();
  std::size_t pairs = 0;
  for (std::size_t x : c.facets())
    for (std::size_t y = 0; y < x; ++y) {
      if (!c.is_proper_face(y, x)) continue;
      ++pairs;
      if (g(x, y) != c[y].omega())
        report.fail({{"facet", c[x].to_string()},
                     {"face", c[y].to_string()},
                     {"g", to_string(g(x, y))},
                     {"expected", c[y].omega()}});
    }
  report.stats["pairs"] = pairs;
  return report;
}

CheckReport energy_check(const ConnectionOperator& L, const GreenOperator& g) {
  CheckReport report{"energy"};
  const BigInt energy = total_energy(g);
  const long long chi = euler_characteristic(L.complex());
  report.stats["energy"] = to_string(energy);
  report.stats["euler_characteristic"] = chi;
  if (energy != chi) report.fail({{"energy", to_string(energy)}, {"euler_characteristic", chi}});
  return report;
}

CheckReport unimodularity_check(const ConnectionOperator& L, const GreenOperator& g) {
  CheckReport report{"unimodularity"};
  const auto counts = parity_counts(L.complex());
  const int expected = counts.odd % 2 == 0 ? 1 : -1;
  report.stats["det"] = to_string(L.determinant());
  report.stats["odd_simplices"] = counts.odd;
  if (L.determinant() != expected) report.fail({{"det", to_string(L.determinant())}, {"expected", expected}});
  if (L.matrix() * g.matrix() != IntMatrix::identity(L.size())) report.fail({{"inverse", "L*g != I"}});
  return report;
}

CheckReport super_trace_check(const ConnectionOperator& L, const GreenOperator& g) {
  CheckReport report{"super_trace"};
  const Complex& c = L.complex();
  const long long chi = euler_characteristic(c);
  const BigInt sl = super_trace(L.matrix(), c);
  const BigInt sg = super_trace(g.matrix(), c);
  const BigInt si = super_trace(IntMatrix::identity(c.size()), c);
  report.stats["str_L"] = to_string(sl);
  report.stats["str_g"] = to_string(sg);
  report.stats["str_I"] = to_string(si);
  report.stats["euler_characteristic"] = chi;
  for (const auto& [name, value] : {std::pair{"str_L", &sl}, {"str_g", &sg}, {"str_I", &si}})
    if (*value != chi) report.fail({{"trace", name}, {"value", to_string(*value)}, {"expected", chi}});
  return report;
}

CheckReport stanley_check(const Complex& c) {
  CheckReport report{"stanley"};
  const BigInt det = stanley_det(c);
  const long long expected = 1 - euler_characteristic(c);
  report.stats["det"] = to_string(det);
  report.stats["expected"] = expected;
  if (det != expected) report.fail({{"det", to_string(det)}, {"expected", expected}});
  return report;
}

namespace {

// Connected component of every simplex (simplices linked when they intersect).
std::vector<std::size_t> components(const Complex& c) {
  std::vector<std::size_t> parent(c.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto root = [&parent](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t x = 0; x < c.size(); ++x)
    for (std::size_t y = x + 1; y < c.size(); ++y)
      if (c.intersect(x, y)) parent[root(y)] = root(x);
  std::vector<std::size_t> out(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out[i] = root(i);
  return out;
}

}  // namespace

CheckReport green_candidate_report(const ConnectionOperator& L, const GreenOperator& g) {
  CheckReport report{"green_candidates"};
  const Complex& c = L.complex();
  const std::size_t n = c.size();
  const Manifolds m = manifolds(c);
  const auto facets = c.facets();
  std::vector<bool> is_facet(n, false);
  for (std::size_t f : facets) is_facet[f] = true;
  const std::vector<std::size_t> component = components(c);

  std::size_t pairs = 0, agree1 = 0, agree2 = 0;
  std::size_t guaranteed1 = 0, guaranteed2 = 0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      ++pairs;
      const long long chi_plus = chi_subset(c, meet(m.wplus[x], m.wplus[y]));
      const long long chi_minus = chi_subset(c, meet(m.wminus[x], m.wminus[y]));
      const long long chi_cap = c.intersect(x, y) ? 1 : 0;
      const long long cand1 = (1 - chi_plus) * (1 - chi_minus);
      const long long cand2 = (chi_cap - chi_plus) * (chi_cap - chi_minus);
      const bool ok1 = g(x, y) == cand1;
      const bool ok2 = g(x, y) == cand2;
      agree1 += ok1;
      agree2 += ok2;

      const bool class1 = x == y || (is_facet[x] && c.is_proper_face(y, x));
      const bool class2 = component[x] != component[y];
      if (class1) {
        ++guaranteed1;
        if (!ok1)
          report.fail({{"candidate", 1}, {"pair", entry_name(c, x, y)}, {"g", to_string(g(x, y))}, {"value", cand1}});
      }
      if (class2 && !ok2) {
        report.fail({{"candidate", 2}, {"pair", entry_name(c, x, y)}, {"g", to_string(g(x, y))}, {"value", cand2}});
      }
      guaranteed2 += class2;
    }
  auto percent = [&](std::size_t k) { return pairs == 0 ? 100.0 : 100.0 * static_cast<double>(k) / pairs; };
  report.stats["pairs"] = pairs;
  report.stats["candidate1_agreement_percent"] = percent(agree1);
  report.stats["candidate2_agreement_percent"] = percent(agree2);
  report.stats["candidate1_guaranteed_pairs"] = guaranteed1;
  report.stats["candidate2_guaranteed_pairs"] = guaranteed2;
  report.stats["experimental"] = true;
  return report;
}

}  // namespace connspec
