#include "connspec/deformation.hpp"

#include "connspec/connection.hpp"
#include "connspec/errors.hpp"
#include "connspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace connspec {
namespace {

IntMatrix leading_block(const IntMatrix& m, std::size_t k) {
  IntMatrix out(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out(i, j) = m(i, j);
  return out;
}

std::vector<int> connect_column(const Complex& c, std::size_t position) {
  std::vector<int> col(position);
  for (std::size_t y = 0; y < position; ++y) col[y] = c.intersect(y, position) ? 1 : 0;
  return col;
}

std::vector<std::size_t> proper_faces(const Complex& c, std::size_t position) {
  std::vector<std::size_t> faces;
  for (std::size_t y = 0; y < position; ++y)
    if (c.is_proper_face(y, position)) faces.push_back(y);
  return faces;
}

RatMatrix bordered(const IntMatrix& L, const std::vector<int>& connect, const Rational& col_scale,
                   const Rational& row_scale) {
  const std::size_t k = L.rows();
  RatMatrix m(k + 1, k + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = Rational(L(i, j));
  for (std::size_t y = 0; y < k; ++y) {
    m(y, k) = col_scale * connect[y];
    m(k, y) = row_scale * connect[y];
  }
  m(k, k) = 1;
  return m;
}

}  // namespace

std::vector<AttachmentStep> attachment_steps(const Complex& c) {
  std::vector<AttachmentStep> steps;
  steps.reserve(c.size());
  std::vector<std::vector<Vertex>> prefix;
  for (std::size_t k = 0; k < c.size(); ++k) {
    AttachmentStep step;
    step.position = k;
    step.base = from_simplices(prefix);
    step.cell = c[k];
    for (std::size_t y : proper_faces(c, k)) step.attach_set.members.push_back(c[y]);
    step.connect_vector = connect_column(c, k);
    steps.push_back(std::move(step));
    prefix.push_back(c[k].vertices());
  }
  return steps;
}

long long attach_chi(const AttachmentStep& step) { return chi_subset(step.attach_set); }

RatMatrix k_of_t(const IntMatrix& L, const AttachmentStep& step, const Rational& t) {
  if (L.rows() != step.base.size() || L.cols() != step.base.size() ||
      step.connect_vector.size() != step.base.size())
    throw DimensionMismatch("k_of_t: base matrix is " + std::to_string(L.rows()) + "x" +
                            std::to_string(L.cols()) + " but the base has " +
                            std::to_string(step.base.size()) + " simplices");
  return bordered(L, step.connect_vector, t, Rational(1));
}

RatMatrix m_of_t(const IntMatrix& L, const AttachmentStep& step, const Rational& t) {
  if (L.rows() != step.base.size() || L.cols() != step.base.size() ||
      step.connect_vector.size() != step.base.size())
    throw DimensionMismatch("m_of_t: base matrix does not match the attachment step");
  return bordered(L, step.connect_vector, t, t);
}

RealMatrix m_of_t(const RealMatrix& L, const std::vector<int>& connect, double t) {
  const std::size_t k = L.rows();
  if (connect.size() != k) throw DimensionMismatch("m_of_t: connect vector length mismatch");
  RealMatrix m(k + 1, k + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = L(i, j);
  for (std::size_t y = 0; y < k; ++y) m(y, k) = m(k, y) = t * connect[y];
  m(k, k) = 1;
  return m;
}

CheckReport det_identity_check(const Complex& c, const std::vector<Rational>& t_samples) {
  CheckReport report{"det_identity"};
  const IntMatrix full = intersection_matrix(c);
  std::size_t evaluations = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const IntMatrix L = leading_block(full, k);
    const BigInt det_l = k == 0 ? BigInt(1) : det_exact(L);
    const std::vector<int> connect = connect_column(c, k);
    const long long chi_a = chi_subset(c, proper_faces(c, k));
    if (chi_a != 1 - c[k].omega())
      report.fail({{"step", k}, {"cell", c[k].to_string()}, {"chi_attach", chi_a}, {"expected", 1 - c[k].omega()}});
    for (const Rational& t : t_samples) {
      const Rational det_k = det_rational(bordered(L, connect, t, Rational(1)));
      const Rational det_m = det_rational(bordered(L, connect, t, t));
      const Rational want_k = (1 - t * chi_a) * Rational(det_l);
      const Rational want_m = (1 - t * t * chi_a) * Rational(det_l);
      evaluations += 2;
      if (det_k != want_k)
        report.fail({{"step", k}, {"variant", "K"}, {"t", t.str()}, {"det", det_k.str()}, {"expected", want_k.str()}});
      if (det_m != want_m)
        report.fail({{"step", k}, {"variant", "M"}, {"t", t.str()}, {"det", det_m.str()}, {"expected", want_m.str()}});
    }
  }
  report.stats["steps"] = c.size();
  report.stats["evaluations"] = evaluations;
  return report;
}

CheckReport crossing_report(const Complex& c) {
  CheckReport report{"crossing"};
  const IntMatrix full = intersection_matrix(c);
  Inertia before{};
  nlohmann::json steps = nlohmann::json::array();
  for (std::size_t k = 0; k < c.size(); ++k) {
    const Inertia after = exact_inertia(leading_block(full, k + 1));
    // At t = 0 the bordered matrix is L ⊕ [1].
    const Inertia start{before.p + 1, before.n, before.z};
    const bool even = c[k].dimension() % 2 == 0;
    const Inertia expected = even ? start : Inertia{before.p, before.n + 1, before.z};
    steps.push_back({{"cell", c[k].to_string()},
                     {"t0", {{"p", start.p}, {"n", start.n}, {"z", start.z}}},
                     {"t1", {{"p", after.p}, {"n", after.n}, {"z", after.z}}}});
    if (after != expected || after.z != 0)
      report.fail({{"step", k},
                   {"cell", c[k].to_string()},
                   {"inertia", {after.p, after.n, after.z}},
                   {"expected", {expected.p, expected.n, 0}}});
    before = after;
  }
  report.stats["steps"] = std::move(steps);
  report.stats["final"] = {{"p", before.p}, {"n", before.n}, {"z", before.z}};
  return report;
}

bool DeformationTrace::is_bijection() const {
  std::set<std::size_t> slots;
  for (const auto& a : assignment) slots.insert(a.slot);
  return slots.size() == assignment.size() && (slots.empty() || *slots.rbegin() == assignment.size() - 1);
}

bool DeformationTrace::sign_consistent(const Complex& c) const {
  if (assignment.size() != c.size()) return false;
  for (const auto& a : assignment)
    if (a.sign != c[a.simplex].omega()) return false;
  return true;
}

DeformationTrace track_branches(const Complex& c, std::size_t grid_steps) {
  if (grid_steps < 8) throw InvalidInput("track_branches needs at least 8 grid steps");
  DeformationTrace trace;
  const RealMatrix full = matrix_cast<double>(intersection_matrix(c));
  // owner[s] = simplex whose branch occupies slot s of the current spectrum.
  std::vector<std::size_t> owner;
  std::size_t negatives = 0;

  for (std::size_t k = 0; k < c.size(); ++k) {
    RealMatrix L(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) L(i, j) = full(i, j);
    const std::vector<int> connect = connect_column(c, k);

    StepTrace step;
    step.position = k;
    step.cell = c[k];
    step.attach_chi = chi_subset(c, proper_faces(c, k));

    // Sorted spectra on the grid; points too close to a sign change are set
    // aside and bracketed by extra samples.
    std::map<double, Spectrum> samples;
    auto sample = [&](double t) {
      if (!samples.count(t)) samples.emplace(t, eigenvalues_symmetric(m_of_t(L, connect, t)));
    };
    auto ambiguous = [](const Spectrum& s) {
      return std::any_of(s.eigenvalues.begin(), s.eigenvalues.end(),
                         [&](double v) { return std::fabs(v) <= 100 * s.tolerance; });
    };
    for (std::size_t j = 0; j <= grid_steps; ++j) sample(static_cast<double>(j) / grid_steps);

    std::set<double> unresolved;
    for (bool changed = true; changed;) {
      changed = false;
      for (auto it = samples.begin(); it != samples.end(); ++it) {
        const double t = it->first;
        if (unresolved.count(t) || !ambiguous(it->second)) continue;
        if (t == 0.0 || t == 1.0)
          throw BranchAmbiguity("eigenvalue at zero at an endpoint while attaching " + c[k].to_string());
        const double left = std::prev(it)->first;
        const double right = std::next(it)->first;
        const double delta = std::min(t - left, right - t) / 4;
        unresolved.insert(t);
        sample(t - delta);
        sample(t + delta);
        ++step.refinements;
        if (samples.size() > kMaxBranchSamples)
          throw BranchAmbiguity("sign of a branch unresolved after " + std::to_string(kMaxBranchSamples) +
                                " samples while attaching " + c[k].to_string());
        changed = true;
        break;
      }
    }

    // Negative counts along the resolved samples must step up at most once,
    // and only for an odd cell.
    const bool odd = c[k].dimension() % 2 == 1;
    std::optional<double> last_t;
    std::size_t last_neg = negatives;
    for (const auto& [t, s] : samples) {
      if (unresolved.count(t)) continue;
      const std::size_t neg = float_inertia(s).n;
      if (neg != last_neg) {
        if (!odd || step.crossing || neg != negatives + 1 || !last_t)
          throw BranchAmbiguity("unexpected sign pattern while attaching " + c[k].to_string());
        step.crossing = std::pair{*last_t, t};
      }
      last_t = t;
      last_neg = neg;
    }
    if (odd && !step.crossing) throw BranchAmbiguity("no zero crossing found for odd cell " + c[k].to_string());

    // The new eigenvalue 1 enters at the lowest slot of its tie cluster.
    const auto& start = samples.at(0.0).eigenvalues;
    std::size_t inserted = 0;
    while (inserted < start.size() && start[inserted] < 1 - 1e-9) ++inserted;
    step.inserted_slot = inserted;
    owner.insert(owner.begin() + static_cast<std::ptrdiff_t>(inserted), k);
    step.final_slot = inserted;
    if (odd) {
      // Sorted order is preserved along the path, so the branch that crosses
      // zero is the one in slot `negatives`.
      if (inserted != negatives) {
        trace.transfers.push_back({k, k, owner[negatives], negatives, inserted});
        std::swap(owner[negatives], owner[inserted]);
        step.final_slot = negatives;
      }
      ++negatives;
    }

    for (const auto& [t, s] : samples) step.samples.push_back({t, s.eigenvalues});
    trace.steps.push_back(std::move(step));
  }

  const auto final_values = c.empty() ? std::vector<double>{} : trace.steps.back().samples.back().eigenvalues;
  trace.assignment.resize(c.size());
  for (std::size_t s = 0; s < owner.size(); ++s) {
    const double v = final_values[s];
    trace.assignment[owner[s]] = {owner[s], s, v, v > 0 ? 1 : -1};
  }
  return trace;
}

nlohmann::json assignment_json(const Complex& c, const DeformationTrace& trace) {
  nlohmann::json map = nlohmann::json::object();
  for (const auto& a : trace.assignment)
    map[c[a.simplex].to_string()] = {{"eigenvalue", a.eigenvalue}, {"sign", a.sign}, {"step", a.simplex}, {"slot", a.slot}};
  nlohmann::json transfers = nlohmann::json::array();
  for (const auto& tr : trace.transfers)
    transfers.push_back({{"step", tr.step},
                         {"cell", c[tr.cell].to_string()},
                         {"displaced", c[tr.displaced].to_string()},
                         {"from_slot", tr.from_slot},
                         {"to_slot", tr.to_slot}});
  return {{"assignment", map},
          {"transfers", transfers},
          {"bijection", trace.is_bijection()},
          {"sign_consistent", trace.sign_consistent(c)}};
}

}  // namespace connspec
