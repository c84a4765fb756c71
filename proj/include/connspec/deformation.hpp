#pragma once

// Cell-by-cell attachment: the deformation K(t) between L and the connection
// matrix of G +_A x, its determinant identity, and a branch tracker that
// follows every eigenvalue through the build.

#include "connspec/complex.hpp"
#include "connspec/exact.hpp"
#include "connspec/matrix.hpp"
#include "connspec/report.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace connspec {

/// Attaching simplex `cell` (position `position` in the CW order) to the
/// prefix `base` along all of its proper faces.
struct AttachmentStep {
  std::size_t position = 0;
  Complex base;
  Simplex cell{0};
  SimplexSubset attach_set;
  /// c(y) = 1 iff y ∩ cell ≠ ∅, indexed by base positions.
  std::vector<int> connect_vector;
};

/// All steps of the canonical build of c (one per simplex).
std::vector<AttachmentStep> attachment_steps(const Complex& c);

/// χ(A) of the attaching set.
long long attach_chi(const AttachmentStep& step);

/// K(t): the base matrix L bordered by the new cell, with the new column
/// scaled by t off the diagonal. Throws DimensionMismatch if L does not match
/// the base.
RatMatrix k_of_t(const IntMatrix& L, const AttachmentStep& step, const Rational& t);

/// Symmetric homotopy M(t) = [[L, t c], [t cᵀ, 1]].
RatMatrix m_of_t(const IntMatrix& L, const AttachmentStep& step, const Rational& t);
RealMatrix m_of_t(const RealMatrix& L, const std::vector<int>& connect, double t);

/// det K(t) = (1 - t χ(A)) det L and det M(t) = (1 - t² χ(A)) det L at every
/// step of the build and every sampled t.
CheckReport det_identity_check(const Complex& c, const std::vector<Rational>& t_samples = {
                                                     Rational(0), Rational(1, 4), Rational(1, 2),
                                                     Rational(3, 4), Rational(1)});

/// Exact inertia before and after each attachment: an even cell adds one
/// positive eigenvalue, an odd cell one negative, and z stays 0.
CheckReport crossing_report(const Complex& c);

struct BranchSample {
  double t = 0;
  std::vector<double> eigenvalues;  // sorted ascending
};

struct StepTrace {
  std::size_t position = 0;
  Simplex cell{0};
  long long attach_chi = 0;
  std::vector<BranchSample> samples;  // sorted by t, including refinements
  std::size_t inserted_slot = 0;      // slot of the new eigenvalue 1 at t = 0
  std::size_t final_slot = 0;         // slot owned by the cell after the step
  /// Bracket (t_lo, t_hi) around the zero crossing of an odd cell.
  std::optional<std::pair<double, double>> crossing;
  std::size_t refinements = 0;
};

struct BranchAssignment {
  std::size_t simplex = 0;  // position in the complex
  std::size_t slot = 0;     // index into the ascending eigenvalues of L
  double eigenvalue = 0;
  int sign = 0;
};

/// A step where the new odd cell took over the crossing slot from an older
/// cell, which moved to the new cell's inserted slot.
struct SlotTransfer {
  std::size_t step = 0;
  std::size_t cell = 0;
  std::size_t displaced = 0;
  std::size_t from_slot = 0;
  std::size_t to_slot = 0;
};

struct DeformationTrace {
  std::vector<StepTrace> steps;
  std::vector<BranchAssignment> assignment;  // indexed by simplex position
  std::vector<SlotTransfer> transfers;

  bool is_bijection() const;
  /// sign(eigenvalue) = ω(simplex) for every assignment.
  bool sign_consistent(const Complex& c) const;
};

constexpr std::size_t kMaxBranchSamples = std::size_t{1} << 14;

/// Follows the sorted eigenvalues of M(t) on a uniform grid for every step.
/// Throws InvalidInput if grid_steps < 8 and BranchAmbiguity if a sign cannot
/// be resolved within kMaxBranchSamples points per step.
DeformationTrace track_branches(const Complex& c, std::size_t grid_steps = 64);

nlohmann::json assignment_json(const Complex& c, const DeformationTrace& trace);

}  // namespace connspec
