#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dsfusion/frame.hpp"

namespace dsfusion {

inline constexpr double kMassSumTolerance = 1e-9;
inline constexpr double kTotalConflictThreshold = 1e-12;

/// A basic belief assignment: a probability distribution over the 2^n subsets
/// of a frame, stored densely and indexed by subset bitmask.
///
/// Every instance sums to one. Mass on the empty set is allowed (the
/// unnormalized space); is_normalized() tells whether the value also belongs
/// to the normalized space, i.e. m(empty) == 0 or it is the total-conflict
/// state with all mass on the empty set.
class MassFunction {
 public:
  /// Validates a dense array of 2^n masses. Entries must be >= -tolerance and
  /// sum to 1 within tolerance; slightly negative entries are clamped to zero
  /// and the array is rescaled to sum to exactly one.
  MassFunction(Frame frame, std::vector<double> masses,
               double tolerance = kMassSumTolerance);

  /// Builds from (subset, value) pairs; unlisted subsets get zero. Repeated
  /// subsets accumulate.
  static MassFunction from_focal(Frame frame,
                                 const std::vector<std::pair<Subset, double>>& focal,
                                 double tolerance = kMassSumTolerance);

  /// m(frame) = 1: the identity of both combination rules.
  static MassFunction vacuous(Frame frame);
  /// m(empty) = 1: the absorbing total-conflict state.
  static MassFunction total_conflict(Frame frame);

  const Frame& frame() const noexcept { return frame_; }
  std::span<const double> masses() const noexcept { return masses_; }
  double operator[](Subset a) const { return masses_.at(a); }
  std::size_t size() const noexcept { return masses_.size(); }

  bool is_normalized() const noexcept;
  bool is_total_conflict() const noexcept;
  double conflict() const noexcept { return masses_[0]; }

  /// Subsets whose mass exceeds `threshold`, in ascending bitmask order.
  std::vector<Subset> focal_elements(double threshold = 0.0) const;

 private:
  Frame frame_;
  std::vector<double> masses_;
};

/// Largest absolute entrywise difference. Throws FrameMismatch on different frames.
double max_abs_difference(const MassFunction& a, const MassFunction& b);

// Combination rules.

/// Conjunctive rule without renormalization: r(A) = sum over B&C == A of m1(B) m2(C).
/// Direct O(4^n) enumeration over pairs of nonzero entries.
MassFunction combine_unnormalized(const MassFunction& m1, const MassFunction& m2);

/// Same result as combine_unnormalized computed through the commonality
/// transform in O(n 2^n).
MassFunction fast_combine_unnormalized(const MassFunction& m1, const MassFunction& m2);

/// Dempster's rule. Both inputs must satisfy is_normalized(); total conflict
/// yields the total-conflict state, which is absorbing.
MassFunction combine_normalized(const MassFunction& m1, const MassFunction& m2);

/// Same as combine_normalized, using the fast unnormalized kernel.
MassFunction fast_combine_normalized(const MassFunction& m1, const MassFunction& m2);

/// Divides out the conflict mass. m(empty) >= 1 - 1e-12 maps to total conflict.
MassFunction normalize(const MassFunction& m);

// Set functions.

double belief(const MassFunction& m, Subset a);
double plausibility(const MassFunction& m, Subset a);
double commonality(const MassFunction& m, Subset a);

// Lattice transforms over all 2^n subsets, O(n 2^n) each.

/// Q[A] = sum of m(B) over supersets B of A.
std::vector<double> commonality_transform(const MassFunction& m);
/// Bel[A] = sum of m(B) over subsets B of A.
std::vector<double> belief_transform(const MassFunction& m);
/// Pl[A] = 1 - Bel[complement of A].
std::vector<double> plausibility_transform(const MassFunction& m);

/// Moebius inversion of commonality_transform. Throws NotAMass when the
/// recovered masses have an entry below -1e-9 or do not sum to 1 within 1e-9.
MassFunction inverse_commonality(std::span<const double> q, const Frame& frame);

// In-place kernels on raw dense arrays (length must be a power of two).
void superset_zeta(std::span<double> values);
void superset_moebius(std::span<double> values);
void subset_zeta(std::span<double> values);

}  // namespace dsfusion
