#include "dsfusion/mass_function.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <string>

#include "dsfusion/errors.hpp"

namespace dsfusion {

namespace {

void require_power_of_two(std::size_t size) {
  if (size == 0 || !std::has_single_bit(size)) {
    throw InvalidArgument("lattice array length " + std::to_string(size) +
                          " is not a power of two");
  }
}

void require_normalized(const MassFunction& m, const char* which) {
  if (!m.is_normalized()) {
    throw NotNormalized(std::string(which) +
                        " carries mass on the empty set; normalize it first");
  }
}

}  // namespace

MassFunction::MassFunction(Frame frame, std::vector<double> masses, double tolerance)
    : frame_(std::move(frame)), masses_(std::move(masses)) {
  if (masses_.size() != frame_.subset_count()) {
    throw InvalidArgument("mass array has " + std::to_string(masses_.size()) +
                          " entries; frame needs " +
                          std::to_string(frame_.subset_count()));
  }
  double total = 0.0;
  for (double& v : masses_) {
    if (!std::isfinite(v) || v < -tolerance || v > 1.0 + tolerance) {
      throw InvalidArgument("mass entry " + std::to_string(v) + " is outside [0,1]");
    }
    if (v < 0.0) v = 0.0;
    total += v;
  }
  if (std::abs(total - 1.0) > tolerance) {
    throw InvalidArgument("masses sum to " + std::to_string(total) + ", not 1");
  }
  if (total != 1.0) {
    for (double& v : masses_) v /= total;
  }
}

MassFunction MassFunction::from_focal(Frame frame,
                                      const std::vector<std::pair<Subset, double>>& focal,
                                      double tolerance) {
  std::vector<double> dense(frame.subset_count(), 0.0);
  for (const auto& [subset, value] : focal) {
    if (subset > frame.full()) {
      throw InvalidArgument("subset bitmask outside the frame");
    }
    dense[subset] += value;
  }
  return MassFunction(std::move(frame), std::move(dense), tolerance);
}

MassFunction MassFunction::vacuous(Frame frame) {
  std::vector<double> dense(frame.subset_count(), 0.0);
  dense[frame.full()] = 1.0;
  return MassFunction(std::move(frame), std::move(dense));
}

MassFunction MassFunction::total_conflict(Frame frame) {
  std::vector<double> dense(frame.subset_count(), 0.0);
  dense[0] = 1.0;
  return MassFunction(std::move(frame), std::move(dense));
}

bool MassFunction::is_total_conflict() const noexcept {
  // All entries are nonnegative and sum to one, so m(empty) == 1 forces the rest to zero.
  return masses_[0] == 1.0;
}

bool MassFunction::is_normalized() const noexcept {
  return masses_[0] == 0.0 || is_total_conflict();
}

std::vector<Subset> MassFunction::focal_elements(double threshold) const {
  std::vector<Subset> out;
  for (std::size_t a = 0; a < masses_.size(); ++a) {
    if (masses_[a] > threshold) out.push_back(static_cast<Subset>(a));
  }
  return out;
}

double max_abs_difference(const MassFunction& a, const MassFunction& b) {
  require_same_frame(a.frame(), b.frame(), "max_abs_difference");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a.masses()[i] - b.masses()[i]));
  }
  return worst;
}

MassFunction combine_unnormalized(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame(), "combine_unnormalized");
  const auto focal1 = m1.focal_elements();
  const auto focal2 = m2.focal_elements();
  std::vector<double> out(m1.size(), 0.0);
  for (Subset b : focal1) {
    const double mb = m1[b];
    for (Subset c : focal2) {
      out[b & c] += mb * m2[c];
    }
  }
  return MassFunction(m1.frame(), std::move(out));
}

MassFunction fast_combine_unnormalized(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame(), "fast_combine_unnormalized");
  std::vector<double> q = commonality_transform(m1);
  const std::vector<double> q2 = commonality_transform(m2);
  for (std::size_t a = 0; a < q.size(); ++a) q[a] *= q2[a];
  return inverse_commonality(q, m1.frame());
}

MassFunction normalize(const MassFunction& m) {
  const double conflict = m.conflict();
  if (conflict == 0.0) return m;
  if (conflict >= 1.0 - kTotalConflictThreshold) {
    return MassFunction::total_conflict(m.frame());
  }
  const double scale = 1.0 - conflict;
  std::vector<double> out(m.masses().begin(), m.masses().end());
  out[0] = 0.0;
  for (std::size_t a = 1; a < out.size(); ++a) out[a] /= scale;
  return MassFunction(m.frame(), std::move(out));
}

MassFunction combine_normalized(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame(), "combine_normalized");
  require_normalized(m1, "first operand");
  require_normalized(m2, "second operand");
  return normalize(combine_unnormalized(m1, m2));
}

MassFunction fast_combine_normalized(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame(), "fast_combine_normalized");
  require_normalized(m1, "first operand");
  require_normalized(m2, "second operand");
  return normalize(fast_combine_unnormalized(m1, m2));
}

double belief(const MassFunction& m, Subset a) {
  double total = 0.0;
  // Enumerate the subsets of a, including a itself and the empty set.
  for (Subset b = a;; b = (b - 1) & a) {
    total += m[b];
    if (b == 0) break;
  }
  return total;
}

double plausibility(const MassFunction& m, Subset a) {
  double total = 0.0;
  for (std::size_t b = 0; b < m.size(); ++b) {
    if ((b & a) != 0) total += m.masses()[b];
  }
  return total;
}

double commonality(const MassFunction& m, Subset a) {
  double total = 0.0;
  const Subset rest = m.frame().complement(a);
  for (Subset extra = rest;; extra = (extra - 1) & rest) {
    total += m[a | extra];
    if (extra == 0) break;
  }
  return total;
}

void superset_zeta(std::span<double> values) {
  require_power_of_two(values.size());
  for (std::size_t bit = 1; bit < values.size(); bit <<= 1) {
    for (std::size_t a = 0; a < values.size(); ++a) {
      if ((a & bit) == 0) values[a] += values[a | bit];
    }
  }
}

void superset_moebius(std::span<double> values) {
  require_power_of_two(values.size());
  for (std::size_t bit = 1; bit < values.size(); bit <<= 1) {
    for (std::size_t a = 0; a < values.size(); ++a) {
      if ((a & bit) == 0) values[a] -= values[a | bit];
    }
  }
}

void subset_zeta(std::span<double> values) {
  require_power_of_two(values.size());
  for (std::size_t bit = 1; bit < values.size(); bit <<= 1) {
    for (std::size_t a = 0; a < values.size(); ++a) {
      if (a & bit) values[a] += values[a ^ bit];
    }
  }
}

std::vector<double> commonality_transform(const MassFunction& m) {
  std::vector<double> q(m.masses().begin(), m.masses().end());
  superset_zeta(q);
  return q;
}

std::vector<double> belief_transform(const MassFunction& m) {
  std::vector<double> bel(m.masses().begin(), m.masses().end());
  subset_zeta(bel);
  return bel;
}

std::vector<double> plausibility_transform(const MassFunction& m) {
  const std::vector<double> bel = belief_transform(m);
  const Subset full = m.frame().full();
  std::vector<double> pl(bel.size());
  for (std::size_t a = 0; a < pl.size(); ++a) {
    pl[a] = 1.0 - bel[full & ~static_cast<Subset>(a)];
  }
  return pl;
}

MassFunction inverse_commonality(std::span<const double> q, const Frame& frame) {
  if (q.size() != frame.subset_count()) {
    throw InvalidArgument("commonality array has " + std::to_string(q.size()) +
                          " entries; frame needs " + std::to_string(frame.subset_count()));
  }
  std::vector<double> masses(q.begin(), q.end());
  superset_moebius(masses);
  double total = 0.0;
  for (double v : masses) {
    if (!std::isfinite(v) || v < -kMassSumTolerance) {
      throw NotAMass("inverted commonality has entry " + std::to_string(v));
    }
    total += v;
  }
  if (std::abs(total - 1.0) > kMassSumTolerance) {
    throw NotAMass("inverted commonality sums to " + std::to_string(total));
  }
  return MassFunction(frame, std::move(masses));
}

}  // namespace dsfusion
