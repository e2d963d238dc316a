#pragma once

#include <cstddef>
#include <vector>

#include "dsfusion/frame.hpp"
#include "dsfusion/mass_function.hpp"

namespace dsfusion {

inline constexpr std::size_t kDefaultMaxExperts = 1'000'000;

/// Per-label positive constants. Used as the kappa constants of probabilistic
/// combination and as prior probabilities when ranking labels.
class PriorVector {
 public:
  PriorVector(Frame frame, std::vector<double> values);
  static PriorVector ones(Frame frame);
  static PriorVector uniform(Frame frame);

  const Frame& frame() const noexcept { return frame_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double operator[](std::size_t i) const { return values_.at(i); }

 private:
  Frame frame_;
  std::vector<double> values_;
};

struct BooleanExpert {
  double weight;
  /// Labels the expert considers possible; 0 means "no opinion".
  Subset possible;
};

/// Weighted experts, each holding the characteristic function of a subset.
class BooleanEnsemble {
 public:
  BooleanEnsemble(Frame frame, std::vector<BooleanExpert> experts);

  const Frame& frame() const noexcept { return frame_; }
  const std::vector<BooleanExpert>& experts() const noexcept { return experts_; }
  std::size_t size() const noexcept { return experts_.size(); }
  double total_weight() const noexcept;

 private:
  Frame frame_;
  std::vector<BooleanExpert> experts_;
};

struct ProbabilisticExpert {
  double weight;
  /// Distribution over labels, or the zero vector for "no opinion".
  std::vector<double> opinion;
};

class ProbabilisticEnsemble {
 public:
  ProbabilisticEnsemble(Frame frame, std::vector<ProbabilisticExpert> experts);

  const Frame& frame() const noexcept { return frame_; }
  const std::vector<ProbabilisticExpert>& experts() const noexcept { return experts_; }
  std::size_t size() const noexcept { return experts_.size(); }
  double total_weight() const noexcept;

 private:
  Frame frame_;
  std::vector<ProbabilisticExpert> experts_;
};

/// Throws EnsembleTooLarge when a product of the given sizes would exceed the cap.
void require_product_size(std::size_t a, std::size_t b, std::size_t max_experts);

/// Product-space combination of boolean opinions: every ordered pair of
/// experts, weights multiplied, opinions intersected. Pair (i, j) lands at
/// index i * e2.size() + j.
BooleanEnsemble combine_boolean(const BooleanEnsemble& e1, const BooleanEnsemble& e2,
                                std::size_t max_experts = kDefaultMaxExperts);

/// Product-space Bayesian consensus: p(l) proportional to p1(l) p2(l) / kappa(l).
/// A pair with disjoint supports gets the zero opinion. Same pair order as
/// combine_boolean.
ProbabilisticEnsemble combine_probabilistic(const ProbabilisticEnsemble& e1,
                                            const ProbabilisticEnsemble& e2,
                                            const PriorVector& kappa,
                                            std::size_t max_experts = kDefaultMaxExperts);

/// Replaces each opinion with the set of labels it gives positive probability.
BooleanEnsemble to_boolean(const ProbabilisticEnsemble& e);

/// Weighted fraction of experts whose opinion is exactly each subset.
MassFunction to_mass_statistics(const BooleanEnsemble& e);

/// normalize(to_mass_statistics(to_boolean(e))).
MassFunction ds_state(const ProbabilisticEnsemble& e);

}  // namespace dsfusion
