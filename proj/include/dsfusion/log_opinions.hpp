#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dsfusion/ensembles.hpp"
#include "dsfusion/frame.hpp"
#include "dsfusion/symmetric_eigen.hpp"

namespace dsfusion {

inline constexpr double kSymmetryTolerance = 1e-9;
inline constexpr double kPsdTolerance = 1e-9;
inline constexpr double kSingularRatio = 1e-12;
inline constexpr double kEigenResidualTolerance = 1e-9;

struct LogExpert {
  double weight;
  /// Estimated log posterior-to-prior ratio per label; any sign.
  std::vector<double> opinion;
};

class LogOpinionEnsemble {
 public:
  LogOpinionEnsemble(Frame frame, std::vector<LogExpert> experts);

  const Frame& frame() const noexcept { return frame_; }
  const std::vector<LogExpert>& experts() const noexcept { return experts_; }
  std::size_t size() const noexcept { return experts_.size(); }
  double total_weight() const noexcept;

 private:
  Frame frame_;
  std::vector<LogExpert> experts_;
};

/// Mean vector and covariance matrix of logarithmic opinions, plus the total
/// weight of the ensemble they summarize.
///
/// The covariance is accepted if it is symmetric within 1e-9 (it is then
/// symmetrized exactly) and positive semidefinite: every eigenvalue at least
/// -1e-9 times max(1, largest |eigenvalue|).
class GaussianLogState {
 public:
  GaussianLogState(Frame frame, std::vector<double> mean, Matrix cov, double weight);

  /// Zero mean, zero covariance, unit weight: identity of combine_states.
  static GaussianLogState identity(Frame frame);

  const Frame& frame() const noexcept { return frame_; }
  const std::vector<double>& mean() const noexcept { return mean_; }
  const Matrix& cov() const noexcept { return cov_; }
  double weight() const noexcept { return weight_; }

  /// n means + n(n+1)/2 covariance entries + the weight.
  std::size_t parameter_count() const noexcept;

 private:
  Frame frame_;
  std::vector<double> mean_;
  Matrix cov_;
  double weight_;
};

/// log(p(l)) - log(prior(l)). Throws ZeroOpinion if some p(l) <= 0.
std::vector<double> log_opinion_from_probabilistic(std::span<const double> p,
                                                   const PriorVector& prior);

/// Product-space consensus: every pair of experts, weights multiplied,
/// opinions added componentwise.
LogOpinionEnsemble combine_log_ensembles(const LogOpinionEnsemble& e1,
                                         const LogOpinionEnsemble& e2,
                                         std::size_t max_experts = kDefaultMaxExperts);

/// Weighted mean and weighted population covariance (divides by total weight).
GaussianLogState ensemble_stats(const LogOpinionEnsemble& e);

/// Means add, covariances add, weights multiply.
GaussianLogState combine_states(const GaussianLogState& s1, const GaussianLogState& s2);

struct LabelScore {
  std::string label;
  std::size_t index;
  double score;
};

/// mean(l) + log(prior(l)), sorted by descending score; ties keep frame order.
std::vector<LabelScore> posterior_scores(const GaussianLogState& s, const PriorVector& prior);

/// (y - mean)^T C^-1 (y - mean). Throws SingularCovariance when the smallest
/// eigenvalue of C is <= 1e-12 times the largest.
double mahalanobis(const GaussianLogState& s, std::span<const double> y);

/// Eigenpairs of C by descending eigenvalue; eigenvalues are squared semi-axis
/// lengths of the one-sigma ellipsoid. Eigenvalues in [-1e-9, 0) clamp to zero.
/// Throws ConvergenceFailure when some residual |C v - lambda v|_inf exceeds
/// 1e-9 * max(1, max|C|).
std::vector<EigenPair> ellipsoid_axes(const GaussianLogState& s);

bool is_singular(const std::vector<EigenPair>& axes);

}  // namespace dsfusion
