#include "dsfusion/log_opinions.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dsfusion/errors.hpp"

namespace dsfusion {

namespace {

void require_finite_vector(std::span<const double> v, std::size_t n, const char* what) {
  if (v.size() != n) {
    throw InvalidArgument(std::string(what) + " has " + std::to_string(v.size()) +
                          " entries for " + std::to_string(n) + " labels");
  }
  for (double x : v) {
    if (!std::isfinite(x)) throw InvalidArgument(std::string(what) + " has a non-finite entry");
  }
}

}  // namespace

LogOpinionEnsemble::LogOpinionEnsemble(Frame frame, std::vector<LogExpert> experts)
    : frame_(std::move(frame)), experts_(std::move(experts)) {
  if (experts_.empty()) throw InvalidArgument("an ensemble needs at least one expert");
  for (const auto& e : experts_) {
    if (!std::isfinite(e.weight) || e.weight <= 0.0) {
      throw InvalidArgument("expert weight must be positive and finite");
    }
    require_finite_vector(e.opinion, frame_.size(), "log opinion");
  }
}

double LogOpinionEnsemble::total_weight() const noexcept {
  double total = 0.0;
  for (const auto& e : experts_) total += e.weight;
  return total;
}

GaussianLogState::GaussianLogState(Frame frame, std::vector<double> mean, Matrix cov,
                                   double weight)
    : frame_(std::move(frame)), mean_(std::move(mean)), cov_(std::move(cov)), weight_(weight) {
  const std::size_t n = frame_.size();
  require_finite_vector(mean_, n, "mean vector");
  if (cov_.size() != n) {
    throw InvalidArgument("covariance is " + std::to_string(cov_.size()) + "x" +
                          std::to_string(cov_.size()) + " for " + std::to_string(n) +
                          " labels");
  }
  require_finite_vector(cov_.data(), n * n, "covariance");
  if (!std::isfinite(weight_) || weight_ <= 0.0) {
    throw InvalidArgument("state weight must be positive and finite");
  }
  if (cov_.asymmetry() > kSymmetryTolerance) {
    throw InvalidArgument("covariance is not symmetric (max asymmetry " +
                          std::to_string(cov_.asymmetry()) + ")");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double m = 0.5 * (cov_(i, j) + cov_(j, i));
      cov_(i, j) = m;
      cov_(j, i) = m;
    }
  }
  const auto pairs = symmetric_eigen(cov_);
  const double scale = std::max(1.0, std::max(std::abs(pairs.front().value),
                                              std::abs(pairs.back().value)));
  if (pairs.back().value < -kPsdTolerance * scale) {
    throw InvalidArgument("covariance is not positive semidefinite (eigenvalue " +
                          std::to_string(pairs.back().value) + ")");
  }
}

GaussianLogState GaussianLogState::identity(Frame frame) {
  const std::size_t n = frame.size();
  return GaussianLogState(std::move(frame), std::vector<double>(n, 0.0), Matrix(n), 1.0);
}

std::size_t GaussianLogState::parameter_count() const noexcept {
  const std::size_t n = mean_.size();
  return n + n * (n + 1) / 2 + 1;
}

std::vector<double> log_opinion_from_probabilistic(std::span<const double> p,
                                                   const PriorVector& prior) {
  if (p.size() != prior.values().size()) {
    throw InvalidArgument("opinion and prior lengths differ");
  }
  std::vector<double> y(p.size());
  for (std::size_t l = 0; l < p.size(); ++l) {
    if (!(p[l] > 0.0)) {
      throw ZeroOpinion("opinion for label '" + prior.frame().labels()[l] +
                        "' is not positive; logarithmic opinions need every entry > 0");
    }
    y[l] = std::log(p[l]) - std::log(prior[l]);
  }
  return y;
}

LogOpinionEnsemble combine_log_ensembles(const LogOpinionEnsemble& e1,
                                         const LogOpinionEnsemble& e2,
                                         std::size_t max_experts) {
  require_same_frame(e1.frame(), e2.frame(), "combine_log_ensembles");
  require_product_size(e1.size(), e2.size(), max_experts);
  std::vector<LogExpert> out;
  out.reserve(e1.size() * e2.size());
  for (const auto& a : e1.experts()) {
    for (const auto& b : e2.experts()) {
      std::vector<double> y(a.opinion.size());
      for (std::size_t l = 0; l < y.size(); ++l) y[l] = a.opinion[l] + b.opinion[l];
      out.push_back({a.weight * b.weight, std::move(y)});
    }
  }
  return LogOpinionEnsemble(e1.frame(), std::move(out));
}

GaussianLogState ensemble_stats(const LogOpinionEnsemble& e) {
  const std::size_t n = e.frame().size();
  const double total = e.total_weight();
  std::vector<double> mean(n, 0.0);
  for (const auto& expert : e.experts()) {
    for (std::size_t i = 0; i < n; ++i) mean[i] += expert.weight * expert.opinion[i];
  }
  for (double& m : mean) m /= total;

  Matrix cov(n);
  std::vector<double> d(n);
  for (const auto& expert : e.experts()) {
    for (std::size_t i = 0; i < n; ++i) d[i] = expert.opinion[i] - mean[i];
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i; j < n; ++j) cov(i, j) += expert.weight * d[i] * d[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      cov(i, j) /= total;
      cov(j, i) = cov(i, j);
    }
  }
  return GaussianLogState(e.frame(), std::move(mean), std::move(cov), total);
}

GaussianLogState combine_states(const GaussianLogState& s1, const GaussianLogState& s2) {
  require_same_frame(s1.frame(), s2.frame(), "combine_states");
  std::vector<double> mean = s1.mean();
  for (std::size_t i = 0; i < mean.size(); ++i) mean[i] += s2.mean()[i];
  return GaussianLogState(s1.frame(), std::move(mean), s1.cov() + s2.cov(),
                          s1.weight() * s2.weight());
}

std::vector<LabelScore> posterior_scores(const GaussianLogState& s, const PriorVector& prior) {
  require_same_frame(s.frame(), prior.frame(), "posterior_scores");
  std::vector<LabelScore> scores;
  scores.reserve(s.mean().size());
  for (std::size_t j = 0; j < s.mean().size(); ++j) {
    scores.push_back({s.frame().labels()[j], j, s.mean()[j] + std::log(prior[j])});
  }
  std::stable_sort(scores.begin(), scores.end(),
                   [](const LabelScore& a, const LabelScore& b) { return a.score > b.score; });
  return scores;
}

bool is_singular(const std::vector<EigenPair>& axes) {
  if (axes.empty()) return true;
  const double largest = axes.front().value;
  return largest <= 0.0 || axes.back().value <= kSingularRatio * largest;
}

double mahalanobis(const GaussianLogState& s, std::span<const double> y) {
  const std::size_t n = s.mean().size();
  require_finite_vector(y, n, "point");
  const auto axes = symmetric_eigen(s.cov());
  if (is_singular(axes)) {
    throw SingularCovariance("covariance is numerically singular (eigenvalues " +
                             std::to_string(axes.front().value) + " .. " +
                             std::to_string(axes.back().value) + ")");
  }
  double total = 0.0;
  for (const auto& axis : axes) {
    double projection = 0.0;
    for (std::size_t i = 0; i < n; ++i) projection += axis.vector[i] * (y[i] - s.mean()[i]);
    total += projection * projection / axis.value;
  }
  return total;
}

std::vector<EigenPair> ellipsoid_axes(const GaussianLogState& s) {
  const Matrix& c = s.cov();
  const std::size_t n = c.size();
  auto axes = symmetric_eigen(c);
  const double tolerance = kEigenResidualTolerance * std::max(1.0, c.max_abs());
  for (auto& axis : axes) {
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double cv = 0.0;
      for (std::size_t j = 0; j < n; ++j) cv += c(i, j) * axis.vector[j];
      residual = std::max(residual, std::abs(cv - axis.value * axis.vector[i]));
    }
    if (residual > tolerance) {
      throw ConvergenceFailure("eigenpair residual " + std::to_string(residual) +
                               " exceeds tolerance");
    }
    // The constructor already rejected eigenvalues below the PSD tolerance.
    if (axis.value < 0.0) axis.value = 0.0;
  }
  return axes;
}

}  // namespace dsfusion
