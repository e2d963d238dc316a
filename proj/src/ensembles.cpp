#include "dsfusion/ensembles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "dsfusion/errors.hpp"

namespace dsfusion {

namespace {

void require_weight(double w) {
  if (!std::isfinite(w) || w <= 0.0) {
    throw InvalidArgument("expert weight must be positive and finite, got " +
                          std::to_string(w));
  }
}

void require_nonempty(std::size_t size) {
  if (size == 0) throw InvalidArgument("an ensemble needs at least one expert");
}

}  // namespace

PriorVector::PriorVector(Frame frame, std::vector<double> values)
    : frame_(std::move(frame)), values_(std::move(values)) {
  if (values_.size() != frame_.size()) {
    throw InvalidArgument("prior vector has " + std::to_string(values_.size()) +
                          " entries for " + std::to_string(frame_.size()) + " labels");
  }
  for (double v : values_) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw InvalidArgument("prior constants must be positive, got " + std::to_string(v));
    }
  }
}

PriorVector PriorVector::ones(Frame frame) {
  const std::size_t n = frame.size();
  return PriorVector(std::move(frame), std::vector<double>(n, 1.0));
}

PriorVector PriorVector::uniform(Frame frame) {
  const std::size_t n = frame.size();
  return PriorVector(std::move(frame), std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

BooleanEnsemble::BooleanEnsemble(Frame frame, std::vector<BooleanExpert> experts)
    : frame_(std::move(frame)), experts_(std::move(experts)) {
  require_nonempty(experts_.size());
  for (const auto& e : experts_) {
    require_weight(e.weight);
    if (e.possible > frame_.full()) {
      throw InvalidArgument("boolean opinion refers to labels outside the frame");
    }
  }
}

double BooleanEnsemble::total_weight() const noexcept {
  double total = 0.0;
  for (const auto& e : experts_) total += e.weight;
  return total;
}

ProbabilisticEnsemble::ProbabilisticEnsemble(Frame frame,
                                             std::vector<ProbabilisticExpert> experts)
    : frame_(std::move(frame)), experts_(std::move(experts)) {
  require_nonempty(experts_.size());
  for (const auto& e : experts_) {
    require_weight(e.weight);
    if (e.opinion.size() != frame_.size()) {
      throw InvalidArgument("probabilistic opinion has " + std::to_string(e.opinion.size()) +
                            " entries for " + std::to_string(frame_.size()) + " labels");
    }
    double total = 0.0;
    for (double p : e.opinion) {
      if (!std::isfinite(p) || p < 0.0) {
        throw InvalidArgument("probabilistic opinion entries must be >= 0");
      }
      total += p;
    }
    if (total != 0.0 && std::abs(total - 1.0) > kMassSumTolerance) {
      throw InvalidArgument("probabilistic opinion sums to " + std::to_string(total) +
                            "; expected 1 or an all-zero vector");
    }
  }
}

double ProbabilisticEnsemble::total_weight() const noexcept {
  double total = 0.0;
  for (const auto& e : experts_) total += e.weight;
  return total;
}

void require_product_size(std::size_t a, std::size_t b, std::size_t max_experts) {
  if (a != 0 && b > max_experts / a) {
    throw EnsembleTooLarge("product ensemble would have " + std::to_string(a) + " x " +
                           std::to_string(b) + " experts; the cap is " +
                           std::to_string(max_experts) + " (raise --max-experts)");
  }
}

BooleanEnsemble combine_boolean(const BooleanEnsemble& e1, const BooleanEnsemble& e2,
                                std::size_t max_experts) {
  require_same_frame(e1.frame(), e2.frame(), "combine_boolean");
  require_product_size(e1.size(), e2.size(), max_experts);
  std::vector<BooleanExpert> out;
  out.reserve(e1.size() * e2.size());
  for (const auto& a : e1.experts()) {
    for (const auto& b : e2.experts()) {
      out.push_back({a.weight * b.weight, a.possible & b.possible});
    }
  }
  return BooleanEnsemble(e1.frame(), std::move(out));
}

ProbabilisticEnsemble combine_probabilistic(const ProbabilisticEnsemble& e1,
                                            const ProbabilisticEnsemble& e2,
                                            const PriorVector& kappa,
                                            std::size_t max_experts) {
  require_same_frame(e1.frame(), e2.frame(), "combine_probabilistic");
  require_same_frame(e1.frame(), kappa.frame(), "combine_probabilistic (kappa)");
  require_product_size(e1.size(), e2.size(), max_experts);
  const std::size_t n = e1.frame().size();
  std::vector<ProbabilisticExpert> out;
  out.reserve(e1.size() * e2.size());
  for (const auto& a : e1.experts()) {
    for (const auto& b : e2.experts()) {
      std::vector<double> p(n);
      double denominator = 0.0;
      for (std::size_t l = 0; l < n; ++l) {
        p[l] = a.opinion[l] * b.opinion[l] / kappa[l];
        denominator += p[l];
      }
      if (denominator > 0.0) {
        for (double& v : p) v /= denominator;
      } else {
        std::fill(p.begin(), p.end(), 0.0);
      }
      out.push_back({a.weight * b.weight, std::move(p)});
    }
  }
  return ProbabilisticEnsemble(e1.frame(), std::move(out));
}

BooleanEnsemble to_boolean(const ProbabilisticEnsemble& e) {
  std::vector<BooleanExpert> out;
  out.reserve(e.size());
  for (const auto& expert : e.experts()) {
    Subset possible = 0;
    for (std::size_t l = 0; l < expert.opinion.size(); ++l) {
      if (expert.opinion[l] > 0.0) possible |= Subset{1} << l;
    }
    out.push_back({expert.weight, possible});
  }
  return BooleanEnsemble(e.frame(), std::move(out));
}

MassFunction to_mass_statistics(const BooleanEnsemble& e) {
  std::vector<double> masses(e.frame().subset_count(), 0.0);
  const double total = e.total_weight();
  for (const auto& expert : e.experts()) {
    masses[expert.possible] += expert.weight;
  }
  for (double& v : masses) v /= total;
  return MassFunction(e.frame(), std::move(masses));
}

MassFunction ds_state(const ProbabilisticEnsemble& e) {
  return normalize(to_mass_statistics(to_boolean(e)));
}

}  // namespace dsfusion
