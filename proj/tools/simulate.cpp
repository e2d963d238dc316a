#include <cmath>
#include <optional>
#include <random>
#include <string>

#include "cli.hpp"
#include "dsfusion/errors.hpp"
#include "dsfusion/io.hpp"
#include "dsfusion/log_opinions.hpp"
#include "report.hpp"

namespace dsfusion::cli {

namespace {

// Mixing weight of the uniform distribution used to make sparse opinions
// strictly positive before taking logarithms.
constexpr double kLogSmoothing = 0.01;

// std::mt19937_64 output is fixed by the C++ standard; the conversion to
// [0,1) is done here because the standard distributions are not portable.
class PortableRandom {
 public:
  explicit PortableRandom(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

 private:
  std::mt19937_64 engine_;
};

Frame simulation_frame(std::size_t labels) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < labels; ++i) names.push_back("L" + std::to_string(i));
  return Frame(std::move(names));
}

ProbabilisticEnsemble generate_source(PortableRandom& rng, const Frame& frame,
                                      const SimulateOptions& opts, std::size_t favoured) {
  std::vector<ProbabilisticExpert> experts;
  for (std::size_t e = 0; e < opts.experts; ++e) {
    const double weight = 0.5 + rng.uniform();
    std::vector<double> p(frame.size());
    double total = 0.0;
    for (std::size_t l = 0; l < p.size(); ++l) {
      const double raw = rng.uniform();
      const double drop = rng.uniform();
      if (l == favoured) {
        p[l] = raw + opts.bias + 1e-3;
      } else {
        p[l] = drop < opts.sparsity ? 0.0 : raw;
      }
      total += p[l];
    }
    for (double& v : p) v /= total;
    experts.push_back({weight, std::move(p)});
  }
  return ProbabilisticEnsemble(frame, std::move(experts));
}

LogOpinionEnsemble to_log_ensemble(const ProbabilisticEnsemble& e, const PriorVector& prior) {
  const double n = static_cast<double>(e.frame().size());
  std::vector<LogExpert> experts;
  for (const auto& x : e.experts()) {
    std::vector<double> smoothed(x.opinion.size());
    for (std::size_t l = 0; l < smoothed.size(); ++l) {
      smoothed[l] = (1.0 - kLogSmoothing) * x.opinion[l] + kLogSmoothing / n;
    }
    experts.push_back({x.weight, log_opinion_from_probabilistic(smoothed, prior)});
  }
  return LogOpinionEnsemble(e.frame(), std::move(experts));
}

// Highest singleton plausibility, then highest singleton belief, then frame order.
std::optional<std::size_t> ds_top_label(const MassFunction& m) {
  if (m.is_total_conflict()) return std::nullopt;
  std::size_t best = 0;
  double best_pl = -1.0;
  double best_bel = -1.0;
  for (std::size_t l = 0; l < m.frame().size(); ++l) {
    const Subset a = m.frame().singleton(l);
    const double pl = plausibility(m, a);
    const double bel = belief(m, a);
    if (pl > best_pl + 1e-12 || (std::abs(pl - best_pl) <= 1e-12 && bel > best_bel + 1e-12)) {
      best = l;
      best_pl = pl;
      best_bel = bel;
    }
  }
  return best;
}

}  // namespace

int cmd_simulate(const SimulateOptions& opts, const GlobalOptions& global, std::ostream& out,
                 std::ostream&) {
  if (opts.labels < 2 || opts.labels > kDefaultMaxLabels || opts.experts < 1 ||
      opts.sources < 1) {
    throw InvalidArgument("simulate parameters out of range");
  }
  PortableRandom rng(opts.seed);
  const Frame frame = simulation_frame(opts.labels);
  const PriorVector prior = PriorVector::uniform(frame);
  const std::size_t favoured = rng.below(opts.labels);

  std::vector<ProbabilisticEnsemble> sources;
  for (std::size_t s = 0; s < opts.sources; ++s) {
    sources.push_back(generate_source(rng, frame, opts, favoured));
  }

  // Belief-function pipeline: consensus on the product space, then T, U, V.
  ProbabilisticEnsemble product = sources.front();
  for (std::size_t s = 1; s < sources.size(); ++s) {
    product = combine_probabilistic(product, sources[s], prior, global.max_experts);
  }
  const MassFunction belief_state = ds_state(product);

  // Log-opinion pipeline: per-source statistics, added.
  GaussianLogState gaussian = ensemble_stats(to_log_ensemble(sources.front(), prior));
  for (std::size_t s = 1; s < sources.size(); ++s) {
    gaussian = combine_states(gaussian, ensemble_stats(to_log_ensemble(sources[s], prior)));
  }
  const auto scores = posterior_scores(gaussian, prior);

  const auto ds_top = ds_top_label(belief_state);
  const std::size_t gaussian_top = scores.front().index;
  const bool agree = ds_top && *ds_top == gaussian_top;
  const std::string ds_top_name = ds_top ? frame.labels()[*ds_top] : "none (total conflict)";

  if (global.json) {
    nlohmann::json j = {{"seed", opts.seed},
                        {"labels", opts.labels},
                        {"experts", opts.experts},
                        {"sources", opts.sources},
                        {"favoured", frame.labels()[favoured]},
                        {"ds_state", io::to_json(belief_state)},
                        {"gaussian_state", io::to_json(gaussian)},
                        {"ds_top", ds_top_name},
                        {"gaussian_top", frame.labels()[gaussian_top]},
                        {"agree", agree}};
    out << j.dump(2) << '\n';
    return kSuccess;
  }
  out << "simulate: seed " << opts.seed << ", " << opts.labels << " labels, " << opts.experts
      << " experts x " << opts.sources << " sources, bias " << fixed6(opts.bias)
      << ", sparsity " << fixed6(opts.sparsity) << '\n';
  out << "frame: " << frame.format(frame.full()) << '\n';
  out << "favoured label: " << frame.labels()[favoured] << '\n';
  out << "belief-function pipeline (" << product.size() << " product experts):\n";
  if (belief_state.is_total_conflict()) {
    out << "  TOTAL CONFLICT → m0\n";
  } else {
    write_focal_table(out, belief_state);
  }
  out << "log-opinion pipeline:\n";
  out << "mean:\n";
  write_vector(out, frame, gaussian.mean());
  out << "covariance:\n";
  write_matrix(out, frame, gaussian.cov());
  out << "posterior scores (mean + log prior):\n";
  write_scores(out, scores);
  out << "ds top: " << ds_top_name << '\n';
  out << "gaussian top: " << frame.labels()[gaussian_top] << '\n';
  out << "agreement: " << (agree ? "AGREE" : "DISAGREE") << '\n';
  return kSuccess;
}

}  // namespace dsfusion::cli
