#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <variant>

#include "cli.hpp"
#include "dsfusion/errors.hpp"
#include "dsfusion/io.hpp"
#include "report.hpp"

namespace dsfusion::cli {

namespace {

std::vector<io::EvidenceDocument> load_all(const std::vector<std::string>& files) {
  std::vector<io::EvidenceDocument> docs;
  docs.reserve(files.size());
  for (const auto& file : files) {
    docs.push_back(io::load_document(file));
    if (docs.size() > 1 && docs.back().frame() != docs.front().frame()) {
      throw FrameMismatch(file + ": frame " + docs.back().frame().format(docs.back().frame().full()) +
                          " does not match " + docs.front().source + " frame " +
                          docs.front().frame().format(docs.front().frame().full()));
    }
  }
  return docs;
}

template <typename T>
const T& payload_as(const io::EvidenceDocument& doc, io::DocumentKind expected) {
  if (const T* p = std::get_if<T>(&doc.payload)) return *p;
  throw InvalidArgument(doc.source + ": expected a " + io::kind_name(expected) +
                        " document, found " + io::kind_name(doc.kind()));
}

PriorVector load_prior_or_ones(const std::string& file, const Frame& frame) {
  if (file.empty()) return PriorVector::ones(frame);
  PriorVector prior = io::load_prior(file);
  if (prior.frame() != frame) {
    throw FrameMismatch(file + ": prior frame does not match the evidence frame");
  }
  return prior;
}

std::string scientific(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3e", value);
  return buf;
}

void write_frame_line(std::ostream& out, const Frame& frame) {
  out << "frame: " << frame.format(frame.full()) << '\n';
}

}  // namespace

int cmd_combine(const CombineOptions& opts, const GlobalOptions& global, std::ostream& out,
                std::ostream& err) {
  if (opts.files.size() < 2) throw InvalidArgument("combine needs at least two mass documents");
  const auto docs = load_all(opts.files);
  std::vector<MassFunction> masses;
  for (const auto& doc : docs) {
    masses.push_back(payload_as<MassFunction>(doc, io::DocumentKind::mass));
    if (opts.normalized && !masses.back().is_normalized()) {
      throw NotNormalized(doc.source + ": mass on the empty set; use --mode unnormalized");
    }
  }

  // Left fold in file order.
  MassFunction result = masses.front();
  for (std::size_t i = 1; i < masses.size(); ++i) {
    if (opts.normalized) {
      result = opts.fast ? fast_combine_normalized(result, masses[i])
                         : combine_normalized(result, masses[i]);
    } else {
      result = opts.fast ? fast_combine_unnormalized(result, masses[i])
                         : combine_unnormalized(result, masses[i]);
    }
  }

  const bool conflict = opts.normalized && result.is_total_conflict();
  if (global.json) {
    out << io::to_json(result).dump(2) << '\n';
    if (conflict) err << "TOTAL CONFLICT → m0\n";
    return conflict ? kTotalConflict : kSuccess;
  }
  if (conflict) {
    out << "TOTAL CONFLICT → m0\n";
    return kTotalConflict;
  }
  out << "combine: " << masses.size() << " mass functions, "
      << (opts.normalized ? "normalized" : "unnormalized") << " rule\n";
  write_frame_line(out, result.frame());
  if (!opts.normalized) out << "conflict: m(∅) = " << fixed6(result.conflict()) << '\n';
  out << "focal elements:\n";
  write_focal_table(out, result);
  return kSuccess;
}

int cmd_experts(const ExpertsOptions& opts, const GlobalOptions& global, std::ostream& out,
                std::ostream& err) {
  if (opts.files.empty()) throw InvalidArgument("experts needs at least one ensemble document");
  const auto docs = load_all(opts.files);
  const Frame& frame = docs.front().frame();

  std::vector<MassFunction> per_file;
  std::optional<BooleanEnsemble> projected;

  if (opts.probabilistic) {
    const PriorVector kappa = load_prior_or_ones(opts.prior_file, frame);
    std::vector<ProbabilisticEnsemble> ensembles;
    for (const auto& doc : docs) {
      ensembles.push_back(
          payload_as<ProbabilisticEnsemble>(doc, io::DocumentKind::probabilistic_ensemble));
    }
    ProbabilisticEnsemble combined = ensembles.front();
    for (std::size_t i = 1; i < ensembles.size(); ++i) {
      combined = combine_probabilistic(combined, ensembles[i], kappa, global.max_experts);
    }
    projected = to_boolean(combined);
    if (opts.verify) {
      for (const auto& e : ensembles) per_file.push_back(ds_state(e));
    }
  } else {
    if (!opts.prior_file.empty()) err << "note: --prior is ignored by the boolean pipeline\n";
    std::vector<BooleanEnsemble> ensembles;
    for (const auto& doc : docs) {
      if (const auto* p = std::get_if<ProbabilisticEnsemble>(&doc.payload)) {
        ensembles.push_back(to_boolean(*p));
      } else {
        ensembles.push_back(payload_as<BooleanEnsemble>(doc, io::DocumentKind::boolean_ensemble));
      }
    }
    BooleanEnsemble combined = ensembles.front();
    for (std::size_t i = 1; i < ensembles.size(); ++i) {
      combined = combine_boolean(combined, ensembles[i], global.max_experts);
    }
    projected = std::move(combined);
    if (opts.verify) {
      for (const auto& e : ensembles) per_file.push_back(normalize(to_mass_statistics(e)));
    }
  }
  const MassFunction statistics = to_mass_statistics(*projected);
  const MassFunction state = normalize(statistics);
  std::size_t no_opinion = 0;
  for (const auto& e : projected->experts()) {
    if (e.possible == 0) ++no_opinion;
  }

  int code = kSuccess;
  std::string verdict;
  if (opts.verify) {
    MassFunction folded = per_file.front();
    for (std::size_t i = 1; i < per_file.size(); ++i) {
      folded = combine_normalized(folded, per_file[i]);
    }
    const double deviation = max_abs_difference(folded, state);
    if (deviation <= global.tolerance) {
      verdict = "THEOREM OK (max deviation " + scientific(deviation) + ")";
    } else {
      verdict = "THEOREM VIOLATED (max deviation " + scientific(deviation) + ")";
      code = kInputError;
    }
  }
  const bool conflict = state.is_total_conflict();
  if (conflict && code == kSuccess) code = kTotalConflict;

  if (global.json) {
    out << io::to_json(state).dump(2) << '\n';
    if (!verdict.empty()) err << verdict << '\n';
    if (conflict) err << "TOTAL CONFLICT → m0\n";
    return code;
  }
  out << "experts: " << docs.size() << " ensembles, "
      << (opts.probabilistic ? "probabilistic" : "boolean") << " pipeline\n";
  write_frame_line(out, frame);
  out << "product experts: " << projected->size() << '\n';
  out << "total weight: " << fixed6(projected->total_weight()) << '\n';
  out << "no-opinion experts: " << no_opinion << " (weight share "
      << fixed6(statistics.conflict()) << ")\n";
  if (conflict) {
    out << "TOTAL CONFLICT → m0\n";
  } else {
    out << "belief state:\n";
    write_focal_table(out, state);
  }
  if (!verdict.empty()) out << verdict << '\n';
  return code;
}

int cmd_logfuse(const LogfuseOptions& opts, const GlobalOptions& global, std::ostream& out,
                std::ostream& err) {
  if (opts.files.empty()) throw InvalidArgument("logfuse needs at least one Gaussian state document");
  const auto docs = load_all(opts.files);
  GaussianLogState state =
      payload_as<GaussianLogState>(docs.front(), io::DocumentKind::gaussian_log_state);
  for (std::size_t i = 1; i < docs.size(); ++i) {
    state = combine_states(
        state, payload_as<GaussianLogState>(docs[i], io::DocumentKind::gaussian_log_state));
  }
  const PriorVector prior = load_prior_or_ones(opts.prior_file, state.frame());
  const auto axes = ellipsoid_axes(state);
  const bool singular = is_singular(axes);

  if (global.json) {
    out << io::to_json(state).dump(2) << '\n';
    if (singular) err << "SINGULAR COVARIANCE\n";
    return kSuccess;
  }
  out << "logfuse: " << docs.size() << " states\n";
  write_frame_line(out, state.frame());
  out << "weight: " << fixed6(state.weight()) << '\n';
  out << "mean:\n";
  write_vector(out, state.frame(), state.mean());
  out << "covariance:\n";
  write_matrix(out, state.frame(), state.cov());
  out << "posterior scores (mean + log prior):\n";
  write_scores(out, posterior_scores(state, prior));
  out << "ellipsoid axes:\n";
  write_axes(out, axes);
  if (singular) out << "SINGULAR COVARIANCE\n";
  return kSuccess;
}

}  // namespace dsfusion::cli
