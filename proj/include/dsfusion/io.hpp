#pragma once

#include <filesystem>
#include <string>
#include <variant>

#include <json.hpp>

#include "dsfusion/ensembles.hpp"
#include "dsfusion/log_opinions.hpp"
#include "dsfusion/mass_function.hpp"

namespace dsfusion::io {

// JSON document forms:
//   mass:          {"frame":[...], "masses":[{"subset":["a"],"value":0.6}, ...]}
//   boolean:       {"frame":[...], "experts":[{"weight":1,"possible":["a","b"]}, ...]}
//   probabilistic: {"frame":[...], "experts":[{"weight":1,"opinion":[0.2,0.8]}, ...]}
//   gaussian:      {"frame":[...], "mean":[...], "cov":[[...],...], "weight":w}
//   prior:         {"frame":[...], "values":[...]}
// Unlisted subsets have mass zero; "subset": [] is the empty set.

Frame frame_from_json(const nlohmann::json& j, std::size_t max_labels = kDefaultMaxLabels);
nlohmann::json frame_to_json(const Frame& frame);

MassFunction mass_from_json(const nlohmann::json& j);
/// Lists every subset with nonzero mass in ascending bitmask order.
nlohmann::json to_json(const MassFunction& m);

BooleanEnsemble boolean_ensemble_from_json(const nlohmann::json& j);
nlohmann::json to_json(const BooleanEnsemble& e);

ProbabilisticEnsemble probabilistic_ensemble_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ProbabilisticEnsemble& e);

GaussianLogState gaussian_state_from_json(const nlohmann::json& j);
nlohmann::json to_json(const GaussianLogState& s);

PriorVector prior_from_json(const nlohmann::json& j);
nlohmann::json to_json(const PriorVector& p);

enum class DocumentKind { mass, boolean_ensemble, probabilistic_ensemble, gaussian_log_state };

const char* kind_name(DocumentKind kind);

/// One loaded evidence file. The kind is inferred from the keys present.
struct EvidenceDocument {
  std::string source;
  std::variant<MassFunction, BooleanEnsemble, ProbabilisticEnsemble, GaussianLogState> payload;

  DocumentKind kind() const noexcept { return static_cast<DocumentKind>(payload.index()); }
  const Frame& frame() const;
};

EvidenceDocument document_from_json(const nlohmann::json& j, std::string source);

/// Reads and parses a file. Errors are rethrown as ParseError (malformed
/// JSON, unknown document shape) or the validation error of the payload type,
/// with the file name prefixed to the message.
EvidenceDocument load_document(const std::filesystem::path& path);
PriorVector load_prior(const std::filesystem::path& path);
nlohmann::json read_json_file(const std::filesystem::path& path);

}  // namespace dsfusion::io
