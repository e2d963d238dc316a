#include "dsfusion/io.hpp"

#include <fstream>
#include <sstream>

#include "dsfusion/errors.hpp"

namespace dsfusion::io {

using nlohmann::json;

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

std::vector<double> number_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(number(v, what));
  return out;
}

std::vector<std::string> string_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of labels");
  std::vector<std::string> out;
  for (const auto& v : j) {
    if (!v.is_string()) throw ParseError(std::string(what) + " must contain strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

const json& experts_array(const json& j) {
  const json& experts = field(j, "experts");
  if (!experts.is_array()) throw ParseError("\"experts\" must be an array");
  return experts;
}

}  // namespace

Frame frame_from_json(const json& j, std::size_t max_labels) {
  return Frame(string_array(field(j, "frame"), "\"frame\""), max_labels);
}

json frame_to_json(const Frame& frame) { return frame.labels(); }

MassFunction mass_from_json(const json& j) {
  Frame frame = frame_from_json(j);
  const json& masses = field(j, "masses");
  if (!masses.is_array()) throw ParseError("\"masses\" must be an array");
  std::vector<std::pair<Subset, double>> focal;
  for (const auto& entry : masses) {
    const Subset a = frame.subset_of(string_array(field(entry, "subset"), "\"subset\""));
    focal.emplace_back(a, number(field(entry, "value"), "\"value\""));
  }
  return MassFunction::from_focal(std::move(frame), focal);
}

json to_json(const MassFunction& m) {
  json masses = json::array();
  for (Subset a : m.focal_elements()) {
    masses.push_back({{"subset", m.frame().labels_of(a)}, {"value", m[a]}});
  }
  return {{"frame", frame_to_json(m.frame())}, {"masses", std::move(masses)}};
}

BooleanEnsemble boolean_ensemble_from_json(const json& j) {
  Frame frame = frame_from_json(j);
  std::vector<BooleanExpert> experts;
  for (const auto& e : experts_array(j)) {
    experts.push_back({number(field(e, "weight"), "\"weight\""),
                       frame.subset_of(string_array(field(e, "possible"), "\"possible\""))});
  }
  return BooleanEnsemble(std::move(frame), std::move(experts));
}

json to_json(const BooleanEnsemble& e) {
  json experts = json::array();
  for (const auto& x : e.experts()) {
    experts.push_back({{"weight", x.weight}, {"possible", e.frame().labels_of(x.possible)}});
  }
  return {{"frame", frame_to_json(e.frame())}, {"experts", std::move(experts)}};
}

ProbabilisticEnsemble probabilistic_ensemble_from_json(const json& j) {
  Frame frame = frame_from_json(j);
  std::vector<ProbabilisticExpert> experts;
  for (const auto& e : experts_array(j)) {
    experts.push_back({number(field(e, "weight"), "\"weight\""),
                       number_array(field(e, "opinion"), "\"opinion\"")});
  }
  return ProbabilisticEnsemble(std::move(frame), std::move(experts));
}

json to_json(const ProbabilisticEnsemble& e) {
  json experts = json::array();
  for (const auto& x : e.experts()) {
    experts.push_back({{"weight", x.weight}, {"opinion", x.opinion}});
  }
  return {{"frame", frame_to_json(e.frame())}, {"experts", std::move(experts)}};
}

GaussianLogState gaussian_state_from_json(const json& j) {
  Frame frame = frame_from_json(j);
  std::vector<double> mean = number_array(field(j, "mean"), "\"mean\"");
  const json& rows = field(j, "cov");
  if (!rows.is_array() || rows.size() != frame.size()) {
    throw ParseError("\"cov\" must be an n x n array of rows");
  }
  std::vector<double> data;
  for (const auto& row : rows) {
    auto values = number_array(row, "\"cov\" row");
    if (values.size() != frame.size()) throw ParseError("\"cov\" must be an n x n array of rows");
    data.insert(data.end(), values.begin(), values.end());
  }
  const double weight = j.contains("weight") ? number(j.at("weight"), "\"weight\"") : 1.0;
  const std::size_t n = frame.size();
  return GaussianLogState(std::move(frame), std::move(mean), Matrix(n, std::move(data)), weight);
}

json to_json(const GaussianLogState& s) {
  const std::size_t n = s.mean().size();
  json cov = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < n; ++k) row.push_back(s.cov()(i, k));
    cov.push_back(std::move(row));
  }
  return {{"frame", frame_to_json(s.frame())},
          {"mean", s.mean()},
          {"cov", std::move(cov)},
          {"weight", s.weight()}};
}

PriorVector prior_from_json(const json& j) {
  Frame frame = frame_from_json(j);
  return PriorVector(std::move(frame), number_array(field(j, "values"), "\"values\""));
}

json to_json(const PriorVector& p) {
  return {{"frame", frame_to_json(p.frame())}, {"values", p.values()}};
}

const char* kind_name(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::mass: return "mass";
    case DocumentKind::boolean_ensemble: return "boolean_ensemble";
    case DocumentKind::probabilistic_ensemble: return "probabilistic_ensemble";
    case DocumentKind::gaussian_log_state: return "gaussian_log_state";
  }
  return "unknown";
}

const Frame& EvidenceDocument::frame() const {
  return std::visit([](const auto& p) -> const Frame& { return p.frame(); }, payload);
}

EvidenceDocument document_from_json(const json& j, std::string source) {
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (j.contains("masses")) return {std::move(source), mass_from_json(j)};
  if (j.contains("mean") || j.contains("cov")) {
    return {std::move(source), gaussian_state_from_json(j)};
  }
  if (j.contains("experts")) {
    const json& experts = experts_array(j);
    if (experts.empty()) throw InvalidArgument("an ensemble needs at least one expert");
    if (experts.front().contains("possible")) {
      return {std::move(source), boolean_ensemble_from_json(j)};
    }
    return {std::move(source), probabilistic_ensemble_from_json(j)};
  }
  throw ParseError("unrecognized document: expected \"masses\", \"experts\" or \"mean\"/\"cov\"");
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

namespace {

template <typename F>
auto with_source(const std::filesystem::path& path, F&& f) {
  try {
    return f();
  } catch (const FrameMismatch& e) {
    throw FrameMismatch(path.string() + ": " + e.what());
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what());
  } catch (const Error& e) {
    throw InvalidArgument(path.string() + ": " + e.what());
  } catch (const json::exception& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace

EvidenceDocument load_document(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  return with_source(path, [&] { return document_from_json(j, path.string()); });
}

PriorVector load_prior(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  return with_source(path, [&] { return prior_from_json(j); });
}

}  // namespace dsfusion::io
