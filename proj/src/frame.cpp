#include "dsfusion/frame.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "dsfusion/errors.hpp"

namespace dsfusion {

Frame::Frame(std::vector<std::string> labels, std::size_t max_labels)
    : labels_(std::move(labels)) {
  if (labels_.empty()) {
    throw InvalidArgument("frame must contain at least one label");
  }
  const std::size_t cap = std::min(max_labels, kHardMaxLabels);
  if (labels_.size() > cap) {
    throw InvalidArgument("frame has " + std::to_string(labels_.size()) +
                          " labels; the cap is " + std::to_string(cap));
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : labels_) {
    if (!seen.insert(label).second) {
      throw InvalidArgument("duplicate label '" + label + "' in frame");
    }
  }
}

std::size_t Frame::index_of(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    throw InvalidArgument("unknown label '" + std::string(label) + "'");
  }
  return static_cast<std::size_t>(it - labels_.begin());
}

Subset Frame::singleton(std::size_t index) const {
  if (index >= labels_.size()) {
    throw InvalidArgument("label index " + std::to_string(index) + " out of range");
  }
  return Subset{1} << index;
}

Subset Frame::subset_of(const std::vector<std::string>& labels) const {
  Subset a = 0;
  for (const auto& label : labels) {
    a |= singleton(index_of(label));
  }
  return a;
}

std::vector<std::string> Frame::labels_of(Subset a) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (a & (Subset{1} << i)) out.push_back(labels_[i]);
  }
  return out;
}

std::string Frame::format(Subset a) const {
  std::string out = "{";
  bool first = true;
  for (const auto& label : labels_of(a)) {
    if (!first) out += ',';
    out += label;
    first = false;
  }
  out += '}';
  return out;
}

void require_same_frame(const Frame& a, const Frame& b, std::string_view what) {
  if (a != b) {
    throw FrameMismatch(std::string(what) + ": frames differ (" + a.format(a.full()) +
                        " vs " + b.format(b.full()) + ")");
  }
}

}  // namespace dsfusion
