#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace dsfusion::cli {

std::string fixed6(double value) {
  if (std::abs(value) < 5e-7) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

std::string subset_label(const Frame& frame, Subset a) {
  return a == 0 ? std::string("∅") : frame.format(a);
}

namespace {

// Display width; "∅" is three bytes but one column.
std::size_t columns(const std::string& s) {
  return std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; });
}

std::string pad(const std::string& s, std::size_t width) {
  const std::size_t w = columns(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

std::string lpad(const std::string& s, std::size_t width) {
  const std::size_t w = columns(s);
  return w >= width ? s : std::string(width - w, ' ') + s;
}

}  // namespace

void write_focal_table(std::ostream& out, const MassFunction& m) {
  const auto focal = m.focal_elements(kFocalThreshold);
  const auto bel = belief_transform(m);
  const auto pl = plausibility_transform(m);
  const auto q = commonality_transform(m);

  std::size_t width = 6;
  for (Subset a : focal) width = std::max(width, columns(subset_label(m.frame(), a)));
  out << "  " << pad("subset", width) << "  " << lpad("m", 10) << "  " << lpad("Bel", 10)
      << "  " << lpad("Pl", 10) << "  " << lpad("Q", 10) << '\n';
  for (Subset a : focal) {
    out << "  " << pad(subset_label(m.frame(), a), width) << "  " << lpad(fixed6(m[a]), 10)
        << "  " << lpad(fixed6(bel[a]), 10) << "  " << lpad(fixed6(pl[a]), 10) << "  "
        << lpad(fixed6(q[a]), 10) << '\n';
  }
}

void write_vector(std::ostream& out, const Frame& frame, const std::vector<double>& v) {
  std::size_t width = 0;
  for (const auto& l : frame.labels()) width = std::max(width, columns(l));
  for (std::size_t i = 0; i < v.size(); ++i) {
    out << "  " << pad(frame.labels()[i], width) << "  " << lpad(fixed6(v[i]), 12) << '\n';
  }
}

void write_matrix(std::ostream& out, const Frame& frame, const Matrix& c) {
  std::size_t width = 0;
  for (const auto& l : frame.labels()) width = std::max(width, columns(l));
  out << "  " << std::string(width, ' ');
  for (const auto& l : frame.labels()) out << "  " << lpad(l, 12);
  out << '\n';
  for (std::size_t i = 0; i < c.size(); ++i) {
    out << "  " << pad(frame.labels()[i], width);
    for (std::size_t j = 0; j < c.size(); ++j) out << "  " << lpad(fixed6(c(i, j)), 12);
    out << '\n';
  }
}

void write_scores(std::ostream& out, const std::vector<LabelScore>& scores) {
  std::size_t width = 5;
  for (const auto& s : scores) width = std::max(width, columns(s.label));
  out << "  rank  " << pad("label", width) << "  " << lpad("score", 12) << '\n';
  for (std::size_t r = 0; r < scores.size(); ++r) {
    out << "  " << lpad(std::to_string(r + 1), 4) << "  " << pad(scores[r].label, width) << "  "
        << lpad(fixed6(scores[r].score), 12) << '\n';
  }
}

void write_axes(std::ostream& out, const std::vector<EigenPair>& axes) {
  out << "  " << lpad("eigenvalue", 12) << "  " << lpad("semi-axis", 12) << "  direction\n";
  for (const auto& axis : axes) {
    out << "  " << lpad(fixed6(axis.value), 12) << "  "
        << lpad(fixed6(std::sqrt(std::max(0.0, axis.value))), 12) << "  (";
    for (std::size_t i = 0; i < axis.vector.size(); ++i) {
      if (i) out << ", ";
      out << fixed6(axis.vector[i]);
    }
    out << ")\n";
  }
}

}  // namespace dsfusion::cli
