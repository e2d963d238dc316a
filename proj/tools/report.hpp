#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "dsfusion/log_opinions.hpp"
#include "dsfusion/mass_function.hpp"

namespace dsfusion::cli {

inline constexpr double kFocalThreshold = 1e-12;

/// Fixed six-decimal rendering; values that would print as -0.000000 print as 0.000000.
std::string fixed6(double value);

/// Subset rendering for reports: the empty set prints as "∅".
std::string subset_label(const Frame& frame, Subset a);

/// Table of m, Bel, Pl, Q for every subset with mass above kFocalThreshold.
void write_focal_table(std::ostream& out, const MassFunction& m);

void write_vector(std::ostream& out, const Frame& frame, const std::vector<double>& v);
void write_matrix(std::ostream& out, const Frame& frame, const Matrix& c);
void write_scores(std::ostream& out, const std::vector<LabelScore>& scores);
void write_axes(std::ostream& out, const std::vector<EigenPair>& axes);

}  // namespace dsfusion::cli
