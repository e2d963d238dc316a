#pragma once

// Brute-force reference computations. These work on explicit label sets
// (std::set of label indices) rather than bitmasks, and never call the
// library's combination or transform code, so they can check it.

#include <algorithm>
#include <iterator>
#include <set>
#include <vector>

#include "dsfusion/mass_function.hpp"

namespace dsfusion::oracle {

using LabelSet = std::set<std::size_t>;

inline LabelSet to_set(Subset a, std::size_t n) {
  LabelSet s;
  for (std::size_t i = 0; i < n; ++i) {
    if ((a >> i) & 1U) s.insert(i);
  }
  return s;
}

inline std::size_t to_index(const LabelSet& s) {
  std::size_t index = 0;
  for (std::size_t i : s) index += std::size_t{1} << i;
  return index;
}

/// Every subset of {0..n-1} as an explicit set, in index order.
inline std::vector<LabelSet> power_set(std::size_t n) {
  std::vector<LabelSet> all{LabelSet{}};
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t existing = all.size();
    for (std::size_t k = 0; k < existing; ++k) {
      LabelSet s = all[k];
      s.insert(i);
      all.push_back(std::move(s));
    }
  }
  return all;
}

inline LabelSet intersect(const LabelSet& a, const LabelSet& b) {
  LabelSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

/// Conjunctive combination by enumerating every (B, C) pair.
inline std::vector<double> conjunctive(const std::vector<double>& m1,
                                       const std::vector<double>& m2, std::size_t n) {
  const auto sets = power_set(n);
  std::vector<double> out(sets.size(), 0.0);
  for (std::size_t b = 0; b < sets.size(); ++b) {
    for (std::size_t c = 0; c < sets.size(); ++c) {
      out[to_index(intersect(sets[b], sets[c]))] += m1[b] * m2[c];
    }
  }
  return out;
}

inline std::vector<double> dense(const MassFunction& m) {
  return {m.masses().begin(), m.masses().end()};
}

/// Sum of m(B) over B with B a subset of A.
inline double subset_sum(const std::vector<double>& m, const LabelSet& a, std::size_t n) {
  const auto sets = power_set(n);
  double total = 0.0;
  for (std::size_t b = 0; b < sets.size(); ++b) {
    if (std::includes(a.begin(), a.end(), sets[b].begin(), sets[b].end())) total += m[b];
  }
  return total;
}

/// Sum of m(B) over B with A a subset of B.
inline double superset_sum(const std::vector<double>& m, const LabelSet& a, std::size_t n) {
  const auto sets = power_set(n);
  double total = 0.0;
  for (std::size_t b = 0; b < sets.size(); ++b) {
    if (std::includes(sets[b].begin(), sets[b].end(), a.begin(), a.end())) total += m[b];
  }
  return total;
}

/// Sum of m(B) over B meeting A.
inline double meeting_sum(const std::vector<double>& m, const LabelSet& a, std::size_t n) {
  const auto sets = power_set(n);
  double total = 0.0;
  for (std::size_t b = 0; b < sets.size(); ++b) {
    if (!intersect(sets[b], a).empty()) total += m[b];
  }
  return total;
}

inline double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace dsfusion::oracle
