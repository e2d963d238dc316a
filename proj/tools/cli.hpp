#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "dsfusion/ensembles.hpp"
#include "dsfusion/mass_function.hpp"

namespace dsfusion::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 1, kTotalConflict = 2 };

struct GlobalOptions {
  bool json = false;
  double tolerance = kMassSumTolerance;
  std::size_t max_experts = kDefaultMaxExperts;
};

struct CombineOptions {
  std::vector<std::string> files;
  bool normalized = true;
  bool fast = true;
};

struct ExpertsOptions {
  std::vector<std::string> files;
  std::string prior_file;
  bool probabilistic = true;
  bool verify = false;
};

struct LogfuseOptions {
  std::vector<std::string> files;
  std::string prior_file;
};

struct SimulateOptions {
  std::uint64_t seed = 1;
  std::size_t labels = 4;
  std::size_t experts = 4;
  std::size_t sources = 3;
  double bias = 1.0;
  double sparsity = 0.5;
};

// Each command writes its report to `out` and diagnostics to `err`, and
// returns the process exit code. Library errors propagate as exceptions.
int cmd_combine(const CombineOptions& opts, const GlobalOptions& global, std::ostream& out,
                std::ostream& err);
int cmd_experts(const ExpertsOptions& opts, const GlobalOptions& global, std::ostream& out,
                std::ostream& err);
int cmd_logfuse(const LogfuseOptions& opts, const GlobalOptions& global, std::ostream& out,
                std::ostream& err);
int cmd_simulate(const SimulateOptions& opts, const GlobalOptions& global, std::ostream& out,
                 std::ostream& err);

/// Parses `args` (without the program name) and runs the selected command.
/// Every library error is reported on `err` and mapped to exit code 1.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dsfusion::cli
