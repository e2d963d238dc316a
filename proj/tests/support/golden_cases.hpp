#pragma once

// CLI invocations whose stdout is frozen under tests/golden/. Arguments use
// "@/" for the fixture directory. Set DSFUSION_UPDATE_GOLDEN=1 when running
// test_cli to rewrite the files after an intentional format change.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace dsfusion::testing {

struct GoldenCase {
  std::string name;
  std::vector<std::string> args;
  int exit_code;
};

inline const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"combine_vacuous", {"combine", "@/mass_vacuous.json", "@/mass_vacuous.json"}, 0},
      {"combine_unnormalized",
       {"combine", "--mode", "unnormalized", "@/mass_worked_m1.json", "@/mass_worked_m2.json"}, 0},
      {"combine_normalized", {"combine", "@/mass_worked_m1.json", "@/mass_worked_m2.json"}, 0},
      {"combine_conflict", {"combine", "@/mass_only_a.json", "@/mass_only_b.json"}, 2},
      {"combine_n10",
       {"combine", "@/mass_n10_0.json", "@/mass_n10_1.json", "@/mass_n10_2.json"}, 0},
      {"combine_n10_unnormalized",
       {"combine", "--mode", "unnormalized", "@/mass_n10_0.json", "@/mass_n10_1.json",
        "@/mass_n10_2.json"}, 0},
      {"experts_boolean_verify",
       {"experts", "--pipeline", "boolean", "--verify", "@/boolean_two.json",
        "@/boolean_one.json"}, 0},
      {"experts_probabilistic_verify",
       {"experts", "--verify", "--prior", "@/prior_abc.json", "@/prob_source1.json",
        "@/prob_source2.json", "@/prob_source3.json"}, 0},
      {"experts_unanimous", {"experts", "@/prob_unanimous.json"}, 0},
      {"logfuse_identity", {"logfuse", "@/gauss_identity.json"}, 0},
      {"logfuse_diagonal",
       {"logfuse", "--prior", "@/prior_abc.json", "@/gauss_diag1.json", "@/gauss_diag2.json"}, 0},
      {"logfuse_rank1", {"logfuse", "@/gauss_rank1.json"}, 0},
      {"simulate_seed7", {"simulate", "--seed", "7"}, 0},
      {"simulate_single_expert", {"simulate", "--seed", "7", "--experts", "1", "--sources", "2"}, 0},
      {"simulate_seed7_json", {"--json", "simulate", "--seed", "7"}, 0},
  };
  return cases;
}

inline std::vector<std::string> resolve_args(const std::vector<std::string>& args,
                                             const std::string& fixtures) {
  std::vector<std::string> out;
  for (const auto& a : args) {
    out.push_back(a.rfind("@/", 0) == 0 ? fixtures + "/" + a.substr(2) : a);
  }
  return out;
}

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

inline CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// The same invocation with the combination engine switched, or empty when
/// the case is not a combine run.
inline std::vector<std::string> with_engine(std::vector<std::string> args, const char* engine) {
  if (args.empty() || args.front() != "combine") return {};
  args.push_back("--engine");
  args.push_back(engine);
  return args;
}

}  // namespace dsfusion::testing
