#include "cli.hpp"

#include <CLI11.hpp>

#include "dsfusion/errors.hpp"

namespace dsfusion::cli {

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evidence combination: belief functions, expert ensembles, log-opinion fusion",
               "dsfusion"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions global;
  app.add_flag("--json", global.json, "Emit machine-readable JSON instead of a text report");
  app.add_option("--tolerance", global.tolerance, "Agreement tolerance for --verify")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-experts", global.max_experts, "Cap on product-ensemble size")
      ->check(CLI::PositiveNumber);

  CombineOptions combine;
  std::string mode = "normalized";
  std::string engine = "fast";
  auto* combine_cmd = app.add_subcommand("combine", "Combine mass functions");
  combine_cmd->add_option("files", combine.files, "Mass documents")->required()->expected(2, -1)
      ->check(CLI::ExistingFile);
  combine_cmd->add_option("--mode", mode, "normalized (Dempster) or unnormalized")
      ->check(CLI::IsMember({"normalized", "unnormalized"}));
  combine_cmd->add_option("--engine", engine, "naive enumeration or fast transform")
      ->check(CLI::IsMember({"naive", "fast"}));

  ExpertsOptions experts;
  std::string pipeline = "probabilistic";
  auto* experts_cmd = app.add_subcommand("experts", "Combine expert ensembles and project to a belief state");
  experts_cmd->add_option("files", experts.files, "Ensemble documents")->required()
      ->check(CLI::ExistingFile);
  experts_cmd->add_option("--prior", experts.prior_file, "Prior/kappa document")
      ->check(CLI::ExistingFile);
  experts_cmd->add_option("--pipeline", pipeline, "boolean or probabilistic")
      ->check(CLI::IsMember({"boolean", "probabilistic"}));
  experts_cmd->add_flag("--verify", experts.verify,
                        "Also combine per-file belief states and check they agree");

  LogfuseOptions logfuse;
  auto* logfuse_cmd = app.add_subcommand("logfuse", "Add Gaussian log-opinion states");
  logfuse_cmd->add_option("files", logfuse.files, "Gaussian state documents")->required()
      ->check(CLI::ExistingFile);
  logfuse_cmd->add_option("--prior", logfuse.prior_file, "Prior probability document")
      ->check(CLI::ExistingFile);

  SimulateOptions simulate;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run both fusion pipelines on seeded synthetic experts");
  simulate_cmd->add_option("--seed", simulate.seed, "Generator seed");
  simulate_cmd->add_option("--labels", simulate.labels, "Number of labels")
      ->check(CLI::Range(std::size_t{2}, kDefaultMaxLabels));
  simulate_cmd->add_option("--experts", simulate.experts, "Experts per source")
      ->check(CLI::Range(std::size_t{1}, std::size_t{1000}));
  simulate_cmd->add_option("--sources", simulate.sources, "Number of evidence sources")
      ->check(CLI::Range(std::size_t{1}, std::size_t{32}));
  simulate_cmd->add_option("--bias", simulate.bias, "Extra weight every expert puts on the favoured label")
      ->check(CLI::Range(0.0, 100.0));
  simulate_cmd->add_option("--sparsity", simulate.sparsity,
                           "Probability that a non-favoured label is ruled out")
      ->check(CLI::Range(0.0, 0.99));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  combine.normalized = mode == "normalized";
  combine.fast = engine == "fast";
  experts.probabilistic = pipeline == "probabilistic";

  try {
    if (*combine_cmd) return cmd_combine(combine, global, out, err);
    if (*experts_cmd) return cmd_experts(experts, global, out, err);
    if (*logfuse_cmd) return cmd_logfuse(logfuse, global, out, err);
    return cmd_simulate(simulate, global, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace dsfusion::cli
