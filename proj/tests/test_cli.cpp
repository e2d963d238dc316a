#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "dsfusion/io.hpp"
#include "support/golden_cases.hpp"

using namespace dsfusion;
using namespace dsfusion::testing;

namespace {

const std::string kFixtures = DSFUSION_FIXTURES;
const std::filesystem::path kGolden = DSFUSION_GOLDEN;

std::string fixture(const std::string& name) { return kFixtures + "/" + name; }

}  // namespace

TEST_CASE("golden reports") {
  const bool update = std::getenv("DSFUSION_UPDATE_GOLDEN") != nullptr;
  for (const auto& c : golden_cases()) {
    CAPTURE(c.name);
    const auto args = resolve_args(c.args, kFixtures);
    const auto first = run_cli(args);
    CHECK(first.exit_code == c.exit_code);
    const auto path = kGolden / (c.name + ".txt");
    if (update) {
      std::ofstream(path, std::ios::binary) << first.out;
    }
    CHECK(first.out == read_file(path));
    CHECK(run_cli(args).out == first.out);
    for (const char* engine : {"naive", "fast"}) {
      const auto switched = with_engine(args, engine);
      if (!switched.empty()) CHECK(run_cli(switched).out == first.out);
    }
  }
}

TEST_CASE("combine") {
  SUBCASE("conflict line") {
    const auto r = run_cli({"combine", "--mode", "unnormalized", fixture("mass_worked_m1.json"),
                            fixture("mass_worked_m2.json")});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("m(∅) = 0.420000") != std::string::npos);
  }
  SUBCASE("total conflict exits 2") {
    const auto r = run_cli({"combine", fixture("mass_only_a.json"), fixture("mass_only_b.json")});
    CHECK(r.exit_code == 2);
    CHECK(r.out.find("TOTAL CONFLICT → m0") != std::string::npos);
  }
  SUBCASE("frame mismatch names the file") {
    const auto r = run_cli({"combine", fixture("mass_worked_m1.json"), fixture("mass_other_frame.json")});
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("mass_other_frame.json") != std::string::npos);
  }
  SUBCASE("needs two files") {
    CHECK(run_cli({"combine", fixture("mass_vacuous.json")}).exit_code == 1);
  }
  SUBCASE("wrong document kind") {
    const auto r = run_cli({"combine", fixture("mass_vacuous.json"), fixture("boolean_one.json")});
    CHECK(r.exit_code == 1);
  }
  SUBCASE("unknown file") {
    CHECK(run_cli({"combine", fixture("nope.json"), fixture("mass_vacuous.json")}).exit_code == 1);
  }
  SUBCASE("json output reloads to the same mass") {
    const auto r = run_cli({"--json", "combine", fixture("mass_worked_m1.json"),
                            fixture("mass_worked_m2.json")});
    REQUIRE(r.exit_code == 0);
    const auto m = io::mass_from_json(nlohmann::json::parse(r.out));
    CHECK(m[0b01] == doctest::Approx(0.18 / 0.58).epsilon(1e-12));
  }
  SUBCASE("file order does not matter") {
    const std::vector<std::string> files{fixture("mass_n10_0.json"), fixture("mass_n10_1.json"),
                                         fixture("mass_n10_2.json")};
    std::vector<std::size_t> order{0, 1, 2};
    const auto reference = run_cli({"--json", "combine", files[0], files[1], files[2]});
    const auto base = io::mass_from_json(nlohmann::json::parse(reference.out));
    while (std::next_permutation(order.begin(), order.end())) {
      const auto r = run_cli({"--json", "combine", files[order[0]], files[order[1]], files[order[2]]});
      const auto m = io::mass_from_json(nlohmann::json::parse(r.out));
      CHECK(max_abs_difference(m, base) <= 1e-9);
    }
  }
}

TEST_CASE("experts") {
  SUBCASE("renormalized boolean example") {
    const auto r = run_cli({"--json", "experts", "--pipeline", "boolean", fixture("boolean_two.json"),
                            fixture("boolean_one.json")});
    REQUIRE(r.exit_code == 0);
    const auto m = io::mass_from_json(nlohmann::json::parse(r.out));
    CHECK(belief(m, 0b10) == doctest::Approx(1.0));
  }
  SUBCASE("probabilistic pipeline rejects boolean files") {
    CHECK(run_cli({"experts", fixture("boolean_one.json")}).exit_code == 1);
  }
  SUBCASE("size cap") {
    const auto r = run_cli({"--max-experts", "5", "experts", fixture("prob_source1.json"),
                            fixture("prob_source2.json")});
    CHECK(r.exit_code == 1);
    CHECK(r.err.find("--max-experts") != std::string::npos);
  }
  SUBCASE("verify prints the verdict") {
    const auto r = run_cli({"experts", "--verify", fixture("prob_source1.json"),
                            fixture("prob_source2.json")});
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("THEOREM OK") != std::string::npos);
  }
}

TEST_CASE("logfuse") {
  const auto r = run_cli({"logfuse", fixture("gauss_rank1.json")});
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("SINGULAR COVARIANCE") != std::string::npos);
  CHECK(run_cli({"logfuse", fixture("gauss_asymmetric.json")}).exit_code == 1);
  CHECK(run_cli({"logfuse", fixture("gauss_rank1.json"), fixture("gauss_diag1.json")}).exit_code == 1);
}

TEST_CASE("simulate") {
  const auto a = run_cli({"simulate", "--seed", "123", "--labels", "5"});
  const auto b = run_cli({"simulate", "--seed", "123", "--labels", "5"});
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(run_cli({"simulate", "--seed", "124", "--labels", "5"}).out != a.out);
  CHECK(run_cli({"simulate", "--labels", "1"}).exit_code == 1);
  CHECK(run_cli({"simulate", "--experts", "0"}).exit_code == 1);
  CHECK(run_cli({"--max-experts", "100", "simulate", "--experts", "10", "--sources", "3"}).exit_code == 1);

  // Strongly biased, unanimous experts: both pipelines pick the favoured label.
  for (int seed = 1; seed <= 20; ++seed) {
    const auto r = run_cli({"--json", "simulate", "--seed", std::to_string(seed), "--bias", "2"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["ds_top"] == j["favoured"]);
    CHECK(j["gaussian_top"] == j["favoured"]);
  }
}

TEST_CASE("usage errors") {
  CHECK(run_cli({}).exit_code == 1);
  CHECK(run_cli({"frobnicate"}).exit_code == 1);
  CHECK(run_cli({"combine", "--mode", "sideways", fixture("mass_vacuous.json"),
                 fixture("mass_vacuous.json")}).exit_code == 1);
  CHECK(run_cli({"--help"}).exit_code == 0);
}
