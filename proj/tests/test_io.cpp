#include <doctest.h>

#include "dsfusion/errors.hpp"
#include "dsfusion/io.hpp"
#include "support/generators.hpp"

using namespace dsfusion;
using namespace dsfusion::testing;
using nlohmann::json;

namespace {

const std::string kFixtures = DSFUSION_FIXTURES;

template <typename T, typename Parse>
T reload(const T& value, Parse parse) {
  // Through text, as a file would.
  return parse(json::parse(io::to_json(value).dump()));
}

}  // namespace

TEST_CASE("documents round-trip through JSON") {
  Rng rng(51);
  for (int t = 0; t < 50; ++t) {
    const Frame f = make_frame(pick(rng, 1, 6));

    const auto m = random_mass(rng, f, t % 2 == 0, t % 5 == 0);
    CHECK(max_abs_difference(reload(m, io::mass_from_json), m) <= 1e-12);

    const auto b = random_boolean(rng, f);
    const auto b2 = reload(b, io::boolean_ensemble_from_json);
    REQUIRE(b2.size() == b.size());
    for (std::size_t k = 0; k < b.size(); ++k) {
      CHECK(b2.experts()[k].possible == b.experts()[k].possible);
      CHECK(b2.experts()[k].weight == b.experts()[k].weight);
    }

    const auto p = random_probabilistic(rng, f);
    const auto p2 = reload(p, io::probabilistic_ensemble_from_json);
    for (std::size_t k = 0; k < p.size(); ++k) {
      CHECK(p2.experts()[k].opinion == p.experts()[k].opinion);
    }

    const auto s = ensemble_stats(random_log_ensemble(rng, f));
    const auto s2 = reload(s, io::gaussian_state_from_json);
    CHECK(s2.mean() == s.mean());
    CHECK(s2.cov() == s.cov());
    CHECK(s2.weight() == s.weight());

    const auto k = random_prior(rng, f);
    CHECK(reload(k, io::prior_from_json).values() == k.values());
  }
}

TEST_CASE("mass documents") {
  const auto m = io::mass_from_json(json::parse(R"({"frame":["a","b"],
      "masses":[{"subset":[],"value":0.25},{"subset":["b","a"],"value":0.75}]})"));
  CHECK(m[0] == 0.25);
  CHECK(m[0b11] == 0.75);
  CHECK(m[0b01] == 0.0);

  CHECK_THROWS_AS(io::mass_from_json(json::parse(R"({"frame":["a"],"masses":[{"subset":["z"],"value":1}]})")),
                  InvalidArgument);
  CHECK_THROWS_AS(io::mass_from_json(json::parse(R"({"frame":["a"],"masses":[{"subset":["a"],"value":0.5}]})")),
                  InvalidArgument);
  CHECK_THROWS_AS(io::mass_from_json(json::parse(R"({"frame":["a"]})")), ParseError);
  CHECK_THROWS_AS(io::mass_from_json(json::parse(R"({"frame":["a"],"masses":[{"subset":["a"],"value":"x"}]})")),
                  ParseError);
}

TEST_CASE("document kind detection") {
  CHECK(io::load_document(kFixtures + "/mass_vacuous.json").kind() == io::DocumentKind::mass);
  CHECK(io::load_document(kFixtures + "/boolean_one.json").kind() ==
        io::DocumentKind::boolean_ensemble);
  CHECK(io::load_document(kFixtures + "/prob_source1.json").kind() ==
        io::DocumentKind::probabilistic_ensemble);
  CHECK(io::load_document(kFixtures + "/gauss_rank1.json").kind() ==
        io::DocumentKind::gaussian_log_state);
  CHECK_THROWS_AS(io::document_from_json(json::parse(R"({"frame":["a"]})"), "x"), ParseError);
  CHECK_THROWS_AS(io::load_document(kFixtures + "/missing.json"), ParseError);
}

TEST_CASE("errors carry the file name") {
  try {
    io::load_document(kFixtures + "/gauss_asymmetric.json");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("gauss_asymmetric.json") != std::string::npos);
  }
}

TEST_CASE("gaussian documents validate shape") {
  CHECK_THROWS_AS(io::gaussian_state_from_json(json::parse(
                      R"({"frame":["a","b"],"mean":[0,0],"cov":[[1,0]],"weight":1})")),
                  ParseError);
  const auto s = io::gaussian_state_from_json(
      json::parse(R"({"frame":["a"],"mean":[1.5],"cov":[[2]]})"));
  CHECK(s.weight() == 1.0);
}
