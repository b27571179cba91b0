#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pipframe/scenarios.hpp"

using namespace pipframe;
using serial::Json;

TEST_CASE("every builtin scenario passes with the default seed") {
  for (const auto& name : scenarios::list_scenarios()) {
    CAPTURE(name);
    auto result = scenarios::run_builtin(name, 1);
    CHECK(result.passed);
    for (const auto& c : result.checks) {
      CAPTURE(c.name);
      CHECK(c.passed);
    }
    CHECK(result.report.at("schema").get<std::string>() == "pipframe/1");
    CHECK(result.report.at("scenario").get<std::string>() == name);
    CHECK_FALSE(result.text.empty());
  }
}

TEST_CASE("reports are deterministic for a fixed seed") {
  for (const auto& name : scenarios::list_scenarios()) {
    CAPTURE(name);
    auto a = scenarios::run_builtin(name, 7);
    auto b = scenarios::run_builtin(name, 7);
    CHECK(a.report.dump() == b.report.dump());
    CHECK(a.text == b.text);
  }
}

TEST_CASE("catalog membership and explanations") {
  auto names = scenarios::list_scenarios();
  CHECK(names.size() == 8);
  for (const auto& name : names) {
    CHECK(scenarios::is_builtin(name));
    CHECK_FALSE(scenarios::explain(name).empty());
  }
  CHECK_FALSE(scenarios::is_builtin("no-such-scenario"));
  CHECK_THROWS_AS(scenarios::explain("no-such-scenario"), ConfigError);
}

TEST_CASE("config parsing") {
  auto plan = scenarios::parse_config(
      Json{{"seed", 5}, {"scenarios", Json::array({"onb-sanity"})}});
  CHECK(plan.seed == 5);
  CHECK(plan.seed_explicit);
  CHECK(plan.builtins == std::vector<std::string>{"onb-sanity"});

  auto all = scenarios::parse_config(Json{{"scenarios", "all"}});
  CHECK_FALSE(all.seed_explicit);
  CHECK(all.builtins.size() == scenarios::list_scenarios().size());

  CHECK_THROWS_AS(scenarios::parse_config(Json{{"seeds", 1}}), ConfigError);
  CHECK_THROWS_AS(
      scenarios::parse_config(Json{{"scenarios", Json::array({"nope"})}}),
      ConfigError);
  // selecting nothing at all is a config mistake
  CHECK_THROWS_AS(scenarios::parse_config(Json{{"seed", 1}}), ConfigError);
}

TEST_CASE("custom weighted-pair scenario runs and passes") {
  Json custom = {{"name", "my-pair"},
                 {"construction", "weighted_pair"},
                 {"weights", Json::array({1.0, 0.5, 0.25})}};
  auto result = scenarios::run_custom(custom, 3);
  CHECK(result.passed);
  CHECK(result.name == "my-pair");
  CHECK(result.report.at("scenario").get<std::string>() == "my-pair");
}

TEST_CASE("custom scenarios reject unknown keys and bad measures") {
  CHECK_THROWS_AS(scenarios::run_custom(Json{{"name", "x"},
                                             {"construction", "weighted_pair"},
                                             {"weights", Json::array({1.0})},
                                             {"bogus", 1}},
                                        1),
                  ConfigError);
  // a negative measure weight is rejected by the measure-space constructor
  Json bad = {{"name", "x"},
              {"construction", "weighted_pair"},
              {"weights", Json::array({1.0, 0.5})},
              {"space",
               Json{{"labels", Json::array({"a", "b"})},
                    {"weights", Json::array({1.0, -2.0})}}}};
  CHECK_THROWS_AS(scenarios::run_custom(bad, 1), DomainError);
}
