#ifndef PIPFRAME_SCENARIOS_HPP
#define PIPFRAME_SCENARIOS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pipframe/serialization.hpp"

namespace pipframe::scenarios {

struct CheckResult {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  double tolerance = 0.0;
};

struct ScenarioResult {
  std::string name;
  std::uint64_t seed = 0;
  bool passed = false;
  std::vector<CheckResult> checks;
  serial::Json report;  // "timings" filled in by the caller if wanted
  std::string text;
};

std::vector<std::string> list_scenarios();
bool is_builtin(const std::string& name);

// human-readable account of what the scenario constructs and verifies
std::string explain(const std::string& name);

ScenarioResult run_builtin(const std::string& name, std::uint64_t seed);

// Declarative config: {"seed": n, "scenarios": [names] | "all",
// "custom": [{"name", "construction", ...}]}. Unknown keys are rejected.
struct RunPlan {
  std::uint64_t seed = 1;
  bool seed_explicit = false;
  std::vector<std::string> builtins;
  serial::Json customs = serial::Json::array();
};

RunPlan parse_config(const serial::Json& config);

ScenarioResult run_custom(const serial::Json& custom, std::uint64_t seed);

}  // namespace pipframe::scenarios

#endif
