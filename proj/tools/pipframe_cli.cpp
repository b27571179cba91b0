#include <CLI11.hpp>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>

#include "pipframe/scenarios.hpp"

namespace fs = std::filesystem;
using pipframe::scenarios::RunPlan;
using pipframe::scenarios::ScenarioResult;
using Json = pipframe::serial::Json;

namespace {

struct Job {
  enum class Kind { Builtin, Custom } kind;
  std::string name;
  Json custom;
};

std::vector<Job> make_jobs(const RunPlan& plan) {
  std::vector<Job> jobs;
  for (const auto& name : plan.builtins)
    jobs.push_back({Job::Kind::Builtin, name, {}});
  for (const auto& c : plan.customs) {
    const std::string name =
        c.is_object() && c.contains("name") ? c.at("name").get<std::string>()
                                            : "custom";
    jobs.push_back({Job::Kind::Custom, name, c});
  }
  return jobs;
}

ScenarioResult run_job(const Job& job, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  ScenarioResult res = job.kind == Job::Kind::Builtin
                           ? pipframe::scenarios::run_builtin(job.name, seed)
                           : pipframe::scenarios::run_custom(job.custom, seed);
  const auto stop = std::chrono::steady_clock::now();
  res.report["timings"] = Json{
      {"wall_ms",
       std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
           .count()}};
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pipframe: frame, semi-frame and reproducing-pair analysis "
               "over finite measure spaces"};
  app.require_subcommand(1);

  std::string target, out_dir = "reports", format = "both", explain_name;
  std::uint64_t seed = 1;
  int jobs = 1;

  auto* run = app.add_subcommand(
      "run", "Run a built-in scenario, \"all\", or a JSON config file");
  run->add_option("target", target,
                  "scenario name, \"all\", or path to a config file")
      ->required();
  auto* seed_opt = run->add_option("--seed", seed, "random seed (default 1)");
  run->add_option("--out", out_dir, "directory for JSON reports");
  run->add_option("--format", format, "json|text|both")
      ->check(CLI::IsMember({"json", "text", "both"}));
  run->add_option("--jobs", jobs, "number of concurrent scenarios")
      ->check(CLI::PositiveNumber);

  auto* list = app.add_subcommand("list", "List the built-in scenarios");
  auto* explain =
      app.add_subcommand("explain", "Describe what a scenario verifies");
  explain->add_option("name", explain_name, "scenario name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) {
      for (const auto& name : pipframe::scenarios::list_scenarios())
        std::cout << name << "\n";
      return 0;
    }
    if (explain->parsed()) {
      std::cout << pipframe::scenarios::explain(explain_name) << "\n";
      return 0;
    }

    RunPlan plan;
    if (target == "all") {
      plan.builtins = pipframe::scenarios::list_scenarios();
    } else if (pipframe::scenarios::is_builtin(target)) {
      plan.builtins = {target};
    } else {
      std::ifstream in(target);
      if (!in)
        throw pipframe::ConfigError("cannot open config file: " + target);
      Json config;
      try {
        in >> config;
      } catch (const Json::parse_error& e) {
        throw pipframe::ConfigError(target + ": " + e.what());
      }
      plan = pipframe::scenarios::parse_config(config);
    }
    if (seed_opt->count() > 0 || !plan.seed_explicit)
      plan.seed = seed_opt->count() > 0 ? seed : plan.seed;

    const std::vector<Job> job_list = make_jobs(plan);
    std::vector<ScenarioResult> results(job_list.size());
    if (jobs <= 1) {
      for (std::size_t i = 0; i < job_list.size(); ++i)
        results[i] = run_job(job_list[i], plan.seed);
    } else {
      std::mutex next_mutex;
      std::size_t next = 0;
      auto worker = [&] {
        while (true) {
          std::size_t i;
          {
            std::lock_guard<std::mutex> lock(next_mutex);
            if (next >= job_list.size()) return;
            i = next++;
          }
          results[i] = run_job(job_list[i], plan.seed);
        }
      };
      std::vector<std::thread> pool;
      for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
      for (auto& th : pool) th.join();
    }

    bool all_passed = true;
    const bool want_json = format == "json" || format == "both";
    const bool want_text = format == "text" || format == "both";
    if (want_json) fs::create_directories(out_dir);
    for (const auto& res : results) {
      all_passed = all_passed && res.passed;
      if (want_text) std::cout << res.text;
      if (want_json) {
        const fs::path path = fs::path(out_dir) / (res.name + ".json");
        std::ofstream out(path);
        out << res.report.dump(2) << "\n";
        if (!out)
          throw pipframe::ConfigError("cannot write report: " + path.string());
      }
    }
    if (!all_passed) {
      for (const auto& res : results)
        if (!res.passed)
          for (const auto& c : res.checks)
            if (!c.passed) {
              std::cerr << "first failure: " << res.name << " / " << c.name
                        << " residual=" << c.residual
                        << " tolerance=" << c.tolerance << "\n";
              break;
            }
      return 1;
    }
    return 0;
  } catch (const pipframe::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const pipframe::DimensionError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const pipframe::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
