// Copyright 2026 The qkernel Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// qkernel: command-line driver.
//
//   qkernel [--config FILE] [--seed S] [--trials T] [--out PREFIX] [--print-config] <command>
//
// Commands: gen, run, sweep, verify, bounds. Exit codes: 0 ok, 1 invalid
// configuration or usage, 2 verification failure, 3 I/O error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qkernel/bounds.h"
#include "qkernel/harness/campaign.h"
#include "qkernel/harness/config.h"
#include "qkernel/harness/io.h"
#include "qkernel/harness/problem.h"
#include "qkernel/harness/sweep.h"
#include "qkernel/harness/verify.h"
#include "qkernel/simd/kernels.h"

namespace {

using namespace qkernel;
using namespace qkernel::harness;
using ojson = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kInvalidConfig = 1, kVerifyFailed = 2, kIoFailure = 3 };

struct GlobalOptions {
  std::string config_path;
  std::optional<uint64_t> seed;
  std::optional<int> trials;
  std::string out;
  bool print_config = false;
};

ExperimentConfig load_config(const GlobalOptions& g) {
  nlohmann::json j = nlohmann::json::object();
  if (!g.config_path.empty()) {
    const std::string text = read_file(g.config_path);
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ConfigError(g.config_path + ": " + e.what());
    }
  }
  if (g.seed) j["seed"] = *g.seed;
  if (g.trials) j["trials"] = *g.trials;
  return config_from_json(j);
}

// Writes `text` to PREFIX + suffix, or to stdout when no prefix was given.
void emit(const GlobalOptions& g, const std::string& suffix, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    write_file(g.out + suffix, text);
  }
}

std::vector<double> parse_values(const std::string& csv) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw ConfigError("bad sweep value: '" + item + "'");
    }
    if (used != item.size()) throw ConfigError("bad sweep value: '" + item + "'");
    values.push_back(v);
  }
  return values;
}

int cmd_gen(const GlobalOptions& g, const ExperimentConfig& config, int trial) {
  Rng rng(derive_seed(trial_seed(config, trial), StreamDomain::kProblem));
  const Problem problem = generate_problem(config, rng);
  emit(g, ".json", problem_to_json(config, problem).dump(2));
  return kOk;
}

int cmd_run(const GlobalOptions& g, const ExperimentConfig& config) {
  const CampaignResult result = run_campaign(config);
  const std::string json = campaign_to_json(result).dump(2);
  if (g.out.empty()) {
    std::cout << json << '\n';
  } else {
    write_file(g.out + ".csv", runs_to_csv(result.records));
    write_file(g.out + ".json", json);
  }
  return kOk;
}

int cmd_sweep(const GlobalOptions& g, const ExperimentConfig& config, const std::string& axis,
              const std::string& values) {
  const SweepAxis a = parse_axis(axis);
  const auto rows = sweep(config, a, parse_values(values));
  const std::string csv = sweep_to_csv(rows);
  if (g.out.empty()) {
    std::cout << csv;
  } else {
    ojson j;
    j["config"] = to_json(config);
    j["axis"] = std::string(to_string(a));
    ojson points = ojson::array();
    for (const SweepRow& r : rows) points.push_back({{"value", r.value}, {"summary", summary_to_json(r.summary)}});
    j["points"] = std::move(points);
    write_file(g.out + ".csv", csv);
    write_file(g.out + ".json", j.dump(2));
  }
  return kOk;
}

int cmd_verify(const GlobalOptions& g, ExperimentConfig config, const std::string& fault, bool skip_slow) {
  if (!fault.empty()) config.fault = parse_fault(fault);
  const VerifyReport report = verify_suite(config, {.skip_slow = skip_slow});
  for (const CheckResult& c : report.checks) {
    std::cerr << (c.passed ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.detail << '\n';
  }
  emit(g, ".json", report_to_json(report).dump(2));
  return report.passed() ? kOk : kVerifyFailed;
}

int cmd_bounds(const GlobalOptions& g, const std::string& problem_path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(problem_path));
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(problem_path + ": " + e.what());
  }
  ExperimentConfig config;
  const Problem problem = problem_from_json(j, &config);
  const int n = static_cast<int>(problem.labels.size());
  const double m = static_cast<double>(config.shots());

  ojson out;
  out["N"] = n;
  out["lambda"] = config.lambda;
  out["p"] = problem.p;
  out["delta"] = config.delta;
  out["m"] = config.shots();
  out["m_threshold"] = m_threshold(n, config.lambda, config.delta);
  const double fail = hoeffding_failure_bound(n, config.lambda, m);
  out["hoeffding_failure_bound"] = fail;
  out["hoeffding_vacuous"] = is_vacuous(fail);
  out["theorem1_noisy_kernel"] = bound_to_json(theorem1_rhs(problem.labels, problem.noisy_kernel, config.lambda,
                                                           config.delta, n));
  out["remark1_noisy_kernel"] = bound_to_json(remark1_rhs(problem.labels, problem.noisy_kernel, config.lambda,
                                                         config.delta, n));
  out["theorem2"] = bound_to_json(theorem2_rhs(problem.labels, problem.kernel, config.lambda, problem.p,
                                               config.delta, n));
  emit(g, ".json", out.dump(2));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noisy quantum-kernel ridge regression experiments"};
  app.set_version_flag("--version", "qkernel 0.1.0");
  GlobalOptions g;
  app.add_option("--config", g.config_path, "JSON configuration file");
  app.add_option("--seed", g.seed, "Master seed (overrides config)");
  app.add_option("--trials", g.trials, "Number of trials (overrides config)");
  app.add_option("--out", g.out, "Output prefix; writes PREFIX.csv / PREFIX.json");
  app.add_flag("--print-config", g.print_config, "Print the resolved configuration and exit");
  app.require_subcommand(0, 1);
  app.fallthrough();

  int gen_trial = 0;
  auto* gen = app.add_subcommand("gen", "Generate one problem instance as JSON");
  gen->add_option("--trial", gen_trial, "Trial index whose data to generate")->check(CLI::NonNegativeNumber);

  auto* run = app.add_subcommand("run", "Run a campaign of trials");

  std::string axis;
  std::string values;
  auto* sw = app.add_subcommand("sweep", "Run one campaign per value along an axis");
  sw->add_option("--axis", axis, "m, p, N or lambda")->required();
  sw->add_option("--values", values, "Comma-separated, strictly increasing")->required();

  std::string fault;
  bool skip_slow = false;
  auto* ver = app.add_subcommand("verify", "Run the property suites");
  ver->add_option("--fault", fault, "Inject a fault: none, disable_shift, biased_sampler");
  ver->add_flag("--skip-slow", skip_slow, "Skip the end-to-end sweeps");

  std::string problem_path;
  auto* bnd = app.add_subcommand("bounds", "Evaluate the bounds for a generated problem");
  bnd->add_option("--problem", problem_path, "Problem JSON from 'gen'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalidConfig;
  }

  try {
    const ExperimentConfig config = load_config(g);
    if (g.print_config) {
      std::cout << to_json(config).dump(2) << '\n';
      return kOk;
    }
    if (*gen) return cmd_gen(g, config, gen_trial);
    if (*run) return cmd_run(g, config);
    if (*sw) return cmd_sweep(g, config, axis, values);
    if (*ver) return cmd_verify(g, config, fault, skip_slow);
    if (*bnd) return cmd_bounds(g, problem_path);
    std::cerr << app.help();
    return kInvalidConfig;
  } catch (const ConfigError& e) {
    std::cerr << "invalid configuration: " << e.what() << '\n';
    return kInvalidConfig;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return kIoFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidConfig;
  }
}
