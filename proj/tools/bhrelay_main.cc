// Copyright 2026 The bhrelay Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end: run, sweep, validate-schedules, cce-check.

#include <cstdio>
#include <exception>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bhrelay/error.h"
#include "bhrelay/game.h"
#include "bhrelay/harness.h"
#include "bhrelay/io.h"
#include "bhrelay/learning.h"

namespace {

using bhrelay::ExperimentConfig;

struct RunOptions {
  std::string config_path;
  std::optional<std::string> algorithm;
  std::optional<int> drops;
  std::optional<int> iterations;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> backhaul;
  std::optional<int> threads;
  std::string out;
  std::vector<std::string> overrides;
  bool strict = false;
};

void AddRunFlags(CLI::App* cmd, RunOptions& o) {
  cmd->add_option("--config", o.config_path, "key = value config file");
  cmd->add_option("--algorithm", o.algorithm, "CLA|RU1|OFF|RSF|RSL|SAT");
  cmd->add_option("--drops", o.drops, "Monte-Carlo drops");
  cmd->add_option("--iterations", o.iterations, "learning iterations per drop");
  cmd->add_option("--seed", o.seed, "master seed");
  cmd->add_option("--backhaul", o.backhaul, "ota|wrd|hyb")
      ->check(CLI::IsMember({"ota", "wrd", "hyb"}));
  cmd->add_option("--threads", o.threads, "worker threads (0: all cores)");
  cmd->add_option("--out", o.out, "output directory");
  cmd->add_option("--set", o.overrides, "override, e.g. --set learning.kappa=5");
  cmd->add_flag("--strict", o.strict, "exit nonzero if any drop fails");
}

ExperimentConfig BuildConfig(const RunOptions& o) {
  ExperimentConfig c;
  if (!o.config_path.empty()) c = bhrelay::LoadConfig(o.config_path, c);
  for (const std::string& kv : o.overrides) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw bhrelay::ConfigError("--set expects key=value");
    bhrelay::ApplySetting(c, kv.substr(0, eq), kv.substr(eq + 1));
  }
  if (o.algorithm) c.algorithm = bhrelay::ParseAlgorithm(*o.algorithm);
  if (o.drops) c.drops = *o.drops;
  if (o.iterations) c.iterations = *o.iterations;
  if (o.seed) c.scenario.seed = *o.seed;
  if (o.backhaul) c.game.mode = bhrelay::ParseBackhaulMode(*o.backhaul);
  if (o.threads) c.threads = *o.threads;
  if (!o.out.empty()) c.out = o.out;
  c.Validate();
  return c;
}

void WriteOutputs(const bhrelay::RunResult& r, const std::string& dir) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  bhrelay::WriteTextFile(dir + "/result.json", bhrelay::ToJson(r));
  bhrelay::WriteTextFile(dir + "/result.csv", bhrelay::ToCsv(r));
}

void PrintSummary(const std::string& label, const bhrelay::RunResult& r, int drops) {
  std::printf("%s algorithm=%s backhaul=%s drops=%d failures=%d mean_rate=%.6g "
              "mean_delay=%.6g mean_utility=%.6g unstable=%.4f converged=%d\n",
              label.c_str(), r.algorithm.c_str(), r.backhaul.c_str(), drops, r.failures,
              r.summary.mean_rate, r.summary.mean_delay, r.summary.mean_utility,
              r.summary.unstable_fraction, r.summary.converged_drops);
}

int Run(const RunOptions& o) {
  const ExperimentConfig c = BuildConfig(o);
  const bhrelay::RunResult r = bhrelay::RunExperiment(c);
  WriteOutputs(r, c.out);
  PrintSummary("run", r, c.drops);
  for (const auto& d : r.drops)
    if (!d.ok) std::fprintf(stderr, "drop %d failed: %s\n", d.drop, d.error.c_str());
  return o.strict && r.failures > 0 ? 1 : 0;
}

int Sweep(const RunOptions& o, const std::string& key, const std::vector<std::string>& values) {
  const ExperimentConfig base = BuildConfig(o);
  int failures = 0;
  for (const std::string& value : values) {
    ExperimentConfig c = base;
    bhrelay::ApplySetting(c, key, value);
    c.Validate();
    const bhrelay::RunResult r = bhrelay::RunExperiment(c);
    failures += r.failures;
    if (!c.out.empty()) WriteOutputs(r, c.out + "/" + key + "=" + value);
    PrintSummary(key + "=" + value, r, c.drops);
  }
  return o.strict && failures > 0 ? 1 : 0;
}

int ValidateSchedulesCmd(std::int64_t horizon, double l, double g, double m) {
  bhrelay::Schedules s;
  s.lambda.exponent = l;
  s.gamma.exponent = g;
  s.mu.exponent = m;
  const bhrelay::ScheduleReport report = bhrelay::ValidateSchedules(s, horizon);
  for (const auto& c : report.checks)
    std::printf("condition (%s): %s  %s\n", c.condition.c_str(), c.passed ? "pass" : "FAIL",
                c.detail.c_str());
  std::printf("schedules %s at T=%lld\n", report.ok() ? "valid" : "invalid",
              static_cast<long long>(horizon));
  return report.ok() ? 0 : 1;
}

int CceCheck(const std::string& path, int steps, std::uint64_t seed, double epsilon) {
  bhrelay::GameFile file = bhrelay::GameFileFromJson(bhrelay::ReadTextFile(path));
  std::vector<double> dist = file.distribution;
  if (dist.empty()) {
    dist = bhrelay::RegretMatchingSelfPlay(file.game, steps, seed);
    std::printf("distribution: empirical play of %d regret-matching steps\n", steps);
  }
  const std::vector<double> gaps = bhrelay::EpsilonCceGap(file.game, dist);
  double worst = 0.0;
  for (std::size_t p = 0; p < gaps.size(); ++p) {
    std::printf("player %zu: gap %.9g\n", p, gaps[p]);
    worst = std::max(worst, gaps[p]);
  }
  std::printf("epsilon %.9g (%s %.9g)\n", worst, worst <= epsilon ? "<=" : ">", epsilon);
  return worst <= epsilon ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two-tier uplink simulator with rate splitting and backhaul-aware relaying"};
  app.require_subcommand(1);

  RunOptions run_opts;
  CLI::App* run = app.add_subcommand("run", "run one experiment");
  AddRunFlags(run, run_opts);

  RunOptions sweep_opts;
  std::string sweep_key;
  std::vector<std::string> sweep_values;
  CLI::App* sweep = app.add_subcommand("sweep", "run one experiment per value of a key");
  AddRunFlags(sweep, sweep_opts);
  sweep->add_option("--key", sweep_key, "config key, e.g. scenario.n_backhaul_subcarriers")
      ->required();
  sweep->add_option("--values", sweep_values, "comma-separated values")
      ->required()
      ->delimiter(',');

  std::int64_t horizon = 100000;
  double le = 0.5, ge = 0.55, me = 0.6;
  CLI::App* vs = app.add_subcommand("validate-schedules", "check step-size conditions");
  vs->add_option("--horizon", horizon, "horizon T (>= 10000)");
  vs->add_option("--lambda", le, "lambda exponent");
  vs->add_option("--gamma", ge, "gamma exponent");
  vs->add_option("--mu", me, "mu exponent");

  std::string game_path;
  int cce_steps = 10000;
  std::uint64_t cce_seed = 1;
  double epsilon = 0.05;
  CLI::App* cce = app.add_subcommand("cce-check", "epsilon-CCE gap of a matrix game");
  cce->add_option("--game", game_path, "JSON game file")->required();
  cce->add_option("--iterations", cce_steps, "self-play steps when no distribution is given");
  cce->add_option("--seed", cce_seed, "self-play seed");
  cce->add_option("--epsilon", epsilon, "acceptance threshold");

  CLI11_PARSE(app, argc, argv);
  try {
    if (run->parsed()) return Run(run_opts);
    if (sweep->parsed()) return Sweep(sweep_opts, sweep_key, sweep_values);
    if (vs->parsed()) return ValidateSchedulesCmd(horizon, le, ge, me);
    if (cce->parsed()) return CceCheck(game_path, cce_steps, cce_seed, epsilon);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
