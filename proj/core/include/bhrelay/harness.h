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

// Monte-Carlo experiments: one independent drop per derived seed, the chosen
// scheme run on each, and the aggregate metrics.

#ifndef BHRELAY_HARNESS_H_
#define BHRELAY_HARNESS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bhrelay/baselines.h"
#include "bhrelay/game.h"
#include "bhrelay/learning.h"
#include "bhrelay/topology.h"

namespace bhrelay {

enum class Algorithm { kCla, kRu1, kOff, kRsf, kRsl, kSat };
// Accepts CLA, RU1, OFF, RSF, RSL, SAT in any case, with or without a dash.
Algorithm ParseAlgorithm(const std::string& name);
std::string ToString(Algorithm algorithm);
bool IsLearner(Algorithm algorithm);

struct LearningParams {
  Schedules schedules;
  double kappa = 10.0;
  double feedback_sigma = 0.0;
  bool played_only_regret = false;
  double sat_threshold = 5.0;
  int window = 100;
  double tolerance = 1e-3;
  // Convergence is not declared before this iteration.
  std::int64_t min_iterations = 200;
};

struct ExperimentConfig {
  ScenarioConfig scenario;  // scenario.seed is the master seed
  GameSettings game;
  ActionGrid grid;
  LearningParams learning;
  bool offload_vacate = true;
  int offload_max_rounds = 50;
  Algorithm algorithm = Algorithm::kCla;
  int drops = 100;
  int iterations = 1000;
  int threads = 0;  // 0: hardware concurrency
  std::string out;

  // Throws ConfigError.
  void Validate() const;
};

struct MueRecord {
  int drop = 0;
  int mue = 0;
  double distance = 0.0;  // to the MBS, m
  double rate = 0.0;
  double delay = 0.0;  // +inf when unstable
  double utility = 0.0;
  double power = 0.0;
  double theta = 0.0;
  int relay = -1;
  bool operator==(const MueRecord&) const = default;
};

struct DropResult {
  int drop = 0;
  std::uint64_t seed = 0;
  bool ok = true;
  std::string error;
  std::vector<MueRecord> mues;
  double mean_rate = 0.0;
  // Learners only; -1 when the monitor never fired.
  std::int64_t converged_at = -1;
  std::int64_t settled_at = -1;
  bool operator==(const DropResult&) const = default;
};

struct Trace {
  std::vector<double> mean_utility;  // per iteration, averaged over drops
  std::vector<double> pi_change;     // windowed strategy change, max over drops
  bool operator==(const Trace&) const = default;
};

struct Summary {
  double mean_rate = 0.0;
  double mean_delay = 0.0;  // over stable MUEs
  double mean_utility = 0.0;
  double unstable_fraction = 0.0;
  int converged_drops = 0;
  bool operator==(const Summary&) const = default;
};

struct RunResult {
  static constexpr int kSchemaVersion = 1;

  std::string algorithm;
  std::string backhaul;
  std::uint64_t seed = 0;
  int iterations = 0;
  std::vector<DropResult> drops;
  Trace trace;
  Summary summary;
  int failures = 0;
  bool operator==(const RunResult&) const = default;

  std::vector<MueRecord> Records() const;  // successful drops, in order
};

// Runs one drop; never throws for model errors (they mark the drop failed).
DropResult RunDrop(const ExperimentConfig& config, int drop, Trace* trace = nullptr);

RunResult RunExperiment(const ExperimentConfig& config);

Summary Summarize(const std::vector<DropResult>& drops);

struct CdfPoint {
  double value = 0.0;
  double fraction = 0.0;
};

// Empirical, right-continuous CDF; one point per distinct value. Throws
// DomainError on empty input.
std::vector<CdfPoint> ComputeCdf(std::vector<double> samples);

// Indices of the top `fraction` of `rates` (at least one). Ties are broken
// by lower index first. Throws DomainError with fewer than 10 samples.
std::vector<int> BestEffortDecile(const std::vector<double>& rates, double fraction = 0.1);

// Mean rate per bin of distance / macro_radius in [0, 1]; nullopt for empty
// bins. Distances beyond the radius fall into the last bin.
std::vector<std::optional<double>> DistanceBinnedThroughput(
    const std::vector<MueRecord>& records, double macro_radius, int n_bins);

}  // namespace bhrelay

#endif  // BHRELAY_HARNESS_H_
