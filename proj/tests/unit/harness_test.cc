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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "bhrelay/error.h"
#include "bhrelay/harness.h"
#include "fixtures.h"

namespace bhrelay {
namespace {

ExperimentConfig Small(Algorithm algorithm, int drops = 3, int iterations = 50) {
  ExperimentConfig c;
  c.scenario = testing::SmallScenario();
  c.algorithm = algorithm;
  c.drops = drops;
  c.iterations = iterations;
  c.threads = 1;
  return c;
}

TEST(Algorithm, Parse) {
  EXPECT_EQ(ParseAlgorithm("CLA"), Algorithm::kCla);
  EXPECT_EQ(ParseAlgorithm("rs-l"), Algorithm::kRsl);
  EXPECT_EQ(ParseAlgorithm("RS_F"), Algorithm::kRsf);
  EXPECT_EQ(ParseAlgorithm("sat"), Algorithm::kSat);
  EXPECT_THROW(ParseAlgorithm("greedy"), ConfigError);
  for (Algorithm a : {Algorithm::kCla, Algorithm::kRu1, Algorithm::kOff, Algorithm::kRsf,
                      Algorithm::kRsl, Algorithm::kSat})
    EXPECT_EQ(ParseAlgorithm(ToString(a)), a);
  EXPECT_TRUE(IsLearner(Algorithm::kSat));
  EXPECT_FALSE(IsLearner(Algorithm::kOff));
}

TEST(ExperimentConfig, Validate) {
  EXPECT_NO_THROW(Small(Algorithm::kCla).Validate());
  ExperimentConfig c = Small(Algorithm::kCla);
  c.drops = 0;
  EXPECT_THROW(c.Validate(), ConfigError);
  c = Small(Algorithm::kRsl);
  c.learning.kappa = 0;
  EXPECT_THROW(c.Validate(), ConfigError);
  c = Small(Algorithm::kRsl);
  c.game.utility.alpha = 1.5;
  EXPECT_THROW(c.Validate(), ConfigError);
  c = Small(Algorithm::kRsl);
  c.game.c_bar = -1;
  EXPECT_THROW(RunExperiment(c), ConfigError);
}

TEST(RunExperiment, BaselineSingleDrop) {
  const RunResult r = RunExperiment(Small(Algorithm::kCla, 1));
  ASSERT_EQ(r.drops.size(), 1u);
  EXPECT_TRUE(r.drops[0].ok);
  EXPECT_EQ(r.drops[0].mues.size(), 6u);
  EXPECT_TRUE(r.trace.mean_utility.empty());
  EXPECT_EQ(r.iterations, 0);
  EXPECT_EQ(r.algorithm, "CLA");
  EXPECT_EQ(r.failures, 0);
}

TEST(RunExperiment, Deterministic) {
  for (Algorithm a : {Algorithm::kOff, Algorithm::kRsl, Algorithm::kSat}) {
    ExperimentConfig c = Small(a, 3, 40);
    const RunResult one = RunExperiment(c);
    c.threads = 3;
    const RunResult two = RunExperiment(c);
    EXPECT_EQ(one, two) << ToString(a);
  }
  ExperimentConfig c = Small(Algorithm::kCla);
  const RunResult base = RunExperiment(c);
  c.scenario.seed = 2;
  EXPECT_NE(base.drops[0].mues, RunExperiment(c).drops[0].mues);
}

TEST(RunExperiment, LearnerTraceAndRecords) {
  const RunResult r = RunExperiment(Small(Algorithm::kRsf, 2, 30));
  EXPECT_EQ(r.trace.mean_utility.size(), 30u);
  EXPECT_EQ(r.trace.pi_change.size(), 30u);
  EXPECT_EQ(r.iterations, 30);
  for (const DropResult& d : r.drops) {
    ASSERT_TRUE(d.ok) << d.error;
    for (const MueRecord& m : d.mues) {
      EXPECT_GE(m.rate, 0.0);
      EXPECT_GT(m.power, 0.0);
      EXPECT_GE(m.theta, 0.0);
      EXPECT_LE(m.theta, 1.0);
      if (m.theta == 0.0) EXPECT_EQ(m.relay, -1);
    }
  }
  EXPECT_EQ(r.Records().size(), 12u);
}

TEST(Summarize, MeansMatchRecords) {
  const RunResult r = RunExperiment(Small(Algorithm::kRu1, 4));
  const auto records = r.Records();
  double rate = 0.0;
  for (const MueRecord& m : records) rate += m.rate;
  EXPECT_NEAR(r.summary.mean_rate, rate / records.size(), 1e-9 * r.summary.mean_rate);

  DropResult a, b;
  a.mues = {{.rate = 2, .delay = 1, .utility = 4}, {.rate = 4, .delay = INFINITY, .utility = 0}};
  a.converged_at = 10;
  b.ok = false;
  b.mues = {{.rate = 100}};
  const Summary s = Summarize({a, b});
  EXPECT_DOUBLE_EQ(s.mean_rate, 3.0);
  EXPECT_DOUBLE_EQ(s.mean_delay, 1.0);
  EXPECT_DOUBLE_EQ(s.mean_utility, 2.0);
  EXPECT_DOUBLE_EQ(s.unstable_fraction, 0.5);
  EXPECT_EQ(s.converged_drops, 1);
}

TEST(RunExperiment, RecordsFailedDrops) {
  ExperimentConfig c = Small(Algorithm::kRsl, 2, 10);
  c.game.utility.rate_unit = 0.0;
  const RunResult r = RunExperiment(c);
  EXPECT_EQ(r.failures, 2);
  for (const DropResult& d : r.drops) {
    EXPECT_FALSE(d.ok);
    EXPECT_FALSE(d.error.empty());
    EXPECT_TRUE(d.mues.empty());
  }
  EXPECT_TRUE(r.Records().empty());
  EXPECT_EQ(r.summary, Summary{});
}

TEST(ComputeCdf, Examples) {
  const auto cdf = ComputeCdf({3, 1, 2, 2});
  ASSERT_EQ(cdf.size(), 3u);
  EXPECT_EQ(cdf[0].value, 1);
  EXPECT_DOUBLE_EQ(cdf[0].fraction, 0.25);
  EXPECT_EQ(cdf[1].value, 2);
  EXPECT_DOUBLE_EQ(cdf[1].fraction, 0.75);
  EXPECT_DOUBLE_EQ(cdf[2].fraction, 1.0);
  EXPECT_THROW(ComputeCdf({}), DomainError);
}

TEST(ComputeCdf, MatchesUniformLaw) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x(20000);
  for (double& v : x) v = u(rng);
  double ks = 0.0;
  for (const CdfPoint& p : ComputeCdf(x)) ks = std::max(ks, std::abs(p.fraction - p.value));
  EXPECT_LE(ks, 0.02);
}

TEST(BestEffortDecile, Examples) {
  std::vector<double> r{5, 1, 9, 3, 7, 2, 8, 4, 6, 0};
  EXPECT_EQ(BestEffortDecile(r), std::vector<int>{2});
  EXPECT_EQ(BestEffortDecile(r, 0.3), (std::vector<int>{2, 6, 4}));
  std::vector<double> ties(20, 1.0);
  EXPECT_EQ(BestEffortDecile(ties), (std::vector<int>{0, 1}));
  EXPECT_THROW(BestEffortDecile({1, 2, 3}), DomainError);
  EXPECT_THROW(BestEffortDecile(r, 0.0), DomainError);
}

TEST(DistanceBins, Examples) {
  std::vector<MueRecord> rec{{.distance = 10, .rate = 4},
                             {.distance = 90, .rate = 2},
                             {.distance = 350, .rate = 1},
                             {.distance = 400, .rate = 3}};
  const auto bins = DistanceBinnedThroughput(rec, 400, 4);
  ASSERT_EQ(bins.size(), 4u);
  EXPECT_DOUBLE_EQ(*bins[0], 3.0);
  EXPECT_FALSE(bins[1].has_value());
  EXPECT_FALSE(bins[2].has_value());
  EXPECT_DOUBLE_EQ(*bins[3], 2.0);
  EXPECT_THROW(DistanceBinnedThroughput(rec, 400, 0), DomainError);
}

TEST(DistanceBins, ClaRateFallsWithDistance) {
  ExperimentConfig c = Small(Algorithm::kCla, 100);
  c.scenario = ScenarioConfig{};
  const RunResult r = RunExperiment(c);
  const auto bins = DistanceBinnedThroughput(r.Records(), c.scenario.macro_radius, 4);
  for (const auto& b : bins) ASSERT_TRUE(b.has_value());
  EXPECT_GT(*bins[0], *bins[1]);
  EXPECT_GT(*bins[1], *bins[2]);
  EXPECT_GT(*bins[2], *bins[3]);
}

}  // namespace
}  // namespace bhrelay
