#include <cstdio>
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

#include "bhrelay/harness.h"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cmath>
#include <exception>
#include <numeric>
#include <thread>

#include "bhrelay/error.h"
#include "bhrelay/network.h"
#include "bhrelay/random.h"

namespace bhrelay {
namespace {

struct LearnedPlay {
  Profile profile;
  std::int64_t converged_at = -1;
  std::int64_t settled_at = -1;
};

LearnedPlay RunLearner(const ExperimentConfig& config, const Network& net,
                       const ProfileEvaluator& evaluator, std::uint64_t seed,
                       Trace* trace) {
  const LearningParams& lp = config.learning;
  const std::vector<ActionSpace> spaces = BuildActionSpaces(net, config.grid);
  const int n_mue = net.num_mue();
  Rng rng(DeriveSeed(seed, SeedStream::kLearning));
  Rng noise(DeriveSeed(seed, SeedStream::kFeedback));

  std::vector<std::vector<double>> pi(n_mue);
  std::vector<RegretMatcher> matchers;
  std::vector<LearnerState> states;
  std::vector<int> sat_action(n_mue, 0);
  std::vector<std::vector<int>> tally(n_mue);
  for (int m = 0; m < n_mue; ++m) {
    const int n = spaces[m].size();
    pi[m].assign(n, 1.0 / n);
    tally[m].assign(n, 0);
    matchers.emplace_back(n);
    states.push_back(LearnerState::Uniform(n, lp.kappa));
    if (config.algorithm == Algorithm::kSat) {
      sat_action[m] = std::uniform_int_distribution<int>(0, n - 1)(rng);
      pi[m].assign(n, 0.0);
      pi[m][sat_action[m]] = 1.0;
    }
  }
  const RslOptions rsl_options{lp.played_only_regret};
  ConvergenceMonitor monitor(lp.window, lp.tolerance, lp.min_iterations);
  if (trace) {
    trace->mean_utility.assign(config.iterations, 0.0);
    trace->pi_change.assign(config.iterations, 0.0);
  }

  Profile profile(n_mue);
  std::vector<int> played(n_mue);
  const int tally_from = std::max(1, config.iterations - lp.window + 1);
  for (int t = 1; t <= config.iterations; ++t) {
    for (int m = 0; m < n_mue; ++m) {
      played[m] = config.algorithm == Algorithm::kSat ? sat_action[m]
                                                        : SampleAction(pi[m], rng);
      profile[m] = spaces[m].actions[played[m]];
    }
    const ProfileOutcome outcome = evaluator.Evaluate(profile);
    double utility_sum = 0.0;
    for (const MueOutcome& o : outcome.mue) utility_sum += o.utility;

    for (int m = 0; m < n_mue; ++m) {
      switch (config.algorithm) {
        case Algorithm::kRsf: {
          const std::vector<double> cf =
              evaluator.Counterfactual(profile, m, spaces[m].actions);
          matchers[m].Update(cf, played[m]);
          pi[m] = StrategyFromRegret(matchers[m].regret(), pi[m]);
          break;
        }
        case Algorithm::kRsl: {
          const double fb = NoisyFeedback(outcome.mue[m].utility, lp.feedback_sigma, noise);
          RslStep(states[m], played[m], fb, lp.schedules, rsl_options);
          pi[m] = states[m].pi;
          break;
        }
        case Algorithm::kSat: {
          const double fb = NoisyFeedback(outcome.mue[m].utility, lp.feedback_sigma, noise);
          sat_action[m] = SatStep(played[m], fb, lp.sat_threshold, spaces[m].size(), rng);
          std::fill(pi[m].begin(), pi[m].end(), 0.0);
          pi[m][sat_action[m]] = 1.0;
          break;
        }
        default:
          throw ConfigError("not a learning algorithm");
      }
      if (t >= tally_from) ++tally[m][played[m]];
    }
    const double change = monitor.Record(pi);
    if (trace) {
      trace->mean_utility[t - 1] = n_mue > 0 ? utility_sum / n_mue : 0.0;
      trace->pi_change[t - 1] = change;
    }
  }

  LearnedPlay out;
  out.profile.resize(n_mue);
  for (int m = 0; m < n_mue; ++m) {
    const auto top = std::max_element(tally[m].begin(), tally[m].end());
    out.profile[m] = spaces[m].actions[top - tally[m].begin()];
  }
  out.converged_at = monitor.first_converged();
  out.settled_at = monitor.settled_at();
  return out;
}

std::vector<MueRecord> BaselineRecords(const ExperimentConfig& config, const Network& net,
                                       const BaselineResult& b, int drop) {
  std::vector<MueRecord> records;
  for (int m = 0; m < net.num_mue(); ++m) {
    MueRecord r;
    r.drop = drop;
    r.mue = m;
    r.distance = Distance(net.topology.mue[m], net.topology.mbs);
    r.rate = b.rate[m];
    r.delay = b.delay[m];
    r.utility = Utility(r.rate, r.delay, config.game.utility);
    r.power = net.mue_max_power;
    if (!b.association.empty() && b.association[m] != kNoRelay) {
      r.theta = 1.0;
      r.relay = b.association[m];
    }
    records.push_back(r);
  }
  return records;
}

std::string Canonical(const std::string& name) {
  std::string out;
  for (char c : name)
    if (c != '-' && c != '_') out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

Algorithm ParseAlgorithm(const std::string& name) {
  const std::string key = Canonical(name);
  if (key == "CLA") return Algorithm::kCla;
  if (key == "RU1") return Algorithm::kRu1;
  if (key == "OFF") return Algorithm::kOff;
  if (key == "RSF") return Algorithm::kRsf;
  if (key == "RSL") return Algorithm::kRsl;
  if (key == "SAT") return Algorithm::kSat;
  throw ConfigError("unknown algorithm '" + name + "' (CLA|RU1|OFF|RSF|RSL|SAT)");
}

std::string ToString(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kCla: return "CLA";
    case Algorithm::kRu1: return "RU1";
    case Algorithm::kOff: return "OFF";
    case Algorithm::kRsf: return "RSF";
    case Algorithm::kRsl: return "RSL";
    case Algorithm::kSat: return "SAT";
  }
  return "?";
}

bool IsLearner(Algorithm algorithm) {
  return algorithm == Algorithm::kRsf || algorithm == Algorithm::kRsl ||
         algorithm == Algorithm::kSat;
}

void ExperimentConfig::Validate() const {
  scenario.Validate();
  if (drops < 1) throw ConfigError("drops must be >= 1");
  if (iterations < 1) throw ConfigError("iterations must be >= 1");
  if (threads < 0) throw ConfigError("threads must be >= 0");
  if (!(game.c_bar > 0.0)) throw ConfigError("c_bar must be positive");
  if (!(game.rho > 0.0)) throw ConfigError("rho must be positive");
  if (game.utility.alpha < 0.0 || game.utility.alpha > 1.0)
    throw ConfigError("alpha must lie in [0, 1]");
  if (grid.power_levels < 1 || grid.theta_levels < 1 || grid.relay_candidates < 0)
    throw ConfigError("invalid action grid");
  if (!(learning.kappa > 0.0)) throw ConfigError("kappa must be positive");
  if (learning.feedback_sigma < 0.0) throw ConfigError("feedback_sigma must be >= 0");
  if (learning.window < 1 || !(learning.tolerance > 0.0))
    throw ConfigError("invalid convergence window or tolerance");
  if (offload_max_rounds < 1) throw ConfigError("offload_max_rounds must be >= 1");
}

std::vector<MueRecord> RunResult::Records() const {
  std::vector<MueRecord> out;
  for (const DropResult& d : drops)
    if (d.ok) out.insert(out.end(), d.mues.begin(), d.mues.end());
  return out;
}

DropResult RunDrop(const ExperimentConfig& config, int drop, Trace* trace) {
  DropResult result;
  result.drop = drop;
  result.seed = DeriveSeed(config.scenario.seed, SeedStream::kDrop, drop);
  try {
    const Network net = Network::Generate(config.scenario, result.seed);
    const double rho = config.game.rho;
    switch (config.algorithm) {
      case Algorithm::kCla:
        result.mues = BaselineRecords(config, net, RunCla(net, rho), drop);
        break;
      case Algorithm::kRu1:
        result.mues = BaselineRecords(config, net, RunRu1(net, rho), drop);
        break;
      case Algorithm::kOff: {
        OffloadOptions options;
        options.mode = config.game.mode;
        options.c_bar = config.game.c_bar;
        options.wired_policy = config.game.wired_policy;
        options.vacate_macro = config.offload_vacate;
        options.max_rounds = config.offload_max_rounds;
        result.mues = BaselineRecords(config, net, RunOff(net, rho, options), drop);
        break;
      }
      default: {
        const ProfileEvaluator evaluator(net, config.game);
        const LearnedPlay play = RunLearner(config, net, evaluator, result.seed, trace);
        const ProfileOutcome outcome = evaluator.Evaluate(play.profile);
        for (int m = 0; m < net.num_mue(); ++m) {
          MueRecord r;
          r.drop = drop;
          r.mue = m;
          r.distance = Distance(net.topology.mue[m], net.topology.mbs);
          r.rate = outcome.mue[m].rates.r_total;
          r.delay = outcome.mue[m].delays.d_total;
          r.utility = outcome.mue[m].utility;
          r.power = play.profile[m].power;
          r.theta = play.profile[m].theta;
          r.relay = play.profile[m].relays() ? play.profile[m].relay : kNoRelay;
          result.mues.push_back(r);
        }
        result.converged_at = play.converged_at;
        result.settled_at = play.settled_at;
      }
    }
    double sum = 0.0;
    for (const MueRecord& r : result.mues) sum += r.rate;
    result.mean_rate = result.mues.empty() ? 0.0 : sum / result.mues.size();
  } catch (const std::exception& e) {
    result.ok = false;
    result.error = e.what();
    result.mues.clear();
    result.mean_rate = 0.0;
    if (trace) *trace = Trace{};
  }
  return result;
}

Summary Summarize(const std::vector<DropResult>& drops) {
  Summary s;
  double rate = 0.0, delay = 0.0, utility = 0.0;
  std::size_t count = 0, stable = 0;
  for (const DropResult& d : drops) {
    if (!d.ok) continue;
    if (d.converged_at >= 0) ++s.converged_drops;
    for (const MueRecord& r : d.mues) {
      ++count;
      rate += r.rate;
      utility += r.utility;
      if (std::isfinite(r.delay)) {
        ++stable;
        delay += r.delay;
      }
    }
  }
  if (count > 0) {
    s.mean_rate = rate / count;
    s.mean_utility = utility / count;
    s.unstable_fraction = static_cast<double>(count - stable) / count;
  }
  if (stable > 0) s.mean_delay = delay / stable;
  return s;
}

RunResult RunExperiment(const ExperimentConfig& config) {
  config.Validate();
  const int n = config.drops;
  std::vector<DropResult> drops(n);
  std::vector<Trace> traces(n);
  const bool learner = IsLearner(config.algorithm);

  int workers = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
  workers = std::clamp(workers, 1, n);
  std::atomic<int> next{0};
  auto work = [&] {
    for (int d = next++; d < n; d = next++)
      drops[d] = RunDrop(config, d, learner ? &traces[d] : nullptr);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& t : pool) t.join();
  }

  RunResult result;
  result.algorithm = ToString(config.algorithm);
  result.backhaul = ToString(config.game.mode);
  result.seed = config.scenario.seed;
  result.iterations = learner ? config.iterations : 0;
  if (learner) {
    result.trace.mean_utility.assign(config.iterations, 0.0);
    result.trace.pi_change.assign(config.iterations, 0.0);
    int ok = 0;
    for (int d = 0; d < n; ++d) {
      if (!drops[d].ok) continue;
      ++ok;
      for (int t = 0; t < config.iterations; ++t) {
        result.trace.mean_utility[t] += traces[d].mean_utility[t];
        result.trace.pi_change[t] = std::max(result.trace.pi_change[t], traces[d].pi_change[t]);
      }
    }
    if (ok > 0)
      for (double& u : result.trace.mean_utility) u /= ok;
  }
  for (const DropResult& d : drops)
    if (!d.ok) ++result.failures;
  result.summary = Summarize(drops);
  result.drops = std::move(drops);
  return result;
}

std::vector<CdfPoint> ComputeCdf(std::vector<double> samples) {
  if (samples.empty()) throw DomainError("cdf: no samples");
  std::sort(samples.begin(), samples.end());
  std::vector<CdfPoint> cdf;
  const double n = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (i + 1 < samples.size() && samples[i + 1] == samples[i]) continue;
    cdf.push_back({samples[i], (i + 1) / n});
  }
  return cdf;
}

std::vector<int> BestEffortDecile(const std::vector<double>& rates, double fraction) {
  if (rates.size() < 10) throw DomainError("best-effort decile: need at least 10 samples");
  if (!(fraction > 0.0) || fraction > 1.0)
    throw DomainError("best-effort decile: fraction must lie in (0, 1]");
  std::vector<int> order(rates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return rates[a] > rates[b]; });
  const std::size_t k = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::floor(fraction * rates.size() + 1e-9)));
  order.resize(k);
  return order;
}

std::vector<std::optional<double>> DistanceBinnedThroughput(
    const std::vector<MueRecord>& records, double macro_radius, int n_bins) {
  if (n_bins < 1) throw DomainError("distance bins: need at least one bin");
  if (!(macro_radius > 0.0)) throw DomainError("distance bins: radius must be positive");
  std::vector<double> sum(n_bins, 0.0);
  std::vector<int> count(n_bins, 0);
  for (const MueRecord& r : records) {
    const int bin = std::clamp(static_cast<int>(std::floor(r.distance / macro_radius * n_bins)),
                               0, n_bins - 1);
    sum[bin] += r.rate;
    ++count[bin];
  }
  std::vector<std::optional<double>> out(n_bins);
  for (int b = 0; b < n_bins; ++b)
    if (count[b] > 0) out[b] = sum[b] / count[b];
  return out;
}

}  // namespace bhrelay
