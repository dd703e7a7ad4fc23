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

#include "bhrelay/learning.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "bhrelay/error.h"

namespace bhrelay {
namespace {

double Positive(double x) { return x > 0.0 ? x : 0.0; }

double BgObjective(std::span<const double> pi, std::span<const double> regret,
                   double kappa) {
  double value = 0.0;
  for (std::size_t l = 0; l < pi.size(); ++l) {
    value += pi[l] * Positive(regret[l]);
    if (pi[l] > 0.0) value -= kappa * pi[l] * std::log(pi[l]);
  }
  return value;
}

// Maximizes over {p : p_i = c_i + k_i h, p >= 0, sum p = 1} for |k_i| <= span.
std::vector<double> GridSearch(std::span<const double> regret, double kappa,
                               const std::vector<double>& center, double h, int span) {
  const int n = static_cast<int>(regret.size());
  std::vector<double> best = center;
  double best_value = -std::numeric_limits<double>::infinity();
  auto consider = [&](const std::vector<double>& p) {
    for (double x : p)
      if (x < -1e-15) return;
    std::vector<double> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = std::max(0.0, p[i]);
    const double v = BgObjective(q, regret, kappa);
    if (v > best_value) {
      best_value = v;
      best = q;
    }
  };
  if (n == 1) return {1.0};
  if (n == 2) {
    for (int i = -span; i <= span; ++i) {
      const double p0 = center[0] + i * h;
      consider({p0, 1.0 - p0});
    }
  } else {
    for (int i = -span; i <= span; ++i) {
      for (int j = -span; j <= span; ++j) {
        const double p0 = center[0] + i * h;
        const double p1 = center[1] + j * h;
        consider({p0, p1, 1.0 - p0 - p1});
      }
    }
  }
  return best;
}

}  // namespace

RegretMatcher::RegretMatcher(int num_actions) : regret_(num_actions, 0.0) {
  if (num_actions < 1) throw ConfigError("regret matcher: need at least one action");
}

void RegretMatcher::Update(std::span<const double> counterfactual, int played) {
  if (counterfactual.size() != regret_.size())
    throw ConfigError("regret matcher: counterfactual size mismatch");
  if (played < 0 || played >= static_cast<int>(regret_.size()))
    throw LookupError("regret matcher: played action out of range");
  ++t_;
  const double realized = counterfactual[played];
  const double step = 1.0 / static_cast<double>(t_);
  for (std::size_t l = 0; l < regret_.size(); ++l)
    regret_[l] += step * ((counterfactual[l] - realized) - regret_[l]);
}

std::vector<double> StrategyFromRegret(std::span<const double> regret,
                                       std::span<const double> previous) {
  double total = 0.0;
  for (double r : regret) total += Positive(r);
  if (!(total > 0.0)) return {previous.begin(), previous.end()};
  std::vector<double> pi(regret.size());
  for (std::size_t l = 0; l < regret.size(); ++l) pi[l] = Positive(regret[l]) / total;
  return pi;
}

std::vector<double> BgDistribution(std::span<const double> regret, double kappa) {
  if (!(kappa > 0.0)) throw DomainError("bg distribution: kappa must be positive");
  if (regret.empty()) return {};
  double top = 0.0;
  for (double r : regret) top = std::max(top, Positive(r));
  std::vector<double> beta(regret.size());
  double total = 0.0;
  for (std::size_t l = 0; l < regret.size(); ++l) {
    beta[l] = std::exp((Positive(regret[l]) - top) / kappa);
    total += beta[l];
  }
  for (double& b : beta) b /= total;
  return beta;
}

std::vector<double> BgOracleCheck(std::span<const double> regret, double kappa,
                                  double resolution) {
  const int n = static_cast<int>(regret.size());
  if (n < 1 || n > 3) throw DomainError("bg oracle: supports 1 to 3 actions");
  if (!(kappa > 0.0)) throw DomainError("bg oracle: kappa must be positive");
  if (!(resolution > 0.0) || resolution > 0.5)
    throw DomainError("bg oracle: resolution must lie in (0, 0.5]");
  const int steps = static_cast<int>(std::lround(1.0 / resolution));
  const double h = 1.0 / steps;
  std::vector<double> best(n, 1.0 / n);
  {
    double best_value = -std::numeric_limits<double>::infinity();
    auto consider = [&](std::vector<double> p) {
      const double v = BgObjective(p, regret, kappa);
      if (v > best_value) {
        best_value = v;
        best = std::move(p);
      }
    };
    if (n == 1) {
      consider({1.0});
    } else if (n == 2) {
      for (int i = 0; i <= steps; ++i) consider({i * h, 1.0 - i * h});
    } else {
      for (int i = 0; i <= steps; ++i)
        for (int j = 0; i + j <= steps; ++j)
          consider({i * h, j * h, std::max(0.0, 1.0 - (i + j) * h)});
    }
  }
  double step = h;
  for (int round = 0; round < 4; ++round) {
    step /= 10.0;
    best = GridSearch(regret, kappa, best, step, 10);
  }
  return best;
}

double NoisyFeedback(double utility, double sigma, Rng& rng) {
  if (sigma < 0.0) throw DomainError("feedback: sigma must be non-negative");
  if (sigma == 0.0) return utility;
  std::normal_distribution<double> noise(0.0, sigma);
  return utility + noise(rng);
}

double StepSize::operator()(std::int64_t t) const {
  return scale / std::pow(static_cast<double>(t) + 1.0, exponent);
}

LearnerState LearnerState::Uniform(int num_actions, double kappa) {
  if (num_actions < 1) throw ConfigError("learner: need at least one action");
  if (!(kappa > 0.0)) throw ConfigError("learner: kappa must be positive");
  LearnerState s;
  s.pi.assign(num_actions, 1.0 / num_actions);
  s.regret.assign(num_actions, 0.0);
  s.u_hat.assign(num_actions, 0.0);
  s.kappa = kappa;
  return s;
}

bool RslStep(LearnerState& state, int played, double feedback, const Schedules& schedules,
             const RslOptions& options) {
  if (!std::isfinite(feedback)) return false;
  const int n = state.size();
  if (played < 0 || played >= n) throw LookupError("rsl step: played action out of range");
  const std::int64_t t = state.t + 1;
  const double lambda = schedules.lambda(t);
  const double gamma = schedules.gamma(t);
  const double mu = schedules.mu(t);

  state.u_hat[played] += lambda * (feedback - state.u_hat[played]);
  for (int l = 0; l < n; ++l) {
    if (options.played_only_regret && l != played) continue;
    state.regret[l] += gamma * (state.u_hat[l] - feedback - state.regret[l]);
  }
  const std::vector<double> beta = BgDistribution(state.regret, state.kappa);
  double total = 0.0;
  for (int l = 0; l < n; ++l) {
    state.pi[l] += mu * (beta[l] - state.pi[l]);
    state.pi[l] = std::max(0.0, state.pi[l]);
    total += state.pi[l];
  }
  for (double& p : state.pi) p /= total;
  state.t = t;
  state.utility_sum += feedback;
  return true;
}

int SampleAction(std::span<const double> pi, Rng& rng) {
  if (pi.empty()) throw DomainError("sample: empty distribution");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double u = unit(rng);
  double acc = 0.0;
  int last_positive = 0;
  for (std::size_t l = 0; l < pi.size(); ++l) {
    if (pi[l] <= 0.0) continue;
    acc += pi[l];
    last_positive = static_cast<int>(l);
    if (u < acc) return last_positive;
  }
  return last_positive;
}

int SatStep(int played, double feedback, double threshold, int num_actions, Rng& rng) {
  if (!std::isfinite(threshold)) throw DomainError("sat: threshold must be finite");
  if (num_actions < 1) throw ConfigError("sat: need at least one action");
  if (feedback >= threshold) return played;
  std::uniform_int_distribution<int> pick(0, num_actions - 1);
  return pick(rng);
}

bool ScheduleReport::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ScheduleCheck& c) { return c.passed; });
}

std::vector<std::string> ScheduleReport::Failed() const {
  std::vector<std::string> out;
  for (const ScheduleCheck& c : checks)
    if (!c.passed) out.push_back(c.condition);
  return out;
}

ScheduleReport ValidateSchedules(const Schedules& schedules, std::int64_t horizon) {
  if (horizon < 10000) throw DomainError("schedule validation: horizon must be >= 1e4");
  const std::int64_t d1 = horizon / 100;
  const std::int64_t d2 = horizon / 10;
  const StepSize* steps[3] = {&schedules.lambda, &schedules.gamma, &schedules.mu};
  const char* names[3] = {"lambda", "gamma", "mu"};

  // Partial sums at T/100, T/10 and T, of the steps and of their squares.
  double sum[3][3] = {}, sq[3][3] = {};
  for (int k = 0; k < 3; ++k) {
    double s = 0.0, q = 0.0;
    for (std::int64_t t = 1; t <= horizon; ++t) {
      const double x = (*steps[k])(t);
      s += x;
      q += x * x;
      if (t == d1) sum[k][0] = s, sq[k][0] = q;
      if (t == d2) sum[k][1] = s, sq[k][1] = q;
    }
    sum[k][2] = s;
    sq[k][2] = q;
  }

  ScheduleReport report;
  report.horizon = horizon;
  {
    ScheduleCheck c{"i", true, ""};
    std::ostringstream detail;
    for (int k = 0; k < 3; ++k) {
      const double growth = (sum[k][2] - sum[k][1]) / sum[k][2];
      detail << names[k] << " last-decade share " << growth << "; ";
      if (!(growth > 0.05)) c.passed = false;
    }
    c.detail = detail.str();
    report.checks.push_back(c);
  }
  {
    ScheduleCheck c{"ii", true, ""};
    std::ostringstream detail;
    for (int k = 0; k < 3; ++k) {
      const double previous = sq[k][1] - sq[k][0];
      const double last = sq[k][2] - sq[k][1];
      detail << names[k] << " decade increments " << previous << " -> " << last << "; ";
      if (!(last <= previous * (1.0 + 1e-9))) c.passed = false;
    }
    c.detail = detail.str();
    report.checks.push_back(c);
  }
  {
    ScheduleCheck c{"iii", true, ""};
    std::ostringstream detail;
    const double gl_early = schedules.gamma(d2) / schedules.lambda(d2);
    const double gl_late = schedules.gamma(horizon) / schedules.lambda(horizon);
    const double mg_early = schedules.mu(d2) / schedules.gamma(d2);
    const double mg_late = schedules.mu(horizon) / schedules.gamma(horizon);
    detail << "gamma/lambda " << gl_early << " -> " << gl_late << "; mu/gamma " << mg_early
           << " -> " << mg_late;
    c.passed = gl_late < gl_early && mg_late < mg_early;
    c.detail = detail.str();
    report.checks.push_back(c);
  }
  return report;
}

ConvergenceMonitor::ConvergenceMonitor(int window, double tolerance,
                                       std::int64_t min_iterations)
    : window_(window), tolerance_(tolerance), min_iterations_(min_iterations) {
  if (window < 1) throw ConfigError("convergence monitor: window must be >= 1");
  if (!(tolerance > 0.0)) throw ConfigError("convergence monitor: tolerance must be > 0");
}

double ConvergenceMonitor::Record(const std::vector<std::vector<double>>& strategies) {
  ++t_;
  history_.push_back(strategies);
  if (static_cast<int>(history_.size()) > window_ + 1) history_.pop_front();
  const auto& old = history_.front();
  double change = 0.0;
  for (std::size_t m = 0; m < strategies.size(); ++m) {
    if (old[m].size() != strategies[m].size())
      throw ConfigError("convergence monitor: strategy size changed");
    for (std::size_t l = 0; l < strategies[m].size(); ++l)
      change = std::max(change, std::abs(strategies[m][l] - old[m][l]));
  }
  const bool eligible = t_ >= std::max<std::int64_t>(window_, min_iterations_) &&
                        static_cast<int>(history_.size()) == window_ + 1;
  if (eligible && change < tolerance_) {
    if (first_converged_ < 0) first_converged_ = t_;
    if (settled_at_ < 0) settled_at_ = t_;
  } else {
    settled_at_ = -1;
  }
  return change;
}

std::vector<double> RegretMatchingSelfPlay(const NormalFormGame& game, int steps,
                                           std::uint64_t seed) {
  game.Validate();
  if (steps < 1) throw DomainError("self-play: steps must be >= 1");
  const int players = game.num_players();
  Rng rng(seed);
  std::vector<RegretMatcher> matchers;
  std::vector<std::vector<double>> pi(players);
  for (int p = 0; p < players; ++p) {
    matchers.emplace_back(game.num_actions[p]);
    pi[p].assign(game.num_actions[p], 1.0 / game.num_actions[p]);
  }
  std::vector<double> joint(game.NumJointProfiles(), 0.0);
  std::vector<int> a(players);
  for (int step = 0; step < steps; ++step) {
    for (int p = 0; p < players; ++p) a[p] = SampleAction(pi[p], rng);
    joint[game.Encode(a)] += 1.0;
    for (int p = 0; p < players; ++p) {
      std::vector<int> b = a;
      std::vector<double> cf(game.num_actions[p]);
      for (int l = 0; l < game.num_actions[p]; ++l) {
        b[p] = l;
        cf[l] = game.utilities[p][game.Encode(b)];
      }
      matchers[p].Update(cf, a[p]);
      pi[p] = StrategyFromRegret(matchers[p].regret(), pi[p]);
    }
  }
  for (double& x : joint) x /= steps;
  return joint;
}

}  // namespace bhrelay
