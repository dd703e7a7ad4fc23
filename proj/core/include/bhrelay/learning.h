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

// Per-player learning rules: full-information regret matching, the
// three-timescale learner driven by noisy utility feedback, and the
// satisfaction baseline. All of them see one player's action indices only.

#ifndef BHRELAY_LEARNING_H_
#define BHRELAY_LEARNING_H_

#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <vector>

#include "bhrelay/game.h"
#include "bhrelay/random.h"

namespace bhrelay {

// Running average of u(a^l, a_-m) - u(a_m, a_-m) over the steps seen so far.
class RegretMatcher {
 public:
  explicit RegretMatcher(int num_actions);

  // `counterfactual[l]` is the utility action l would have earned against
  // the others' current play; `played` indexes the realized action.
  void Update(std::span<const double> counterfactual, int played);

  const std::vector<double>& regret() const { return regret_; }
  std::int64_t t() const { return t_; }

 private:
  std::vector<double> regret_;
  std::int64_t t_ = 0;
};

// r+ normalized; returns `previous` when no regret is positive.
std::vector<double> StrategyFromRegret(std::span<const double> regret,
                                       std::span<const double> previous);

// exp(r+/kappa) normalized. Throws DomainError unless kappa > 0.
std::vector<double> BgDistribution(std::span<const double> regret, double kappa);

// Brute-force maximizer of sum pi r+ - kappa sum pi ln pi over a simplex grid
// of spacing `resolution`, followed by local refinement. Supports 1 to 3
// actions; throws DomainError otherwise.
std::vector<double> BgOracleCheck(std::span<const double> regret, double kappa,
                                  double resolution);

double NoisyFeedback(double utility, double sigma, Rng& rng);

// scale / (t + 1)^exponent.
struct StepSize {
  double scale = 1.0;
  double exponent = 0.5;

  double operator()(std::int64_t t) const;
};

struct Schedules {
  StepSize lambda{1.0, 0.5};
  StepSize gamma{1.0, 0.55};
  StepSize mu{1.0, 0.6};
};

struct LearnerState {
  std::vector<double> pi;
  std::vector<double> regret;
  std::vector<double> u_hat;
  std::int64_t t = 0;
  double kappa = 10.0;
  double utility_sum = 0.0;

  static LearnerState Uniform(int num_actions, double kappa);
  int size() const { return static_cast<int>(pi.size()); }
  // Time-averaged feedback over the steps taken so far.
  double MeanUtility() const { return t == 0 ? 0.0 : utility_sum / t; }
};

struct RslOptions {
  // Restrict the regret correction to the played action.
  bool played_only_regret = false;
};

// One joint update of utility estimate, regret estimate and strategy.
// Returns false and leaves the state untouched when `feedback` is not finite.
bool RslStep(LearnerState& state, int played, double feedback, const Schedules& schedules,
             const RslOptions& options = {});

// Samples an index from a probability vector.
int SampleAction(std::span<const double> pi, Rng& rng);

// Keeps `played` when feedback >= threshold, otherwise draws uniformly.
int SatStep(int played, double feedback, double threshold, int num_actions, Rng& rng);

struct ScheduleCheck {
  std::string condition;  // "i", "ii" or "iii"
  bool passed = false;
  std::string detail;
};

struct ScheduleReport {
  std::int64_t horizon = 0;
  std::vector<ScheduleCheck> checks;

  bool ok() const;
  std::vector<std::string> Failed() const;
};

// Numerical reading of the step-size conditions at horizon T:
//  (i)   partial sums keep growing over the last decade,
//  (ii)  partial sums of squares flatten (last-decade increment no larger
//        than the one before it),
//  (iii) gamma/lambda and mu/gamma shrink between T/10 and T.
// Throws DomainError for T < 10^4.
ScheduleReport ValidateSchedules(const Schedules& schedules, std::int64_t horizon);

// Declares convergence once max_m |pi_m(t) - pi_m(t - window)|_inf < tol
// for some t >= max(window, min_iterations).
class ConvergenceMonitor {
 public:
  ConvergenceMonitor(int window = 100, double tolerance = 1e-3,
                     std::int64_t min_iterations = 0);

  // Records the strategies after iteration t = 1, 2, ... and returns the
  // windowed change norm (against the oldest stored snapshot before the
  // window fills).
  double Record(const std::vector<std::vector<double>>& strategies);

  std::int64_t iterations() const { return t_; }
  bool converged() const { return first_converged_ >= 0; }
  // First iteration at which the criterion held, -1 if never.
  std::int64_t first_converged() const { return first_converged_; }
  // Iteration from which the criterion held through the latest record, -1
  // if it does not hold now.
  std::int64_t settled_at() const { return settled_at_; }

 private:
  int window_;
  double tolerance_;
  std::int64_t min_iterations_;
  std::int64_t t_ = 0;
  std::int64_t first_converged_ = -1;
  std::int64_t settled_at_ = -1;
  std::deque<std::vector<std::vector<double>>> history_;
};

// Self-play of regret matching on a normal-form game: every player samples
// from its strategy, then updates with full counterfactual information.
// Returns the empirical joint distribution of play over `steps` rounds.
std::vector<double> RegretMatchingSelfPlay(const NormalFormGame& game, int steps,
                                           std::uint64_t seed);

}  // namespace bhrelay

#endif  // BHRELAY_LEARNING_H_
