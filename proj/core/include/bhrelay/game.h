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

// The uplink game among MUEs: discrete action sets, the throughput/delay
// "system power" utility, joint evaluation of action profiles, and the
// epsilon-coarse-correlated-equilibrium gap of a normal-form game.

#ifndef BHRELAY_GAME_H_
#define BHRELAY_GAME_H_

#include <span>
#include <vector>

#include "bhrelay/action.h"
#include "bhrelay/backhaul.h"
#include "bhrelay/delay_engine.h"
#include "bhrelay/network.h"
#include "bhrelay/rate_engine.h"

namespace bhrelay {

struct ActionGrid {
  int power_levels = 2;      // P_max * i / L_P, i = 1..L_P
  int theta_levels = 3;      // j / L_theta, j = 0..L_theta
  int relay_candidates = 3;  // nearest SBSs offered as relays
};

struct ActionSpace {
  std::vector<Action> actions;

  int size() const { return static_cast<int>(actions.size()); }
  // Index of the full-power, no-split action.
  int ClassicalIndex() const;
  int IndexOf(const Action& a) const;  // -1 if absent
};

// Cartesian grid of power x theta x ({none} U candidates); theta = 0 is
// listed once per power level with relay = none.
ActionSpace BuildActionSpace(const ActionGrid& grid, double max_power,
                             const std::vector<int>& candidate_sbss);

// One space per MUE with its `relay_candidates` nearest SBSs.
std::vector<ActionSpace> BuildActionSpaces(const Network& net, const ActionGrid& grid);

struct UtilityParams {
  double alpha = 0.5;
  double unstable_utility = 0.0;
  // Bits/s per rate unit. Rates enter as R / rate_unit and delays as
  // D * rate_unit (the M/D/1 delay scales inversely with the rate unit).
  double rate_unit = 1.0;
};

// R^(1 - alpha) / D^alpha in the units above; `unstable_utility` for an
// unstable delay.
double Utility(double rate, double delay, const UtilityParams& params);

// Everything besides the profile that the evaluation of a drop depends on.
struct GameSettings {
  BackhaulMode mode = BackhaulMode::kOta;
  double c_bar = 50e6;
  WiredPolicy wired_policy = WiredPolicy::kEqual;
  CombinerMode combiner = CombinerMode::kIdentity;
  double rho = 180e3;
  UtilityParams utility;
};

struct MueOutcome {
  RateBreakdown rates;
  DelayBreakdown delays;
  double utility = 0.0;
};

struct ProfileOutcome {
  std::vector<MueOutcome> mue;
  BackhaulView view;
};

// Evaluates action profiles on one drop. Immutable after construction and
// safe to share between threads.
class ProfileEvaluator {
 public:
  ProfileEvaluator(const Network& net, GameSettings settings);

  const Network& network() const { return *net_; }
  const GameSettings& settings() const { return settings_; }
  const std::vector<double>& ota_rates() const { return ota_rates_; }

  // Backhaul shares for the relay choices in `profile`.
  BackhaulView View(const Profile& profile) const;

  ProfileOutcome Evaluate(const Profile& profile) const;

  // u_m(a, profile_{-m}) for every a in `actions`; equal to evaluating the
  // profile with m's action replaced, without re-evaluating other MUEs.
  std::vector<double> Counterfactual(const Profile& profile, int m,
                                     std::span<const Action> actions) const;

 private:
  MueOutcome Finish(const Action& a, const RateBreakdown& rates) const;

  const Network* net_;
  GameSettings settings_;
  std::vector<double> ota_rates_;
  std::vector<int> sues_at_;  // SUE flows per SBS
};

// Finite normal-form game. Joint profiles are flattened row-major with
// player 0 as the most significant digit.
struct NormalFormGame {
  std::vector<int> num_actions;
  std::vector<std::vector<double>> utilities;  // [player][joint index]

  int num_players() const { return static_cast<int>(num_actions.size()); }
  int NumJointProfiles() const;
  std::vector<int> Decode(int joint) const;
  int Encode(const std::vector<int>& actions) const;
  // Throws ConfigError on shape mismatches.
  void Validate() const;
};

// Per player, the largest gain of a constant deviation a'_m against the
// others' marginal, relative to the expected utility under `distribution`.
// The distribution is a CCE within eps iff every entry is <= eps. Throws
// DomainError if the distribution is not normalized.
std::vector<double> EpsilonCceGap(const NormalFormGame& game,
                                  std::span<const double> distribution);

}  // namespace bhrelay

#endif  // BHRELAY_GAME_H_
