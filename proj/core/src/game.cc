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

#include "bhrelay/game.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <string>

#include "bhrelay/error.h"

namespace bhrelay {

int ActionSpace::ClassicalIndex() const {
  double p_max = 0.0;
  for (const Action& a : actions) p_max = std::max(p_max, a.power);
  for (int i = 0; i < size(); ++i)
    if (actions[i].power == p_max && actions[i].theta == 0.0) return i;
  return -1;
}

int ActionSpace::IndexOf(const Action& a) const {
  for (int i = 0; i < size(); ++i)
    if (actions[i] == a) return i;
  return -1;
}

ActionSpace BuildActionSpace(const ActionGrid& grid, double max_power,
                             const std::vector<int>& candidate_sbss) {
  if (grid.power_levels < 1 || grid.theta_levels < 1)
    throw ConfigError("action grid: power_levels and theta_levels must be >= 1");
  ActionSpace space;
  for (int i = 1; i <= grid.power_levels; ++i) {
    const double power = max_power * i / grid.power_levels;
    space.actions.push_back({power, 0.0, kNoRelay});
    for (int j = 1; j <= grid.theta_levels; ++j) {
      const double theta = static_cast<double>(j) / grid.theta_levels;
      for (int s : candidate_sbss) space.actions.push_back({power, theta, s});
    }
  }
  return space;
}

std::vector<ActionSpace> BuildActionSpaces(const Network& net, const ActionGrid& grid) {
  if (grid.relay_candidates < 0) throw ConfigError("action grid: negative relay_candidates");
  std::vector<ActionSpace> spaces;
  spaces.reserve(net.num_mue());
  for (int m = 0; m < net.num_mue(); ++m) {
    std::vector<int> nearest = net.topology.SbssByDistance(net.topology.mue[m]);
    if (static_cast<int>(nearest.size()) > grid.relay_candidates)
      nearest.resize(grid.relay_candidates);
    spaces.push_back(BuildActionSpace(grid, net.mue_max_power, nearest));
  }
  return spaces;
}

double Utility(double rate, double delay, const UtilityParams& params) {
  if (rate < 0.0) throw DomainError("utility: negative rate");
  if (!IsStable(delay)) return params.unstable_utility;
  const double r = rate / params.rate_unit;
  const double d = delay * params.rate_unit;
  if (params.alpha == 0.0) return r;
  if (params.alpha == 1.0) return 1.0 / d;
  if (r == 0.0) return 0.0;
  return std::pow(r, 1.0 - params.alpha) / std::pow(d, params.alpha);
}

ProfileEvaluator::ProfileEvaluator(const Network& net, GameSettings settings)
    : net_(&net), settings_(settings), ota_rates_(BackhaulOtaRates(net)),
      sues_at_(net.num_sbs(), 0) {
  if (settings_.utility.alpha < 0.0 || settings_.utility.alpha > 1.0)
    throw ConfigError("utility: alpha must lie in [0, 1]");
  if (!(settings_.utility.rate_unit > 0.0))
    throw ConfigError("utility: rate_unit must be positive");
  if (!(settings_.rho > 0.0)) throw ConfigError("traffic: rho must be positive");
  for (int s : net.topology.sue_serving_sbs) ++sues_at_[s];
}

BackhaulView ProfileEvaluator::View(const Profile& profile) const {
  const int n_sbs = net_->num_sbs();
  std::vector<std::vector<FlowId>> relayed(n_sbs), sues(n_sbs);
  for (int m = 0; m < static_cast<int>(profile.size()); ++m)
    if (profile[m].relays()) relayed.at(profile[m].relay).push_back(FlowId::Mue(m));
  for (int k = 0; k < net_->num_sue(); ++k)
    sues[net_->topology.sue_serving_sbs[k]].push_back(FlowId::Sue(k));
  return MakeBackhaulView(settings_.mode, settings_.c_bar, settings_.wired_policy,
                          ota_rates_, relayed, sues);
}

MueOutcome ProfileEvaluator::Finish(const Action& a, const RateBreakdown& rates) const {
  MueOutcome out;
  out.rates = rates;
  out.delays = DelayRs(rates, TrafficSpec::Split(settings_.rho, a.theta),
                       rates.r_backhaul_share);
  out.utility = Utility(rates.r_total, out.delays.d_total, settings_.utility);
  return out;
}

ProfileOutcome ProfileEvaluator::Evaluate(const Profile& profile) const {
  if (static_cast<int>(profile.size()) != net_->num_mue())
    throw ConfigError("profile: one action per MUE required");
  ProfileOutcome out;
  out.view = View(profile);
  out.mue.reserve(profile.size());
  for (int m = 0; m < static_cast<int>(profile.size()); ++m) {
    out.mue.push_back(
        Finish(profile[m], RateTotal(*net_, profile, m, out.view, settings_.combiner)));
  }
  return out;
}

std::vector<double> ProfileEvaluator::Counterfactual(
    const Profile& profile, int m, std::span<const Action> actions) const {
  const int n_sbs = net_->num_sbs();
  const std::vector<double> powers = MuePowers(profile);
  const LinkTerms mbs = MbsLinkTerms(*net_, m, powers);

  // Flows at each SBS from everybody but m.
  std::vector<int> mue_flows(n_sbs, 0);
  for (int i = 0; i < static_cast<int>(profile.size()); ++i)
    if (i != m && profile[i].relays()) ++mue_flows[profile[i].relay];
  int wired_load = 0;
  for (int s = 0; s < n_sbs; ++s) wired_load += mue_flows[s] + sues_at_[s];

  std::map<int, LinkTerms> sbs_terms;
  std::vector<double> utilities;
  utilities.reserve(actions.size());
  for (const Action& a : actions) {
    RateBreakdown r;
    r.r_coarse = CoarseRate(mbs, a.power, a.theta);
    r.r_fine_mbs = FineMbsRate(mbs, a.power, a.theta);
    if (a.relays()) {
      const int s = a.relay;
      auto it = sbs_terms.find(s);
      if (it == sbs_terms.end())
        it = sbs_terms.emplace(s, SbsLinkTerms(*net_, m, s, powers)).first;
      r.r_fine_sbs = FineSbsRate(it->second, a.power, a.theta);

      BackhaulShares shares;
      if (settings_.mode != BackhaulMode::kWired)
        shares.ota = ota_rates_[s] / (mue_flows[s] + 1);
      if (settings_.mode != BackhaulMode::kOta) {
        const int load = mue_flows[s] + sues_at_[s] + 1;
        const double capacity =
            settings_.wired_policy == WiredPolicy::kEqual
                ? settings_.c_bar / n_sbs
                : settings_.c_bar * load / static_cast<double>(wired_load + 1);
        shares.wired = capacity / load;
      }
      const FineOutcome fine =
          FineTotal(r.r_fine_sbs, r.r_fine_mbs, shares, settings_.combiner);
      r.r_backhaul_share = fine.share;
      r.r_fine_total = fine.rate;
      r.branch = fine.branch;
    }
    r.r_total = r.r_coarse + r.r_fine_total;
    utilities.push_back(Finish(a, r).utility);
  }
  return utilities;
}

int NormalFormGame::NumJointProfiles() const {
  int total = 1;
  for (int n : num_actions) total *= n;
  return total;
}

std::vector<int> NormalFormGame::Decode(int joint) const {
  std::vector<int> a(num_actions.size());
  for (int p = num_players() - 1; p >= 0; --p) {
    a[p] = joint % num_actions[p];
    joint /= num_actions[p];
  }
  return a;
}

int NormalFormGame::Encode(const std::vector<int>& actions) const {
  int joint = 0;
  for (int p = 0; p < num_players(); ++p) joint = joint * num_actions[p] + actions[p];
  return joint;
}

void NormalFormGame::Validate() const {
  if (num_actions.empty()) throw ConfigError("game: no players");
  for (int n : num_actions)
    if (n < 1) throw ConfigError("game: every player needs an action");
  if (static_cast<int>(utilities.size()) != num_players())
    throw ConfigError("game: one utility vector per player required");
  for (const auto& u : utilities)
    if (static_cast<int>(u.size()) != NumJointProfiles())
      throw ConfigError("game: utility vector must cover every joint profile");
}

std::vector<double> EpsilonCceGap(const NormalFormGame& game,
                                  std::span<const double> distribution) {
  game.Validate();
  const int joint_count = game.NumJointProfiles();
  if (static_cast<int>(distribution.size()) != joint_count)
    throw DomainError("cce gap: distribution size mismatch");
  double total = 0.0;
  for (double p : distribution) {
    if (p < 0.0 || !std::isfinite(p)) throw DomainError("cce gap: invalid probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw DomainError("cce gap: distribution not normalized");

  std::vector<double> gaps(game.num_players());
  for (int player = 0; player < game.num_players(); ++player) {
    const auto& u = game.utilities[player];
    double expected = 0.0;
    std::vector<double> deviation(game.num_actions[player], 0.0);
    for (int joint = 0; joint < joint_count; ++joint) {
      const double p = distribution[joint];
      if (p == 0.0) continue;
      expected += p * u[joint];
      std::vector<int> a = game.Decode(joint);
      for (int alt = 0; alt < game.num_actions[player]; ++alt) {
        a[player] = alt;
        deviation[alt] += p * u[game.Encode(a)];
      }
    }
    gaps[player] = *std::max_element(deviation.begin(), deviation.end()) - expected;
  }
  return gaps;
}

}  // namespace bhrelay
