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
#include <set>
#include <tuple>

#include "bhrelay/baselines.h"
#include "bhrelay/error.h"
#include "bhrelay/game.h"
#include "fixtures.h"

namespace bhrelay {
namespace {

using testing::TinyNet;

TEST(ActionSpace, Counting) {
  const ActionSpace a = BuildActionSpace({1, 1, 1}, 2.0, {4});
  ASSERT_EQ(a.size(), 2);
  EXPECT_EQ(a.actions[0], (Action{2.0, 0.0, kNoRelay}));
  EXPECT_EQ(a.actions[1], (Action{2.0, 1.0, 4}));
  EXPECT_EQ(BuildActionSpace({2, 2, 2}, 1.0, {0, 1}).size(), 10);
  const ActionSpace none = BuildActionSpace({2, 3, 3}, 1.0, {});
  ASSERT_EQ(none.size(), 2);
  for (const Action& x : none.actions) EXPECT_EQ(x.theta, 0.0);
  EXPECT_THROW(BuildActionSpace({0, 1, 1}, 1.0, {}), ConfigError);
}

TEST(ActionSpace, ClassicalAndNoDuplicates) {
  const ActionSpace a = BuildActionSpace({3, 3, 3}, 0.5, {2, 0, 1});
  EXPECT_EQ(a.size(), 3 * (1 + 3 * 3));
  const int c = a.ClassicalIndex();
  ASSERT_GE(c, 0);
  EXPECT_EQ(a.actions[c], (Action{0.5, 0.0, kNoRelay}));
  std::set<std::tuple<double, double, int>> seen;
  for (const Action& x : a.actions) {
    EXPECT_TRUE(seen.insert({x.power, x.theta, x.relay}).second);
    EXPECT_LE(x.power, 0.5);
    EXPECT_GE(x.theta, 0.0);
    EXPECT_LE(x.theta, 1.0);
    EXPECT_EQ(x.theta == 0.0, x.relay == kNoRelay);
  }
  EXPECT_EQ(a.IndexOf(a.actions[7]), 7);
  EXPECT_EQ(a.IndexOf({9.0, 0.0, kNoRelay}), -1);
}

TEST(ActionSpace, NearestCandidates) {
  TinyNet t(1, 0, 3, 1);
  t.topology().mue = {{0, 0}};
  t.topology().sbs = {{300, 0}, {100, 0}, {200, 0}};
  const Network net = t.Build();
  const auto spaces = BuildActionSpaces(net, {1, 1, 2});
  ASSERT_EQ(spaces[0].size(), 3);
  EXPECT_EQ(spaces[0].actions[1].relay, 1);
  EXPECT_EQ(spaces[0].actions[2].relay, 2);
}

TEST(Utility, Examples) {
  const UtilityParams half{0.5, 0.0};
  EXPECT_DOUBLE_EQ(Utility(4, 0.25, half), 4.0);
  EXPECT_DOUBLE_EQ(Utility(7, 0.1, {0.0, 0.0}), 7.0);
  EXPECT_DOUBLE_EQ(Utility(7, 0.1, {1.0, 0.0}), 10.0);
  EXPECT_EQ(Utility(4, kUnstableDelay, half), 0.0);
  EXPECT_EQ(Utility(4, kUnstableDelay, {0.5, -3.0}), -3.0);
  EXPECT_EQ(Utility(0, 0.5, half), 0.0);
  EXPECT_THROW(Utility(-1, 0.5, half), DomainError);
}

TEST(Utility, RateUnitRescales) {
  UtilityParams mbps{0.5, 0.0, 1e6};
  EXPECT_NEAR(Utility(4e6, 0.25e-6, {0.5, 0.0, 1.0}) * 1e-6, Utility(4e6, 0.25e-6, mbps),
              1e-12);
  EXPECT_NEAR(Utility(4e6, 0.25e-6, mbps), 4.0, 1e-9);
}

TEST(Utility, Monotone) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  for (int i = 0; i < 1000; ++i) {
    const UtilityParams p{u(rng) / 10.1, 0.0};
    const double r = u(rng), d = u(rng);
    EXPECT_LE(Utility(r, d, p), Utility(r * 1.5, d, p));
    EXPECT_GE(Utility(r, d, p), Utility(r, d * 1.5, p));
  }
}

TEST(ProfileEvaluator, AllClassicalMatchesCla) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Network net = Network::Generate(testing::SmallScenario(9, 5), seed);
    GameSettings gs;
    const ProfileEvaluator ev(net, gs);
    Profile p(net.num_mue(), Action{net.mue_max_power, 0.0, kNoRelay});
    const ProfileOutcome out = ev.Evaluate(p);
    const BaselineResult cla = RunCla(net, gs.rho);
    for (int m = 0; m < net.num_mue(); ++m) {
      EXPECT_EQ(out.mue[m].rates.r_total, cla.rate[m]);
      EXPECT_EQ(out.mue[m].delays.d_total, cla.delay[m]);
      EXPECT_EQ(out.mue[m].utility, Utility(cla.rate[m], cla.delay[m], gs.utility));
    }
  }
}

TEST(ProfileEvaluator, HandChainedSingleRelay) {
  TinyNet t(1, 0, 1, 2, 1);
  t.alloc().sbs = {{1}};
  t.MueGain(0, LinkLayout::kMbsRx, 3.0).MueGain(0, LinkLayout::SbsRx(0), 15.0);
  t.SbsGain(0, LinkLayout::kMbsRx, 1.0);
  const Network net = t.Build();
  GameSettings gs;
  gs.rho = 0.2;
  const ProfileEvaluator ev(net, gs);
  const ProfileOutcome out = ev.Evaluate({{1.0, 0.5, 0}});

  const double coarse = std::log2(1 + 1.5 / 2.5);
  const double fine_sbs = std::log2(1 + 7.5 / 8.5);
  const double r_s0 = 1.0;
  const double total = coarse + 0.5 * std::min(fine_sbs, r_s0);
  const double d_c = 0.1 / (2 * coarse * (coarse - 0.1));
  const double d_f = 0.1 / (2 * fine_sbs * (fine_sbs - 0.1)) + 0.1 / (2 * r_s0 * (r_s0 - 0.1));
  const double d = std::max(d_c, d_f);
  EXPECT_NEAR(out.mue[0].rates.r_total, total, 1e-12);
  EXPECT_NEAR(out.mue[0].delays.d_total, d, 1e-12);
  EXPECT_NEAR(out.mue[0].utility, std::sqrt(total / d), 1e-9);
}

TEST(ProfileEvaluator, PermutationSymmetry) {
  const double gains[3] = {2.0, 5.0, 9.0};
  const int perm[3] = {2, 0, 1};  // new id of MUE i
  TinyNet a(3, 0, 1, 2, 1), b(3, 0, 1, 2, 1);
  a.alloc().sbs = b.alloc().sbs = {{1}};
  a.SbsGain(0, LinkLayout::kMbsRx, 4.0);
  b.SbsGain(0, LinkLayout::kMbsRx, 4.0);
  for (int i = 0; i < 3; ++i) {
    a.MueGain(i, LinkLayout::kMbsRx, gains[i]).MueGain(i, LinkLayout::SbsRx(0), 3 * gains[i]);
    b.MueGain(perm[i], LinkLayout::kMbsRx, gains[i])
        .MueGain(perm[i], LinkLayout::SbsRx(0), 3 * gains[i]);
  }
  const Network na = a.Build(), nb = b.Build();
  GameSettings gs;
  gs.rho = 0.05;
  const Profile pa{{1.0, 0.0, kNoRelay}, {1.0, 0.5, 0}, {0.5, 1.0, 0}};
  Profile pb(3);
  for (int i = 0; i < 3; ++i) pb[perm[i]] = pa[i];
  const ProfileOutcome oa = ProfileEvaluator(na, gs).Evaluate(pa);
  const ProfileOutcome ob = ProfileEvaluator(nb, gs).Evaluate(pb);
  for (int i = 0; i < 3; ++i) EXPECT_DOUBLE_EQ(oa.mue[i].utility, ob.mue[perm[i]].utility);
}

TEST(ProfileEvaluator, CounterfactualMatchesEvaluate) {
  std::mt19937_64 rng(12);
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Network net = Network::Generate(testing::SmallScenario(9, 5), seed);
    const auto spaces = BuildActionSpaces(net, ActionGrid{});
    for (BackhaulMode mode : {BackhaulMode::kOta, BackhaulMode::kWired, BackhaulMode::kHybrid}) {
      for (WiredPolicy policy : {WiredPolicy::kEqual, WiredPolicy::kProportionalLoad}) {
        for (CombinerMode g : {CombinerMode::kIdentity, CombinerMode::kAddDirect}) {
          GameSettings gs;
          gs.mode = mode;
          gs.wired_policy = policy;
          gs.combiner = g;
          gs.c_bar = 2e6;  // small enough for the wired branch to bind
          const ProfileEvaluator ev(net, gs);
          Profile p;
          for (const auto& s : spaces) p.push_back(s.actions[rng() % s.size()]);
          for (int m = 0; m < net.num_mue(); ++m) {
            const std::vector<double> cf = ev.Counterfactual(p, m, spaces[m].actions);
            for (int l = 0; l < spaces[m].size(); ++l) {
              Profile q = p;
              q[m] = spaces[m].actions[l];
              const double direct = ev.Evaluate(q).mue[m].utility;
              ASSERT_NEAR(cf[l], direct, 1e-9 * std::max(1.0, std::abs(direct)));
            }
          }
        }
      }
    }
  }
}

TEST(ProfileEvaluator, RejectsBadSettings) {
  const Network net = Network::Generate(testing::SmallScenario(), 1);
  GameSettings gs;
  gs.utility.alpha = 1.5;
  EXPECT_THROW(ProfileEvaluator(net, gs), ConfigError);
  gs = {};
  gs.rho = 0;
  EXPECT_THROW(ProfileEvaluator(net, gs), ConfigError);
  const ProfileEvaluator ev(net, GameSettings{});
  EXPECT_THROW(ev.Evaluate(Profile(1)), ConfigError);
}

NormalFormGame MatchingPennies() {
  return {{2, 2}, {{1, -1, -1, 1}, {-1, 1, 1, -1}}};
}

// Payoff 1 on (0,0), 2 on (1,1), 0 otherwise, for both players.
NormalFormGame Coordination() {
  return {{2, 2}, {{1, 0, 0, 2}, {1, 0, 0, 2}}};
}

TEST(CceGap, Examples) {
  using Dist = std::vector<double>;
  const std::vector<double> uniform(4, 0.25);
  for (double g : EpsilonCceGap(MatchingPennies(), uniform)) EXPECT_NEAR(g, 0.0, 1e-15);
  for (double g : EpsilonCceGap(Coordination(), Dist{1, 0, 0, 0})) EXPECT_EQ(g, 0.0);
  for (double g : EpsilonCceGap(Coordination(), Dist{0, 0, 0, 1})) EXPECT_EQ(g, 0.0);
  const auto off = EpsilonCceGap(Coordination(), Dist{0, 1, 0, 0});
  EXPECT_EQ(off[0], 2.0);
  EXPECT_EQ(off[1], 1.0);
  EXPECT_THROW(EpsilonCceGap(MatchingPennies(), Dist{0.5, 0.5, 0.5, 0}), DomainError);
  EXPECT_THROW(EpsilonCceGap(MatchingPennies(), Dist{1, 0, 0}), DomainError);
}

TEST(NormalFormGame, EncodeDecodeAndValidate) {
  const NormalFormGame g{{2, 3, 4}, {std::vector<double>(24), std::vector<double>(24),
                                     std::vector<double>(24)}};
  EXPECT_EQ(g.NumJointProfiles(), 24);
  for (int j = 0; j < 24; ++j) EXPECT_EQ(g.Encode(g.Decode(j)), j);
  EXPECT_EQ(g.Encode({1, 0, 0}), 12);
  EXPECT_NO_THROW(g.Validate());
  NormalFormGame bad = g;
  bad.utilities[1].pop_back();
  EXPECT_THROW(bad.Validate(), ConfigError);
  bad = g;
  bad.num_actions[0] = 0;
  EXPECT_THROW(bad.Validate(), ConfigError);
}

// The gap is the tightest epsilon: the defining inequality holds at gap and
// fails just below it.
TEST(CceGap, BruteForceDefinition) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-5, 5);
  for (int trial = 0; trial < 300; ++trial) {
    NormalFormGame g;
    const int players = 1 + static_cast<int>(rng() % 3);
    for (int p = 0; p < players; ++p) g.num_actions.push_back(1 + static_cast<int>(rng() % 4));
    const int n = g.NumJointProfiles();
    g.utilities.assign(players, std::vector<double>(n));
    for (auto& row : g.utilities)
      for (double& x : row) x = u(rng);
    std::vector<double> dist(n);
    double total = 0;
    for (double& x : dist) total += (x = (rng() % 3 == 0) ? 0.0 : u(rng) + 5);
    if (total == 0) continue;
    for (double& x : dist) x /= total;
    const std::vector<double> gaps = EpsilonCceGap(g, dist);
    for (int p = 0; p < players; ++p) {
      double expected = 0.0;
      for (int j = 0; j < n; ++j) expected += dist[j] * g.utilities[p][j];
      bool holds_at_gap = true, tight = false;
      for (int alt = 0; alt < g.num_actions[p]; ++alt) {
        double dev = 0.0;
        for (int j = 0; j < n; ++j) {
          std::vector<int> a = g.Decode(j);
          a[p] = alt;
          dev += dist[j] * g.utilities[p][g.Encode(a)];
        }
        if (dev - expected > gaps[p] + 1e-12) holds_at_gap = false;
        if (dev - expected > gaps[p] - 1e-9) tight = true;
      }
      EXPECT_TRUE(holds_at_gap);
      EXPECT_TRUE(tight);
    }
  }
}

}  // namespace
}  // namespace bhrelay
