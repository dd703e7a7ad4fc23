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

#include <cmath>

#include "bhrelay/channel.h"
#include "bhrelay/error.h"
#include "bhrelay/network.h"

namespace bhrelay {
namespace {

TEST(Pathloss, Examples) {
  EXPECT_NEAR(PathlossDb(1.0), 15.3, 1e-12);
  EXPECT_NEAR(PathlossDb(10.0), 52.9, 1e-12);
  EXPECT_NEAR(PathlossDb(100.0), 90.5, 1e-12);
  EXPECT_THROW(PathlossDb(0.0), DomainError);
  EXPECT_THROW(PathlossDb(-3.0), DomainError);
}

TEST(Noise, PerSubcarrier) {
  ScenarioConfig c;
  EXPECT_NEAR(NoisePowerPerSubcarrier(c) / (std::pow(10.0, -17.4) * 1e-3 * 5e6 / 16), 1.0,
              1e-12);
  EXPECT_NEAR(DbmToWatts(30.0), 1.0, 1e-12);
}

Topology Line(const std::vector<double>& mue_x) {
  Topology t;
  t.sectors = 1;
  for (double x : mue_x) {
    t.mue.push_back({x, 0.0});
    t.mue_sector.push_back(0);
  }
  return t;
}

SubcarrierAllocation OneEach(int n_mue) {
  SubcarrierAllocation a;
  a.mue.assign(n_mue, {0});
  return a;
}

TEST(BuildChannelState, DeterministicPathlossOnly) {
  ScenarioConfig c;
  c.shadowing_db = 0.0;
  c.fading = false;
  const ChannelState ch = BuildChannelState(Line({10.0}), OneEach(1), c, 1);
  for (int n = 0; n < c.n_subcarriers; ++n)
    EXPECT_NEAR(ch.gain(0, LinkLayout::kMbsRx, n) / std::pow(10.0, -5.29), 1.0, 1e-12);
}

TEST(BuildChannelState, MinimumDistanceClamp) {
  ScenarioConfig c;
  c.shadowing_db = 0.0;
  c.fading = false;
  const ChannelState ch = BuildChannelState(Line({1.0}), OneEach(1), c, 1);
  EXPECT_NEAR(ch.pathloss_db(0, LinkLayout::kMbsRx), 52.9, 1e-12);
}

TEST(BuildChannelState, GainDecreasesWithDistance) {
  ScenarioConfig c;
  c.shadowing_db = 0.0;
  c.fading = false;
  const std::vector<double> xs{10, 20, 50, 100, 200, 399};
  const ChannelState ch = BuildChannelState(Line(xs), OneEach(6), c, 1);
  for (int m = 1; m < 6; ++m)
    EXPECT_LT(ch.gain(m, LinkLayout::kMbsRx, 0), ch.gain(m - 1, LinkLayout::kMbsRx, 0));
}

TEST(BuildChannelState, SameSeedSameTensor) {
  ScenarioConfig c;
  c.mues_total = 6;
  c.sbss_total = 3;
  const Network a = Network::Generate(c, 42);
  const Network b = Network::Generate(c, 42);
  EXPECT_EQ(a.channel, b.channel);
  const Network other = Network::Generate(c, 43);
  EXPECT_NE(a.channel, other.channel);
}

TEST(BuildChannelState, GainsPositiveAndComposed) {
  ScenarioConfig c;
  c.mues_total = 9;
  c.sbss_total = 6;
  const Network net = Network::Generate(c, 8);
  const ChannelState& ch = net.channel;
  for (int tx = 0; tx < ch.layout().num_tx(); ++tx)
    for (int rx = 0; rx < ch.layout().num_rx(); ++rx)
      for (int n = 0; n < ch.n_subcarriers(); ++n) {
        const double g = ch.gain(tx, rx, n);
        ASSERT_GT(g, 0.0);
        ASSERT_TRUE(std::isfinite(g));
        const double expect = std::pow(10.0, -(ch.pathloss_db(tx, rx) + ch.shadowing_db(tx, rx)) / 10) *
                              ch.fading(tx, rx, n);
        ASSERT_NEAR(g / expect, 1.0, 1e-12);
      }
}

// Many links so that the first two moments can be checked.
ChannelState BigChannel(std::uint64_t seed) {
  ScenarioConfig c;
  c.mues_total = 300;
  c.sbss_total = 45;
  return Network::Generate(c, seed).channel;
}

TEST(BuildChannelState, FadingUnitMeanAndShadowingSpread) {
  double fade_sum = 0.0, sh_sum = 0.0, sh_sq = 0.0;
  std::size_t fades = 0, links = 0;
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const ChannelState ch = BigChannel(seed);
    for (int tx = 0; tx < ch.layout().num_tx(); ++tx)
      for (int rx = 0; rx < ch.layout().num_rx(); ++rx) {
        const double x = ch.shadowing_db(tx, rx);
        sh_sum += x;
        sh_sq += x * x;
        ++links;
        for (int n = 0; n < ch.n_subcarriers(); ++n) {
          fade_sum += ch.fading(tx, rx, n);
          ++fades;
        }
      }
  }
  ASSERT_GE(links, 100000u);
  EXPECT_NEAR(fade_sum / fades, 1.0, 0.01);
  const double mean = sh_sum / links;
  EXPECT_NEAR(mean, 0.0, 0.1);
  EXPECT_NEAR(std::sqrt(sh_sq / links - mean * mean), 10.0, 0.2);
}

}  // namespace
}  // namespace bhrelay
