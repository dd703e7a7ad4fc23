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
#include <random>

#include "bhrelay/delay_engine.h"
#include "bhrelay/error.h"
#include "bhrelay/rate_engine.h"

namespace bhrelay {
namespace {

TEST(Md1Delay, Examples) {
  EXPECT_DOUBLE_EQ(Md1Delay(1, 2), 0.25);
  EXPECT_NEAR(Md1Delay(1, 4), 1.0 / 24, 1e-15);
  EXPECT_FALSE(IsStable(Md1Delay(1, 1)));
  EXPECT_FALSE(IsStable(Md1Delay(2, 1)));
  EXPECT_EQ(Md1Delay(0, 3), 0.0);
  EXPECT_FALSE(IsStable(Md1Delay(0, 0)));
  EXPECT_THROW(Md1Delay(-1, 2), DomainError);
  EXPECT_THROW(Md1Delay(1, -2), DomainError);
}

TEST(Md1Delay, Monotone) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double rate = 10 * u(rng);
    const double a = rate * u(rng) * 0.99, b = rate * u(rng) * 0.99;
    if (a == b) continue;
    EXPECT_EQ(Md1Delay(std::min(a, b), rate) < Md1Delay(std::max(a, b), rate), true);
    EXPECT_GT(Md1Delay(a, rate), Md1Delay(a, rate * 1.1));
  }
}

TEST(DelayCla, Examples) {
  const TrafficSpec t;
  EXPECT_NEAR(DelayCla(360e3, t), 180e3 / (2 * 360e3 * 180e3), 1e-20);
  EXPECT_NEAR(DelayCla(360e3, t), 1.389e-6 * 1e-5 / 1e-5, 1e-9);
  EXPECT_FALSE(IsStable(DelayCla(180e3, t)));
  EXPECT_FALSE(IsStable(DelayCla(100e3, t)));
  EXPECT_EQ(DelayCla(1e5, TrafficSpec{0, 0, 0}), 0.0);
}

TEST(TrafficSpec, Split) {
  const TrafficSpec t = TrafficSpec::Split(180e3, 1.0 / 3);
  EXPECT_NEAR(t.rho_fine, 60e3, 1e-9);
  EXPECT_NEAR(t.rho_coarse, 120e3, 1e-9);
  EXPECT_TRUE(t.Valid());
  EXPECT_EQ(TrafficSpec::Split(180e3, 0).rho_fine, 0.0);
  EXPECT_FALSE((TrafficSpec{1, 2, 0}).Valid());
}

TEST(DelayRs, Examples) {
  RateBreakdown r;
  r.r_coarse = 2;
  r.r_fine_sbs = 4;
  const DelayBreakdown d = DelayRs(r, TrafficSpec{2, 1, 1}, 4);
  EXPECT_DOUBLE_EQ(d.d_coarse, 0.25);
  EXPECT_NEAR(d.d_fine, 1.0 / 12, 1e-15);
  EXPECT_DOUBLE_EQ(d.d_total, 0.25);
  EXPECT_TRUE(d.stable());

  const DelayBreakdown coarse_only = DelayRs(r, TrafficSpec{1, 1, 0}, 0);
  EXPECT_EQ(coarse_only.d_total, coarse_only.d_coarse);
  EXPECT_EQ(coarse_only.d_fine, 0.0);

  EXPECT_FALSE(DelayRs(r, TrafficSpec{2, 1, 1}, 1).stable());
  EXPECT_FALSE(DelayRs(r, TrafficSpec{2, 1, 1}, 0.5).stable());
}

TEST(DelayRs, TotalIsMaxOfLegs) {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 10.0);
  for (int i = 0; i < 1000; ++i) {
    RateBreakdown r;
    r.r_coarse = u(rng);
    r.r_fine_sbs = u(rng);
    const double theta = u(rng) / 10;
    const DelayBreakdown d = DelayRs(r, TrafficSpec::Split(1.0, theta), u(rng));
    EXPECT_EQ(d.d_fine, d.d_fine_access + d.d_fine_backhaul);
    EXPECT_EQ(d.d_total, std::max(d.d_coarse, d.d_fine));
    EXPECT_GE(d.d_total, 0.0);
  }
}

TEST(Md1Oracle, MatchesClosedForm) {
  for (double load : {0.3, 0.5, 0.7}) {
    const double closed = Md1Delay(load, 1.0);
    const double sim = Md1Oracle(load, 1.0, 1000000, 11);
    EXPECT_NEAR(sim / closed, 1.0, 0.05) << "load " << load;
  }
  EXPECT_NEAR(Md1Oracle(0.5, 1.0, 200000, 3), 0.5, 0.025);
  EXPECT_NEAR(Md1Oracle(0.3, 1.0, 200000, 3), 0.3 / 1.4, 0.011);
  EXPECT_LT(Md1Oracle(1e-4, 1.0, 100000, 3), 1e-3);
  EXPECT_THROW(Md1Oracle(1.0, 1.0, 1000, 1), DomainError);
}

}  // namespace
}  // namespace bhrelay
