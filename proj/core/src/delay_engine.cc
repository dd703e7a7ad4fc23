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

#include "bhrelay/delay_engine.h"

#include <algorithm>
#include <cmath>
#include <random>

#include "bhrelay/error.h"
#include "bhrelay/random.h"

namespace bhrelay {
namespace {

// A leg without traffic never queues.
double LegDelay(double rho, double rate) { return rho == 0.0 ? 0.0 : Md1Delay(rho, rate); }

}  // namespace

TrafficSpec TrafficSpec::Split(double rho_total, double theta) {
  TrafficSpec t;
  t.rho_total = rho_total;
  t.rho_fine = theta * rho_total;
  t.rho_coarse = rho_total - t.rho_fine;
  return t;
}

bool TrafficSpec::Valid() const {
  return rho_total >= 0.0 && rho_coarse >= 0.0 && rho_fine >= 0.0 &&
         std::abs(rho_coarse + rho_fine - rho_total) <= 1e-9 * std::max(1.0, rho_total);
}

double Md1Delay(double rho, double rate) {
  if (rho < 0.0 || rate < 0.0 || std::isnan(rho) || std::isnan(rate))
    throw DomainError("md1: negative arrival or service rate");
  if (rate <= rho) return kUnstableDelay;
  if (rho == 0.0) return 0.0;
  return rho / (2.0 * rate * (rate - rho));
}

double DelayCla(double rate_cla, const TrafficSpec& traffic) {
  return Md1Delay(traffic.rho_total, rate_cla);
}

DelayBreakdown DelayRs(const RateBreakdown& rates, const TrafficSpec& traffic,
                       double backhaul_share) {
  DelayBreakdown d;
  d.d_coarse = LegDelay(traffic.rho_coarse, rates.r_coarse);
  d.d_fine_access = LegDelay(traffic.rho_fine, rates.r_fine_sbs);
  d.d_fine_backhaul = LegDelay(traffic.rho_fine, backhaul_share);
  d.d_fine = d.d_fine_access + d.d_fine_backhaul;
  d.d_total = std::max(d.d_coarse, d.d_fine);
  return d;
}

double Md1Oracle(double rho, double rate, std::int64_t horizon, std::uint64_t seed) {
  if (!(rate > rho) || rho < 0.0)
    throw DomainError("md1 oracle: requires rate > rho >= 0");
  if (horizon < 1) throw DomainError("md1 oracle: horizon must be positive");
  if (rho == 0.0) return 0.0;
  Rng rng(seed);
  std::exponential_distribution<double> interarrival(rho);
  const double service = 1.0 / rate;
  // Lindley recursion on the waiting time of successive packets.
  double wait = 0.0;
  double total = 0.0;
  for (std::int64_t i = 0; i < horizon; ++i) {
    total += wait;
    wait = std::max(0.0, wait + service - interarrival(rng));
  }
  return total / static_cast<double>(horizon);
}

}  // namespace bhrelay
