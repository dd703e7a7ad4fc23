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

// M/D/1 transmission delays. An unstable queue (service rate <= arrival
// rate) is reported as a delay of +infinity.

#ifndef BHRELAY_DELAY_ENGINE_H_
#define BHRELAY_DELAY_ENGINE_H_

#include <cstdint>
#include <limits>

#include "bhrelay/rate_engine.h"

namespace bhrelay {

inline constexpr double kUnstableDelay = std::numeric_limits<double>::infinity();

inline bool IsStable(double delay) { return delay < kUnstableDelay; }

// Arrival rates in bits/s; coarse + fine == total.
struct TrafficSpec {
  double rho_total = 180e3;
  double rho_coarse = 180e3;
  double rho_fine = 0.0;

  // Splits rho in proportion to the fine-message power fraction.
  static TrafficSpec Split(double rho_total, double theta);
  bool Valid() const;
};

struct DelayBreakdown {
  double d_coarse = 0.0;
  double d_fine_access = 0.0;
  double d_fine_backhaul = 0.0;
  double d_fine = 0.0;
  double d_total = 0.0;

  bool stable() const { return IsStable(d_total); }
};

// rho / (2 R (R - rho)) for R > rho, kUnstableDelay otherwise; 0 when
// rho == 0 < R. Throws DomainError on negative inputs.
double Md1Delay(double rho, double rate);

double DelayCla(double rate_cla, const TrafficSpec& traffic);

// Coarse leg on R_{m,C}; fine leg is the access hop on R_{ms,F} plus the
// backhaul hop on `backhaul_share`. A leg that carries no traffic adds no
// delay. d_total = max(d_coarse, d_fine).
DelayBreakdown DelayRs(const RateBreakdown& rates, const TrafficSpec& traffic,
                       double backhaul_share);

// Test oracle: mean waiting time of a simulated single-server queue with
// Poisson arrivals (rate `rho`) and deterministic service time 1 / `rate`,
// over `horizon` packets. Throws DomainError unless rate > rho > 0.
double Md1Oracle(double rho, double rate, std::int64_t horizon, std::uint64_t seed);

}  // namespace bhrelay

#endif  // BHRELAY_DELAY_ENGINE_H_
