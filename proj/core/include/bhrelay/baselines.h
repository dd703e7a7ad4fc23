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

// Non-learning reference schemes: classical uplink (CLA), full-band reuse
// with uniform power (RU1), and greedy full offloading to SBSs (OFF).

#ifndef BHRELAY_BASELINES_H_
#define BHRELAY_BASELINES_H_

#include <string>
#include <vector>

#include "bhrelay/backhaul.h"
#include "bhrelay/network.h"

namespace bhrelay {

struct BaselineResult {
  std::string label;  // CLA, RU1 or OFF
  std::vector<double> rate;
  std::vector<double> delay;
  // OFF only: serving SBS per MUE, kNoRelay for the MBS.
  std::vector<int> association;
  int rounds = 0;
  bool stabilized = true;
};

BaselineResult RunCla(const Network& net, double rho);

// Every MUE spreads P_max uniformly over all N subcarriers.
BaselineResult RunRu1(const Network& net, double rho);

struct OffloadOptions {
  BackhaulMode mode = BackhaulMode::kOta;
  double c_bar = 50e6;
  WiredPolicy wired_policy = WiredPolicy::kEqual;
  // Offloaded MUEs stop interfering at the MBS.
  bool vacate_macro = true;
  int max_rounds = 50;
};

// Synchronous best-response association rounds. Each MUE picks the MBS or
// the SBS with the largest min(access rate, backhaul share). Without a fixed
// point the best-seen association is kept and `stabilized` is false. A final
// pass sends back to the MBS every MUE that would be served below its CLA
// rate.
BaselineResult RunOff(const Network& net, double rho, const OffloadOptions& options);

}  // namespace bhrelay

#endif  // BHRELAY_BASELINES_H_
