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

// SBS-to-MBS transport: in-band wireless (OTA), a shared wired pipe, or a
// hybrid that picks the better of the two per flow.

#ifndef BHRELAY_BACKHAUL_H_
#define BHRELAY_BACKHAUL_H_

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace bhrelay {

enum class BackhaulMode { kOta, kWired, kHybrid };
BackhaulMode ParseBackhaulMode(const std::string& name);  // ota|wrd|hyb
std::string ToString(BackhaulMode mode);

enum class WiredPolicy { kEqual, kProportionalLoad };
WiredPolicy ParseWiredPolicy(const std::string& name);  // equal|proportional
std::string ToString(WiredPolicy policy);

// A traffic flow crossing an SBS backhaul: a relayed MUE fine message or
// the traffic of an attached SUE.
struct FlowId {
  enum class Kind { kMue, kSue };
  Kind kind = Kind::kMue;
  int index = 0;

  static FlowId Mue(int m) { return {Kind::kMue, m}; }
  static FlowId Sue(int k) { return {Kind::kSue, k}; }
  auto operator<=>(const FlowId&) const = default;
};

struct FlowShare {
  FlowId flow;
  double nu = 0.0;
  bool operator==(const FlowShare&) const = default;
};

// Splits `c_bar` over the SBSs. kEqual: C_bar / |S| each. kProportionalLoad:
// proportional to `loads` (flow counts); all-zero loads fall back to equal.
// Sum of the result never exceeds c_bar.
std::vector<double> AllocateWiredCapacity(int n_sbs, double c_bar, WiredPolicy policy,
                                          const std::vector<int>& loads = {});

// Equal split 1/|flows|; empty input gives an empty row.
std::vector<FlowShare> AllocateNu(const std::vector<FlowId>& flows);

// Backhaul state for one iteration. The OTA pool of an SBS holds the MUE
// fine flows it relays; the wired pool additionally holds its SUE flows.
struct BackhaulView {
  BackhaulMode mode = BackhaulMode::kOta;
  double c_bar = 50e6;
  std::vector<double> wired_capacity;  // C_s
  std::vector<double> ota_rate;        // R_s0
  std::vector<std::vector<FlowShare>> ota_nu;
  std::vector<std::vector<FlowShare>> wired_nu;

  int num_sbs() const { return static_cast<int>(wired_capacity.size()); }
};

BackhaulView MakeBackhaulView(BackhaulMode mode, double c_bar, WiredPolicy policy,
                              std::vector<double> ota_rate,
                              const std::vector<std::vector<FlowId>>& relayed_mues,
                              const std::vector<std::vector<FlowId>>& attached_sues);

// Shares available to one flow at SBS s. Only the branches of the view's mode
// are populated; the consumer of a hybrid view picks the larger.
struct BackhaulShares {
  std::optional<double> ota;
  std::optional<double> wired;

  double Effective() const;
  bool operator==(const BackhaulShares&) const = default;
};

// Throws LookupError if `flow` is not registered at `s` in the pools the
// mode uses.
BackhaulShares BackhaulShare(const BackhaulView& view, int s, FlowId flow);

// nu_{s,flow} * C_s from the wired pool regardless of mode (SUE traffic).
double WiredShare(const BackhaulView& view, int s, FlowId flow);

}  // namespace bhrelay

#endif  // BHRELAY_BACKHAUL_H_
