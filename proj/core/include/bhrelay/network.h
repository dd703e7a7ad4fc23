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

#ifndef BHRELAY_NETWORK_H_
#define BHRELAY_NETWORK_H_

#include <cstdint>
#include <vector>

#include "bhrelay/channel.h"
#include "bhrelay/topology.h"

namespace bhrelay {

// One drop: geometry, subcarrier plan and channel realization, plus
// per-subcarrier occupancy lists used by the interference sums.
struct Network {
  ScenarioConfig config;
  Topology topology;
  SubcarrierAllocation alloc;
  ChannelState channel;

  // Occupants of each subcarrier, by tier.
  std::vector<std::vector<int>> mues_on;
  std::vector<std::vector<int>> sues_on;
  std::vector<std::vector<int>> sbss_on;

  double mue_max_power = 0.0;  // W, total over the MUE's subcarriers
  double sue_power = 0.0;      // W, total over the SUE's subcarriers
  double sbs_power = 0.0;      // W, total over the SBS's backhaul subcarriers

  int num_mue() const { return topology.num_mue(); }
  int num_sue() const { return topology.num_sue(); }
  int num_sbs() const { return topology.num_sbs(); }
  double noise() const { return channel.noise_power(); }
  double subcarrier_bandwidth() const { return config.subcarrier_bandwidth(); }
  const LinkLayout& layout() const { return channel.layout(); }

  // Indexes occupancy and converts powers; the parts must be consistent.
  static Network Assemble(ScenarioConfig config, Topology topology,
                          SubcarrierAllocation alloc, ChannelState channel);
  // Full drop from (config, seed).
  static Network Generate(const ScenarioConfig& config, std::uint64_t seed);
};

}  // namespace bhrelay

#endif  // BHRELAY_NETWORK_H_
