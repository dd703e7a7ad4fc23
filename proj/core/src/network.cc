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

#include "bhrelay/network.h"

#include <utility>

#include "bhrelay/error.h"

namespace bhrelay {

Network Network::Assemble(ScenarioConfig config, Topology topology,
                          SubcarrierAllocation alloc, ChannelState channel) {
  Network net;
  net.config = std::move(config);
  net.topology = std::move(topology);
  net.alloc = std::move(alloc);
  net.channel = std::move(channel);

  const int n_sc = net.config.n_subcarriers;
  if (net.channel.n_subcarriers() != n_sc ||
      static_cast<int>(net.alloc.mue.size()) != net.num_mue() ||
      static_cast<int>(net.alloc.sue.size()) != net.num_sue() ||
      static_cast<int>(net.alloc.sbs.size()) != net.num_sbs()) {
    throw ConfigError("network: topology, allocation and channel disagree");
  }
  net.mues_on.assign(n_sc, {});
  net.sues_on.assign(n_sc, {});
  net.sbss_on.assign(n_sc, {});
  auto index = [n_sc](const std::vector<std::vector<int>>& sets,
                      std::vector<std::vector<int>>& on) {
    for (int i = 0; i < static_cast<int>(sets.size()); ++i) {
      for (int n : sets[i]) {
        if (n < 0 || n >= n_sc) throw ConfigError("network: subcarrier out of range");
        on[n].push_back(i);
      }
    }
  };
  index(net.alloc.mue, net.mues_on);
  index(net.alloc.sue, net.sues_on);
  index(net.alloc.sbs, net.sbss_on);

  net.mue_max_power = DbmToWatts(net.config.mue_power_dbm);
  net.sue_power = DbmToWatts(net.config.sue_power_dbm);
  net.sbs_power = DbmToWatts(net.config.sbs_power_dbm);
  return net;
}

Network Network::Generate(const ScenarioConfig& config, std::uint64_t seed) {
  Topology topo = GenerateTopology(config, seed);
  SubcarrierAllocation alloc = AssignSubcarriers(topo, config, seed);
  ChannelState channel = BuildChannelState(topo, alloc, config, seed);
  return Assemble(config, std::move(topo), std::move(alloc), std::move(channel));
}

}  // namespace bhrelay
