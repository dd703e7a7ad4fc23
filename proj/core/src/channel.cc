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

#include "bhrelay/channel.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "bhrelay/error.h"
#include "bhrelay/random.h"

namespace bhrelay {

double PathlossDb(double d) {
  if (!(d > 0.0) || !std::isfinite(d))
    throw DomainError("pathloss: distance must be positive, got " +
                      std::to_string(d));
  return 15.3 + 37.6 * std::log10(d);
}

double DbmToWatts(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

double NoisePowerPerSubcarrier(const ScenarioConfig& config) {
  return DbmToWatts(config.noise_dbm_per_hz) * config.subcarrier_bandwidth();
}

ChannelState::ChannelState(LinkLayout layout, int n_subcarriers, double noise_power)
    : layout_(layout), n_subcarriers_(n_subcarriers), noise_power_(noise_power) {
  const std::size_t links =
      static_cast<std::size_t>(layout_.num_tx()) * layout_.num_rx();
  pathloss_db_.assign(links, 0.0);
  shadowing_db_.assign(links, 0.0);
  fading_.assign(links * n_subcarriers_, 1.0);
  gain_.assign(links * n_subcarriers_, 1.0);
}

void ChannelState::SetLink(int tx, int rx, double pathloss_db, double shadowing_db,
                           const std::vector<double>& fading) {
  pathloss_db_[Link(tx, rx)] = pathloss_db;
  shadowing_db_[Link(tx, rx)] = shadowing_db;
  const double large_scale = std::pow(10.0, -(pathloss_db + shadowing_db) / 10.0);
  for (int n = 0; n < n_subcarriers_; ++n) {
    fading_[Index(tx, rx, n)] = fading[n];
    gain_[Index(tx, rx, n)] = large_scale * fading[n];
  }
}

ChannelState BuildChannelState(const Topology& topology,
                               const SubcarrierAllocation& alloc,
                               const ScenarioConfig& config, std::uint64_t seed) {
  config.Validate();
  (void)alloc;  // gains are drawn on every subcarrier, used or not
  const LinkLayout layout{topology.num_mue(), topology.num_sue(), topology.num_sbs()};
  ChannelState state(layout, config.n_subcarriers, NoisePowerPerSubcarrier(config));

  Rng rng(DeriveSeed(seed, SeedStream::kChannel));
  std::normal_distribution<double> shadowing(0.0, 1.0);
  std::exponential_distribution<double> rayleigh_power(1.0);

  std::vector<Point> tx_pos;
  tx_pos.insert(tx_pos.end(), topology.mue.begin(), topology.mue.end());
  tx_pos.insert(tx_pos.end(), topology.sue.begin(), topology.sue.end());
  tx_pos.insert(tx_pos.end(), topology.sbs.begin(), topology.sbs.end());
  std::vector<Point> rx_pos{topology.mbs};
  rx_pos.insert(rx_pos.end(), topology.sbs.begin(), topology.sbs.end());

  std::vector<double> fading(config.n_subcarriers, 1.0);
  for (int tx = 0; tx < layout.num_tx(); ++tx) {
    for (int rx = 0; rx < layout.num_rx(); ++rx) {
      // Draw every sample in a fixed order so that disabling one component
      // does not reshuffle the others.
      const double x_sigma = shadowing(rng) * config.shadowing_db;
      for (double& f : fading) {
        const double draw = rayleigh_power(rng);
        f = config.fading ? draw : 1.0;
      }
      const double d = std::max(Distance(tx_pos[tx], rx_pos[rx]), config.min_distance);
      state.SetLink(tx, rx, PathlossDb(d), x_sigma, fading);
    }
  }
  return state;
}

}  // namespace bhrelay
