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

// Hand-built drops for unit tests.

#ifndef BHRELAY_TESTS_FIXTURES_H_
#define BHRELAY_TESTS_FIXTURES_H_

#include <cmath>
#include <cstdint>
#include <vector>

#include "bhrelay/channel.h"
#include "bhrelay/network.h"
#include "bhrelay/topology.h"

namespace bhrelay::testing {

// A drop whose links all have flat gains set by hand. Subcarriers are 1 Hz
// wide, noise is 1 W per subcarrier and MUE/SUE/SBS powers are 1 W, so a
// gain equals the SNR of a lone full-power transmitter on one subcarrier.
class TinyNet {
 public:
  TinyNet(int n_mue, int n_sue, int n_sbs, int n_subcarriers, int n_mue_subcarriers = -1) {
    config_.n_subcarriers = n_subcarriers;
    config_.n_mue_subcarriers = n_mue_subcarriers < 0 ? n_subcarriers : n_mue_subcarriers;
    config_.system_bandwidth = n_subcarriers;
    config_.mue_power_dbm = 30.0;
    config_.sue_power_dbm = 30.0;
    config_.sbs_power_dbm = 30.0;
    config_.mues_total = n_mue;
    config_.sbss_total = n_sbs;
    topo_.sectors = 1;
    topo_.mue.assign(n_mue, Point{100.0, 0.0});
    topo_.mue_sector.assign(n_mue, 0);
    topo_.sbs.assign(n_sbs, Point{200.0, 0.0});
    topo_.sbs_sector.assign(n_sbs, 0);
    topo_.sue.assign(n_sue, Point{200.0, 10.0});
    topo_.sue_sector.assign(n_sue, 0);
    topo_.sue_serving_sbs.assign(n_sue, 0);
    alloc_.mue.assign(n_mue, {0});
    alloc_.sue.assign(n_sue, {0});
    alloc_.sbs.assign(n_sbs, {});
    layout_ = LinkLayout{n_mue, n_sue, n_sbs};
    gain_.assign(static_cast<std::size_t>(layout_.num_tx()) * layout_.num_rx(), 0.0);
  }

  ScenarioConfig& config() { return config_; }
  Topology& topology() { return topo_; }
  SubcarrierAllocation& alloc() { return alloc_; }
  const LinkLayout& layout() const { return layout_; }

  // Flat gain on every subcarrier of link tx -> rx.
  TinyNet& Gain(int tx, int rx, double g) {
    gain_[static_cast<std::size_t>(tx) * layout_.num_rx() + rx] = g;
    return *this;
  }
  TinyNet& MueGain(int m, int rx, double g) { return Gain(layout_.MueTx(m), rx, g); }
  TinyNet& SueGain(int k, int rx, double g) { return Gain(layout_.SueTx(k), rx, g); }
  TinyNet& SbsGain(int s, int rx, double g) { return Gain(layout_.SbsTx(s), rx, g); }

  Network Build() const {
    ChannelState ch(layout_, config_.n_subcarriers, 1.0);
    const std::vector<double> ones(config_.n_subcarriers, 1.0);
    for (int tx = 0; tx < layout_.num_tx(); ++tx) {
      for (int rx = 0; rx < layout_.num_rx(); ++rx) {
        const double g = gain_[static_cast<std::size_t>(tx) * layout_.num_rx() + rx];
        // 400 dB stands in for "no path".
        ch.SetLink(tx, rx, g > 0.0 ? -10.0 * std::log10(g) : 400.0, 0.0, ones);
      }
    }
    return Network::Assemble(config_, topo_, alloc_, ch);
  }

 private:
  ScenarioConfig config_;
  Topology topo_;
  SubcarrierAllocation alloc_;
  LinkLayout layout_;
  std::vector<double> gain_;
};

// A small random drop: one sector worth of totals.
inline ScenarioConfig SmallScenario(int mues = 6, int sbss = 4) {
  ScenarioConfig c;
  c.mues_total = mues;
  c.sbss_total = sbss;
  return c;
}

}  // namespace bhrelay::testing

#endif  // BHRELAY_TESTS_FIXTURES_H_
