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

#ifndef BHRELAY_CHANNEL_H_
#define BHRELAY_CHANNEL_H_

#include <cstdint>
#include <vector>

#include "bhrelay/topology.h"

namespace bhrelay {

// 15.3 + 37.6 log10(d), d in meters. Throws DomainError for d <= 0.
double PathlossDb(double d);

double DbmToWatts(double dbm);

// Thermal noise over one subcarrier, in watts.
double NoisePowerPerSubcarrier(const ScenarioConfig& config);

// Transmitter / receiver numbering used by ChannelState. Transmitters are
// MUEs, then SUEs, then SBSs (backhaul); receivers are the MBS, then SBSs.
struct LinkLayout {
  int n_mue = 0;
  int n_sue = 0;
  int n_sbs = 0;

  int num_tx() const { return n_mue + n_sue + n_sbs; }
  int num_rx() const { return 1 + n_sbs; }
  int MueTx(int m) const { return m; }
  int SueTx(int k) const { return n_mue + k; }
  int SbsTx(int s) const { return n_mue + n_sue + s; }
  static constexpr int kMbsRx = 0;
  static int SbsRx(int s) { return 1 + s; }

  bool operator==(const LinkLayout&) const = default;
};

// Block-fading channel realization of one drop. Immutable once built.
class ChannelState {
 public:
  ChannelState() = default;
  ChannelState(LinkLayout layout, int n_subcarriers, double noise_power);

  // Linear power gain |h_{tx,rx}^n|^2.
  double gain(int tx, int rx, int n) const {
    return gain_[Index(tx, rx, n)];
  }
  double pathloss_db(int tx, int rx) const { return pathloss_db_[Link(tx, rx)]; }
  double shadowing_db(int tx, int rx) const { return shadowing_db_[Link(tx, rx)]; }
  double fading(int tx, int rx, int n) const { return fading_[Index(tx, rx, n)]; }

  double noise_power() const { return noise_power_; }
  int n_subcarriers() const { return n_subcarriers_; }
  const LinkLayout& layout() const { return layout_; }

  // Sets one link; gain = 10^(-(pathloss + shadowing)/10) * fading[n].
  void SetLink(int tx, int rx, double pathloss_db, double shadowing_db,
               const std::vector<double>& fading);

  bool operator==(const ChannelState&) const = default;

 private:
  int Link(int tx, int rx) const { return tx * layout_.num_rx() + rx; }
  std::size_t Index(int tx, int rx, int n) const {
    return static_cast<std::size_t>(Link(tx, rx)) * n_subcarriers_ + n;
  }

  LinkLayout layout_;
  int n_subcarriers_ = 0;
  double noise_power_ = 0.0;
  std::vector<double> pathloss_db_;
  std::vector<double> shadowing_db_;
  std::vector<double> fading_;
  std::vector<double> gain_;
};

// Pathloss on the clamped link distance, i.i.d. log-normal shadowing per
// link and i.i.d. Rayleigh (exponential power) fading per link and
// subcarrier. Pure function of its arguments.
ChannelState BuildChannelState(const Topology& topology,
                               const SubcarrierAllocation& alloc,
                               const ScenarioConfig& config, std::uint64_t seed);

}  // namespace bhrelay

#endif  // BHRELAY_CHANNEL_H_
