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

#include "bhrelay/baselines.h"

#include <numeric>

#include "bhrelay/action.h"
#include "bhrelay/delay_engine.h"
#include "bhrelay/error.h"
#include "bhrelay/rate_engine.h"

namespace bhrelay {
namespace {

void FillDelays(BaselineResult& result, double rho) {
  result.delay.resize(result.rate.size());
  for (std::size_t m = 0; m < result.rate.size(); ++m)
    result.delay[m] = Md1Delay(rho, result.rate[m]);
}

std::vector<double> MbsRates(const Network& net, const std::vector<int>& assoc,
                             bool vacate) {
  std::vector<double> powers(net.num_mue(), net.mue_max_power);
  if (vacate)
    for (int m = 0; m < net.num_mue(); ++m)
      if (assoc[m] != kNoRelay) powers[m] = 0.0;
  std::vector<double> rates(net.num_mue());
  for (int m = 0; m < net.num_mue(); ++m)
    rates[m] = ClassicalRate(MbsLinkTerms(net, m, powers), net.mue_max_power);
  return rates;
}

class Offloader {
 public:
  Offloader(const Network& net, const OffloadOptions& options)
      : net_(net), options_(options), ota_(BackhaulOtaRates(net)),
        sues_at_(net.num_sbs(), 0),
        access_(net.num_mue(), std::vector<double>(net.num_sbs())) {
    for (int s : net.topology.sue_serving_sbs) ++sues_at_[s];
    const std::vector<double> full(net.num_mue(), net.mue_max_power);
    for (int m = 0; m < net.num_mue(); ++m)
      for (int s = 0; s < net.num_sbs(); ++s)
        access_[m][s] = FineSbsRate(SbsLinkTerms(net, m, s, full), net.mue_max_power, 1.0);
    cla_ = MbsRates(net, std::vector<int>(net.num_mue(), kNoRelay), false);
  }

  const std::vector<double>& cla() const { return cla_; }

  std::vector<double> Served(const std::vector<int>& assoc) const {
    std::vector<double> rates = MbsRates(net_, assoc, options_.vacate_macro);
    std::vector<std::vector<FlowId>> relayed(net_.num_sbs()), sues(net_.num_sbs());
    for (int m = 0; m < net_.num_mue(); ++m)
      if (assoc[m] != kNoRelay) relayed[assoc[m]].push_back(FlowId::Mue(m));
    for (int k = 0; k < net_.num_sue(); ++k)
      sues[net_.topology.sue_serving_sbs[k]].push_back(FlowId::Sue(k));
    const BackhaulView view = MakeBackhaulView(options_.mode, options_.c_bar,
                                               options_.wired_policy, ota_, relayed, sues);
    for (int m = 0; m < net_.num_mue(); ++m) {
      if (assoc[m] == kNoRelay) continue;
      const double share = BackhaulShare(view, assoc[m], FlowId::Mue(m)).Effective();
      rates[m] = std::min(access_[m][assoc[m]], share);
    }
    return rates;
  }

  // Best association of m against the others' associations in `assoc`.
  int BestResponse(const std::vector<int>& assoc, int m) const {
    const int n_sbs = net_.num_sbs();
    std::vector<int> mues_at(n_sbs, 0);
    for (int i = 0; i < net_.num_mue(); ++i)
      if (i != m && assoc[i] != kNoRelay) ++mues_at[assoc[i]];
    int load = 0;
    for (int s = 0; s < n_sbs; ++s) load += mues_at[s] + sues_at_[s];

    std::vector<double> powers(net_.num_mue(), net_.mue_max_power);
    if (options_.vacate_macro)
      for (int i = 0; i < net_.num_mue(); ++i)
        if (i != m && assoc[i] != kNoRelay) powers[i] = 0.0;
    double best_rate = ClassicalRate(MbsLinkTerms(net_, m, powers), net_.mue_max_power);
    int best = kNoRelay;
    for (int s = 0; s < n_sbs; ++s) {
      double share = 0.0;
      if (options_.mode != BackhaulMode::kWired) share = ota_[s] / (mues_at[s] + 1);
      if (options_.mode != BackhaulMode::kOta) {
        const int flows = mues_at[s] + sues_at_[s] + 1;
        const double capacity = options_.wired_policy == WiredPolicy::kEqual
                                    ? options_.c_bar / n_sbs
                                    : options_.c_bar * flows / static_cast<double>(load + 1);
        share = std::max(share, capacity / flows);
      }
      const double rate = std::min(access_[m][s], share);
      if (rate > best_rate) {
        best_rate = rate;
        best = s;
      }
    }
    return best;
  }

 private:
  const Network& net_;
  OffloadOptions options_;
  std::vector<double> ota_;
  std::vector<int> sues_at_;
  std::vector<std::vector<double>> access_;
  std::vector<double> cla_;
};

double Sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

BaselineResult RunCla(const Network& net, double rho) {
  BaselineResult result;
  result.label = "CLA";
  result.rate = MbsRates(net, std::vector<int>(net.num_mue(), kNoRelay), false);
  result.association.assign(net.num_mue(), kNoRelay);
  FillDelays(result, rho);
  return result;
}

BaselineResult RunRu1(const Network& net, double rho) {
  SubcarrierAllocation alloc = net.alloc;
  std::vector<int> all(net.config.n_subcarriers);
  std::iota(all.begin(), all.end(), 0);
  for (auto& subcarriers : alloc.mue) subcarriers = all;
  const Network reuse =
      Network::Assemble(net.config, net.topology, std::move(alloc), net.channel);
  BaselineResult result = RunCla(reuse, rho);
  result.label = "RU1";
  return result;
}

BaselineResult RunOff(const Network& net, double rho, const OffloadOptions& options) {
  if (options.max_rounds < 1) throw ConfigError("offloading: max_rounds must be >= 1");
  const Offloader off(net, options);
  std::vector<int> assoc(net.num_mue(), kNoRelay);
  std::vector<int> best_assoc = assoc;
  double best_sum = Sum(off.Served(assoc));

  BaselineResult result;
  result.label = "OFF";
  result.stabilized = false;
  for (int round = 1; round <= options.max_rounds; ++round) {
    std::vector<int> next(net.num_mue());
    for (int m = 0; m < net.num_mue(); ++m) next[m] = off.BestResponse(assoc, m);
    result.rounds = round;
    const bool fixed = next == assoc;
    assoc = std::move(next);
    const double sum = Sum(off.Served(assoc));
    if (fixed) {
      result.stabilized = true;
      best_assoc = assoc;
      break;
    }
    if (sum > best_sum) {
      best_sum = sum;
      best_assoc = assoc;
    }
  }

  // Returning a flow to the MBS only raises the shares of the rest, and
  // MBS-served rates never fall below CLA, so this terminates.
  for (bool changed = true; changed;) {
    changed = false;
    const std::vector<double> served = off.Served(best_assoc);
    for (int m = 0; m < net.num_mue(); ++m) {
      if (best_assoc[m] != kNoRelay && served[m] < off.cla()[m]) {
        best_assoc[m] = kNoRelay;
        changed = true;
        break;
      }
    }
  }
  result.association = best_assoc;
  result.rate = off.Served(best_assoc);
  FillDelays(result, rho);
  return result;
}

}  // namespace bhrelay
