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

#include "bhrelay/rate_engine.h"

#include <algorithm>
#include <cmath>

#include "bhrelay/error.h"

namespace bhrelay {
namespace {

double PerSubcarrier(double power, const LinkTerms& terms) {
  return terms.size() == 0 ? 0.0 : power / terms.size();
}

double SueRxPower(const Network& net, int k, int rx, int n) {
  const int per = static_cast<int>(net.alloc.sue[k].size());
  return net.channel.gain(net.layout().SueTx(k), rx, n) * net.sue_power / per;
}

}  // namespace

double SpectralRate(std::span<const SinrTerm> terms, double noise_power,
                    double subcarrier_bandwidth) {
  double bits = 0.0;
  for (const SinrTerm& t : terms) {
    if (t.signal < 0.0 || t.interference < 0.0)
      throw DomainError("spectral rate: negative power");
    if (t.signal == 0.0) continue;
    bits += std::log2(1.0 + t.signal / (noise_power + t.interference));
  }
  return subcarrier_bandwidth * bits;
}

std::vector<double> MuePowers(const Profile& profile) {
  std::vector<double> p(profile.size());
  for (std::size_t m = 0; m < profile.size(); ++m) p[m] = profile[m].power;
  return p;
}

double MbsInterference(const Network& net, int n, int exclude_mue,
                       std::span<const double> mue_power) {
  double sum = 0.0;
  for (int i : net.mues_on[n]) {
    if (i == exclude_mue || mue_power[i] == 0.0) continue;
    sum += net.channel.gain(net.layout().MueTx(i), LinkLayout::kMbsRx, n) *
           mue_power[i] / net.alloc.mue[i].size();
  }
  for (int k : net.sues_on[n]) sum += SueRxPower(net, k, LinkLayout::kMbsRx, n);
  return sum;
}

double SbsInterference(const Network& net, int s, int n, int exclude_mue,
                       std::span<const double> mue_power) {
  const int rx = LinkLayout::SbsRx(s);
  double sum = 0.0;
  for (int i : net.mues_on[n]) {
    if (i == exclude_mue || mue_power[i] == 0.0) continue;
    sum += net.channel.gain(net.layout().MueTx(i), rx, n) * mue_power[i] /
           net.alloc.mue[i].size();
  }
  for (int k : net.sues_on[n]) sum += SueRxPower(net, k, rx, n);
  return sum;
}

LinkTerms MbsLinkTerms(const Network& net, int m, std::span<const double> mue_power) {
  LinkTerms terms{net.noise(), net.subcarrier_bandwidth(), {}, {}};
  for (int n : net.alloc.mue[m]) {
    terms.gain.push_back(net.channel.gain(net.layout().MueTx(m), LinkLayout::kMbsRx, n));
    terms.interference.push_back(MbsInterference(net, n, m, mue_power));
  }
  return terms;
}

LinkTerms SbsLinkTerms(const Network& net, int m, int s,
                       std::span<const double> mue_power) {
  if (s < 0 || s >= net.num_sbs()) throw LookupError("no sbs " + std::to_string(s));
  LinkTerms terms{net.noise(), net.subcarrier_bandwidth(), {}, {}};
  for (int n : net.alloc.mue[m]) {
    terms.gain.push_back(
        net.channel.gain(net.layout().MueTx(m), LinkLayout::SbsRx(s), n));
    terms.interference.push_back(SbsInterference(net, s, n, m, mue_power));
  }
  return terms;
}

double ClassicalRate(const LinkTerms& mbs, double power) {
  return CoarseRate(mbs, power, 0.0);
}

double CoarseRate(const LinkTerms& mbs, double power, double theta) {
  const double p = PerSubcarrier(power, mbs);
  double bits = 0.0;
  for (int i = 0; i < mbs.size(); ++i) {
    const double signal = mbs.gain[i] * (1.0 - theta) * p;
    if (signal <= 0.0) continue;
    const double self = mbs.gain[i] * theta * p;
    bits += std::log2(1.0 + signal / (mbs.noise + self + mbs.interference[i]));
  }
  return mbs.bandwidth * bits;
}

double FineMbsRate(const LinkTerms& mbs, double power, double theta) {
  const double p = PerSubcarrier(power, mbs);
  double bits = 0.0;
  for (int i = 0; i < mbs.size(); ++i) {
    const double signal = mbs.gain[i] * theta * p;
    if (signal <= 0.0) continue;
    bits += std::log2(1.0 + signal / (mbs.noise + mbs.interference[i]));
  }
  return mbs.bandwidth * bits;
}

double FineSbsRate(const LinkTerms& sbs, double power, double theta) {
  const double p = PerSubcarrier(power, sbs);
  double bits = 0.0;
  for (int i = 0; i < sbs.size(); ++i) {
    const double signal = sbs.gain[i] * theta * p;
    if (signal <= 0.0) continue;
    const double own_coarse = sbs.gain[i] * (1.0 - theta) * p;
    bits += std::log2(1.0 + signal / (sbs.noise + own_coarse + sbs.interference[i]));
  }
  return sbs.bandwidth * bits;
}

CombinerMode ParseCombinerMode(const std::string& name) {
  if (name == "identity") return CombinerMode::kIdentity;
  if (name == "add-direct") return CombinerMode::kAddDirect;
  throw ConfigError("unknown combiner '" + name + "' (identity|add-direct)");
}

std::string ToString(CombinerMode mode) {
  return mode == CombinerMode::kIdentity ? "identity" : "add-direct";
}

double CombineFine(double relayed, double direct_fine, CombinerMode mode) {
  switch (mode) {
    case CombinerMode::kIdentity: return relayed;
    case CombinerMode::kAddDirect: return relayed + 0.5 * direct_fine;
  }
  throw ConfigError("unknown combiner mode");
}

FineOutcome FineTotal(double fine_sbs, double direct_fine,
                      const BackhaulShares& shares, CombinerMode combiner) {
  FineOutcome best;
  auto consider = [&](double share, BackhaulBranch branch) {
    const double rate = CombineFine(0.5 * std::min(fine_sbs, share), direct_fine, combiner);
    if (best.branch == BackhaulBranch::kNone || rate > best.rate ||
        (rate == best.rate && share > best.share)) {
      best = {rate, share, branch};
    }
  };
  if (shares.ota) consider(*shares.ota, BackhaulBranch::kOta);
  if (shares.wired) consider(*shares.wired, BackhaulBranch::kWired);
  return best;
}

double RateClaMue(const Network& net, const Profile& profile, int m) {
  const std::vector<double> powers = MuePowers(profile);
  return ClassicalRate(MbsLinkTerms(net, m, powers), profile[m].power);
}

double RateClaSue(const Network& net, const Profile& profile, int k,
                  double backhaul_share) {
  const std::vector<double> powers = MuePowers(profile);
  const int s = net.topology.sue_serving_sbs[k];
  const int rx = LinkLayout::SbsRx(s);
  std::vector<SinrTerm> terms;
  for (int n : net.alloc.sue[k]) {
    double interference = 0.0;
    for (int i : net.mues_on[n])
      interference += net.channel.gain(net.layout().MueTx(i), rx, n) * powers[i] /
                      net.alloc.mue[i].size();
    for (int j : net.sues_on[n])
      if (j != k) interference += SueRxPower(net, j, rx, n);
    terms.push_back({SueRxPower(net, k, rx, n), interference});
  }
  const double access = SpectralRate(terms, net.noise(), net.subcarrier_bandwidth());
  return std::min(access, backhaul_share);
}

double RateBackhaulOta(const Network& net, int s) {
  const int per = static_cast<int>(net.alloc.sbs[s].size());
  std::vector<SinrTerm> terms;
  for (int n : net.alloc.sbs[s]) {
    double interference = 0.0;
    for (int l : net.sbss_on[n]) {
      if (l == s) continue;
      interference += net.channel.gain(net.layout().SbsTx(l), LinkLayout::kMbsRx, n) *
                      net.sbs_power / net.alloc.sbs[l].size();
    }
    terms.push_back(
        {net.channel.gain(net.layout().SbsTx(s), LinkLayout::kMbsRx, n) * net.sbs_power / per,
         interference});
  }
  return SpectralRate(terms, net.noise(), net.subcarrier_bandwidth());
}

std::vector<double> BackhaulOtaRates(const Network& net) {
  std::vector<double> rates(net.num_sbs());
  for (int s = 0; s < net.num_sbs(); ++s) rates[s] = RateBackhaulOta(net, s);
  return rates;
}

double RateCoarse(const Network& net, const Profile& profile, int m) {
  const std::vector<double> powers = MuePowers(profile);
  return CoarseRate(MbsLinkTerms(net, m, powers), profile[m].power, profile[m].theta);
}

double RateFineMbs(const Network& net, const Profile& profile, int m) {
  const std::vector<double> powers = MuePowers(profile);
  return FineMbsRate(MbsLinkTerms(net, m, powers), profile[m].power, profile[m].theta);
}

double RateFineSbs(const Network& net, const Profile& profile, int m, int s) {
  const std::vector<double> powers = MuePowers(profile);
  return FineSbsRate(SbsLinkTerms(net, m, s, powers), profile[m].power,
                     profile[m].theta);
}

double RateFineTotal(const Network& net, const Profile& profile, int m,
                     const BackhaulView& view, CombinerMode combiner) {
  return RateTotal(net, profile, m, view, combiner).r_fine_total;
}

RateBreakdown RateTotal(const Network& net, const Profile& profile, int m,
                        const BackhaulView& view, CombinerMode combiner) {
  const Action& a = profile[m];
  const std::vector<double> powers = MuePowers(profile);
  const LinkTerms mbs = MbsLinkTerms(net, m, powers);
  RateBreakdown out;
  out.r_coarse = CoarseRate(mbs, a.power, a.theta);
  out.r_fine_mbs = FineMbsRate(mbs, a.power, a.theta);
  if (a.relays()) {
    out.r_fine_sbs = FineSbsRate(SbsLinkTerms(net, m, a.relay, powers), a.power, a.theta);
    const FineOutcome fine =
        FineTotal(out.r_fine_sbs, out.r_fine_mbs,
                  BackhaulShare(view, a.relay, FlowId::Mue(m)), combiner);
    out.r_backhaul_share = fine.share;
    out.r_fine_total = fine.rate;
    out.branch = fine.branch;
  }
  out.r_total = out.r_coarse + out.r_fine_total;
  return out;
}

}  // namespace bhrelay
