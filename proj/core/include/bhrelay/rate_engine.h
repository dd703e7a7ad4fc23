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

// Achievable uplink rates (bits/s) for the classical two-tier uplink and for
// rate splitting with decode-and-forward relaying over OTA, wired or hybrid
// backhaul.
//
// Two layers: the profile-level functions (RateCoarse, RateTotal, ...) take
// a whole action profile; they are built on kernels over LinkTerms, which
// hold everything about one MUE's links that does not depend on that MUE's
// own action. The game evaluator uses the kernels directly to price many
// candidate actions against a fixed opponent profile.

#ifndef BHRELAY_RATE_ENGINE_H_
#define BHRELAY_RATE_ENGINE_H_

#include <span>
#include <string>
#include <vector>

#include "bhrelay/action.h"
#include "bhrelay/backhaul.h"
#include "bhrelay/network.h"

namespace bhrelay {

struct SinrTerm {
  double signal = 0.0;        // W
  double interference = 0.0;  // W
};

// sum_n W_sc log2(1 + S_n / (noise + I_n)). Throws DomainError on negative
// powers.
double SpectralRate(std::span<const SinrTerm> terms, double noise_power,
                    double subcarrier_bandwidth);

// Total transmit power per MUE, as used by interference sums.
std::vector<double> MuePowers(const Profile& profile);

// Co-channel interference on subcarrier n at the MBS / at SBS s from every
// MUE other than `exclude_mue` (at `mue_power`) and every SUE on n.
double MbsInterference(const Network& net, int n, int exclude_mue,
                       std::span<const double> mue_power);
double SbsInterference(const Network& net, int s, int n, int exclude_mue,
                       std::span<const double> mue_power);

// Gains and foreign interference on the subcarriers of one MUE towards one
// receiver.
struct LinkTerms {
  double noise = 0.0;
  double bandwidth = 0.0;
  std::vector<double> gain;
  std::vector<double> interference;

  int size() const { return static_cast<int>(gain.size()); }
};

LinkTerms MbsLinkTerms(const Network& net, int m, std::span<const double> mue_power);
LinkTerms SbsLinkTerms(const Network& net, int m, int s,
                       std::span<const double> mue_power);

// Kernels; `power` is the MUE's total power, split evenly over its
// subcarriers.
double ClassicalRate(const LinkTerms& mbs, double power);
double CoarseRate(const LinkTerms& mbs, double power, double theta);
double FineMbsRate(const LinkTerms& mbs, double power, double theta);
// The MUE's own coarse signal is part of the SBS-side interference.
double FineSbsRate(const LinkTerms& sbs, double power, double theta);

enum class CombinerMode { kIdentity, kAddDirect };
CombinerMode ParseCombinerMode(const std::string& name);  // identity|add-direct
std::string ToString(CombinerMode mode);

// Joint combining at the MBS: identity -> relayed; add-direct -> relayed +
// direct_fine / 2.
double CombineFine(double relayed, double direct_fine, CombinerMode mode);

enum class BackhaulBranch { kNone, kOta, kWired };

struct FineOutcome {
  double rate = 0.0;   // R_{m,F}
  double share = 0.0;  // backhaul share on the chosen branch
  BackhaulBranch branch = BackhaulBranch::kNone;
};

// g(min(fine_sbs, share) / 2) on every available branch; the hybrid keeps
// the larger rate (ties go to the larger share).
FineOutcome FineTotal(double fine_sbs, double direct_fine,
                      const BackhaulShares& shares, CombinerMode combiner);

struct RateBreakdown {
  double r_coarse = 0.0;
  double r_fine_mbs = 0.0;
  double r_fine_sbs = 0.0;
  double r_backhaul_share = 0.0;
  double r_fine_total = 0.0;
  double r_total = 0.0;
  BackhaulBranch branch = BackhaulBranch::kNone;
};

// Profile-level rates.
double RateClaMue(const Network& net, const Profile& profile, int m);
double RateClaSue(const Network& net, const Profile& profile, int k,
                  double backhaul_share);
double RateBackhaulOta(const Network& net, int s);
std::vector<double> BackhaulOtaRates(const Network& net);
double RateCoarse(const Network& net, const Profile& profile, int m);
double RateFineMbs(const Network& net, const Profile& profile, int m);
double RateFineSbs(const Network& net, const Profile& profile, int m, int s);
// Zero when the MUE does not relay (theta = 0 or no SBS).
double RateFineTotal(const Network& net, const Profile& profile, int m,
                     const BackhaulView& view, CombinerMode combiner);
RateBreakdown RateTotal(const Network& net, const Profile& profile, int m,
                        const BackhaulView& view, CombinerMode combiner);

}  // namespace bhrelay

#endif  // BHRELAY_RATE_ENGINE_H_
