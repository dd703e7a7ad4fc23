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

#include "bhrelay/backhaul.h"

#include <algorithm>
#include <numeric>
#include <utility>

#include "bhrelay/error.h"

namespace bhrelay {
namespace {

const FlowShare* Find(const std::vector<FlowShare>& row, FlowId flow) {
  for (const FlowShare& fs : row)
    if (fs.flow == flow) return &fs;
  return nullptr;
}

std::string Describe(int s, FlowId flow) {
  return std::string(flow.kind == FlowId::Kind::kMue ? "mue " : "sue ") +
         std::to_string(flow.index) + " at sbs " + std::to_string(s);
}

}  // namespace

BackhaulMode ParseBackhaulMode(const std::string& name) {
  if (name == "ota") return BackhaulMode::kOta;
  if (name == "wrd" || name == "wired") return BackhaulMode::kWired;
  if (name == "hyb" || name == "hybrid") return BackhaulMode::kHybrid;
  throw ConfigError("unknown backhaul mode '" + name + "' (ota|wrd|hyb)");
}

std::string ToString(BackhaulMode mode) {
  switch (mode) {
    case BackhaulMode::kOta: return "ota";
    case BackhaulMode::kWired: return "wrd";
    case BackhaulMode::kHybrid: return "hyb";
  }
  return "?";
}

WiredPolicy ParseWiredPolicy(const std::string& name) {
  if (name == "equal") return WiredPolicy::kEqual;
  if (name == "proportional" || name == "proportional-load")
    return WiredPolicy::kProportionalLoad;
  throw ConfigError("unknown wired policy '" + name + "' (equal|proportional)");
}

std::string ToString(WiredPolicy policy) {
  return policy == WiredPolicy::kEqual ? "equal" : "proportional";
}

std::vector<double> AllocateWiredCapacity(int n_sbs, double c_bar, WiredPolicy policy,
                                          const std::vector<int>& loads) {
  if (!(c_bar > 0.0)) throw ConfigError("wired backhaul: C_bar must be positive");
  if (n_sbs <= 0) return {};
  std::vector<double> out(n_sbs, c_bar / n_sbs);
  if (policy == WiredPolicy::kProportionalLoad) {
    if (static_cast<int>(loads.size()) != n_sbs)
      throw ConfigError("wired backhaul: one load per SBS required");
    const long total = std::accumulate(loads.begin(), loads.end(), 0L);
    if (total > 0) {
      for (int s = 0; s < n_sbs; ++s) out[s] = c_bar * loads[s] / static_cast<double>(total);
    }
  }
  return out;
}

std::vector<FlowShare> AllocateNu(const std::vector<FlowId>& flows) {
  std::vector<FlowShare> row;
  row.reserve(flows.size());
  for (FlowId f : flows) row.push_back({f, 1.0 / static_cast<double>(flows.size())});
  return row;
}

BackhaulView MakeBackhaulView(BackhaulMode mode, double c_bar, WiredPolicy policy,
                              std::vector<double> ota_rate,
                              const std::vector<std::vector<FlowId>>& relayed_mues,
                              const std::vector<std::vector<FlowId>>& attached_sues) {
  const int n_sbs = static_cast<int>(ota_rate.size());
  if (static_cast<int>(relayed_mues.size()) != n_sbs ||
      static_cast<int>(attached_sues.size()) != n_sbs)
    throw ConfigError("backhaul view: per-SBS inputs disagree in size");
  BackhaulView view;
  view.mode = mode;
  view.c_bar = c_bar;
  view.ota_rate = std::move(ota_rate);
  std::vector<int> loads(n_sbs);
  view.ota_nu.resize(n_sbs);
  view.wired_nu.resize(n_sbs);
  for (int s = 0; s < n_sbs; ++s) {
    std::vector<FlowId> wired = relayed_mues[s];
    wired.insert(wired.end(), attached_sues[s].begin(), attached_sues[s].end());
    loads[s] = static_cast<int>(wired.size());
    view.ota_nu[s] = AllocateNu(relayed_mues[s]);
    view.wired_nu[s] = AllocateNu(wired);
  }
  view.wired_capacity = AllocateWiredCapacity(n_sbs, c_bar, policy, loads);
  return view;
}

double BackhaulShares::Effective() const {
  return std::max(ota.value_or(0.0), wired.value_or(0.0));
}

BackhaulShares BackhaulShare(const BackhaulView& view, int s, FlowId flow) {
  if (s < 0 || s >= view.num_sbs())
    throw LookupError("backhaul: no sbs " + std::to_string(s));
  BackhaulShares out;
  if (view.mode != BackhaulMode::kWired) {
    const FlowShare* fs = Find(view.ota_nu[s], flow);
    if (fs == nullptr) throw LookupError("backhaul: unregistered " + Describe(s, flow));
    out.ota = fs->nu * view.ota_rate[s];
  }
  if (view.mode != BackhaulMode::kOta) out.wired = WiredShare(view, s, flow);
  return out;
}

double WiredShare(const BackhaulView& view, int s, FlowId flow) {
  if (s < 0 || s >= view.num_sbs())
    throw LookupError("backhaul: no sbs " + std::to_string(s));
  const FlowShare* fs = Find(view.wired_nu[s], flow);
  if (fs == nullptr) throw LookupError("backhaul: unregistered " + Describe(s, flow));
  return fs->nu * view.wired_capacity[s];
}

}  // namespace bhrelay
