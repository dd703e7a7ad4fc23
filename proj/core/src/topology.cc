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

#include "bhrelay/topology.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "bhrelay/error.h"
#include "bhrelay/random.h"

namespace bhrelay {
namespace {

// Uniform point in the annular sector {r_min <= r <= r_max, a0 <= phi < a1}.
Point SampleAnnularSector(Rng& rng, double r_min, double r_max, double a0,
                          double a1) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r =
      std::sqrt(r_min * r_min + unit(rng) * (r_max * r_max - r_min * r_min));
  const double phi = a0 + unit(rng) * (a1 - a0);
  return {r * std::cos(phi), r * std::sin(phi)};
}

std::vector<int> Shuffled(int first, int count, Rng& rng) {
  std::vector<int> v(count);
  std::iota(v.begin(), v.end(), first);
  std::shuffle(v.begin(), v.end(), rng);
  return v;
}

// Spreads `pool` over `users` holders: disjoint slices while pool is large
// enough, round-robin sharing otherwise. Every holder gets >= 1 entry.
std::vector<std::vector<int>> SpreadRoundRobin(const std::vector<int>& pool,
                                               int users) {
  std::vector<std::vector<int>> out(users);
  if (pool.empty()) return out;
  const int n = static_cast<int>(pool.size());
  if (users <= n) {
    for (int i = 0; i < n; ++i) out[i % users].push_back(pool[i]);
  } else {
    for (int u = 0; u < users; ++u) out[u].push_back(pool[u % n]);
  }
  for (auto& set : out) std::sort(set.begin(), set.end());
  return out;
}

int SpreadCount(int total, int per_sector, int sectors, int sector) {
  if (total <= 0) return per_sector;
  return total / sectors + (sector < total % sectors ? 1 : 0);
}

}  // namespace

double Distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

void ScenarioConfig::Validate() const {
  auto fail = [](const std::string& what) {
    throw ConfigError("scenario: " + what);
  };
  if (!(macro_radius > 0.0)) fail("macro_radius must be positive");
  if (!(small_cell_radius > 0.0)) fail("small_cell_radius must be positive");
  if (!(min_distance > 0.0)) fail("min_distance must be positive");
  if (min_distance >= macro_radius) fail("min_distance must be below macro_radius");
  if (sectors <= 0) fail("sectors must be positive");
  if (mues_per_sector < 0 || sbss_per_sector < 0 || sues_per_sbs < 0 || mues_total < 0 ||
      sbss_total < 0)
    fail("node counts must be non-negative");
  if (total_mues() == 0) fail("at least one MUE is required");
  if (n_subcarriers <= 0) fail("n_subcarriers must be positive");
  if (n_mue_subcarriers < 1) fail("n_mue_subcarriers must be >= 1");
  if (n_mue_subcarriers > n_subcarriers)
    fail("n_mue_subcarriers exceeds n_subcarriers");
  if (!(system_bandwidth > 0.0)) fail("system_bandwidth must be positive");
  if (!(shadowing_db >= 0.0)) fail("shadowing_db must be non-negative");
}

bool ScenarioConfig::WithinReferenceLimits() const {
  return MuesInSector(0) <= 30 && SbssInSector(0) <= 15;
}

int ScenarioConfig::MuesInSector(int sector) const {
  return SpreadCount(mues_total, mues_per_sector, sectors, sector);
}

int ScenarioConfig::SbssInSector(int sector) const {
  return SpreadCount(sbss_total, sbss_per_sector, sectors, sector);
}

std::vector<int> Topology::SbssByDistance(Point p) const {
  std::vector<int> idx(sbs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
    return Distance(p, sbs[a]) < Distance(p, sbs[b]);
  });
  return idx;
}

Topology GenerateTopology(const ScenarioConfig& config, std::uint64_t seed) {
  config.Validate();
  Rng rng(DeriveSeed(seed, SeedStream::kTopology));
  Topology topo;
  topo.sectors = config.sectors;
  const double width = 2.0 * std::numbers::pi / config.sectors;
  for (int sec = 0; sec < config.sectors; ++sec) {
    const double a0 = sec * width;
    for (int i = 0; i < config.SbssInSector(sec); ++i) {
      topo.sbs.push_back(SampleAnnularSector(rng, config.min_distance,
                                             config.macro_radius, a0, a0 + width));
      topo.sbs_sector.push_back(sec);
    }
    for (int i = 0; i < config.MuesInSector(sec); ++i) {
      topo.mue.push_back(SampleAnnularSector(rng, config.min_distance,
                                             config.macro_radius, a0, a0 + width));
      topo.mue_sector.push_back(sec);
    }
  }
  for (int s = 0; s < topo.num_sbs(); ++s) {
    for (int k = 0; k < config.sues_per_sbs; ++k) {
      const Point offset = SampleAnnularSector(rng, 0.0, config.small_cell_radius,
                                               0.0, 2.0 * std::numbers::pi);
      topo.sue.push_back({topo.sbs[s].x + offset.x, topo.sbs[s].y + offset.y});
      topo.sue_sector.push_back(topo.sbs_sector[s]);
      topo.sue_serving_sbs.push_back(s);
    }
  }
  return topo;
}

SubcarrierAllocation AssignSubcarriers(const Topology& topology,
                                       const ScenarioConfig& config,
                                       std::uint64_t seed) {
  config.Validate();
  Rng rng(DeriveSeed(seed, SeedStream::kSubcarriers));
  SubcarrierAllocation alloc;
  alloc.mue.resize(topology.num_mue());
  alloc.sue.resize(topology.num_sue());

  const int n_access = config.n_mue_subcarriers;
  for (int sec = 0; sec < topology.sectors; ++sec) {
    std::vector<int> members;
    for (int m = 0; m < topology.num_mue(); ++m)
      if (topology.mue_sector[m] == sec) members.push_back(m);
    const auto sets =
        SpreadRoundRobin(Shuffled(0, n_access, rng), static_cast<int>(members.size()));
    for (std::size_t i = 0; i < members.size(); ++i) alloc.mue[members[i]] = sets[i];
  }

  for (int s = 0; s < topology.num_sbs(); ++s) {
    std::vector<int> members;
    for (int k = 0; k < topology.num_sue(); ++k)
      if (topology.sue_serving_sbs[k] == s) members.push_back(k);
    const std::vector<int> order = Shuffled(0, n_access, rng);
    for (std::size_t i = 0; i < members.size(); ++i)
      alloc.sue[members[i]] = {order[i % order.size()]};
  }

  alloc.sbs = SpreadRoundRobin(
      Shuffled(n_access, config.n_backhaul_subcarriers(), rng), topology.num_sbs());
  return alloc;
}

}  // namespace bhrelay
