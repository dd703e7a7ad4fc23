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

// Random network drops for a single sectorized macrocell with underlaid
// small cells, and the subcarrier plan shared by access and backhaul links.

#ifndef BHRELAY_TOPOLOGY_H_
#define BHRELAY_TOPOLOGY_H_

#include <cstdint>
#include <vector>

namespace bhrelay {

struct Point {
  double x = 0.0;
  double y = 0.0;
  bool operator==(const Point&) const = default;
};

// Euclidean distance in meters.
double Distance(Point a, Point b);

enum class Tier { kMbs, kSbs, kMue, kSue };

struct ScenarioConfig {
  double macro_radius = 400.0;      // m
  double small_cell_radius = 50.0;  // m
  int sectors = 3;
  int mues_per_sector = 10;
  int sbss_per_sector = 8;
  int sues_per_sbs = 1;
  // When positive, these totals replace the per-sector counts and are spread
  // over the sectors as evenly as possible (lower sectors take the remainder).
  int mues_total = 0;
  int sbss_total = 0;
  int n_subcarriers = 16;
  int n_mue_subcarriers = 8;  // the rest is backhaul spectrum
  double system_bandwidth = 5e6;  // Hz
  double carrier_freq = 1.85e9;   // Hz; informational, the pathloss law has no f term
  // Nodes (and link distances) are kept at least this far apart, which keeps
  // the log-distance pathloss away from its singularity.
  double min_distance = 10.0;  // m
  double mue_power_dbm = 21.0;
  double sue_power_dbm = 21.0;
  double sbs_power_dbm = 30.0;
  double noise_dbm_per_hz = -174.0;
  double shadowing_db = 10.0;  // log-normal std-dev; 0 disables
  bool fading = true;          // unit-mean exponential power per subcarrier
  std::uint64_t seed = 1;

  // Throws ConfigError on non-positive radii/counts or an impossible split.
  void Validate() const;
  // Strict limits of the reference deployment (<= 30 MUEs, <= 15 SBSs per
  // sector); Validate() does not enforce them.
  bool WithinReferenceLimits() const;

  int n_backhaul_subcarriers() const { return n_subcarriers - n_mue_subcarriers; }
  double subcarrier_bandwidth() const { return system_bandwidth / n_subcarriers; }
  int MuesInSector(int sector) const;
  int SbssInSector(int sector) const;
  int total_mues() const { return mues_total > 0 ? mues_total : sectors * mues_per_sector; }
  int total_sbss() const { return sbss_total > 0 ? sbss_total : sectors * sbss_per_sector; }
  int total_sues() const { return total_sbss() * sues_per_sbs; }
};

// Node positions are stored per tier; the MBS sits at the origin.
struct Topology {
  Point mbs;
  int sectors = 0;
  std::vector<Point> sbs;
  std::vector<Point> mue;
  std::vector<Point> sue;
  std::vector<int> sbs_sector;
  std::vector<int> mue_sector;
  std::vector<int> sue_sector;
  std::vector<int> sue_serving_sbs;

  int num_sbs() const { return static_cast<int>(sbs.size()); }
  int num_mue() const { return static_cast<int>(mue.size()); }
  int num_sue() const { return static_cast<int>(sue.size()); }

  // SBS indices sorted by distance from `p`, nearest first (ties by index).
  std::vector<int> SbssByDistance(Point p) const;

  bool operator==(const Topology&) const = default;
};

// Subcarrier indices are 0-based: [0, n_mue_subcarriers) is the access band
// used by MUEs and SUEs, [n_mue_subcarriers, n_subcarriers) the in-band
// backhaul.
struct SubcarrierAllocation {
  std::vector<std::vector<int>> mue;
  std::vector<std::vector<int>> sue;
  std::vector<std::vector<int>> sbs;

  bool operator==(const SubcarrierAllocation&) const = default;
};

// MUEs and SBSs uniform over their sector (annulus [min_distance, R]); SUEs
// uniform over the disc of their serving SBS. Pure function of (config, seed).
Topology GenerateTopology(const ScenarioConfig& config, std::uint64_t seed);

// Same-sector MUEs get disjoint access subcarriers while there are enough of
// them; beyond that subcarriers are reused round-robin within the sector.
// Sectors reuse the whole access band. Each SUE gets one access subcarrier,
// distinct among the SUEs of one SBS when possible. Backhaul subcarriers are
// spread round-robin over all SBSs of the cell.
SubcarrierAllocation AssignSubcarriers(const Topology& topology,
                                       const ScenarioConfig& config,
                                       std::uint64_t seed);

}  // namespace bhrelay

#endif  // BHRELAY_TOPOLOGY_H_
