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

#ifndef BHRELAY_RANDOM_H_
#define BHRELAY_RANDOM_H_

#include <cstdint>
#include <random>

namespace bhrelay {

using Rng = std::mt19937_64;

// Counter-based seed derivation (splitmix64 finalizer). Streams derived from
// the same master seed with different (stream, index) pairs are independent
// of each other and of the order in which they are requested.
inline std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t stream,
                                std::uint64_t index = 0) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (stream + 1) +
                    0xbf58476d1ce4e5b9ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Named streams so that components never share generator state.
enum class SeedStream : std::uint64_t {
  kDrop = 1,
  kTopology = 2,
  kSubcarriers = 3,
  kChannel = 4,
  kLearning = 5,
  kFeedback = 6,
};

inline std::uint64_t DeriveSeed(std::uint64_t master, SeedStream stream,
                                std::uint64_t index = 0) {
  return DeriveSeed(master, static_cast<std::uint64_t>(stream), index);
}

}  // namespace bhrelay

#endif  // BHRELAY_RANDOM_H_
