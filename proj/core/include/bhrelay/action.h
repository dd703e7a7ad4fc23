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

#ifndef BHRELAY_ACTION_H_
#define BHRELAY_ACTION_H_

#include <vector>

namespace bhrelay {

inline constexpr int kNoRelay = -1;

// Uplink strategy of one MUE: total transmit power, the fraction of it
// spent on the relayed fine message, and the relaying SBS.
struct Action {
  double power = 0.0;  // W
  double theta = 0.0;  // in [0, 1]
  int relay = kNoRelay;

  bool relays() const { return relay != kNoRelay && theta > 0.0; }
  bool operator==(const Action&) const = default;
};

// One action per MUE, indexed by MUE id.
using Profile = std::vector<Action>;

}  // namespace bhrelay

#endif  // BHRELAY_ACTION_H_
