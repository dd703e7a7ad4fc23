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

// Experiment configuration files and result persistence.
//
// Config files are flat "key = value" text with optional [section] headers;
// a key inside [learning] is addressed as learning.<key>. '#' and ';' start
// comments. The same dotted keys are accepted by ApplySetting.

#ifndef BHRELAY_IO_H_
#define BHRELAY_IO_H_

#include <istream>
#include <string>
#include <vector>

#include "bhrelay/game.h"
#include "bhrelay/harness.h"

namespace bhrelay {

// Throws ConfigError for unknown keys or malformed values.
void ApplySetting(ExperimentConfig& config, const std::string& key, const std::string& value);

// All keys ApplySetting understands, sorted.
std::vector<std::string> SettingKeys();

ExperimentConfig ParseConfig(std::istream& in, ExperimentConfig base = {},
                             const std::string& origin = "<config>");
// Throws IoError if the file cannot be read.
ExperimentConfig LoadConfig(const std::string& path, ExperimentConfig base = {});

// JSON with a schema_version field. Doubles keep full precision; infinite
// delays are written as null.
std::string ToJson(const RunResult& result, int indent = 2);
RunResult RunResultFromJson(const std::string& text);

// One row per (drop, MUE) with a fixed header.
std::string ToCsv(const RunResult& result);
inline constexpr const char* kCsvHeader =
    "drop,mue,distance_m,rate_bps,delay_s,utility,power_w,theta,relay";

// Write/read whole files; IoError carries the path.
void WriteTextFile(const std::string& path, const std::string& text);
std::string ReadTextFile(const std::string& path);

// {"num_actions": [...], "utilities": [[...], ...], "distribution": [...]}
// where "distribution" is optional.
struct GameFile {
  NormalFormGame game;
  std::vector<double> distribution;
};
GameFile GameFileFromJson(const std::string& text);

}  // namespace bhrelay

#endif  // BHRELAY_IO_H_
