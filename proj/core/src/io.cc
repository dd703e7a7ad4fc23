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

#include "bhrelay/io.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include "bhrelay/error.h"
#include "json.hpp"

namespace bhrelay {
namespace {

using json = nlohmann::json;
using Setter = std::function<void(ExperimentConfig&, const std::string&)>;

std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double ToDouble(const std::string& v) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw ConfigError("not a number: '" + v + "'");
  return out;
}

long long ToInteger(const std::string& v) {
  long long out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw ConfigError("not an integer: '" + v + "'");
  return out;
}

int ToInt(const std::string& v) {
  const long long x = ToInteger(v);
  if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
    throw ConfigError("integer out of range: '" + v + "'");
  return static_cast<int>(x);
}

std::uint64_t ToU64(const std::string& v) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw ConfigError("not an unsigned integer: '" + v + "'");
  return out;
}

bool ToBool(const std::string& v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError("not a boolean: '" + v + "'");
}

#define BHRELAY_FIELD(key, field, conv) \
  {key, [](ExperimentConfig& c, const std::string& v) { c.field = conv(v); }}

const std::map<std::string, Setter>& Setters() {
  static const std::map<std::string, Setter> setters = {
      BHRELAY_FIELD("scenario.macro_radius", scenario.macro_radius, ToDouble),
      BHRELAY_FIELD("scenario.small_cell_radius", scenario.small_cell_radius, ToDouble),
      BHRELAY_FIELD("scenario.sectors", scenario.sectors, ToInt),
      BHRELAY_FIELD("scenario.mues_per_sector", scenario.mues_per_sector, ToInt),
      BHRELAY_FIELD("scenario.sbss_per_sector", scenario.sbss_per_sector, ToInt),
      BHRELAY_FIELD("scenario.mues_total", scenario.mues_total, ToInt),
      BHRELAY_FIELD("scenario.sbss_total", scenario.sbss_total, ToInt),
      BHRELAY_FIELD("scenario.sues_per_sbs", scenario.sues_per_sbs, ToInt),
      BHRELAY_FIELD("scenario.n_subcarriers", scenario.n_subcarriers, ToInt),
      BHRELAY_FIELD("scenario.n_mue_subcarriers", scenario.n_mue_subcarriers, ToInt),
      {"scenario.n_backhaul_subcarriers",
       [](ExperimentConfig& c, const std::string& v) {
         c.scenario.n_subcarriers = c.scenario.n_mue_subcarriers + ToInt(v);
       }},
      BHRELAY_FIELD("scenario.system_bandwidth", scenario.system_bandwidth, ToDouble),
      BHRELAY_FIELD("scenario.carrier_freq", scenario.carrier_freq, ToDouble),
      BHRELAY_FIELD("scenario.min_distance", scenario.min_distance, ToDouble),
      BHRELAY_FIELD("scenario.mue_power_dbm", scenario.mue_power_dbm, ToDouble),
      BHRELAY_FIELD("scenario.sue_power_dbm", scenario.sue_power_dbm, ToDouble),
      BHRELAY_FIELD("scenario.sbs_power_dbm", scenario.sbs_power_dbm, ToDouble),
      BHRELAY_FIELD("scenario.noise_dbm_per_hz", scenario.noise_dbm_per_hz, ToDouble),
      BHRELAY_FIELD("scenario.shadowing_db", scenario.shadowing_db, ToDouble),
      BHRELAY_FIELD("scenario.fading", scenario.fading, ToBool),
      BHRELAY_FIELD("scenario.seed", scenario.seed, ToU64),
      BHRELAY_FIELD("experiment.seed", scenario.seed, ToU64),
      BHRELAY_FIELD("backhaul.mode", game.mode, ParseBackhaulMode),
      BHRELAY_FIELD("backhaul.c_bar", game.c_bar, ToDouble),
      BHRELAY_FIELD("backhaul.wired_policy", game.wired_policy, ParseWiredPolicy),
      BHRELAY_FIELD("backhaul.combiner", game.combiner, ParseCombinerMode),
      BHRELAY_FIELD("game.rho", game.rho, ToDouble),
      BHRELAY_FIELD("game.alpha", game.utility.alpha, ToDouble),
      BHRELAY_FIELD("game.unstable_utility", game.utility.unstable_utility, ToDouble),
      BHRELAY_FIELD("game.rate_unit", game.utility.rate_unit, ToDouble),
      BHRELAY_FIELD("game.power_levels", grid.power_levels, ToInt),
      BHRELAY_FIELD("game.theta_levels", grid.theta_levels, ToInt),
      BHRELAY_FIELD("game.relay_candidates", grid.relay_candidates, ToInt),
      BHRELAY_FIELD("learning.kappa", learning.kappa, ToDouble),
      BHRELAY_FIELD("learning.lambda_exponent", learning.schedules.lambda.exponent, ToDouble),
      BHRELAY_FIELD("learning.gamma_exponent", learning.schedules.gamma.exponent, ToDouble),
      BHRELAY_FIELD("learning.mu_exponent", learning.schedules.mu.exponent, ToDouble),
      BHRELAY_FIELD("learning.lambda_scale", learning.schedules.lambda.scale, ToDouble),
      BHRELAY_FIELD("learning.gamma_scale", learning.schedules.gamma.scale, ToDouble),
      BHRELAY_FIELD("learning.mu_scale", learning.schedules.mu.scale, ToDouble),
      BHRELAY_FIELD("learning.feedback_sigma", learning.feedback_sigma, ToDouble),
      BHRELAY_FIELD("learning.played_only_regret", learning.played_only_regret, ToBool),
      BHRELAY_FIELD("learning.sat_threshold", learning.sat_threshold, ToDouble),
      BHRELAY_FIELD("learning.window", learning.window, ToInt),
      BHRELAY_FIELD("learning.tolerance", learning.tolerance, ToDouble),
      BHRELAY_FIELD("learning.min_iterations", learning.min_iterations, ToInteger),
      BHRELAY_FIELD("offload.vacate_macro", offload_vacate, ToBool),
      BHRELAY_FIELD("offload.max_rounds", offload_max_rounds, ToInt),
      BHRELAY_FIELD("experiment.algorithm", algorithm, ParseAlgorithm),
      BHRELAY_FIELD("experiment.drops", drops, ToInt),
      BHRELAY_FIELD("experiment.iterations", iterations, ToInt),
      BHRELAY_FIELD("experiment.threads", threads, ToInt),
      BHRELAY_FIELD("experiment.out", out, std::string),
  };
  return setters;
}

#undef BHRELAY_FIELD

json NumberOrNull(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

double NumberOrInf(const json& j) {
  return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

std::string FormatDouble(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

}  // namespace

void ApplySetting(ExperimentConfig& config, const std::string& key, const std::string& value) {
  const auto& setters = Setters();
  const auto it = setters.find(key);
  if (it == setters.end()) throw ConfigError("unknown config key '" + key + "'");
  try {
    it->second(config, Trim(value));
  } catch (const ConfigError& e) {
    throw ConfigError(key + ": " + e.what());
  }
}

std::vector<std::string> SettingKeys() {
  std::vector<std::string> keys;
  for (const auto& [key, setter] : Setters()) keys.push_back(key);
  return keys;
}

ExperimentConfig ParseConfig(std::istream& in, ExperimentConfig base,
                             const std::string& origin) {
  std::string line, section;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto comment = line.find_first_of("#;");
    if (comment != std::string::npos) line.erase(comment);
    line = Trim(line);
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(number);
    if (line.front() == '[') {
      if (line.back() != ']') throw ConfigError(where + ": unterminated section header");
      section = Trim(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
    std::string key = Trim(line.substr(0, eq));
    if (!section.empty()) key = section + "." + key;
    try {
      ApplySetting(base, key, line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  return base;
}

ExperimentConfig LoadConfig(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path + "'");
  return ParseConfig(in, std::move(base), path);
}

std::string ToJson(const RunResult& result, int indent) {
  json j;
  j["schema_version"] = RunResult::kSchemaVersion;
  j["algorithm"] = result.algorithm;
  j["backhaul"] = result.backhaul;
  j["seed"] = result.seed;
  j["iterations"] = result.iterations;
  j["failures"] = result.failures;
  j["summary"] = {
      {"mean_rate", result.summary.mean_rate},
      {"mean_delay", result.summary.mean_delay},
      {"mean_utility", result.summary.mean_utility},
      {"unstable_fraction", result.summary.unstable_fraction},
      {"converged_drops", result.summary.converged_drops},
  };
  j["trace"] = {{"mean_utility", result.trace.mean_utility},
                {"pi_change", result.trace.pi_change}};
  json drops = json::array();
  for (const DropResult& d : result.drops) {
    json mues = json::array();
    for (const MueRecord& r : d.mues) {
      mues.push_back({{"drop", r.drop},
                      {"mue", r.mue},
                      {"distance", r.distance},
                      {"rate", r.rate},
                      {"delay", NumberOrNull(r.delay)},
                      {"utility", r.utility},
                      {"power", r.power},
                      {"theta", r.theta},
                      {"relay", r.relay}});
    }
    drops.push_back({{"drop", d.drop},
                     {"seed", d.seed},
                     {"ok", d.ok},
                     {"error", d.error},
                     {"mean_rate", d.mean_rate},
                     {"converged_at", d.converged_at},
                     {"settled_at", d.settled_at},
                     {"mues", std::move(mues)}});
  }
  j["drops"] = std::move(drops);
  return j.dump(indent) + "\n";
}

RunResult RunResultFromJson(const std::string& text) {
  try {
    const json j = json::parse(text);
    const int version = j.at("schema_version").get<int>();
    if (version != RunResult::kSchemaVersion)
      throw ConfigError("unsupported schema_version " + std::to_string(version));
    RunResult r;
    r.algorithm = j.at("algorithm").get<std::string>();
    r.backhaul = j.at("backhaul").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.iterations = j.at("iterations").get<int>();
    r.failures = j.at("failures").get<int>();
    const json& s = j.at("summary");
    r.summary.mean_rate = s.at("mean_rate").get<double>();
    r.summary.mean_delay = s.at("mean_delay").get<double>();
    r.summary.mean_utility = s.at("mean_utility").get<double>();
    r.summary.unstable_fraction = s.at("unstable_fraction").get<double>();
    r.summary.converged_drops = s.at("converged_drops").get<int>();
    r.trace.mean_utility = j.at("trace").at("mean_utility").get<std::vector<double>>();
    r.trace.pi_change = j.at("trace").at("pi_change").get<std::vector<double>>();
    for (const json& jd : j.at("drops")) {
      DropResult d;
      d.drop = jd.at("drop").get<int>();
      d.seed = jd.at("seed").get<std::uint64_t>();
      d.ok = jd.at("ok").get<bool>();
      d.error = jd.at("error").get<std::string>();
      d.mean_rate = jd.at("mean_rate").get<double>();
      d.converged_at = jd.at("converged_at").get<std::int64_t>();
      d.settled_at = jd.at("settled_at").get<std::int64_t>();
      for (const json& jm : jd.at("mues")) {
        MueRecord m;
        m.drop = jm.at("drop").get<int>();
        m.mue = jm.at("mue").get<int>();
        m.distance = jm.at("distance").get<double>();
        m.rate = jm.at("rate").get<double>();
        m.delay = NumberOrInf(jm.at("delay"));
        m.utility = jm.at("utility").get<double>();
        m.power = jm.at("power").get<double>();
        m.theta = jm.at("theta").get<double>();
        m.relay = jm.at("relay").get<int>();
        d.mues.push_back(m);
      }
      r.drops.push_back(std::move(d));
    }
    return r;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed result json: ") + e.what());
  }
}

std::string ToCsv(const RunResult& result) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const MueRecord& r : result.Records()) {
    out << r.drop << ',' << r.mue << ',' << FormatDouble(r.distance) << ','
        << FormatDouble(r.rate) << ',' << FormatDouble(r.delay) << ','
        << FormatDouble(r.utility) << ',' << FormatDouble(r.power) << ','
        << FormatDouble(r.theta) << ',' << r.relay << '\n';
  }
  return out.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write failed for '" + path + "'");
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

GameFile GameFileFromJson(const std::string& text) {
  try {
    const json j = json::parse(text);
    GameFile g;
    g.game.num_actions = j.at("num_actions").get<std::vector<int>>();
    g.game.utilities = j.at("utilities").get<std::vector<std::vector<double>>>();
    if (j.contains("distribution"))
      g.distribution = j.at("distribution").get<std::vector<double>>();
    g.game.Validate();
    return g;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed game json: ") + e.what());
  }
}

}  // namespace bhrelay
