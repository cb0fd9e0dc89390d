// Copyright 2026 The Lakecat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lakecat/config.hpp"

#include <cstdlib>
#include <fstream>
#include <set>

#include "lakecat/error.hpp"
#include "lakecat/ingestion/digest.hpp"
#include "lakecat/linker/linker.hpp"
#include "lakecat/profiler/profiler.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace lakecat {

namespace {

template <typename T>
T field(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& ex) {
    throw InvalidArgument(std::string("config key \"") + key + "\": " + ex.what());
  }
}

fs::path resolve(const fs::path& base, const fs::path& p) {
  if (p.empty() || p.is_absolute() || base.empty()) return p;
  return base / p;
}

std::map<std::string, double, std::less<>> number_map(const json& j, const char* key) {
  if (!j.is_object()) throw InvalidArgument(std::string("config key \"") + key + "\" must be an object");
  std::map<std::string, double, std::less<>> out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number()) throw InvalidArgument(std::string("config key \"") + key + "." + k + "\" must be a number");
    out[k] = v.get<double>();
  }
  return out;
}

}  // namespace

Config Config::defaults() {
  Config c;
  for (const auto& [k, v] : linker::default_dataset_thresholds()) c.dataset_thresholds[k] = v;
  for (const auto& [k, v] : profiler::default_attribute_thresholds()) c.attribute_thresholds[k] = v;
  c.sensitivity_levels = enrichment::default_sensitivity_levels();
  return c;
}

Config Config::from_json(const json& j, const fs::path& base) {
  if (!j.is_object()) throw InvalidArgument("config must be a JSON object");
  static const std::set<std::string> known{
      "store", "rawZone", "host", "port", "seed", "minhashK", "thresholds", "users", "credibility",
      "defaultCredibility", "veracityWeights", "sensitivityLevels", "uiDir", "sourceCodeUrl"};
  for (const auto& [k, v] : j.items()) {
    if (!known.contains(k)) throw InvalidArgument("unknown config key \"" + k + "\"");
  }
  Config c = defaults();
  if (j.contains("store")) c.store = resolve(base, field<std::string>(j, "store"));
  if (j.contains("rawZone")) c.raw_zone = resolve(base, field<std::string>(j, "rawZone"));
  if (j.contains("uiDir")) c.ui_dir = resolve(base, field<std::string>(j, "uiDir"));
  if (j.contains("host")) c.host = field<std::string>(j, "host");
  if (j.contains("port")) c.port = field<int>(j, "port");
  if (j.contains("seed")) c.seed = field<std::uint64_t>(j, "seed");
  if (j.contains("minhashK")) c.minhash_k = field<std::size_t>(j, "minhashK");
  if (j.contains("sourceCodeUrl")) c.source_code_url = field<std::string>(j, "sourceCodeUrl");
  if (j.contains("defaultCredibility")) c.default_credibility = field<double>(j, "defaultCredibility");
  if (j.contains("thresholds")) {
    const json& t = j["thresholds"];
    if (!t.is_object()) throw InvalidArgument("config key \"thresholds\" must be an object");
    for (const auto& [k, v] : t.items()) {
      if (k == "dataset") {
        for (const auto& [name, x] : number_map(v, "thresholds.dataset")) c.dataset_thresholds[name] = x;
      } else if (k == "attribute") {
        for (const auto& [name, x] : number_map(v, "thresholds.attribute")) c.attribute_thresholds[name] = x;
      } else {
        throw InvalidArgument("unknown thresholds group \"" + k + "\"");
      }
    }
  }
  if (j.contains("users")) {
    const json& u = j["users"];
    if (!u.is_object()) throw InvalidArgument("config key \"users\" must map names to clearances");
    for (const auto& [name, v] : u.items()) {
      if (!v.is_number_integer()) throw InvalidArgument("clearance of " + name + " must be an integer");
      c.users[name] = v.get<int>();
    }
  }
  if (j.contains("credibility")) c.credibility = number_map(j["credibility"], "credibility");
  if (j.contains("veracityWeights")) {
    const auto w = number_map(j["veracityWeights"], "veracityWeights");
    for (const auto& [k, v] : w) {
      if (k == "objectivity") {
        c.veracity_weights.objectivity = v;
      } else if (k == "truthfulness") {
        c.veracity_weights.truthfulness = v;
      } else if (k == "credibility") {
        c.veracity_weights.credibility = v;
      } else {
        throw InvalidArgument("unknown veracity weight \"" + k + "\"");
      }
    }
  }
  if (j.contains("sensitivityLevels")) {
    const json& levels = j["sensitivityLevels"];
    if (!levels.is_array()) throw InvalidArgument("config key \"sensitivityLevels\" must be an array");
    c.sensitivity_levels.clear();
    for (const auto& l : levels) {
      c.sensitivity_levels.push_back({field<int>(l, "level"), field<std::string>(l, "label")});
    }
  }
  c.validate();
  return c;
}

Config Config::load(const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw InvalidArgument("cannot read config " + file.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw InvalidArgument("config " + file.string() + " is not valid JSON");
  return from_json(j, file.parent_path());
}

void Config::apply_env() {
  if (const char* s = std::getenv("LAKECAT_STORE"); s && *s) store = s;
  if (const char* s = std::getenv("LAKECAT_RAW"); s && *s) raw_zone = s;
  if (const char* s = std::getenv("LAKECAT_PORT"); s && *s) {
    try {
      port = std::stoi(s);
    } catch (const std::exception&) {
      throw InvalidArgument(std::string("LAKECAT_PORT is not a number: ") + s);
    }
  }
  validate();
}

void Config::validate() const {
  if (port < 0 || port > 65535) throw InvalidArgument("port out of range");
  if (minhash_k == 0) throw InvalidArgument("minhashK must be positive");
  if (!(default_credibility >= 0.0 && default_credibility <= 1.0)) {
    throw InvalidArgument("defaultCredibility must lie in [0, 1]");
  }
  for (const auto& [k, v] : credibility) {
    if (!(v >= 0.0 && v <= 1.0)) throw InvalidArgument("credibility of " + k + " must lie in [0, 1]");
  }
  for (const auto* group : {&dataset_thresholds, &attribute_thresholds}) {
    for (const auto& [k, v] : *group) {
      if (!(v >= 0.0 && v <= 1.0)) throw InvalidArgument("threshold " + k + " must lie in [0, 1]");
    }
  }
  for (const auto& [name, level] : users) {
    if (level < 0) throw InvalidArgument("clearance of " + name + " must be >= 0");
  }
  veracity_weights.validate();
}

json Config::to_json() const {
  json levels = json::array();
  for (const auto& l : sensitivity_levels) levels.push_back({{"level", l.level}, {"label", l.label}});
  return {{"store", store.string()},
          {"rawZone", raw_zone.string()},
          {"host", host},
          {"port", port},
          {"seed", seed},
          {"minhashK", minhash_k},
          {"thresholds", {{"dataset", dataset_thresholds}, {"attribute", attribute_thresholds}}},
          {"users", users},
          {"credibility", credibility},
          {"defaultCredibility", default_credibility},
          {"veracityWeights",
           {{"objectivity", veracity_weights.objectivity},
            {"truthfulness", veracity_weights.truthfulness},
            {"credibility", veracity_weights.credibility}}},
          {"sensitivityLevels", levels},
          {"uiDir", ui_dir.string()},
          {"sourceCodeUrl", source_code_url}};
}

std::string Config::hash() const { return ingestion::sha256_hex(to_json().dump()); }

}  // namespace lakecat
