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

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lakecat/enrichment/enrichment.hpp"
#include "lakecat/users.hpp"

namespace lakecat {

/// Runtime configuration. Loaded from a JSON file whose keys mirror the
/// field names below (camelCase); relative paths resolve against the file's
/// directory. LAKECAT_STORE, LAKECAT_RAW and LAKECAT_PORT override the file.
struct Config {
  std::filesystem::path store = "lake/graph";
  std::filesystem::path raw_zone = "lake/raw";
  std::string host = "127.0.0.1";
  int port = 8080;
  std::uint64_t seed = 42;
  std::size_t minhash_k = 128;
  std::map<std::string, double, std::less<>> dataset_thresholds;    // thresholds.dataset
  std::map<std::string, double, std::less<>> attribute_thresholds;  // thresholds.attribute
  Clearances users;
  std::map<std::string, double, std::less<>> credibility;
  double default_credibility = 0.5;
  enrichment::VeracityWeights veracity_weights;
  std::vector<enrichment::SensitivityLevelDef> sensitivity_levels;
  std::filesystem::path ui_dir = "webapp/dist";
  std::string source_code_url = "urn:lakecat:ingestor";

  static Config defaults();
  /// Throws InvalidArgument on unknown keys or ill-typed values.
  static Config from_json(const nlohmann::json& j,
                          const std::filesystem::path& base = std::filesystem::path());
  static Config load(const std::filesystem::path& file);

  void apply_env();
  /// Throws InvalidArgument on out-of-range settings.
  void validate() const;

  nlohmann::json to_json() const;
  /// SHA-256 of the canonical JSON form; recorded on every Ingest.
  std::string hash() const;
};

}  // namespace lakecat
