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

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lakecat/ingestion/source.hpp"

namespace lakecat::ingestion {

/// Immutable landing area for ingested bytes:
///
///   <root>/<dataset-key>/v<version>/data.<ext>    single-file payload
///   <root>/<dataset-key>/v<version>/data/...      directory payload
///   <root>/<dataset-key>/v<version>/manifest      JSON: contentHash, sizeBytes,
///                                                 sourceLocation, ingestId
///
/// A version directory is written once; storing into an existing one fails.
class RawZone {
 public:
  explicit RawZone(std::filesystem::path root);

  const std::filesystem::path& root() const noexcept { return root_; }

  /// Path of the stored data relative to root(), e.g. "k/v2/data.csv".
  static std::string data_path(std::string_view key, int version, const Payload& payload);

  /// Writes the payload and returns data_path(). Throws StorageError on any
  /// filesystem failure, leaving no partial version behind.
  std::string store(std::string_view key, int version, const Payload& payload);

  void write_manifest(std::string_view key, int version, const nlohmann::json& manifest);

  std::filesystem::path resolve(std::string_view relative) const;

 private:
  std::filesystem::path root_;
};

}  // namespace lakecat::ingestion
