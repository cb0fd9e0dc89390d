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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lakecat::profiler {

enum class DatasetType { structured, semi_structured, unstructured };

std::string_view to_string(DatasetType t) noexcept;
std::optional<DatasetType> parse_dataset_type(std::string_view text) noexcept;

/// One attribute's cells; nullopt marks a null token or a missing value.
struct Column {
  std::string name;
  std::vector<std::optional<std::string>> cells;
};

struct EntityTable {
  std::string name;
  std::vector<Column> columns;
  std::size_t row_count = 0;
};

std::string_view trim(std::string_view s) noexcept;

/// "", "na", "nan", "null" after trimming, case-insensitive.
bool is_null_token(std::string_view cell) noexcept;

/// Finite decimal spanning the whole trimmed cell.
std::optional<double> parse_decimal(std::string_view cell) noexcept;

/// A column is numeric iff every non-null cell parses as a decimal. An
/// all-null column is therefore numeric.
bool is_numeric(const Column& c);

std::vector<std::optional<double>> numeric_values(const Column& c);

/// Directory: structured iff it holds a manifest.json, else unstructured.
/// File: well-formed JSON object/array or markup -> semi-structured; a
/// consistent delimited table -> structured; anything else -> unstructured.
/// Throws StorageError when the path cannot be read.
DatasetType detect_dataset_type(const std::filesystem::path& path);

/// Entities of a structured or semi-structured dataset.
///  - single delimited file: one entity named `dataset_name`
///  - directory: one entity per table listed in manifest.json
///  - JSON: each top-level array of objects (a root array takes
///    `dataset_name`); nested keys flattened with '.' to depth 3
///  - markup: children of the root grouped by tag; attributes become "@name"
/// Throws InvalidArgument on malformed content, NotApplicable for
/// unstructured data.
std::vector<EntityTable> load_entities(const std::filesystem::path& path, DatasetType type,
                                       std::string_view dataset_name);

}  // namespace lakecat::profiler
