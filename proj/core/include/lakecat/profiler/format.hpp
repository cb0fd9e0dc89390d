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
#include <optional>
#include <string>
#include <string_view>

namespace lakecat::profiler {

/// Media type from leading bytes, or nullopt when no signature matches.
std::optional<std::string> sniff_media_type(std::string_view head);

/// Media type for an extension without the dot ("jpg", "csv", ...).
std::string media_type_for_extension(std::string_view ext);

/// Magic bytes first, extension second. A directory reports the media type
/// shared by all its files, or "multipart/mixed". Throws StorageError when
/// the path cannot be read.
std::string get_dataset_format(const std::filesystem::path& path);

}  // namespace lakecat::profiler
