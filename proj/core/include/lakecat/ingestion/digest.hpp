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

#include <string>
#include <string_view>

#include "lakecat/ingestion/source.hpp"

namespace lakecat::ingestion {

/// Lower-case hex SHA-256.
std::string sha256_hex(std::string_view bytes);

/// contentHash of a payload. A single file hashes its bytes directly, so the
/// value matches `sha256sum`. A directory hashes the sorted listing
/// "<relative path>\0<sha256 of file>\n" of its files.
std::string content_digest(const Payload& payload);

}  // namespace lakecat::ingestion
