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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace lakecat::ingestion {

enum class Scheme { local_file, local_directory, http, stream_sim };

std::string_view to_string(Scheme s) noexcept;
std::optional<Scheme> parse_scheme(std::string_view text) noexcept;

/// Where and how to reach a source. `location` forms:
///   /path/or/relative         local-file or local-directory (decided on disk)
///   file:///abs/path          same
///   http://host[:port]/path   http
///   stream-sim://dir          simulated stream: newest file in `dir` is the
///                             current window payload
struct SourceConnection {
  Scheme scheme = Scheme::local_file;
  std::string location;
  std::optional<std::string> credentials_ref;

  /// Infers the scheme from `location`. Throws InvalidArgument when the
  /// descriptor is malformed.
  static SourceConnection parse(std::string_view location);
  /// Throws InvalidArgument when the scheme and location disagree.
  void validate() const;
  /// Filesystem path for local and stream-sim schemes.
  std::string path() const;
};

struct PayloadFile {
  std::string relative_path;  // '/'-separated
  std::string bytes;
};

/// Bytes read from a source in one go. A directory payload keeps its layout.
struct Payload {
  bool directory = false;
  std::string extension;  // lower-case, without dot; single-file payloads only
  std::vector<PayloadFile> files;

  std::uint64_t size_bytes() const;
};

/// True when the source answers: file/directory exists, HTTP HEAD succeeds,
/// stream directory exists.
bool probe(const SourceConnection& conn);

/// Reads the current content. Throws StorageError when unreachable.
Payload fetch(const SourceConnection& conn);

namespace detail {
struct HttpTarget {
  std::string host;
  int port = 80;
  std::string path;
};
HttpTarget parse_http(std::string_view url);
bool http_head(const HttpTarget& t);
Payload http_get(const HttpTarget& t);
}  // namespace detail

}  // namespace lakecat::ingestion
