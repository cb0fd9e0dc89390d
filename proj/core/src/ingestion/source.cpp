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

#include "lakecat/ingestion/source.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lakecat/error.hpp"

namespace fs = std::filesystem;

namespace lakecat::ingestion {

namespace {

constexpr std::string_view kFilePrefix = "file://";
constexpr std::string_view kHttpPrefix = "http://";
constexpr std::string_view kStreamPrefix = "stream-sim://";

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw StorageError("cannot read " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw StorageError("read error on " + p.string());
  return buf.str();
}

std::string extension_of(const fs::path& p) {
  std::string ext = p.extension().string();
  if (!ext.empty() && ext.front() == '.') ext.erase(0, 1);
  return lower(ext);
}

Payload read_single(const fs::path& p) {
  Payload out;
  out.extension = extension_of(p);
  out.files.push_back({p.filename().string(), read_file(p)});
  return out;
}

Payload read_directory(const fs::path& dir) {
  Payload out;
  out.directory = true;
  std::error_code ec;
  for (fs::recursive_directory_iterator it(dir, ec), end; it != end; it.increment(ec)) {
    if (ec) break;
    if (!it->is_regular_file()) continue;
    out.files.push_back({fs::relative(it->path(), dir).generic_string(), read_file(it->path())});
  }
  if (ec) throw StorageError("cannot list " + dir.string() + ": " + ec.message());
  std::sort(out.files.begin(), out.files.end(),
            [](const PayloadFile& a, const PayloadFile& b) { return a.relative_path < b.relative_path; });
  return out;
}

std::optional<fs::path> newest_stream_file(const fs::path& dir) {
  std::optional<fs::path> best;
  std::error_code ec;
  for (fs::directory_iterator it(dir, ec), end; it != end; it.increment(ec)) {
    if (ec) break;
    if (!it->is_regular_file()) continue;
    const auto name = it->path().filename().string();
    if (name.empty() || name.front() == '.') continue;
    if (!best || name > best->filename().string()) best = it->path();
  }
  return best;
}

}  // namespace

std::string_view to_string(Scheme s) noexcept {
  switch (s) {
    case Scheme::local_file: return "local-file";
    case Scheme::local_directory: return "local-directory";
    case Scheme::http: return "http";
    case Scheme::stream_sim: return "stream-sim";
  }
  return "?";
}

std::optional<Scheme> parse_scheme(std::string_view text) noexcept {
  if (text == "local-file") return Scheme::local_file;
  if (text == "local-directory") return Scheme::local_directory;
  if (text == "http") return Scheme::http;
  if (text == "stream-sim") return Scheme::stream_sim;
  return std::nullopt;
}

SourceConnection SourceConnection::parse(std::string_view location) {
  if (location.empty()) throw InvalidArgument("empty source location");
  SourceConnection c;
  c.location = std::string(location);
  if (location.starts_with(kHttpPrefix)) {
    c.scheme = Scheme::http;
  } else if (location.starts_with(kStreamPrefix)) {
    c.scheme = Scheme::stream_sim;
  } else if (location.find("://") != std::string_view::npos &&
             !location.starts_with(kFilePrefix)) {
    throw InvalidArgument("unsupported source scheme in '" + c.location + "'");
  } else {
    c.scheme = fs::is_directory(c.path()) ? Scheme::local_directory : Scheme::local_file;
  }
  c.validate();
  return c;
}

std::string SourceConnection::path() const {
  std::string_view loc = location;
  if (loc.starts_with(kFilePrefix)) loc.remove_prefix(kFilePrefix.size());
  if (loc.starts_with(kStreamPrefix)) loc.remove_prefix(kStreamPrefix.size());
  return std::string(loc);
}

void SourceConnection::validate() const {
  if (location.empty()) throw InvalidArgument("empty source location");
  const bool is_http = location.starts_with(kHttpPrefix);
  const bool is_stream = location.starts_with(kStreamPrefix);
  switch (scheme) {
    case Scheme::http:
      if (!is_http) throw InvalidArgument("http scheme needs an http:// location");
      detail::parse_http(location);
      break;
    case Scheme::stream_sim:
      if (!is_stream) throw InvalidArgument("stream-sim scheme needs a stream-sim:// location");
      if (path().empty()) throw InvalidArgument("stream-sim location has no directory");
      break;
    case Scheme::local_file:
    case Scheme::local_directory: {
      if (is_http || is_stream) {
        throw InvalidArgument("local scheme cannot use location '" + location + "'");
      }
      if (path().empty()) throw InvalidArgument("empty local path");
      std::error_code ec;
      const auto st = fs::status(path(), ec);
      if (scheme == Scheme::local_file && fs::is_directory(st)) {
        throw InvalidArgument("local-file location is a directory: " + location);
      }
      if (scheme == Scheme::local_directory && fs::is_regular_file(st)) {
        throw InvalidArgument("local-directory location is a file: " + location);
      }
      break;
    }
  }
}

std::uint64_t Payload::size_bytes() const {
  std::uint64_t n = 0;
  for (const auto& f : files) n += f.bytes.size();
  return n;
}

bool probe(const SourceConnection& conn) {
  std::error_code ec;
  switch (conn.scheme) {
    case Scheme::local_file: return fs::is_regular_file(conn.path(), ec);
    case Scheme::local_directory:
    case Scheme::stream_sim: return fs::is_directory(conn.path(), ec);
    case Scheme::http: return detail::http_head(detail::parse_http(conn.location));
  }
  return false;
}

Payload fetch(const SourceConnection& conn) {
  const fs::path p = conn.path();
  std::error_code ec;
  switch (conn.scheme) {
    case Scheme::local_file:
      if (!fs::is_regular_file(p, ec)) throw StorageError("source file vanished: " + p.string());
      return read_single(p);
    case Scheme::local_directory:
      if (!fs::is_directory(p, ec)) throw StorageError("source directory vanished: " + p.string());
      return read_directory(p);
    case Scheme::stream_sim: {
      if (!fs::is_directory(p, ec)) throw StorageError("stream endpoint vanished: " + p.string());
      auto newest = newest_stream_file(p);
      if (!newest) throw StorageError("stream " + p.string() + " has not emitted any payload");
      return read_single(*newest);
    }
    case Scheme::http: return detail::http_get(detail::parse_http(conn.location));
  }
  throw StorageError("unreachable source");
}

}  // namespace lakecat::ingestion
