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

#include <httplib.h>

#include <regex>

#include "lakecat/error.hpp"
#include "lakecat/ingestion/source.hpp"

namespace lakecat::ingestion::detail {

namespace {

constexpr time_t kTimeoutSeconds = 5;

std::string extension_for(const std::string& path, const std::string& content_type) {
  const auto slash = path.find_last_of('/');
  const auto dot = path.find_last_of('.');
  if (dot != std::string::npos && (slash == std::string::npos || dot > slash)) {
    std::string ext = path.substr(dot + 1);
    if (auto q = ext.find_first_of("?#"); q != std::string::npos) ext.resize(q);
    for (auto& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (!ext.empty()) return ext;
  }
  if (content_type.starts_with("text/csv")) return "csv";
  if (content_type.starts_with("text/tab-separated-values")) return "tsv";
  if (content_type.starts_with("application/json")) return "json";
  if (content_type.find("xml") != std::string::npos) return "xml";
  if (content_type.starts_with("image/jpeg")) return "jpg";
  if (content_type.starts_with("image/png")) return "png";
  return "bin";
}

httplib::Client client_for(const HttpTarget& t) {
  httplib::Client cli(t.host, t.port);
  cli.set_connection_timeout(kTimeoutSeconds, 0);
  cli.set_read_timeout(kTimeoutSeconds, 0);
  return cli;
}

}  // namespace

HttpTarget parse_http(std::string_view url) {
  static const std::regex re(R"(^http://([A-Za-z0-9.\-]+)(?::(\d{1,5}))?(/[^\s]*)?$)");
  std::cmatch m;
  if (!std::regex_match(url.begin(), url.end(), m, re)) {
    throw InvalidArgument("malformed http location '" + std::string(url) + "'");
  }
  HttpTarget t;
  t.host = m[1].str();
  t.port = m[2].matched ? std::stoi(m[2].str()) : 80;
  t.path = m[3].matched ? m[3].str() : "/";
  if (t.port <= 0 || t.port > 65535) throw InvalidArgument("bad port in '" + std::string(url) + "'");
  return t;
}

bool http_head(const HttpTarget& t) {
  auto cli = client_for(t);
  auto res = cli.Head(t.path);
  return res && res->status >= 200 && res->status < 300;
}

Payload http_get(const HttpTarget& t) {
  auto cli = client_for(t);
  auto res = cli.Get(t.path);
  if (!res) {
    throw StorageError("http source " + t.host + " unreachable: " + httplib::to_string(res.error()));
  }
  if (res->status < 200 || res->status >= 300) {
    throw StorageError("http source answered " + std::to_string(res->status));
  }
  Payload out;
  out.extension = extension_for(t.path, res->get_header_value("Content-Type"));
  std::string name = t.path.substr(t.path.find_last_of('/') + 1);
  if (name.empty()) name = "data." + out.extension;
  out.files.push_back({name, std::move(res->body)});
  return out;
}

}  // namespace lakecat::ingestion::detail
