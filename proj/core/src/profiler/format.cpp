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

#include "lakecat/profiler/format.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <set>
#include <utility>

#include "lakecat/error.hpp"

namespace fs = std::filesystem;

namespace lakecat::profiler {

namespace {

constexpr std::size_t kHeadBytes = 512;

struct Signature {
  std::size_t offset;
  std::string_view magic;
  std::string_view type;
};

using namespace std::string_view_literals;

constexpr std::array kSignatures{
    Signature{0, "\xFF\xD8\xFF"sv, "image/jpeg"},
    Signature{0, "\x89PNG\r\n\x1A\n"sv, "image/png"},
    Signature{0, "GIF87a"sv, "image/gif"},
    Signature{0, "GIF89a"sv, "image/gif"},
    Signature{0, "II*\0"sv, "image/tiff"},
    Signature{0, "MM\0*"sv, "image/tiff"},
    Signature{0, "%PDF-"sv, "application/pdf"},
    Signature{0, "PK\x03\x04"sv, "application/zip"},
    Signature{0, "\x1F\x8B"sv, "application/gzip"},
    Signature{128, "DICM"sv, "application/dicom"},
};

std::string read_head(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw StorageError("cannot read " + p.string());
  std::string buf(kHeadBytes, '\0');
  in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
  buf.resize(static_cast<std::size_t>(in.gcount()));
  return buf;
}

std::string file_format(const fs::path& p) {
  if (auto t = sniff_media_type(read_head(p))) return *t;
  std::string ext = p.extension().string();
  if (!ext.empty()) ext.erase(0, 1);
  return media_type_for_extension(ext);
}

}  // namespace

std::optional<std::string> sniff_media_type(std::string_view head) {
  for (const auto& sig : kSignatures) {
    if (head.size() >= sig.offset + sig.magic.size() &&
        head.substr(sig.offset, sig.magic.size()) == sig.magic) {
      return std::string(sig.type);
    }
  }
  if (head.size() >= 12 && head.substr(0, 4) == "RIFF" && head.substr(8, 4) == "WEBP") {
    return std::string("image/webp");
  }
  return std::nullopt;
}

std::string media_type_for_extension(std::string_view ext) {
  std::string e(ext);
  std::transform(e.begin(), e.end(), e.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  static const std::array<std::pair<std::string_view, std::string_view>, 14> table{{
      {"jpg", "image/jpeg"},
      {"jpeg", "image/jpeg"},
      {"png", "image/png"},
      {"gif", "image/gif"},
      {"tif", "image/tiff"},
      {"tiff", "image/tiff"},
      {"dcm", "application/dicom"},
      {"pdf", "application/pdf"},
      {"csv", "text/csv"},
      {"tsv", "text/tab-separated-values"},
      {"json", "application/json"},
      {"xml", "application/xml"},
      {"txt", "text/plain"},
      {"zip", "application/zip"},
  }};
  for (const auto& [k, v] : table) {
    if (k == e) return std::string(v);
  }
  return "application/octet-stream";
}

std::string get_dataset_format(const fs::path& path) {
  std::error_code ec;
  if (!fs::is_directory(path, ec)) return file_format(path);
  std::set<std::string> seen;
  for (const auto& entry : fs::recursive_directory_iterator(path)) {
    if (entry.is_regular_file()) seen.insert(file_format(entry.path()));
  }
  return seen.size() == 1 ? *seen.begin() : std::string("multipart/mixed");
}

}  // namespace lakecat::profiler
