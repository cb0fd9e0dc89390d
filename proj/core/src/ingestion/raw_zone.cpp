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

#include "lakecat/ingestion/raw_zone.hpp"

#include <fstream>

#include "lakecat/error.hpp"

namespace fs = std::filesystem;

namespace lakecat::ingestion {

namespace {

void write_readonly(const fs::path& p, std::string_view bytes) {
  fs::create_directories(p.parent_path());
  {
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    out.flush();
    if (!out) throw StorageError("short write to " + p.string());
  }
  fs::permissions(p, fs::perms::owner_read | fs::perms::group_read | fs::perms::others_read);
}

std::string version_dir(std::string_view key, int version) {
  return std::string(key) + "/v" + std::to_string(version);
}

}  // namespace

RawZone::RawZone(fs::path root) : root_(std::move(root)) {}

std::string RawZone::data_path(std::string_view key, int version, const Payload& payload) {
  std::string p = version_dir(key, version) + "/data";
  if (!payload.directory) {
    p += "." + (payload.extension.empty() ? std::string("bin") : payload.extension);
  }
  return p;
}

std::string RawZone::store(std::string_view key, int version, const Payload& payload) {
  if (key.empty() || key.find('/') != std::string_view::npos || version < 1) {
    throw InvalidArgument("bad raw-zone key/version");
  }
  const fs::path vdir = root_ / version_dir(key, version);
  try {
    fs::create_directories(vdir.parent_path());
    if (!fs::create_directory(vdir)) {
      throw StorageError("raw-zone version already exists: " + vdir.string());
    }
  } catch (const fs::filesystem_error& ex) {
    throw StorageError(std::string("raw zone unavailable: ") + ex.what());
  }

  const std::string rel = data_path(key, version, payload);
  try {
    if (payload.directory) {
      for (const auto& f : payload.files) write_readonly(root_ / rel / f.relative_path, f.bytes);
    } else {
      write_readonly(root_ / rel, payload.files.at(0).bytes);
    }
  } catch (const std::exception& ex) {
    std::error_code ec;
    fs::remove_all(vdir, ec);
    throw StorageError(std::string("raw-zone write failed: ") + ex.what());
  }
  return rel;
}

void RawZone::write_manifest(std::string_view key, int version, const nlohmann::json& manifest) {
  try {
    write_readonly(root_ / version_dir(key, version) / "manifest", manifest.dump(2) + "\n");
  } catch (const std::exception& ex) {
    throw StorageError(std::string("manifest write failed: ") + ex.what());
  }
}

fs::path RawZone::resolve(std::string_view relative) const { return root_ / fs::path(relative); }

}  // namespace lakecat::ingestion
