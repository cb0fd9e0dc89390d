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

#include "lakecat/ingestion/digest.hpp"

#include <algorithm>
#include <vector>

#include <openssl/evp.h>

#include <array>
#include <memory>

#include "lakecat/error.hpp"

namespace lakecat::ingestion {

std::string sha256_hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              &EVP_MD_CTX_free);
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), md.data(), &len) != 1) {
    throw Error("sha256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(len * 2);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[md[i] >> 4]);
    out.push_back(kHex[md[i] & 0xf]);
  }
  return out;
}

std::string content_digest(const Payload& payload) {
  if (!payload.directory && payload.files.size() == 1) {
    return sha256_hex(payload.files.front().bytes);
  }
  std::vector<std::string> lines;
  lines.reserve(payload.files.size());
  for (const auto& f : payload.files) {
    lines.push_back(f.relative_path + '\0' + sha256_hex(f.bytes) + '\n');
  }
  std::sort(lines.begin(), lines.end());
  std::string listing;
  for (const auto& l : lines) listing += l;
  return sha256_hex(listing);
}

}  // namespace lakecat::ingestion
