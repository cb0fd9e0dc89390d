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

#include "lakecat/linker/hashing.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include "lakecat/error.hpp"

namespace lakecat::linker {

namespace {

constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
constexpr std::uint64_t kFnvPrime = 0x100000001b3ULL;

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename Cell>
std::uint64_t hash_cells(std::span<const Cell> cells, std::uint64_t seed) {
  std::uint64_t h = kFnvOffset ^ seed;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) {
      h ^= static_cast<unsigned char>(kUnitSeparator);
      h *= kFnvPrime;
    }
    for (unsigned char c : trimmed(cells[i])) {
      h ^= c;
      h *= kFnvPrime;
    }
  }
  return fmix64(h);
}

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed) noexcept {
  std::uint64_t h = kFnvOffset ^ seed;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= kFnvPrime;
  }
  return h;
}

std::uint64_t fmix64(std::uint64_t x) noexcept {
  x ^= x >> 33;
  x *= 0xff51afd7ed558ccdULL;
  x ^= x >> 33;
  x *= 0xc4ceb9fe1a85ec53ULL;
  x ^= x >> 33;
  return x;
}

std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t row_hash(std::span<const std::string> cells, std::uint64_t seed) {
  return hash_cells(cells, seed);
}

std::uint64_t row_hash(std::span<const std::string_view> cells, std::uint64_t seed) {
  return hash_cells(cells, seed);
}

MinHashSignature minhash(std::span<const std::uint64_t> set, std::size_t k, std::uint64_t seed) {
  if (k == 0) throw InvalidArgument("minhash: k must be positive");
  MinHashSignature sig{k, seed, std::vector<std::uint64_t>(k, std::numeric_limits<std::uint64_t>::max())};
  std::vector<std::uint64_t> salts(k);
  std::uint64_t state = seed;
  for (auto& s : salts) s = splitmix64(state);
  for (std::uint64_t x : set) {
    for (std::size_t i = 0; i < k; ++i) {
      sig.values[i] = std::min(sig.values[i], fmix64(x ^ salts[i]));
    }
  }
  return sig;
}

double estimate_jaccard(const MinHashSignature& a, const MinHashSignature& b) {
  if (a.k != b.k || a.seed != b.seed || a.values.size() != b.values.size()) {
    throw InvalidArgument("minhash signatures differ in k or seed");
  }
  std::size_t same = 0;
  for (std::size_t i = 0; i < a.k; ++i) same += a.values[i] == b.values[i] ? 1 : 0;
  return static_cast<double>(same) / static_cast<double>(a.k);
}

}  // namespace lakecat::linker
