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
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lakecat::linker {

inline constexpr std::size_t kDefaultMinHashK = 128;
inline constexpr char kUnitSeparator = '\x1f';

/// 64-bit FNV-1a with the offset basis xor-ed by `seed`.
std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0) noexcept;

/// MurmurHash3 64-bit finalizer.
std::uint64_t fmix64(std::uint64_t x) noexcept;

/// Advances `state` and returns the next splitmix64 output.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

/// Hash of one row: cells trimmed, joined with U+001F, FNV-1a, then fmix64.
std::uint64_t row_hash(std::span<const std::string> cells, std::uint64_t seed = 0);
std::uint64_t row_hash(std::span<const std::string_view> cells, std::uint64_t seed = 0);

struct MinHashSignature {
  std::size_t k = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> values;

  friend bool operator==(const MinHashSignature&, const MinHashSignature&) = default;
};

/// Permutation i is x -> fmix64(x ^ salt_i), the salts drawn from
/// splitmix64 seeded with `seed`. An empty set yields all-ones values.
MinHashSignature minhash(std::span<const std::uint64_t> set, std::size_t k = kDefaultMinHashK,
                         std::uint64_t seed = 0);

/// Fraction of matching positions. Throws InvalidArgument when k or seed differ.
double estimate_jaccard(const MinHashSignature& a, const MinHashSignature& b);

}  // namespace lakecat::linker
