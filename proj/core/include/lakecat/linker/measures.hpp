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
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "lakecat/error.hpp"

namespace lakecat::linker {

/// Pearson r. Throws InvalidArgument on length mismatch, fewer than two
/// points, or a constant series.
double pearson(std::span<const double> x, std::span<const double> y);

/// |A ∩ B| / |A|. Throws InvalidArgument when A is empty.
template <typename SetA, typename SetB>
double exact_containment(const SetA& a, const SetB& b) {
  if (a.empty()) throw InvalidArgument("containment undefined for an empty set");
  std::size_t hit = 0;
  for (const auto& x : a) hit += b.contains(x) ? 1 : 0;
  return static_cast<double>(hit) / static_cast<double>(a.size());
}

/// |A ∩ B| / |A ∪ B|; 0 when both are empty.
template <typename Set>
double jaccard(const Set& a, const Set& b) {
  if (a.empty() && b.empty()) return 0.0;
  const Set& small = a.size() <= b.size() ? a : b;
  const Set& large = a.size() <= b.size() ? b : a;
  std::size_t inter = 0;
  for (const auto& x : small) inter += large.contains(x) ? 1 : 0;
  return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

/// Trimmed, ASCII-lowercased.
std::string case_fold(std::string_view s);

std::size_t levenshtein(std::string_view a, std::string_view b);

/// 1 - levenshtein / max length over case-folded names; 1 for two empty names.
double name_similarity(std::string_view a, std::string_view b);

/// Jaccard over case-folded tag names; 0 when both sets are empty.
double tag_jaccard(const std::set<std::string>& a, const std::set<std::string>& b);

}  // namespace lakecat::linker
