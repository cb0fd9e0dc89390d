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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lakecat/graph/types.hpp"

namespace lakecat::profiler {

inline constexpr std::size_t kTopK = 5;

struct NumericStats {
  std::int64_t count = 0;
  std::int64_t null_count = 0;
  std::int64_t distinct_count = 0;
  // Absent when no value is present.
  std::optional<double> min;
  std::optional<double> max;
  std::optional<double> mean;
  std::optional<double> std_dev;  // population
};

struct NominalStats {
  std::int64_t count = 0;
  std::int64_t null_count = 0;
  std::int64_t distinct_count = 0;
  std::int64_t min_length = 0;  // code points
  std::int64_t max_length = 0;
  std::vector<std::pair<std::string, std::int64_t>> top_k;  // frequency desc, then value asc
};

NumericStats compute_numeric_stats(std::span<const std::optional<double>> values);

NominalStats compute_nominal_stats(std::span<const std::optional<std::string>> values,
                                   std::size_t k = kTopK);

/// Property encodings used on attribute nodes; topK entries are flattened
/// into "top<i>.value" / "top<i>.freq".
Properties to_properties(const NumericStats& s);
Properties to_properties(const NominalStats& s);

std::int64_t code_point_length(std::string_view utf8) noexcept;

}  // namespace lakecat::profiler
