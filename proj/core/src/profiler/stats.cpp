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

#include "lakecat/profiler/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace lakecat::profiler {

namespace {

// Neumaier-compensated running sum.
class Accumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0;
  double comp_ = 0;
};

}  // namespace

std::int64_t code_point_length(std::string_view utf8) noexcept {
  std::int64_t n = 0;
  for (unsigned char c : utf8) {
    if ((c & 0xC0) != 0x80) ++n;
  }
  return n;
}

NumericStats compute_numeric_stats(std::span<const std::optional<double>> values) {
  NumericStats s;
  s.count = static_cast<std::int64_t>(values.size());
  std::vector<double> present;
  present.reserve(values.size());
  for (const auto& v : values) {
    if (v) {
      present.push_back(*v);
    } else {
      ++s.null_count;
    }
  }
  if (present.empty()) return s;

  std::set<double> distinct(present.begin(), present.end());
  s.distinct_count = static_cast<std::int64_t>(distinct.size());
  s.min = *distinct.begin();
  s.max = *distinct.rbegin();

  Accumulator sum;
  for (double x : present) sum.add(x);
  const double n = static_cast<double>(present.size());
  const double mean = sum.value() / n;
  Accumulator sq;
  for (double x : present) sq.add((x - mean) * (x - mean));
  // Guard against rounding pushing the mean outside [min, max].
  s.mean = std::clamp(mean, *s.min, *s.max);
  s.std_dev = std::sqrt(sq.value() / n);
  return s;
}

NominalStats compute_nominal_stats(std::span<const std::optional<std::string>> values,
                                   std::size_t k) {
  NominalStats s;
  s.count = static_cast<std::int64_t>(values.size());
  std::map<std::string, std::int64_t> freq;
  bool any = false;
  for (const auto& v : values) {
    if (!v) {
      ++s.null_count;
      continue;
    }
    ++freq[*v];
    const auto len = code_point_length(*v);
    if (!any) {
      s.min_length = s.max_length = len;
      any = true;
    } else {
      s.min_length = std::min(s.min_length, len);
      s.max_length = std::max(s.max_length, len);
    }
  }
  s.distinct_count = static_cast<std::int64_t>(freq.size());

  std::vector<std::pair<std::string, std::int64_t>> ranked(freq.begin(), freq.end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.second > b.second; });
  if (ranked.size() > k) ranked.resize(k);
  s.top_k = std::move(ranked);
  return s;
}

Properties to_properties(const NumericStats& s) {
  Properties p{{"count", s.count}, {"nullCount", s.null_count}, {"distinctCount", s.distinct_count}};
  if (s.min) {
    p.emplace("min", *s.min);
    p.emplace("max", *s.max);
    p.emplace("mean", *s.mean);
    p.emplace("stdDev", *s.std_dev);
  }
  return p;
}

Properties to_properties(const NominalStats& s) {
  Properties p{{"count", s.count},
               {"nullCount", s.null_count},
               {"distinctCount", s.distinct_count},
               {"minLength", s.min_length},
               {"maxLength", s.max_length},
               {"topCount", static_cast<std::int64_t>(s.top_k.size())}};
  for (std::size_t i = 0; i < s.top_k.size(); ++i) {
    const std::string prefix = "top" + std::to_string(i + 1);
    p.emplace(prefix + ".value", s.top_k[i].first);
    p.emplace(prefix + ".freq", s.top_k[i].second);
  }
  return p;
}

}  // namespace lakecat::profiler
