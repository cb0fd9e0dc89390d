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

#include "lakecat/linker/measures.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <vector>

namespace lakecat::linker {

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw InvalidArgument("pearson: length mismatch");
  if (x.size() < 2) throw InvalidArgument("pearson: need at least two points");
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, syy = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0 || syy == 0) throw InvalidArgument("pearson: constant series");
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::string case_fold(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::size_t levenshtein(std::string_view a, std::string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<std::size_t> row(b.size() + 1);
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({row[j] + 1, row[j - 1] + 1, diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

double name_similarity(std::string_view a, std::string_view b) {
  const std::string fa = case_fold(a);
  const std::string fb = case_fold(b);
  const std::size_t longest = std::max(fa.size(), fb.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein(fa, fb)) / static_cast<double>(longest);
}

double tag_jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> fa, fb;
  for (const auto& t : a) fa.insert(case_fold(t));
  for (const auto& t : b) fb.insert(case_fold(t));
  return jaccard(fa, fb);
}

}  // namespace lakecat::linker
