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

// Brute-force reference implementations. Deliberately written without any
// lakecat code so the tests compare against something independent.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace lakecat::oracle {

struct Stats {
  long count = 0;
  long nulls = 0;
  long distinct = 0;
  double min = 0;
  double max = 0;
  long double mean = 0;
  long double sd = 0;  // population
};

inline Stats numeric(const std::vector<std::optional<double>>& xs) {
  Stats s;
  std::set<double> seen;
  long double sum = 0;
  for (const auto& x : xs) {
    if (!x) {
      ++s.nulls;
      continue;
    }
    if (s.count == 0 || *x < s.min) s.min = *x;
    if (s.count == 0 || *x > s.max) s.max = *x;
    ++s.count;
    sum += *x;
    seen.insert(*x);
  }
  s.distinct = static_cast<long>(seen.size());
  if (s.count == 0) return s;
  s.mean = sum / s.count;
  long double sq = 0;
  for (const auto& x : xs) {
    if (x) sq += (*x - s.mean) * (*x - s.mean);
  }
  s.sd = std::sqrt(sq / s.count);
  return s;
}

/// r = (nΣxy − ΣxΣy) / sqrt((nΣx² − (Σx)²)(nΣy² − (Σy)²)) in long double.
inline double pearson(const std::vector<double>& x, const std::vector<double>& y) {
  const long double n = static_cast<long double>(x.size());
  long double sx = 0, sy = 0, sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxy += static_cast<long double>(x[i]) * y[i];
    sxx += static_cast<long double>(x[i]) * x[i];
    syy += static_cast<long double>(y[i]) * y[i];
  }
  return static_cast<double>((n * sxy - sx * sy) /
                             std::sqrt((n * sxx - sx * sx) * (n * syy - sy * sy)));
}

template <typename T>
double jaccard(const std::set<T>& a, const std::set<T>& b) {
  if (a.empty() && b.empty()) return 0.0;
  std::vector<T> inter, uni;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
  return static_cast<double>(inter.size()) / static_cast<double>(uni.size());
}

template <typename T>
double containment(const std::set<T>& a, const std::set<T>& b) {
  std::vector<T> inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
  return static_cast<double>(inter.size()) / static_cast<double>(a.size());
}

inline std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

/// Full (n+1)x(m+1) dynamic-programming table.
inline std::size_t levenshtein(const std::string& a, const std::string& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1, std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1,
                          d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
  }
  return d[a.size()][b.size()];
}

inline double name_similarity(const std::string& a, const std::string& b) {
  const std::string x = lower(a), y = lower(b);
  const std::size_t longest = std::max(x.size(), y.size());
  if (longest == 0) return 1.0;
  return 1.0 - static_cast<double>(levenshtein(x, y)) / static_cast<double>(longest);
}

/// Minimal CSV reader for the generated fixtures: comma separated, optional
/// double quotes with "" escapes, no embedded newlines.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        out.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        out.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.emplace_back();
    } else if (c != '\r') {
      out.back() += c;
    }
  }
  return out;
}

inline Table read_csv(const std::string& path) {
  std::ifstream in(path);
  Table t;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty() || line == "\r") continue;
    if (first) {
      t.header = split_csv_line(line);
      first = false;
    } else {
      t.rows.push_back(split_csv_line(line));
    }
  }
  return t;
}

inline std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline bool is_null(const std::string& cell) {
  const std::string t = lower(strip(cell));
  return t.empty() || t == "na" || t == "nan" || t == "null";
}

/// strtod over the whole trimmed cell, finite only.
inline std::optional<double> number(const std::string& cell) {
  const std::string t = strip(cell);
  if (t.empty()) return std::nullopt;
  char* end = nullptr;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || !std::isfinite(v)) return std::nullopt;
  // strtod accepts hex floats and "inf"; the fixtures never contain them.
  return v;
}

inline void write_csv(const std::string& path, const Table& t) {
  std::ofstream out(path, std::ios::trunc);
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << ',';
      if (cells[i].find_first_of(",\"") != std::string::npos) {
        out << '"';
        for (char c : cells[i]) out << (c == '"' ? "\"\"" : std::string(1, c));
        out << '"';
      } else {
        out << cells[i];
      }
    }
    out << '\n';
  };
  emit(t.header);
  for (const auto& r : t.rows) emit(r);
}

}  // namespace lakecat::oracle
