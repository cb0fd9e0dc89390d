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

#include "lakecat/profiler/delimited.hpp"

#include <algorithm>

#include "lakecat/error.hpp"

namespace lakecat::profiler {

DelimitedTable parse_delimited(std::string_view text, char delimiter) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_started = false;  // distinguishes "" from no field on a blank line
  std::size_t line = 1;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    const bool blank = record.empty() && !field_started && field.empty();
    if (!blank) {
      end_field();
      records.push_back(std::move(record));
    }
    record.clear();
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field.push_back('"');
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field.push_back(c);
      }
      continue;
    }
    if (c == '"' && field.empty()) {
      in_quotes = true;
      field_started = true;
    } else if (c == delimiter) {
      field_started = true;
      end_field();
      field_started = true;
    } else if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') {
      // handled by the '\n'
    } else if (c == '\n') {
      end_record();
      ++line;
    } else {
      field.push_back(c);
      field_started = true;
    }
  }
  if (in_quotes) throw InvalidArgument("unterminated quoted field near line " + std::to_string(line));
  end_record();

  if (records.empty()) throw InvalidArgument("no header row");
  DelimitedTable t;
  t.delimiter = delimiter;
  t.header = std::move(records.front());
  const std::size_t width = t.header.size();
  for (std::size_t r = 1; r < records.size(); ++r) {
    if (records[r].size() != width) {
      throw InvalidArgument("row " + std::to_string(r + 1) + " has " +
                            std::to_string(records[r].size()) + " fields, expected " +
                            std::to_string(width));
    }
    t.rows.push_back(std::move(records[r]));
  }
  return t;
}

char sniff_delimiter(std::string_view text, std::string_view extension) {
  if (extension == "tsv" || extension == "tab") return '\t';
  if (extension == "csv") return ',';
  const auto first_line = text.substr(0, text.find('\n'));
  const auto tabs = std::count(first_line.begin(), first_line.end(), '\t');
  const auto commas = std::count(first_line.begin(), first_line.end(), ',');
  return tabs > commas ? '\t' : ',';
}

}  // namespace lakecat::profiler
