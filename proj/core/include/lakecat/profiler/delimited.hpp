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

#include <string>
#include <string_view>
#include <vector>

namespace lakecat::profiler {

struct DelimitedTable {
  char delimiter = ',';
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// RFC 4180 style: quoted fields, doubled quotes, CRLF or LF. Blank lines are
/// skipped and a leading UTF-8 BOM is dropped. Throws InvalidArgument on an
/// unterminated quote, an empty document, or a row whose field count differs
/// from the header.
DelimitedTable parse_delimited(std::string_view text, char delimiter);

/// Tab for ".tsv"/".tab", comma for ".csv"; otherwise whichever of tab and
/// comma occurs more often in the first line.
char sniff_delimiter(std::string_view text, std::string_view extension);

}  // namespace lakecat::profiler
