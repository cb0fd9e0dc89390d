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
#include <utility>
#include <vector>

namespace lakecat::profiler {

struct MarkupElement {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::string text;  // concatenated character data, entities decoded
  std::vector<MarkupElement> children;
};

/// Well-formedness parser for the XML subset found in data files: prolog,
/// comments, DOCTYPE (skipped), CDATA, attributes, predefined and numeric
/// entities. Throws InvalidArgument unless there is exactly one root element
/// and every tag is balanced.
MarkupElement parse_markup(std::string_view text);

}  // namespace lakecat::profiler
