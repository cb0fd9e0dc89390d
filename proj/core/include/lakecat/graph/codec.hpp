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

#include <cstdint>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lakecat/graph/types.hpp"

// Canonical structured-text encoding shared by the event log, snapshots and
// catalog responses. Objects are std::map backed, so keys come out sorted and
// dump() is byte-stable.
namespace lakecat::codec {

using Json = nlohmann::json;

/// Text, integer, decimal and boolean map onto the native JSON scalars;
/// timestamps become {"ts": "<iso>"}.
Json encode(const Value& v);
Value decode_value(const Json& j);

Json encode(const Properties& props);
Properties decode_properties(const Json& j);

Json encode(const Node& n);
Node decode_node(const Json& j);

Json encode(const Edge& e);
Edge decode_edge(const Json& j);

std::string canonical(const Json& j);

enum class EventKind { create_node, create_edge, set_props };

std::string_view to_string(EventKind k) noexcept;

struct GraphEvent {
  std::uint64_t seq = 0;
  Timestamp at;
  EventKind kind = EventKind::create_node;
  Json payload;
};

/// One log record, without the trailing newline.
std::string encode_event(const GraphEvent& ev);
/// Throws InvalidArgument when the line is not a well-formed record.
GraphEvent decode_event(std::string_view line);

}  // namespace lakecat::codec
