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

#include "lakecat/graph/codec.hpp"

#include <cmath>

#include "lakecat/error.hpp"

namespace lakecat::codec {

Json encode(const Value& v) {
  return std::visit(
      [](const auto& x) -> Json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Timestamp>) {
          return Json{{"ts", x.iso()}};
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(x)) throw InvalidArgument("non-finite decimal property");
          return Json(x);
        } else {
          return Json(x);
        }
      },
      v.storage());
}

Value decode_value(const Json& j) {
  switch (j.type()) {
    case Json::value_t::string: return Value(j.get<std::string>());
    case Json::value_t::boolean: return Value(j.get<bool>());
    case Json::value_t::number_integer:
    case Json::value_t::number_unsigned: return Value(j.get<std::int64_t>());
    case Json::value_t::number_float: return Value(j.get<double>());
    case Json::value_t::object:
      if (j.size() == 1 && j.contains("ts") && j["ts"].is_string()) {
        return Value(Timestamp::from_iso(j["ts"].get<std::string>()));
      }
      break;
    default: break;
  }
  throw InvalidArgument("not a scalar property value: " + j.dump());
}

Json encode(const Properties& props) {
  Json out = Json::object();
  for (const auto& [k, v] : props) out[k] = encode(v);
  return out;
}

Properties decode_properties(const Json& j) {
  if (!j.is_object()) throw InvalidArgument("properties must be an object");
  Properties out;
  for (const auto& [k, v] : j.items()) out.emplace(k, decode_value(v));
  return out;
}

namespace {

template <typename Id>
Id decode_id(const Json& j, const char* what) {
  if (!j.is_string()) throw InvalidArgument(std::string(what) + " must be a string");
  auto id = Id::parse(j.get<std::string>());
  if (!id) throw InvalidArgument(std::string("malformed ") + what + " '" + j.get<std::string>() + "'");
  return *id;
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw InvalidArgument(std::string("missing field '") + key + "'");
  }
  return j[key];
}

}  // namespace

Json encode(const Node& n) {
  return Json{{"id", n.id.str()}, {"label", std::string(to_string(n.label))},
              {"props", encode(n.props)}};
}

Node decode_node(const Json& j) {
  Node n;
  n.id = decode_id<NodeId>(field(j, "id"), "node id");
  const auto& label = field(j, "label");
  auto parsed = label.is_string() ? parse_node_label(label.get<std::string>()) : std::nullopt;
  if (!parsed) throw InvalidArgument("unknown node label " + label.dump());
  n.label = *parsed;
  n.props = decode_properties(field(j, "props"));
  return n;
}

Json encode(const Edge& e) {
  return Json{{"id", e.id.str()}, {"label", e.label}, {"from", e.from.str()}, {"to", e.to.str()}};
}

Edge decode_edge(const Json& j) {
  Edge e;
  e.id = decode_id<EdgeId>(field(j, "id"), "edge id");
  const auto& label = field(j, "label");
  if (!label.is_string()) throw InvalidArgument("edge label must be a string");
  e.label = label.get<std::string>();
  e.from = decode_id<NodeId>(field(j, "from"), "edge endpoint");
  e.to = decode_id<NodeId>(field(j, "to"), "edge endpoint");
  return e;
}

std::string canonical(const Json& j) { return j.dump(); }

std::string_view to_string(EventKind k) noexcept {
  switch (k) {
    case EventKind::create_node: return "create-node";
    case EventKind::create_edge: return "create-edge";
    case EventKind::set_props: return "set-props";
  }
  return "?";
}

std::string encode_event(const GraphEvent& ev) {
  Json j{{"seq", ev.seq}, {"at", ev.at.iso()}, {"kind", std::string(to_string(ev.kind))},
         {"payload", ev.payload}};
  return j.dump();
}

GraphEvent decode_event(std::string_view line) {
  Json j = Json::parse(line.begin(), line.end(), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object()) throw InvalidArgument("record is not a JSON object");
  if (j.size() != 4) throw InvalidArgument("record must have exactly seq, at, kind, payload");
  GraphEvent ev;
  const auto& seq = field(j, "seq");
  if (!seq.is_number_unsigned()) throw InvalidArgument("seq must be a positive integer");
  ev.seq = seq.get<std::uint64_t>();
  const auto& at = field(j, "at");
  if (!at.is_string()) throw InvalidArgument("at must be a timestamp string");
  ev.at = Timestamp::from_iso(at.get<std::string>());
  const auto& kind = field(j, "kind");
  const std::string k = kind.is_string() ? kind.get<std::string>() : std::string();
  if (k == "create-node") {
    ev.kind = EventKind::create_node;
  } else if (k == "create-edge") {
    ev.kind = EventKind::create_edge;
  } else if (k == "set-props") {
    ev.kind = EventKind::set_props;
  } else {
    throw InvalidArgument("unknown event kind " + kind.dump());
  }
  ev.payload = field(j, "payload");
  if (!ev.payload.is_object()) throw InvalidArgument("payload must be an object");
  return ev;
}

}  // namespace lakecat::codec
