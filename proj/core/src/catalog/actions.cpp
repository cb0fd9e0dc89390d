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

#include "lakecat/catalog/actions.hpp"

#include "lakecat/error.hpp"

namespace lakecat::catalog {

namespace {

template <typename T>
T required(const Json& body, const char* key) {
  if (!body.is_object() || !body.contains(key)) {
    throw InvalidArgument(std::string("missing field \"") + key + "\"");
  }
  try {
    return body.at(key).get<T>();
  } catch (const Json::exception&) {
    throw InvalidArgument(std::string("field \"") + key + "\" has the wrong type");
  }
}

template <typename T>
std::optional<T> optional_field(const Json& body, const char* key) {
  if (!body.is_object() || !body.contains(key) || body.at(key).is_null()) return std::nullopt;
  return required<T>(body, key);
}

NodeId node_ref(const std::string& text) {
  const auto id = NodeId::parse(text);
  if (!id) throw InvalidArgument("malformed id " + text);
  return *id;
}

}  // namespace

Json to_json(const ingestion::IngestOutcome& o) {
  return {{"ingest", o.ingest.str()},
          {"dataset", o.dataset ? Json(o.dataset->str()) : Json(nullptr)},
          {"version", o.version},
          {"status", std::string(to_string(o.status))},
          {"contentHash", o.content_hash},
          {"error", o.error}};
}

Json add_source(Lake& lake, const Json& body) {
  ingestion::SourceSpec spec;
  spec.connection = ingestion::SourceConnection::parse(required<std::string>(body, "location"));
  spec.connection.credentials_ref = optional_field<std::string>(body, "credentialsRef");
  spec.type = required<std::string>(body, "type");
  spec.name = required<std::string>(body, "name");
  spec.owner = optional_field<std::string>(body, "owner").value_or("");
  spec.administrator = optional_field<std::string>(body, "administrator");
  if (auto origin = optional_field<std::string>(body, "streamOrigin")) spec.stream_origin = node_ref(*origin);
  const auto id = lake.ingestor().connect_data_source(spec);
  if (!id) throw NotFound("source location is not reachable: " + spec.connection.location);
  return {{"id", id->str()}};
}

Json ingest(Lake& lake, NodeId source, const Json& body, const Caller& who) {
  const std::string mode_text = optional_field<std::string>(body, "mode").value_or("batch");
  const auto mode = ingestion::parse_ingest_mode(mode_text);
  if (!mode) throw InvalidArgument("unknown ingestion mode " + mode_text);
  ingestion::IngestRequest req;
  req.source = source;
  req.mode = *mode;
  req.comment = optional_field<std::string>(body, "comment").value_or("");
  req.user = who.name.empty() ? "anonymous" : who.name;
  if (auto d = optional_field<double>(body, "definedDuration")) req.defined_duration = ingestion::Seconds(*d);
  const auto windows = optional_field<int>(body, "windows");

  Json runs = Json::array();
  if (windows) {
    if (req.mode != ingestion::IngestMode::realtime) {
      throw InvalidArgument("windows apply to real-time ingestion only");
    }
    if (!req.defined_duration) throw InvalidArgument("real-time ingestion requires definedDuration");
    for (const auto& o : lake.ingestor().run_realtime(source, *req.defined_duration, *windows, req.user,
                                                      req.comment)) {
      runs.push_back(to_json(o));
    }
  } else {
    runs.push_back(to_json(lake.ingestor().ingest_dataset(req)));
  }
  return {{"runs", std::move(runs)}};
}

Json annotate(Lake& lake, NodeId dataset, const Json& body, const Caller& who) {
  if (!lake.catalog().visible(dataset, who)) throw NotFound("no dataset " + dataset.str());
  const auto description = optional_field<std::string>(body, "description");
  const auto tags = optional_field<std::vector<std::string>>(body, "tags").value_or(std::vector<std::string>{});
  lake.enrichment().annotate_semantics(dataset, description, tags);
  return lake.catalog().dataset_detail(dataset, who);
}

Json mark(Lake& lake, NodeId dataset, const Json& body, const Caller& who) {
  if (!lake.catalog().visible(dataset, who)) throw NotFound("no dataset " + dataset.str());
  const int level = required<int>(body, "level");
  NodeId target = dataset;
  if (auto t = optional_field<std::string>(body, "target")) {
    target = node_ref(*t);
    if (enrichment::owning_dataset(lake.graph(), target) != dataset) {
      throw NotFound("no entity or attribute " + *t + " in dataset " + dataset.str());
    }
  }
  const NodeId m = lake.enrichment().mark_sensitivity(target, level, who.name.empty() ? "anonymous" : who.name);
  return {{"mark", m.str()}, {"target", target.str()}, {"level", level}};
}

Json relate(Lake& lake, const Json& body, const Caller& who) {
  const NodeId a = node_ref(required<std::string>(body, "ds1"));
  const NodeId b = node_ref(required<std::string>(body, "ds2"));
  for (NodeId d : {a, b}) {
    if (!lake.catalog().visible(d, who)) throw NotFound("no dataset " + d.str());
  }
  const NodeId rel = lake.enrichment().input_relationship(
      a, b, required<std::string>(body, "kind"), optional_field<std::string>(body, "name").value_or(""),
      optional_field<std::string>(body, "description").value_or(""), required<double>(body, "value"));
  return {{"id", rel.str()}};
}

Json link(Lake& lake, NodeId dataset, const Caller& who) {
  if (!lake.catalog().visible(dataset, who)) throw NotFound("no dataset " + dataset.str());
  lake.linker().calculate_relationships(dataset);
  return lake.catalog().relationships(dataset, who);
}

Json put_dict_entry(Lake& lake, const Json& body) {
  const std::string key = required<std::string>(body, "key");
  const std::string value = required<std::string>(body, "value");
  const NodeId id = put_global_dict(lake.graph(), key, value);
  return {{"id", id.str()}, {"key", key}, {"value", value}};
}

}  // namespace lakecat::catalog
