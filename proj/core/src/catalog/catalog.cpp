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

#include "lakecat/catalog/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "lakecat/enrichment/enrichment.hpp"
#include "lakecat/error.hpp"
#include "lakecat/graph/codec.hpp"
#include "lakecat/graph/registry.hpp"
#include "lakecat/linker/linker.hpp"
#include "lakecat/linker/measures.hpp"

namespace lakecat::catalog {

namespace {

constexpr std::size_t kSnippetLength = 160;

// Properties a redacted attribute keeps.
bool public_attribute_prop(std::string_view key) { return key == "name" || key == "position"; }

std::string snippet(const std::string& text) {
  if (text.size() <= kSnippetLength) return text;
  std::size_t cut = kSnippetLength;
  while (cut > 0 && (static_cast<unsigned char>(text[cut]) & 0xC0) == 0x80) --cut;
  return text.substr(0, cut) + "...";
}

bool contains_folded(const std::string& haystack, const std::string& folded_needle) {
  return linker::case_fold(haystack).find(folded_needle) != std::string::npos;
}

Json tag_list(const GraphStore& graph, NodeId dataset) {
  Json tags = Json::array();
  for (const auto& t : linker::dataset_tags(graph, dataset)) tags.push_back(t);
  return tags;
}

std::vector<Node> by_position(std::vector<Node> nodes) {
  std::stable_sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
    return a.integer("position").value_or(0) < b.integer("position").value_or(0);
  });
  return nodes;
}

Json brief(const Node& n, std::initializer_list<const char*> keys) {
  Json out = {{"id", n.id.str()}};
  for (const char* k : keys) {
    if (const Value* v = n.find(k)) out[k] = codec::encode(*v);
  }
  return out;
}

}  // namespace

Catalog::Catalog(const GraphStore& graph, Clearances clearances)
    : graph_(graph), clearances_(std::move(clearances)) {}

Caller Catalog::caller(std::string_view name) const {
  return Caller{std::string(name), clearance_of(clearances_, name)};
}

NodeId Catalog::parse_id(std::string_view text) {
  const auto id = NodeId::parse(text);
  if (!id) throw NotFound("no dataset " + std::string(text));
  return *id;
}

bool Catalog::visible(NodeId dataset, const Caller& who) const {
  const auto n = graph_.node(dataset);
  if (!n || n->label != NodeLabel::DatalakeDataset) return false;
  return enrichment::effective_sensitivity(graph_, dataset) <= who.clearance;
}

void Catalog::require_visible(NodeId dataset, const Caller& who) const {
  if (!visible(dataset, who)) throw NotFound("no dataset " + dataset.str());
}

Json Catalog::search(std::string_view keyword, const Caller& who) const {
  const std::string needle = linker::case_fold(keyword);
  std::vector<std::pair<std::string, Json>> hits;
  for (const Node& ds : graph_.query(NodeLabel::DatalakeDataset)) {
    const int level = enrichment::effective_sensitivity(graph_, ds.id);
    if (level > who.clearance) continue;
    const auto tags = linker::dataset_tags(graph_, ds.id);
    const std::string name = ds.text("name");
    const std::string description = ds.text("description");
    bool match = needle.empty() || contains_folded(name, needle) || contains_folded(description, needle);
    for (const auto& t : tags) match = match || t.find(needle) != std::string::npos;
    if (!match) continue;
    Json summary = {{"id", ds.id.str()},
                    {"name", name},
                    {"type", ds.text("type")},
                    {"description", snippet(description)},
                    {"tags", tag_list(graph_, ds.id)},
                    {"sensitivity", level},
                    {"version", ds.integer("version").value_or(0)},
                    {"ingestedAt", ds.timestamp("ingestedAt") ? ds.timestamp("ingestedAt")->iso() : ""}};
    hits.emplace_back(name, std::move(summary));
  }
  std::stable_sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second["id"].template get<std::string>() < b.second["id"].template get<std::string>();
  });
  Json out = Json::array();
  for (auto& [name, summary] : hits) out.push_back(std::move(summary));
  return out;
}

Json Catalog::dataset_detail(NodeId dataset, const Caller& who) const {
  require_visible(dataset, who);
  const Node ds = graph_.get(dataset);
  Json entities = Json::array();
  for (const Node& e : by_position(graph_.neighbors(dataset, edges::kDatasetEntity, Direction::out))) {
    const int entity_level = enrichment::effective_sensitivity(graph_, e.id);
    Json attrs = Json::array();
    for (const Node& a : by_position(graph_.neighbors(e.id, edges::kEntityAttribute, Direction::out))) {
      const int level = enrichment::effective_sensitivity(graph_, a.id);
      const bool redacted = level > who.clearance;
      Json props = Json::object();
      for (const auto& [k, v] : a.props) {
        if (!redacted || public_attribute_prop(k)) props[k] = codec::encode(v);
      }
      attrs.push_back({{"id", a.id.str()},
                       {"kind", a.label == NodeLabel::NumericAttribute ? "numeric" : "nominal"},
                       {"sensitivity", level},
                       {"redacted", redacted},
                       {"props", std::move(props)}});
    }
    entities.push_back({{"id", e.id.str()},
                        {"props", codec::encode(e.props)},
                        {"sensitivity", entity_level},
                        {"attributes", std::move(attrs)}});
  }
  Json veracity = nullptr;
  const auto v = graph_.neighbors(dataset, edges::kDatasetVeracity, Direction::out);
  if (!v.empty()) veracity = {{"id", v.front().id.str()}, {"props", codec::encode(v.front().props)}};
  return {{"id", ds.id.str()},
          {"props", codec::encode(ds.props)},
          {"tags", tag_list(graph_, dataset)},
          {"sensitivity", enrichment::effective_sensitivity(graph_, dataset)},
          {"entities", std::move(entities)},
          {"veracity", std::move(veracity)}};
}

Json Catalog::lineage(NodeId dataset, const Caller& who) const {
  require_visible(dataset, who);
  const Node ds = graph_.get(dataset);
  Json out = {{"dataset", brief(ds, {"name", "version", "lakePath", "contentHash", "sizeBytes", "ingestedAt"})},
              {"ingest", nullptr},
              {"source", nullptr},
              {"streamOrigin", nullptr}};
  const auto ingests = graph_.neighbors(dataset, edges::kIngestDataset, Direction::in);
  if (ingests.empty()) return out;
  const Node& ingest = ingests.front();
  Json ing = brief(ingest, {"mode", "status", "ingestionStartTime", "ingestionEndTime", "definedDuration",
                            "outputLog", "errorLog", "comment", "sourceCodeURL", "toolVersion", "configHash"});
  const auto users = graph_.neighbors(ingest.id, edges::kIngestUser, Direction::out);
  ing["user"] = users.empty() ? Json(nullptr) : Json(users.front().text("name"));
  out["ingest"] = std::move(ing);

  const auto sources = graph_.neighbors(ingest.id, edges::kSourceIngest, Direction::in);
  if (sources.empty()) return out;
  const Node& src = sources.front();
  out["source"] = brief(src, {"name", "type", "location", "scheme", "owner", "administrator"});
  const auto origins = graph_.neighbors(src.id, edges::kSourceOfStream, Direction::out);
  if (!origins.empty()) out["streamOrigin"] = brief(origins.front(), {"name", "type", "location", "owner"});
  return out;
}

Json Catalog::relationships(NodeId dataset, const Caller& who) const {
  require_visible(dataset, who);
  std::vector<std::pair<std::string, Json>> rows;
  for (const Node& rel : graph_.neighbors(dataset, edges::kAnalysisDsDataset, Direction::in)) {
    if (rel.flag("superseded")) continue;
    std::optional<Node> other;
    for (const Node& d : graph_.neighbors(rel.id, edges::kAnalysisDsDataset, Direction::out)) {
      if (d.id != dataset) other = d;
    }
    if (!other || !visible(other->id, who)) continue;
    Json row = {{"id", rel.id.str()},
                {"other", {{"id", other->id.str()}, {"name", other->text("name")}}},
                {"kind", rel.text("kind")},
                {"value", rel.decimal("value").value_or(0.0)},
                {"manual", rel.flag("manual")},
                {"props", codec::encode(rel.props)}};
    if (const Value* n = rel.find("name")) row["name"] = n->to_string();
    if (const Value* d = rel.find("description")) row["description"] = d->to_string();
    rows.emplace_back(other->text("name") + "\x1f" + rel.id.str(), std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Json out = Json::array();
  for (auto& [k, row] : rows) out.push_back(std::move(row));
  return out;
}

Json Catalog::stats() const {
  const GraphStats s = graph_.stats();
  return {{"nodes", s.nodes},
          {"edges", s.edges},
          {"totalNodes", s.node_total()},
          {"totalEdges", s.edge_total()}};
}

Json Catalog::global_dict() const {
  Json out = Json::array();
  auto entries = graph_.query(NodeLabel::GlobalDictEntry);
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Node& a, const Node& b) { return a.text("key") < b.text("key"); });
  for (const Node& e : entries) {
    out.push_back({{"id", e.id.str()}, {"key", e.text("key")}, {"value", e.text("value")}});
  }
  return out;
}

NodeId put_global_dict(GraphStore& graph, const std::string& key, const std::string& value) {
  if (key.empty()) throw InvalidArgument("global dictionary key must be nonempty");
  return graph.write([&](GraphStore::Tx& tx) {
    auto found = tx.query(NodeLabel::GlobalDictEntry, [&](const Node& n) { return n.text("key") == key; });
    if (!found.empty()) {
      tx.set_props(found.front().id, {{"value", value}});
      return found.front().id;
    }
    return tx.put_node(NodeLabel::GlobalDictEntry, {{"key", key}, {"value", value}});
  });
}

}  // namespace lakecat::catalog
