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

#include "lakecat/profiler/profiler.hpp"

#include <algorithm>
#include <cmath>

#include "lakecat/error.hpp"
#include "lakecat/graph/registry.hpp"
#include "lakecat/linker/measures.hpp"
#include "lakecat/profiler/format.hpp"
#include "lakecat/profiler/stats.hpp"

namespace fs = std::filesystem;

namespace lakecat::profiler {

namespace {

struct PairHit {
  std::size_t a;
  std::size_t b;
  const AttributeKind* kind;
  double value;
};

std::vector<PairHit> qualifying_pairs(const std::vector<ColumnProfile>& cols,
                                      const std::vector<AttributeKind>& registry) {
  std::vector<PairHit> hits;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    for (std::size_t j = i + 1; j < cols.size(); ++j) {
      for (const auto& kind : registry) {
        const auto v = measure_pair(cols[i], cols[j], kind.name);
        if (v && std::abs(*v) >= kind.threshold) hits.push_back({i, j, &kind, *v});
      }
    }
  }
  return hits;
}

std::string analysis_key(NodeId a, NodeId b, std::string_view kind) {
  if (b < a) std::swap(a, b);
  return a.str() + "|" + b.str() + "|" + std::string(kind);
}

void append_error(GraphStore& graph, NodeId dataset, const std::string& message) {
  for (const Node& ingest : graph.neighbors(dataset, edges::kIngestDataset, Direction::in)) {
    std::string log = ingest.text("errorLog");
    if (!log.empty()) log += "\n";
    graph.set_props(ingest.id, {{"errorLog", log + message}});
  }
  graph.set_props(dataset, {{"profileError", message}});
}

std::vector<Node> by_position(std::vector<Node> nodes) {
  std::stable_sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
    return a.integer("position").value_or(0) < b.integer("position").value_or(0);
  });
  return nodes;
}

}  // namespace

Thresholds default_attribute_thresholds() {
  return {{std::string(kinds::kCorrelation), 0.7},
          {std::string(kinds::kNameSimilarity), 0.8},
          {std::string(kinds::kValueSimilarity), 0.5},
          {std::string(kinds::kContainment), 0.5}};
}

std::vector<AttributeKind> seed_relationship_att(GraphStore& graph, const Thresholds& thresholds) {
  for (const auto& [name, t] : thresholds) {
    if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("threshold for " + name + " outside [0, 1]");
  }
  graph.transact([&](GraphStore::Tx& tx) {
    for (const auto& [name, t] : thresholds) {
      auto found = tx.query(NodeLabel::RelationshipAtt,
                            [&](const Node& n) { return n.text("name") == name; });
      if (found.empty()) {
        tx.put_node(NodeLabel::RelationshipAtt, {{"name", name}, {"threshold", t}});
      } else if (found.front().decimal("threshold") != t) {
        tx.set_props(found.front().id, {{"threshold", t}});
      }
    }
  });
  return relationship_att_registry(graph);
}

std::vector<AttributeKind> relationship_att_registry(const GraphStore& graph) {
  std::vector<AttributeKind> out;
  for (const Node& n : graph.query(NodeLabel::RelationshipAtt)) {
    out.push_back({n.id, n.text("name"), n.decimal("threshold").value_or(0.0)});
  }
  return out;
}

ColumnProfile ColumnProfile::of(const Column& c) {
  ColumnProfile p;
  p.name = c.name;
  p.numeric = is_numeric(c);
  if (p.numeric) {
    p.numbers = numeric_values(c);
  } else {
    for (const auto& cell : c.cells) {
      if (cell) p.distinct.insert(*cell);
    }
  }
  return p;
}

std::optional<double> measure_pair(const ColumnProfile& a, const ColumnProfile& b,
                                   std::string_view kind) {
  if (kind == kinds::kNameSimilarity) return linker::name_similarity(a.name, b.name);
  if (kind == kinds::kCorrelation) {
    if (!a.numeric || !b.numeric || a.numbers.size() != b.numbers.size()) return std::nullopt;
    std::vector<double> x, y;
    for (std::size_t i = 0; i < a.numbers.size(); ++i) {
      if (a.numbers[i] && b.numbers[i]) {
        x.push_back(*a.numbers[i]);
        y.push_back(*b.numbers[i]);
      }
    }
    try {
      return linker::pearson(x, y);
    } catch (const InvalidArgument&) {
      return std::nullopt;
    }
  }
  if (a.numeric || b.numeric || a.distinct.empty() || b.distinct.empty()) return std::nullopt;
  if (kind == kinds::kValueSimilarity) return linker::jaccard(a.distinct, b.distinct);
  if (kind == kinds::kContainment) {
    return std::max(linker::exact_containment(a.distinct, b.distinct),
                    linker::exact_containment(b.distinct, a.distinct));
  }
  return std::nullopt;
}

NodeId record_attribute_analysis(GraphStore::Tx& tx, NodeId a, NodeId b, const AttributeKind& kind,
                                 double value, std::string_view scope) {
  const std::string key = analysis_key(a, b, kind.name);
  auto existing = tx.query(NodeLabel::AnalysisAttribute,
                           [&](const Node& n) { return n.text("key") == key; });
  if (!existing.empty()) {
    tx.set_props(existing.front().id, {{"value", value}});
    return existing.front().id;
  }
  const NodeId node = tx.put_node(NodeLabel::AnalysisAttribute, {{"value", value},
                                                                 {"kind", kind.name},
                                                                 {"scope", std::string(scope)},
                                                                 {"key", key}});
  tx.put_edge(edges::kAnalysisAttAttribute, node, std::min(a, b));
  tx.put_edge(edges::kAnalysisAttAttribute, node, std::max(a, b));
  tx.put_edge(edges::kAnalysisAttKind, node, kind.id);
  return node;
}

Profiler::Profiler(GraphStore& graph, fs::path raw_root)
    : graph_(graph), raw_root_(std::move(raw_root)) {}

fs::path Profiler::data_path(const Node& dataset) const {
  const std::string rel = dataset.text("lakePath");
  if (rel.empty()) throw InvalidArgument("dataset " + dataset.id.str() + " has no lakePath");
  return raw_root_ / rel;
}

std::vector<EntityTable> Profiler::load_tables(const Node& dataset) const {
  const fs::path path = data_path(dataset);
  auto type = parse_dataset_type(dataset.text("type"));
  if (!type) type = detect_dataset_type(path);
  return load_entities(path, *type, dataset.text("name"));
}

ProfileResult Profiler::profile_dataset(NodeId dataset) {
  const Node ds = graph_.get(dataset);
  if (ds.label != NodeLabel::DatalakeDataset) {
    throw InvalidArgument(dataset.str() + " is not a DatalakeDataset");
  }
  ProfileResult result;
  const fs::path path = data_path(ds);
  if (ds.flag("profiled")) {
    result.already_profiled = true;
    result.type = parse_dataset_type(ds.text("type")).value_or(DatasetType::unstructured);
    for (const Node& e : graph_.neighbors(dataset, edges::kDatasetEntity, Direction::out)) {
      result.entities.push_back(e.id);
      result.attribute_count += static_cast<std::size_t>(e.integer("attributeCount").value_or(0));
    }
    if (const auto* f = ds.find("format")) result.format = f->text();
    return result;
  }

  std::vector<EntityTable> tables;
  try {
    auto type = parse_dataset_type(ds.text("type"));
    result.type = type ? *type : detect_dataset_type(path);
    if (result.type == DatasetType::unstructured) {
      result.format = get_dataset_format(path);
    } else {
      tables = load_entities(path, result.type, ds.text("name"));
    }
  } catch (const Error& ex) {
    result.error = std::string("profile: ") + ex.what();
    append_error(graph_, dataset, *result.error);
    return result;
  }

  if (result.type == DatasetType::unstructured) {
    graph_.set_props(dataset, {{"type", std::string(to_string(result.type))},
                               {"format", *result.format},
                               {"profiled", true},
                               {"entityCount", 0},
                               {"attributeCount", 0}});
    return result;
  }

  std::vector<std::vector<ColumnProfile>> profiles(tables.size());
  for (std::size_t t = 0; t < tables.size(); ++t) {
    for (const auto& col : tables[t].columns) profiles[t].push_back(ColumnProfile::of(col));
  }
  const auto registry = relationship_att_registry(graph_);

  graph_.transact([&](GraphStore::Tx& tx) {
    for (std::size_t t = 0; t < tables.size(); ++t) {
      const EntityTable& table = tables[t];
      const NodeId entity =
          tx.put_node(NodeLabel::EntityClass,
                      {{"name", table.name},
                       {"position", static_cast<std::int64_t>(t)},
                       {"rowCount", static_cast<std::int64_t>(table.row_count)},
                       {"attributeCount", static_cast<std::int64_t>(table.columns.size())}});
      tx.put_edge(edges::kDatasetEntity, dataset, entity);
      result.entities.push_back(entity);

      std::vector<NodeId> attrs;
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        const ColumnProfile& prof = profiles[t][c];
        Properties props;
        NodeLabel label;
        if (prof.numeric) {
          label = NodeLabel::NumericAttribute;
          props = to_properties(compute_numeric_stats(prof.numbers));
        } else {
          label = NodeLabel::NominalAttribute;
          props = to_properties(compute_nominal_stats(table.columns[c].cells));
        }
        props.emplace("name", table.columns[c].name);
        props.emplace("position", static_cast<std::int64_t>(c));
        const NodeId attr = tx.put_node(label, std::move(props));
        tx.put_edge(edges::kEntityAttribute, entity, attr);
        attrs.push_back(attr);
      }
      result.attribute_count += attrs.size();

      for (const PairHit& hit : qualifying_pairs(profiles[t], registry)) {
        result.analyses.push_back(record_attribute_analysis(tx, attrs[hit.a], attrs[hit.b],
                                                            *hit.kind, hit.value, "intra"));
      }
    }
    tx.set_props(dataset, {{"type", std::string(to_string(result.type))},
                           {"profiled", true},
                           {"entityCount", static_cast<std::int64_t>(tables.size())},
                           {"attributeCount", static_cast<std::int64_t>(result.attribute_count)}});
  });
  return result;
}

std::vector<NodeId> Profiler::analyze_attribute_pairs(NodeId entity,
                                                      const std::vector<AttributeKind>& registry) {
  const Node e = graph_.get(entity);
  if (e.label != NodeLabel::EntityClass) throw InvalidArgument(entity.str() + " is not an EntityClass");
  const auto owners = graph_.neighbors(entity, edges::kDatasetEntity, Direction::in);
  if (owners.empty()) throw NotFound("entity " + entity.str() + " has no dataset");
  const auto tables = load_tables(owners.front());
  const auto position = static_cast<std::size_t>(e.integer("position").value_or(0));
  if (position >= tables.size()) throw NotFound("entity " + entity.str() + " missing from raw data");

  std::vector<ColumnProfile> cols;
  for (const auto& c : tables[position].columns) cols.push_back(ColumnProfile::of(c));
  const auto attrs = by_position(graph_.neighbors(entity, edges::kEntityAttribute, Direction::out));
  if (attrs.size() != cols.size()) throw InvalidArgument("attribute nodes out of step with raw data");

  return graph_.write([&](GraphStore::Tx& tx) {
    std::vector<NodeId> out;
    for (const PairHit& hit : qualifying_pairs(cols, registry)) {
      out.push_back(record_attribute_analysis(tx, attrs[hit.a].id, attrs[hit.b].id, *hit.kind,
                                              hit.value, "intra"));
    }
    return out;
  });
}

}  // namespace lakecat::profiler
