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

#include "lakecat/linker/linker.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include "lakecat/error.hpp"
#include "lakecat/graph/registry.hpp"
#include "lakecat/linker/measures.hpp"

namespace lakecat::linker {

namespace {

// Tie-break order for the dominant kind of a pair.
constexpr std::array<std::string_view, 4> kPriority{kinds::kSimilarity, kinds::kContainment,
                                                    kinds::kCorrelation, kinds::kLogicalCluster};

std::string_view prop_name(std::string_view kind) {
  if (kind == kinds::kLogicalCluster) return "logicalCluster";
  return kind;
}

std::string pair_key(NodeId a, NodeId b) {
  if (b < a) std::swap(a, b);
  return "auto|" + a.str() + "|" + b.str();
}

std::vector<Node> by_position(std::vector<Node> nodes) {
  std::stable_sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) {
    return a.integer("position").value_or(0) < b.integer("position").value_or(0);
  });
  return nodes;
}

}  // namespace

struct Linker::Digest {
  NodeId id;
  bool tabular = false;
  std::vector<std::uint64_t> rows;  // sorted, distinct
  std::unordered_set<std::uint64_t> row_set;
  MinHashSignature sig;
  struct Entity {
    std::size_t row_count = 0;
    std::vector<profiler::ColumnProfile> columns;
    std::vector<NodeId> attributes;  // by position, may be empty when unprofiled
  };
  std::vector<Entity> entities;
  std::set<std::string> tags;
};

Thresholds default_dataset_thresholds() {
  return {{std::string(kinds::kSimilarity), 0.3},
          {std::string(kinds::kContainment), 0.5},
          {std::string(kinds::kCorrelation), 0.7},
          {std::string(kinds::kLogicalCluster), 0.5}};
}

std::vector<DatasetKind> seed_relationship_ds(GraphStore& graph, const Thresholds& thresholds) {
  for (const auto& [name, t] : thresholds) {
    if (!(t >= 0.0 && t <= 1.0)) throw InvalidArgument("threshold for " + name + " outside [0, 1]");
  }
  graph.transact([&](GraphStore::Tx& tx) {
    for (const auto& [name, t] : thresholds) {
      auto found = tx.query(NodeLabel::RelationshipDS,
                            [&](const Node& n) { return n.text("name") == name; });
      if (found.empty()) {
        tx.put_node(NodeLabel::RelationshipDS, {{"name", name},
                                                {"description", "detected automatically"},
                                                {"threshold", t},
                                                {"predefined", true}});
      } else if (found.front().decimal("threshold") != t) {
        tx.set_props(found.front().id, {{"threshold", t}});
      }
    }
  });
  return relationship_ds_registry(graph);
}

std::vector<DatasetKind> relationship_ds_registry(const GraphStore& graph) {
  std::vector<DatasetKind> out;
  for (const Node& n : graph.query(NodeLabel::RelationshipDS)) {
    out.push_back({n.id, n.text("name"), n.decimal("threshold").value_or(0.0)});
  }
  return out;
}

std::set<std::string> dataset_tags(const GraphStore& graph, NodeId dataset) {
  std::set<std::string> out;
  for (const Node& t : graph.neighbors(dataset, edges::kDatasetTag, Direction::out)) {
    out.insert(case_fold(t.text("name")));
  }
  return out;
}

std::optional<double> PairScores::of(std::string_view kind) const {
  if (kind == kinds::kSimilarity) return similarity;
  if (kind == kinds::kContainment) return containment;
  if (kind == kinds::kCorrelation) return correlation;
  if (kind == kinds::kLogicalCluster) return logical_cluster;
  return std::nullopt;
}

Linker::Linker(GraphStore& graph, const profiler::Profiler& profiler, LinkerSettings settings)
    : graph_(graph), profiler_(profiler), settings_(settings) {}

Linker::Digest Linker::digest(const Node& ds) const {
  Digest d;
  d.id = ds.id;
  d.tags = dataset_tags(graph_, ds.id);
  const auto type = profiler::parse_dataset_type(ds.text("type"));
  if (!type || *type == profiler::DatasetType::unstructured) return d;

  const auto tables = profiler_.load_tables(ds);
  const auto entity_nodes = by_position(graph_.neighbors(ds.id, edges::kDatasetEntity, Direction::out));
  d.tabular = true;
  for (std::size_t t = 0; t < tables.size(); ++t) {
    const auto& table = tables[t];
    Digest::Entity e;
    e.row_count = table.row_count;
    for (const auto& c : table.columns) e.columns.push_back(profiler::ColumnProfile::of(c));
    if (t < entity_nodes.size()) {
      for (const Node& a : by_position(graph_.neighbors(entity_nodes[t].id, edges::kEntityAttribute,
                                                        Direction::out))) {
        e.attributes.push_back(a.id);
      }
    }
    std::vector<std::string_view> cells(table.columns.size());
    for (std::size_t r = 0; r < table.row_count; ++r) {
      for (std::size_t c = 0; c < table.columns.size(); ++c) {
        const auto& cell = table.columns[c].cells[r];
        cells[c] = cell ? std::string_view(*cell) : std::string_view();
      }
      d.row_set.insert(row_hash(cells));
    }
    d.entities.push_back(std::move(e));
  }
  d.rows.assign(d.row_set.begin(), d.row_set.end());
  std::sort(d.rows.begin(), d.rows.end());
  d.sig = minhash(d.rows, settings_.minhash_k, settings_.seed);
  return d;
}

std::vector<std::uint64_t> Linker::row_hash_set(NodeId dataset) const {
  const Node ds = graph_.get(dataset);
  const auto type = profiler::parse_dataset_type(ds.text("type"));
  if (!type || *type == profiler::DatasetType::unstructured) {
    throw NotApplicable("row hashes need a structured or semi-structured dataset");
  }
  return digest(ds).rows;
}

MinHashSignature Linker::signature(NodeId dataset) const {
  return minhash(row_hash_set(dataset), settings_.minhash_k, settings_.seed);
}

double Linker::tag_jaccard(NodeId a, NodeId b) const {
  return linker::tag_jaccard(dataset_tags(graph_, a), dataset_tags(graph_, b));
}

PairScores Linker::score(NodeId a, NodeId b) const {
  return score(digest(graph_.get(a)), digest(graph_.get(b)));
}

PairScores Linker::score(const Digest& a, const Digest& b) const {
  PairScores s;
  s.logical_cluster = linker::tag_jaccard(a.tags, b.tags);
  if (!a.tabular || !b.tabular || a.rows.empty() || b.rows.empty()) return s;
  s.similarity = estimate_jaccard(a.sig, b.sig);
  s.containment = std::max(exact_containment(a.row_set, b.row_set),
                           exact_containment(b.row_set, a.row_set));
  for (const auto& ea : a.entities) {
    for (const auto& eb : b.entities) {
      if (ea.row_count != eb.row_count || ea.row_count < 2) continue;
      for (const auto& ca : ea.columns) {
        for (const auto& cb : eb.columns) {
          const auto r = profiler::measure_pair(ca, cb, profiler::kinds::kCorrelation);
          if (r) s.correlation = std::max(s.correlation.value_or(0.0), std::abs(*r));
        }
      }
    }
  }
  return s;
}

std::vector<NodeId> Linker::calculate_relationships(NodeId dataset) {
  const Node self = graph_.get(dataset);
  if (self.label != NodeLabel::DatalakeDataset) throw InvalidArgument(dataset.str() + " is not a dataset");
  if (!self.flag("profiled")) throw InvalidArgument("dataset " + dataset.str() + " is not profiled");

  const auto ds_kinds = relationship_ds_registry(graph_);
  std::map<std::string, DatasetKind, std::less<>> kind_by_name;
  for (const auto& k : ds_kinds) kind_by_name.emplace(k.name, k);
  std::vector<profiler::AttributeKind> att_kinds;
  for (const auto& k : profiler::relationship_att_registry(graph_)) {
    if (k.name == profiler::kinds::kNameSimilarity || k.name == profiler::kinds::kContainment) {
      att_kinds.push_back(k);
    }
  }
  const auto similarity_kind = kind_by_name.find(kinds::kSimilarity);

  const Digest mine = digest(self);
  struct Planned {
    NodeId other;
    PairScores scores;
    const DatasetKind* chosen = nullptr;
    double value = 0;
    std::vector<std::tuple<NodeId, NodeId, const profiler::AttributeKind*, double>> attribute_hits;
  };
  std::vector<Planned> plan;
  for (const Node& other : graph_.query(NodeLabel::DatalakeDataset)) {
    if (other.id == dataset || !other.flag("profiled")) continue;
    const Digest theirs = digest(other);
    Planned p;
    p.other = other.id;
    p.scores = score(mine, theirs);
    for (std::string_view name : kPriority) {
      auto kit = kind_by_name.find(name);
      const auto v = p.scores.of(name);
      if (kit == kind_by_name.end() || !v || *v < kit->second.threshold) continue;
      if (!p.chosen || *v > p.value) {
        p.chosen = &kit->second;
        p.value = *v;
      }
    }
    const bool similar = similarity_kind != kind_by_name.end() && p.scores.similarity &&
                         *p.scores.similarity >= similarity_kind->second.threshold;
    if (similar) {
      for (const auto& ea : mine.entities) {
        for (const auto& eb : theirs.entities) {
          if (ea.attributes.size() != ea.columns.size() || eb.attributes.size() != eb.columns.size()) {
            continue;
          }
          for (std::size_t i = 0; i < ea.columns.size(); ++i) {
            for (std::size_t j = 0; j < eb.columns.size(); ++j) {
              for (const auto& k : att_kinds) {
                const auto v = profiler::measure_pair(ea.columns[i], eb.columns[j], k.name);
                if (v && std::abs(*v) >= k.threshold) {
                  p.attribute_hits.emplace_back(ea.attributes[i], eb.attributes[j], &k, *v);
                }
              }
            }
          }
        }
      }
    }
    plan.push_back(std::move(p));
  }

  return graph_.write([&](GraphStore::Tx& tx) {
    std::vector<NodeId> current;
    for (const Planned& p : plan) {
      const std::string key = pair_key(dataset, p.other);
      auto existing = tx.query(NodeLabel::AnalysisDSRelationship, [&](const Node& n) {
        return n.text("key") == key && !n.flag("superseded");
      });
      std::optional<Node> live;
      if (!existing.empty()) live = existing.front();

      if (!p.chosen) {
        if (live) tx.set_props(live->id, {{"superseded", true}});
      } else {
        Properties props{{"value", p.value}, {"kind", p.chosen->name}};
        for (std::string_view name : kPriority) {
          if (const auto v = p.scores.of(name)) props.emplace(std::string(prop_name(name)), *v);
        }
        if (live && live->text("kind") == p.chosen->name) {
          tx.set_props(live->id, std::move(props));
          current.push_back(live->id);
        } else {
          if (live) tx.set_props(live->id, {{"superseded", true}});
          props.emplace("key", key);
          props.emplace("automatic", true);
          const NodeId rel = tx.put_node(NodeLabel::AnalysisDSRelationship, std::move(props));
          tx.put_edge(edges::kAnalysisDsDataset, rel, std::min(dataset, p.other));
          tx.put_edge(edges::kAnalysisDsDataset, rel, std::max(dataset, p.other));
          tx.put_edge(edges::kAnalysisDsKind, rel, p.chosen->id);
          current.push_back(rel);
        }
      }
      for (const auto& [a, b, kind, v] : p.attribute_hits) {
        profiler::record_attribute_analysis(tx, a, b, *kind, v, "cross");
      }
    }
    return current;
  });
}

std::vector<std::vector<NodeId>> Linker::logical_clusters() const {
  double threshold = default_dataset_thresholds().at(std::string(kinds::kLogicalCluster));
  for (const auto& k : relationship_ds_registry(graph_)) {
    if (k.name == kinds::kLogicalCluster) threshold = k.threshold;
  }
  const auto datasets = graph_.query(NodeLabel::DatalakeDataset);
  std::vector<std::set<std::string>> tags;
  for (const Node& ds : datasets) tags.push_back(dataset_tags(graph_, ds.id));

  std::vector<std::size_t> parent(datasets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < datasets.size(); ++i) {
    for (std::size_t j = i + 1; j < datasets.size(); ++j) {
      if (tags[i].empty() && tags[j].empty()) continue;
      if (linker::tag_jaccard(tags[i], tags[j]) >= threshold) parent[find(i)] = find(j);
    }
  }
  std::map<std::size_t, std::vector<NodeId>> groups;
  for (std::size_t i = 0; i < datasets.size(); ++i) groups[find(i)].push_back(datasets[i].id);
  std::vector<std::vector<NodeId>> out;
  for (auto& [root, members] : groups) {
    if (members.size() >= 2) out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lakecat::linker
