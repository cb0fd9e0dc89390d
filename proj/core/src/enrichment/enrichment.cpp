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

#include "lakecat/enrichment/enrichment.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "lakecat/error.hpp"
#include "lakecat/graph/registry.hpp"
#include "lakecat/linker/measures.hpp"

namespace lakecat::enrichment {

namespace {

constexpr double kWeightTolerance = 1e-9;

void require_dataset(const Node& n) {
  if (n.label != NodeLabel::DatalakeDataset) throw InvalidArgument(n.id.str() + " is not a dataset");
}

std::optional<Node> current_mark(const GraphStore& graph, NodeId target) {
  std::optional<Node> best;
  for (const Node& m : graph.neighbors(target, edges::kMarkTarget, Direction::in)) {
    if (m.flag("superseded")) continue;
    if (!best || best->id < m.id) best = m;
  }
  return best;
}

int mark_level(const GraphStore& graph, NodeId target) {
  const auto mark = current_mark(graph, target);
  return mark ? static_cast<int>(mark->integer("level").value_or(0)) : 0;
}

}  // namespace

std::vector<SensitivityLevelDef> default_sensitivity_levels() {
  return {{0, "public"}, {1, "internal"}, {2, "confidential"}, {3, "restricted"}};
}

void VeracityWeights::validate() const {
  for (double w : {objectivity, truthfulness, credibility}) {
    if (!(w >= 0.0 && w <= 1.0)) throw InvalidArgument("veracity weights must lie in [0, 1]");
  }
  if (std::abs(objectivity + truthfulness + credibility - 1.0) > kWeightTolerance) {
    throw InvalidArgument("veracity weights must sum to 1");
  }
}

VeracityScores veracity_composite(double objectivity, double truthfulness, double credibility,
                                  const VeracityWeights& w) {
  w.validate();
  VeracityScores s{objectivity, truthfulness, credibility, 0};
  s.composite = w.objectivity * objectivity + w.truthfulness * truthfulness +
                w.credibility * credibility;
  s.composite = std::clamp(s.composite, 0.0, 1.0);
  return s;
}

std::optional<NodeId> owning_dataset(const GraphStore& graph, NodeId target) {
  const auto node = graph.node(target);
  if (!node) return std::nullopt;
  if (node->label == NodeLabel::DatalakeDataset) return target;
  NodeId entity = target;
  if (is_attribute(node->label)) {
    const auto owners = graph.neighbors(target, edges::kEntityAttribute, Direction::in);
    if (owners.empty()) return std::nullopt;
    entity = owners.front().id;
  } else if (node->label != NodeLabel::EntityClass) {
    return std::nullopt;
  }
  const auto datasets = graph.neighbors(entity, edges::kDatasetEntity, Direction::in);
  if (datasets.empty()) return std::nullopt;
  return datasets.front().id;
}

Enrichment::Enrichment(GraphStore& graph, EnrichmentSettings settings, Clock& clock)
    : graph_(graph), settings_(std::move(settings)), clock_(clock) {
  settings_.weights.validate();
}

void Enrichment::seed_sensitivity_levels(const std::vector<SensitivityLevelDef>& levels) {
  if (std::none_of(levels.begin(), levels.end(), [](const auto& l) { return l.level == 0; })) {
    throw InvalidArgument("sensitivity level 0 must be defined");
  }
  graph_.transact([&](GraphStore::Tx& tx) {
    for (const auto& def : levels) {
      if (def.level < 0) throw InvalidArgument("sensitivity levels must be >= 0");
      auto found = tx.query(NodeLabel::SensitivityLevel,
                            [&](const Node& n) { return n.integer("level") == def.level; });
      if (found.empty()) {
        tx.put_node(NodeLabel::SensitivityLevel, {{"level", def.level}, {"label", def.label}});
      } else if (found.front().text("label") != def.label) {
        tx.set_props(found.front().id, {{"label", def.label}});
      }
    }
  });
}

void Enrichment::annotate_semantics(NodeId dataset, const std::optional<std::string>& description,
                                    const std::vector<std::string>& tags) {
  std::set<std::string> names;
  for (const auto& t : tags) {
    std::string folded = linker::case_fold(t);
    if (!folded.empty()) names.insert(std::move(folded));
  }
  graph_.transact([&](GraphStore::Tx& tx) {
    require_dataset(tx.get(dataset));
    if (description) tx.set_props(dataset, {{"description", *description}});
    std::set<NodeId> linked;
    for (const Node& t : tx.neighbors(dataset, edges::kDatasetTag, Direction::out)) linked.insert(t.id);
    for (const auto& name : names) {
      auto found = tx.query(NodeLabel::Tag, [&](const Node& n) { return n.text("name") == name; });
      const NodeId tag = found.empty() ? tx.put_node(NodeLabel::Tag, {{"name", name}}) : found.front().id;
      if (linked.insert(tag).second) tx.put_edge(edges::kDatasetTag, dataset, tag);
    }
  });
}

NodeId Enrichment::mark_sensitivity(NodeId target, int level, const std::string& user) {
  const Timestamp at = clock_.now();
  return graph_.write([&](GraphStore::Tx& tx) {
    const Node t = tx.get(target);
    if (t.label != NodeLabel::DatalakeDataset && t.label != NodeLabel::EntityClass &&
        !is_attribute(t.label)) {
      throw InvalidArgument("cannot mark a " + std::string(to_string(t.label)) + " node");
    }
    auto levels = tx.query(NodeLabel::SensitivityLevel,
                           [&](const Node& n) { return n.integer("level") == level; });
    if (levels.empty()) throw InvalidArgument("unknown sensitivity level " + std::to_string(level));
    const NodeId who = ensure_user(tx, user, settings_.clearances);
    for (const Node& m : tx.neighbors(target, edges::kMarkTarget, Direction::in)) {
      if (!m.flag("superseded")) tx.set_props(m.id, {{"superseded", true}});
    }
    const NodeId mark = tx.put_node(NodeLabel::SensitivityMark,
                                    {{"level", level}, {"at", at}, {"markedBy", user}});
    tx.put_edge(edges::kMarkTarget, mark, target);
    tx.put_edge(edges::kMarkLevel, mark, levels.front().id);
    tx.put_edge(edges::kMarkUser, mark, who);
    return mark;
  });
}

int own_sensitivity(const GraphStore& graph, NodeId target) { return mark_level(graph, target); }

int effective_sensitivity(const GraphStore& graph, NodeId target) {
  const Node t = graph.get(target);
  int level = mark_level(graph, target);
  if (is_attribute(t.label)) {
    for (const Node& e : graph.neighbors(target, edges::kEntityAttribute, Direction::in)) {
      level = std::max(level, mark_level(graph, e.id));
    }
  }
  if (t.label != NodeLabel::DatalakeDataset) {
    if (const auto ds = owning_dataset(graph, target)) level = std::max(level, mark_level(graph, *ds));
  }
  return level;
}

int Enrichment::own_sensitivity(NodeId target) const { return enrichment::own_sensitivity(graph_, target); }

int Enrichment::effective_sensitivity(NodeId target) const {
  return enrichment::effective_sensitivity(graph_, target);
}

NodeId Enrichment::compute_veracity(NodeId dataset) {
  const Node ds = graph_.get(dataset);
  require_dataset(ds);
  if (!ds.flag("profiled")) throw InvalidArgument("dataset " + dataset.str() + " is not profiled");

  std::int64_t attributes = 0, numeric = 0, cells = 0, nulls = 0;
  for (const Node& e : graph_.neighbors(dataset, edges::kDatasetEntity, Direction::out)) {
    for (const Node& a : graph_.neighbors(e.id, edges::kEntityAttribute, Direction::out)) {
      ++attributes;
      if (a.label == NodeLabel::NumericAttribute) ++numeric;
      cells += a.integer("count").value_or(0);
      nulls += a.integer("nullCount").value_or(0);
    }
  }
  const double objectivity =
      attributes == 0 ? 0.0 : static_cast<double>(numeric) / static_cast<double>(attributes);
  const double truthfulness =
      cells == 0 ? 1.0 : 1.0 - static_cast<double>(nulls) / static_cast<double>(cells);

  double credibility = settings_.default_credibility;
  for (const Node& ingest : graph_.neighbors(dataset, edges::kIngestDataset, Direction::in)) {
    for (const Node& src : graph_.neighbors(ingest.id, edges::kSourceIngest, Direction::in)) {
      auto it = settings_.credibility.find(src.text("name"));
      if (it != settings_.credibility.end()) credibility = it->second;
    }
  }
  const VeracityScores s = veracity_composite(objectivity, truthfulness, credibility, settings_.weights);
  const Timestamp at = clock_.now();
  Properties props{{"objectivity", s.objectivity},
                   {"truthfulness", s.truthfulness},
                   {"credibility", s.credibility},
                   {"composite", s.composite},
                   {"weightObjectivity", settings_.weights.objectivity},
                   {"weightTruthfulness", settings_.weights.truthfulness},
                   {"weightCredibility", settings_.weights.credibility},
                   {"computedAt", at}};

  return graph_.write([&](GraphStore::Tx& tx) {
    const auto existing = tx.neighbors(dataset, edges::kDatasetVeracity, Direction::out);
    if (!existing.empty()) {
      tx.set_props(existing.front().id, std::move(props));
      return existing.front().id;
    }
    const NodeId v = tx.put_node(NodeLabel::VeracityIndex, std::move(props));
    tx.put_edge(edges::kDatasetVeracity, dataset, v);
    return v;
  });
}

NodeId Enrichment::input_relationship(NodeId ds1, NodeId ds2, const std::string& kind,
                                      const std::string& name, const std::string& description,
                                      double value) {
  if (ds1 == ds2) throw InvalidArgument("a dataset cannot be related to itself");
  if (kind.empty()) throw InvalidArgument("relationship kind must be nonempty");
  if (!std::isfinite(value)) throw InvalidArgument("relationship value must be finite");
  return graph_.write([&](GraphStore::Tx& tx) {
    require_dataset(tx.get(ds1));
    require_dataset(tx.get(ds2));
    auto found = tx.query(NodeLabel::RelationshipDS, [&](const Node& n) { return n.text("name") == kind; });
    const NodeId kind_id = found.empty()
                               ? tx.put_node(NodeLabel::RelationshipDS, {{"name", kind},
                                                                         {"description", "user-defined"},
                                                                         {"threshold", 0.0},
                                                                         {"predefined", false}})
                               : found.front().id;
    const NodeId rel = tx.put_node(NodeLabel::AnalysisDSRelationship, {{"value", value},
                                                                       {"kind", kind},
                                                                       {"name", name},
                                                                       {"description", description},
                                                                       {"manual", true}});
    tx.put_edge(edges::kAnalysisDsDataset, rel, ds1);
    tx.put_edge(edges::kAnalysisDsDataset, rel, ds2);
    tx.put_edge(edges::kAnalysisDsKind, rel, kind_id);
    return rel;
  });
}

}  // namespace lakecat::enrichment
