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

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "lakecat/graph/store.hpp"
#include "lakecat/profiler/tables.hpp"

namespace lakecat::profiler {

namespace kinds {
inline constexpr std::string_view kCorrelation = "correlation";
inline constexpr std::string_view kNameSimilarity = "name-similarity";
inline constexpr std::string_view kValueSimilarity = "value-similarity";
inline constexpr std::string_view kContainment = "containment";
}  // namespace kinds

using Thresholds = std::map<std::string, double, std::less<>>;

/// correlation 0.7, name-similarity 0.8, value-similarity 0.5, containment 0.5.
Thresholds default_attribute_thresholds();

/// A RelationshipAtt node as seen by the analyses.
struct AttributeKind {
  NodeId id;
  std::string name;
  double threshold = 0;
};

/// Creates missing RelationshipAtt nodes and applies configured thresholds
/// to existing ones. Thresholds must lie in [0, 1].
std::vector<AttributeKind> seed_relationship_att(GraphStore& graph, const Thresholds& thresholds);

std::vector<AttributeKind> relationship_att_registry(const GraphStore& graph);

/// Column digest used by the pair measures.
struct ColumnProfile {
  std::string name;
  bool numeric = false;
  std::vector<std::optional<double>> numbers;  // numeric columns only
  std::unordered_set<std::string> distinct;    // nominal columns only

  static ColumnProfile of(const Column& c);
};

/// Value of `kind` for a column pair, or nullopt when the kind does not
/// apply (type mismatch, too few complete rows, constant series, empty sets).
///  correlation       numeric x numeric, Pearson over pairwise-complete rows
///  name-similarity   any x any, 1 - edit distance / longer name
///  value-similarity  nominal x nominal, Jaccard of distinct values
///  containment       nominal x nominal, larger of the two directions
std::optional<double> measure_pair(const ColumnProfile& a, const ColumnProfile& b,
                                   std::string_view kind);

/// Persists an AnalysisAttribute (value, kind, scope) linking two attribute
/// nodes, or updates the one already recorded for the same pair and kind.
NodeId record_attribute_analysis(GraphStore::Tx& tx, NodeId a, NodeId b, const AttributeKind& kind,
                                 double value, std::string_view scope);

struct ProfileResult {
  DatasetType type = DatasetType::unstructured;
  std::vector<NodeId> entities;
  std::size_t attribute_count = 0;
  std::vector<NodeId> analyses;
  std::optional<std::string> format;
  std::optional<std::string> error;
  bool already_profiled = false;
};

class Profiler {
 public:
  Profiler(GraphStore& graph, std::filesystem::path raw_root);

  /// Entities, attributes, statistics and intra-entity analyses for a
  /// structured or semi-structured dataset; the media type for an
  /// unstructured one. Malformed content is reported in the result and on
  /// the dataset's Ingest errorLog, leaving the graph otherwise untouched.
  /// A dataset already profiled is left as is.
  ProfileResult profile_dataset(NodeId dataset);

  /// Re-reads the entity's table and records every pair meeting its kind's
  /// threshold. Existing analyses for the same pair and kind are updated.
  std::vector<NodeId> analyze_attribute_pairs(NodeId entity,
                                              const std::vector<AttributeKind>& registry);

  std::filesystem::path data_path(const Node& dataset) const;

  /// Entities parsed from the dataset's raw bytes. Throws NotApplicable for
  /// unstructured datasets.
  std::vector<EntityTable> load_tables(const Node& dataset) const;

 private:
  GraphStore& graph_;
  std::filesystem::path raw_root_;
};

}  // namespace lakecat::profiler
