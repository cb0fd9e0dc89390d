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
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "lakecat/graph/store.hpp"
#include "lakecat/linker/hashing.hpp"
#include "lakecat/profiler/profiler.hpp"

namespace lakecat::linker {

namespace kinds {
inline constexpr std::string_view kSimilarity = "similarity";
inline constexpr std::string_view kContainment = "containment";
inline constexpr std::string_view kCorrelation = "correlation";
inline constexpr std::string_view kLogicalCluster = "logical-cluster";
}  // namespace kinds

using Thresholds = std::map<std::string, double, std::less<>>;

/// similarity 0.3, containment 0.5, correlation 0.7, logical-cluster 0.5.
Thresholds default_dataset_thresholds();

struct DatasetKind {
  NodeId id;
  std::string name;
  double threshold = 0;
};

/// Creates the predefined RelationshipDS kinds that are missing and applies
/// configured thresholds (each in [0, 1]) to existing ones.
std::vector<DatasetKind> seed_relationship_ds(GraphStore& graph, const Thresholds& thresholds);

std::vector<DatasetKind> relationship_ds_registry(const GraphStore& graph);

/// Lower-cased, trimmed tag names attached to a dataset.
std::set<std::string> dataset_tags(const GraphStore& graph, NodeId dataset);

struct LinkerSettings {
  std::size_t minhash_k = kDefaultMinHashK;
  std::uint64_t seed = 42;
};

/// Per-kind values for one dataset pair; absent where the kind does not
/// apply (unstructured data, row counts that never match, ...).
struct PairScores {
  std::optional<double> similarity;
  std::optional<double> containment;
  std::optional<double> correlation;
  std::optional<double> logical_cluster;

  std::optional<double> of(std::string_view kind) const;
};

class Linker {
 public:
  Linker(GraphStore& graph, const profiler::Profiler& profiler, LinkerSettings settings = {});

  /// Sorted distinct row hashes across every entity of the dataset. Throws
  /// NotApplicable for unstructured datasets.
  std::vector<std::uint64_t> row_hash_set(NodeId dataset) const;

  MinHashSignature signature(NodeId dataset) const;

  double tag_jaccard(NodeId a, NodeId b) const;

  PairScores score(NodeId a, NodeId b) const;

  /// Compares `dataset` with every other profiled dataset. Each pair keeps a
  /// single automatic AnalysisDSRelationship carrying the strongest kind that
  /// meets its threshold (ties: similarity, containment, correlation,
  /// logical-cluster) with the remaining values stored alongside. A pair
  /// whose kind changes or no longer qualifies has its earlier node marked
  /// superseded. Pairs passing the similarity threshold also get
  /// cross-dataset attribute analyses. Returns the current relationship nodes.
  std::vector<NodeId> calculate_relationships(NodeId dataset);

  /// Connected components (two or more datasets) of the graph joining
  /// datasets whose tag Jaccard meets the logical-cluster threshold.
  std::vector<std::vector<NodeId>> logical_clusters() const;

 private:
  struct Digest;
  Digest digest(const Node& dataset) const;
  PairScores score(const Digest& a, const Digest& b) const;

  GraphStore& graph_;
  const profiler::Profiler& profiler_;
  LinkerSettings settings_;
};

}  // namespace lakecat::linker
