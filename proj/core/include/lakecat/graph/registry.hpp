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

#include <span>
#include <string_view>
#include <vector>

#include "lakecat/graph/types.hpp"

namespace lakecat {

/// Bumped whenever an association is added to or removed from the registry.
inline constexpr int kEdgeRegistryVersion = 1;

namespace edges {
inline constexpr std::string_view kSourceIngest = "DatasetSource-Ingest";
inline constexpr std::string_view kIngestDataset = "Ingest-DatalakeDataset";
inline constexpr std::string_view kIngestUser = "Ingest-User";
inline constexpr std::string_view kSourceOfStream = "DatasetSource-SourceOfStream";
inline constexpr std::string_view kDatasetTag = "DatalakeDataset-Tag";
inline constexpr std::string_view kDatasetEntity = "DatalakeDataset-EntityClass";
inline constexpr std::string_view kEntityAttribute = "EntityClass-Attribute";
inline constexpr std::string_view kAnalysisAttAttribute = "AnalysisAttribute-Attribute";
inline constexpr std::string_view kAnalysisAttKind = "AnalysisAttribute-RelationshipAtt";
inline constexpr std::string_view kAnalysisDsDataset = "AnalysisDSRelationship-DatalakeDataset";
inline constexpr std::string_view kAnalysisDsKind = "AnalysisDSRelationship-RelationshipDS";
inline constexpr std::string_view kMarkTarget = "SensitivityMark-Target";
inline constexpr std::string_view kMarkLevel = "SensitivityMark-SensitivityLevel";
inline constexpr std::string_view kMarkUser = "SensitivityMark-User";
inline constexpr std::string_view kDatasetVeracity = "DatalakeDataset-VeracityIndex";
}  // namespace edges

struct EdgeSignature {
  std::string_view label;
  std::vector<NodeLabel> from;
  std::vector<NodeLabel> to;

  bool accepts(NodeLabel from_label, NodeLabel to_label) const noexcept;
};

/// The closed set of associations. Anything else is rejected by the store.
std::span<const EdgeSignature> edge_registry();

const EdgeSignature* find_edge_signature(std::string_view label) noexcept;

}  // namespace lakecat
