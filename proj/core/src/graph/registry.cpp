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

#include "lakecat/graph/registry.hpp"

#include <algorithm>

namespace lakecat {

namespace {

using L = NodeLabel;

const std::vector<EdgeSignature>& registry() {
  static const std::vector<EdgeSignature> r = {
      {edges::kSourceIngest, {L::DatasetSource}, {L::Ingest}},
      {edges::kIngestDataset, {L::Ingest}, {L::DatalakeDataset}},
      {edges::kIngestUser, {L::Ingest}, {L::User}},
      {edges::kSourceOfStream, {L::DatasetSource}, {L::DatasetSource}},
      {edges::kDatasetTag, {L::DatalakeDataset}, {L::Tag}},
      {edges::kDatasetEntity, {L::DatalakeDataset}, {L::EntityClass}},
      {edges::kEntityAttribute, {L::EntityClass}, {L::NumericAttribute, L::NominalAttribute}},
      {edges::kAnalysisAttAttribute,
       {L::AnalysisAttribute},
       {L::NumericAttribute, L::NominalAttribute}},
      {edges::kAnalysisAttKind, {L::AnalysisAttribute}, {L::RelationshipAtt}},
      {edges::kAnalysisDsDataset, {L::AnalysisDSRelationship}, {L::DatalakeDataset}},
      {edges::kAnalysisDsKind, {L::AnalysisDSRelationship}, {L::RelationshipDS}},
      {edges::kMarkTarget,
       {L::SensitivityMark},
       {L::DatalakeDataset, L::EntityClass, L::NumericAttribute, L::NominalAttribute}},
      {edges::kMarkLevel, {L::SensitivityMark}, {L::SensitivityLevel}},
      {edges::kMarkUser, {L::SensitivityMark}, {L::User}},
      {edges::kDatasetVeracity, {L::DatalakeDataset}, {L::VeracityIndex}},
  };
  return r;
}

}  // namespace

bool EdgeSignature::accepts(NodeLabel from_label, NodeLabel to_label) const noexcept {
  return std::find(from.begin(), from.end(), from_label) != from.end() &&
         std::find(to.begin(), to.end(), to_label) != to.end();
}

std::span<const EdgeSignature> edge_registry() { return registry(); }

const EdgeSignature* find_edge_signature(std::string_view label) noexcept {
  for (const auto& sig : registry()) {
    if (sig.label == label) return &sig;
  }
  return nullptr;
}

}  // namespace lakecat
