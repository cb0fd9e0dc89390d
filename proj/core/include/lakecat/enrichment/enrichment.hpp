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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lakecat/clock.hpp"
#include "lakecat/graph/store.hpp"
#include "lakecat/users.hpp"

namespace lakecat::enrichment {

struct SensitivityLevelDef {
  int level = 0;
  std::string label;
};

/// 0 public, 1 internal, 2 confidential, 3 restricted.
std::vector<SensitivityLevelDef> default_sensitivity_levels();

struct VeracityWeights {
  double objectivity = 1.0 / 3.0;
  double truthfulness = 1.0 / 3.0;
  double credibility = 1.0 / 3.0;

  /// Throws InvalidArgument unless all weights are in [0, 1] and sum to 1.
  void validate() const;
};

struct VeracityScores {
  double objectivity = 0;
  double truthfulness = 0;
  double credibility = 0;
  double composite = 0;
};

/// Weighted mean of the three components.
VeracityScores veracity_composite(double objectivity, double truthfulness, double credibility,
                                  const VeracityWeights& w);

struct EnrichmentSettings {
  VeracityWeights weights;
  std::map<std::string, double, std::less<>> credibility;  // source name -> score
  double default_credibility = 0.5;
  Clearances clearances;
};

class Enrichment {
 public:
  Enrichment(GraphStore& graph, EnrichmentSettings settings, Clock& clock = system_clock());

  /// Creates SensitivityLevel nodes that are missing. Level 0 must be present.
  void seed_sensitivity_levels(const std::vector<SensitivityLevelDef>& levels);

  /// Sets the description when given and links each tag, reusing the Tag
  /// node with the same case-folded, trimmed name. Blank tags are ignored.
  /// Runs as one writer action, so concurrent annotations never duplicate tags.
  void annotate_semantics(NodeId dataset, const std::optional<std::string>& description,
                          const std::vector<std::string>& tags);

  /// Replaces any current mark on the target (dataset, entity or attribute).
  NodeId mark_sensitivity(NodeId target, int level, const std::string& user);

  /// Level of the target's own current mark, 0 when unmarked.
  int own_sensitivity(NodeId target) const;

  /// Max over the target's mark and the marks of its entity and dataset.
  int effective_sensitivity(NodeId target) const;

  /// Objectivity = numeric share of attributes, truthfulness = 1 - null
  /// ratio, credibility from the source's configured score. Updates the
  /// dataset's VeracityIndex in place. Throws InvalidArgument for an
  /// unprofiled dataset.
  NodeId compute_veracity(NodeId dataset);

  /// Manual relationship, persisted whatever its value. An unknown kind is
  /// registered as a user-defined RelationshipDS.
  NodeId input_relationship(NodeId ds1, NodeId ds2, const std::string& kind,
                            const std::string& name, const std::string& description, double value);

 private:
  GraphStore& graph_;
  EnrichmentSettings settings_;
  Clock& clock_;
};

/// Owning dataset of a dataset, entity or attribute node.
std::optional<NodeId> owning_dataset(const GraphStore& graph, NodeId target);

/// Level of the target's own current mark, 0 when unmarked.
int own_sensitivity(const GraphStore& graph, NodeId target);

/// Max over the target's mark and the marks of its entity and dataset.
int effective_sensitivity(const GraphStore& graph, NodeId target);

}  // namespace lakecat::enrichment
