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

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "lakecat/graph/store.hpp"
#include "lakecat/users.hpp"

namespace lakecat::catalog {

using Json = nlohmann::json;

struct Caller {
  std::string name;
  int clearance = 0;
};

/// Read-side views shared by the HTTP service and the CLI. Every view
/// filters by the caller's clearance; a dataset the caller may not see is
/// reported as NotFound.
class Catalog {
 public:
  Catalog(const GraphStore& graph, Clearances clearances);

  /// Configured clearance of `name`; unknown or empty names get 0.
  Caller caller(std::string_view name) const;

  bool visible(NodeId dataset, const Caller& who) const;

  /// Case-insensitive substring match on name, description and tag names,
  /// ordered by name then id. An empty keyword lists every visible dataset.
  Json search(std::string_view keyword, const Caller& who) const;

  /// Properties, tags, entities with attribute statistics (redacted above
  /// the caller's clearance) and the veracity index.
  Json dataset_detail(NodeId dataset, const Caller& who) const;

  /// dataset -> Ingest -> DatasetSource -> optional stream origin.
  Json lineage(NodeId dataset, const Caller& who) const;

  /// Current relationships to other visible datasets.
  Json relationships(NodeId dataset, const Caller& who) const;

  Json stats() const;

  Json global_dict() const;

  /// Throws NotFound unless `text` names an existing node.
  static NodeId parse_id(std::string_view text);

 private:
  void require_visible(NodeId dataset, const Caller& who) const;

  const GraphStore& graph_;
  Clearances clearances_;
};

/// Creates or updates the GlobalDictEntry for `key`.
NodeId put_global_dict(GraphStore& graph, const std::string& key, const std::string& value);

}  // namespace lakecat::catalog
