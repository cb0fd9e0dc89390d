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

#include "lakecat/lake.hpp"

namespace lakecat {

namespace {

ingestion::IngestSettings ingest_settings(const Config& c) {
  ingestion::IngestSettings s;
  s.source_code_url = c.source_code_url;
  s.tool_version = LAKECAT_VERSION;
  s.config_hash = c.hash();
  s.clearances = c.users;
  return s;
}

enrichment::EnrichmentSettings enrichment_settings(const Config& c) {
  enrichment::EnrichmentSettings s;
  s.weights = c.veracity_weights;
  s.credibility = c.credibility;
  s.default_credibility = c.default_credibility;
  s.clearances = c.users;
  return s;
}

}  // namespace

Lake::Lake(const Config& config, GraphStore graph, bool writable, Clock& clock)
    : config_(config),
      graph_(std::move(graph)),
      raw_(config.raw_zone),
      ingestor_(graph_, raw_, ingest_settings(config), clock),
      profiler_(graph_, config.raw_zone),
      linker_(graph_, profiler_, linker::LinkerSettings{config.minhash_k, config.seed}),
      enrichment_(graph_, enrichment_settings(config), clock),
      catalog_(graph_, config.users) {
  if (writable) {
    profiler::seed_relationship_att(graph_, config_.attribute_thresholds);
    linker::seed_relationship_ds(graph_, config_.dataset_thresholds);
    enrichment_.seed_sensitivity_levels(config_.sensitivity_levels);
  }
  ingestor_.on_dataset([this](NodeId dataset, NodeId) {
    if (!profiler_.profile_dataset(dataset).error) enrichment_.compute_veracity(dataset);
  });
}

std::unique_ptr<Lake> Lake::open(const Config& config, OpenMode mode, Clock& clock) {
  config.validate();
  return std::unique_ptr<Lake>(
      new Lake(config, GraphStore::open(config.store, mode), mode == OpenMode::read_write, clock));
}

std::unique_ptr<Lake> Lake::attach(const Config& config, GraphStore graph, Clock& clock) {
  config.validate();
  return std::unique_ptr<Lake>(new Lake(config, std::move(graph), true, clock));
}

}  // namespace lakecat
