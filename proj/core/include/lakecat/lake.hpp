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

#include <memory>
#include <optional>
#include <vector>

#include "lakecat/catalog/catalog.hpp"
#include "lakecat/clock.hpp"
#include "lakecat/config.hpp"
#include "lakecat/enrichment/enrichment.hpp"
#include "lakecat/graph/store.hpp"
#include "lakecat/ingestion/ingestor.hpp"
#include "lakecat/ingestion/raw_zone.hpp"
#include "lakecat/linker/linker.hpp"
#include "lakecat/profiler/profiler.hpp"

namespace lakecat {

/// Wires the graph store, raw zone and every module from one Config. Each
/// successful ingestion is profiled and scored for veracity before the
/// ingest call returns.
class Lake {
 public:
  /// Opens the persistent store at config.store. A writable lake seeds the
  /// relationship kinds and sensitivity levels from the config.
  static std::unique_ptr<Lake> open(const Config& config, OpenMode mode = OpenMode::read_write,
                                    Clock& clock = system_clock());

  /// Runs on `graph` (e.g. GraphStore::in_memory()).
  static std::unique_ptr<Lake> attach(const Config& config, GraphStore graph,
                                      Clock& clock = system_clock());

  Lake(const Lake&) = delete;
  Lake& operator=(const Lake&) = delete;

  const Config& config() const noexcept { return config_; }
  GraphStore& graph() noexcept { return graph_; }
  const GraphStore& graph() const noexcept { return graph_; }
  ingestion::RawZone& raw_zone() noexcept { return raw_; }
  ingestion::Ingestor& ingestor() noexcept { return ingestor_; }
  profiler::Profiler& profiler() noexcept { return profiler_; }
  linker::Linker& linker() noexcept { return linker_; }
  enrichment::Enrichment& enrichment() noexcept { return enrichment_; }
  catalog::Catalog& catalog() noexcept { return catalog_; }
  const catalog::Catalog& catalog() const noexcept { return catalog_; }

 private:
  Lake(const Config& config, GraphStore graph, bool writable, Clock& clock);

  Config config_;
  GraphStore graph_;
  ingestion::RawZone raw_;
  ingestion::Ingestor ingestor_;
  profiler::Profiler profiler_;
  linker::Linker linker_;
  enrichment::Enrichment enrichment_;
  catalog::Catalog catalog_;
};

}  // namespace lakecat
