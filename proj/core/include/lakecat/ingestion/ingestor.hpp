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

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lakecat/clock.hpp"
#include "lakecat/graph/store.hpp"
#include "lakecat/ingestion/raw_zone.hpp"
#include "lakecat/ingestion/source.hpp"

namespace lakecat::ingestion {

enum class IngestMode { batch, realtime, onetime };

/// "batch", "real-time", "one-time" (the stored Ingest.mode values).
std::string_view to_string(IngestMode m) noexcept;
/// Also accepts "realtime" and "onetime".
std::optional<IngestMode> parse_ingest_mode(std::string_view text) noexcept;

using Seconds = std::chrono::duration<double>;

struct SourceSpec {
  SourceConnection connection;
  std::string type;  // "csv file", "database", "images", "stream", ...
  std::string name;
  std::string owner;
  std::optional<std::string> administrator;
  std::optional<NodeId> stream_origin;
};

struct IngestRequest {
  NodeId source;
  IngestMode mode = IngestMode::batch;
  std::string comment;
  std::string user = "system";
  std::optional<Seconds> defined_duration;  // required iff mode == realtime
};

struct IngestOutcome {
  enum class Status { succeeded, unchanged, failed };

  NodeId ingest;
  std::optional<NodeId> dataset;
  int version = 0;
  Status status = Status::succeeded;
  std::string content_hash;
  std::string error;
};

std::string_view to_string(IngestOutcome::Status s) noexcept;

struct IngestSettings {
  std::string source_code_url = "urn:lakecat:ingestor";
  std::string tool_version;
  std::string config_hash;
  std::map<std::string, int, std::less<>> clearances;  // user name -> clearance
};

/// Called after a DatalakeDataset is created (profiling hangs off this).
/// An exception thrown here is appended to the Ingest's errorLog.
using DatasetHook = std::function<void(NodeId dataset, NodeId ingest)>;

/// Source connection, raw-zone copy, and Ingest / DatalakeDataset
/// instantiation for batch, real-time (polling micro-batches) and one-time
/// loads.
class Ingestor {
 public:
  Ingestor(GraphStore& graph, RawZone& raw, IngestSettings settings,
           Clock& clock = system_clock());

  void on_dataset(DatasetHook hook) { hook_ = std::move(hook); }

  /// Creates the DatasetSource when the location answers; otherwise returns
  /// nullopt and creates nothing. Malformed specs throw InvalidArgument.
  std::optional<NodeId> connect_data_source(const SourceSpec& spec);

  /// One ingestion run. Precondition violations throw InvalidArgument;
  /// runtime failures (source gone, raw zone unwritable) produce a failed
  /// Ingest node with errorLog and no dataset.
  IngestOutcome ingest_dataset(const IngestRequest& req);

  /// `window_count` micro-batches spaced `defined_duration` apart. A window
  /// whose content digest matches the last version records a no-op Ingest.
  /// A failed window ends the run.
  std::vector<IngestOutcome> run_realtime(NodeId source, Seconds defined_duration,
                                          int window_count, const std::string& user,
                                          const std::string& comment = {});

  /// True iff the source's current digest differs from `last_content_hash`.
  /// Throws StorageError when unreachable.
  bool detect_change(NodeId source, std::string_view last_content_hash);

  /// contentHash of the newest dataset version produced from `source`.
  std::optional<std::string> latest_content_hash(NodeId source) const;

  NodeId ensure_user(const std::string& name);

  static SourceConnection connection_of(const Node& source);

 private:
  IngestOutcome run_once(const IngestRequest& req, const std::optional<std::string>& last_hash);
  Node require_source(NodeId id) const;
  NodeId record_ingest(const IngestRequest& req, Timestamp start, Timestamp end,
                       Properties extra, const std::string& output_log,
                       const std::string& error_log, const std::string& status);

  GraphStore& graph_;
  RawZone& raw_;
  IngestSettings settings_;
  Clock& clock_;
  DatasetHook hook_;
};

}  // namespace lakecat::ingestion
