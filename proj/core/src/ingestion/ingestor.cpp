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

#include "lakecat/ingestion/ingestor.hpp"

#include <algorithm>
#include <filesystem>

#include "lakecat/error.hpp"
#include "lakecat/graph/registry.hpp"
#include "lakecat/ingestion/digest.hpp"
#include "lakecat/profiler/tables.hpp"
#include "lakecat/users.hpp"

namespace lakecat::ingestion {

namespace {

std::string slug(std::string_view name) {
  std::string out;
  for (unsigned char c : name) {
    if (std::isalnum(c)) {
      out.push_back(static_cast<char>(std::tolower(c)));
    } else if (!out.empty() && out.back() != '-') {
      out.push_back('-');
    }
  }
  while (!out.empty() && out.back() == '-') out.pop_back();
  return out.empty() ? "dataset" : out;
}

std::string dataset_key(const Node& source) {
  return source.id.str() + "-" + slug(source.text("name"));
}

std::int64_t micros_of(Seconds s) {
  return static_cast<std::int64_t>(s.count() * 1e6);
}

}  // namespace

std::string_view to_string(IngestMode m) noexcept {
  switch (m) {
    case IngestMode::batch: return "batch";
    case IngestMode::realtime: return "real-time";
    case IngestMode::onetime: return "one-time";
  }
  return "?";
}

std::optional<IngestMode> parse_ingest_mode(std::string_view text) noexcept {
  if (text == "batch") return IngestMode::batch;
  if (text == "real-time" || text == "realtime") return IngestMode::realtime;
  if (text == "one-time" || text == "onetime") return IngestMode::onetime;
  return std::nullopt;
}

std::string_view to_string(IngestOutcome::Status s) noexcept {
  switch (s) {
    case IngestOutcome::Status::succeeded: return "succeeded";
    case IngestOutcome::Status::unchanged: return "unchanged";
    case IngestOutcome::Status::failed: return "failed";
  }
  return "?";
}

Ingestor::Ingestor(GraphStore& graph, RawZone& raw, IngestSettings settings, Clock& clock)
    : graph_(graph), raw_(raw), settings_(std::move(settings)), clock_(clock) {}

SourceConnection Ingestor::connection_of(const Node& source) {
  SourceConnection c;
  auto scheme = parse_scheme(source.text("scheme"));
  if (!scheme) throw InvalidArgument("source " + source.id.str() + " has no valid scheme");
  c.scheme = *scheme;
  c.location = source.text("location");
  if (const Value* cred = source.find("credentialsRef")) c.credentials_ref = cred->to_string();
  return c;
}

Node Ingestor::require_source(NodeId id) const {
  auto n = graph_.node(id);
  if (!n) throw NotFound("no source " + id.str());
  if (n->label != NodeLabel::DatasetSource) {
    throw InvalidArgument(id.str() + " is a " + std::string(to_string(n->label)) +
                          ", not a DatasetSource");
  }
  return *n;
}

std::optional<NodeId> Ingestor::connect_data_source(const SourceSpec& spec) {
  if (spec.name.empty()) throw InvalidArgument("source name must be nonempty");
  spec.connection.validate();
  if (spec.stream_origin) {
    auto origin = graph_.node(*spec.stream_origin);
    if (!origin || origin->label != NodeLabel::DatasetSource) {
      throw InvalidArgument("stream origin " + spec.stream_origin->str() +
                            " is not a DatasetSource");
    }
  }
  if (!probe(spec.connection)) return std::nullopt;

  Properties props{
      {"name", spec.name},
      {"type", spec.type},
      {"location", spec.connection.location},
      {"scheme", std::string(to_string(spec.connection.scheme))},
      {"owner", spec.owner},
  };
  if (spec.administrator) props.emplace("administrator", *spec.administrator);
  if (spec.connection.credentials_ref) props.emplace("credentialsRef", *spec.connection.credentials_ref);

  return graph_.write([&](GraphStore::Tx& tx) {
    const NodeId src = tx.put_node(NodeLabel::DatasetSource, std::move(props));
    if (spec.stream_origin) tx.put_edge(edges::kSourceOfStream, src, *spec.stream_origin);
    return src;
  });
}

NodeId Ingestor::ensure_user(const std::string& name) {
  return lakecat::ensure_user(graph_, name, settings_.clearances);
}

std::optional<std::string> Ingestor::latest_content_hash(NodeId source) const {
  std::optional<std::string> hash;
  std::int64_t best = 0;
  for (const Node& ingest : graph_.neighbors(source, edges::kSourceIngest, Direction::out)) {
    for (const Node& ds : graph_.neighbors(ingest.id, edges::kIngestDataset, Direction::out)) {
      const auto v = ds.integer("version").value_or(0);
      if (v > best) {
        best = v;
        hash = ds.text("contentHash");
      }
    }
  }
  return hash;
}

bool Ingestor::detect_change(NodeId source, std::string_view last_content_hash) {
  const Node src = require_source(source);
  const Payload payload = fetch(connection_of(src));
  return content_digest(payload) != last_content_hash;
}

IngestOutcome Ingestor::ingest_dataset(const IngestRequest& req) {
  if (req.mode == IngestMode::realtime) {
    if (!req.defined_duration) {
      throw InvalidArgument("definedDuration is required for real-time ingestion");
    }
    if (req.defined_duration->count() <= 0) throw InvalidArgument("definedDuration must be > 0");
    return run_once(req, latest_content_hash(req.source));
  }
  if (req.defined_duration) {
    throw InvalidArgument("definedDuration is only accepted for real-time ingestion");
  }
  return run_once(req, std::nullopt);
}

std::vector<IngestOutcome> Ingestor::run_realtime(NodeId source, Seconds defined_duration,
                                                  int window_count, const std::string& user,
                                                  const std::string& comment) {
  if (defined_duration.count() <= 0) throw InvalidArgument("definedDuration must be > 0");
  if (window_count < 1) throw InvalidArgument("windowCount must be >= 1");
  require_source(source);

  IngestRequest req{source, IngestMode::realtime, comment, user, defined_duration};
  std::optional<std::string> last = latest_content_hash(source);
  std::vector<IngestOutcome> runs;
  for (int w = 0; w < window_count; ++w) {
    const Timestamp window_start = clock_.now();
    IngestOutcome out = run_once(req, last);
    runs.push_back(out);
    if (out.status == IngestOutcome::Status::failed) break;
    if (out.dataset) last = out.content_hash;
    if (w + 1 < window_count) {
      const std::int64_t elapsed = clock_.now().micros - window_start.micros;
      clock_.sleep_for(std::chrono::microseconds(
          std::max<std::int64_t>(0, micros_of(defined_duration) - elapsed)));
    }
  }
  return runs;
}

NodeId Ingestor::record_ingest(const IngestRequest& req, Timestamp start, Timestamp end,
                               Properties extra, const std::string& output_log,
                               const std::string& error_log, const std::string& status) {
  Properties props{
      {"mode", std::string(to_string(req.mode))},
      {"ingestionStartTime", start},
      {"ingestionEndTime", std::max(start, end)},
      {"sourceCodeURL", settings_.source_code_url},
      {"toolVersion", settings_.tool_version},
      {"configHash", settings_.config_hash},
      {"outputLog", output_log},
      {"errorLog", error_log},
      {"comment", req.comment},
      {"status", status},
  };
  if (req.mode == IngestMode::realtime && req.defined_duration) {
    props.emplace("definedDuration", req.defined_duration->count());
  }
  for (auto& [k, v] : extra) props.insert_or_assign(k, std::move(v));

  const NodeId user = ensure_user(req.user);
  return graph_.write([&](GraphStore::Tx& tx) {
    const NodeId ingest = tx.put_node(NodeLabel::Ingest, std::move(props));
    tx.put_edge(edges::kSourceIngest, req.source, ingest);
    tx.put_edge(edges::kIngestUser, ingest, user);
    return ingest;
  });
}

IngestOutcome Ingestor::run_once(const IngestRequest& req,
                                 const std::optional<std::string>& last_hash) {
  const Node src = require_source(req.source);
  const std::string key = dataset_key(src);

  // Existing versions of this (source, dataset) stream, plus one-time locks.
  int latest_version = 0;
  bool onetime_loaded = false;
  for (const Node& ingest : graph_.neighbors(src.id, edges::kSourceIngest, Direction::out)) {
    const bool ok = ingest.text("status") == "succeeded";
    if (ok && ingest.text("mode") == to_string(IngestMode::onetime)) onetime_loaded = true;
    for (const Node& ds : graph_.neighbors(ingest.id, edges::kIngestDataset, Direction::out)) {
      latest_version = std::max<int>(latest_version, static_cast<int>(ds.integer("version").value_or(0)));
    }
  }
  if (onetime_loaded) {
    throw InvalidArgument("source " + src.id.str() + " was loaded one-time; re-ingestion is disabled");
  }
  if (req.mode == IngestMode::onetime && latest_version > 0) {
    throw InvalidArgument("one-time load requested but source " + src.id.str() +
                          " already has ingested versions");
  }

  IngestOutcome out;
  const Timestamp start = clock_.now();

  Payload payload;
  std::string hash;
  std::string rel;
  const int version = latest_version + 1;
  try {
    payload = fetch(connection_of(src));
    hash = content_digest(payload);
    if (last_hash && *last_hash == hash) {
      out.status = IngestOutcome::Status::unchanged;
      out.content_hash = hash;
      out.ingest = record_ingest(req, start, clock_.now(), {},
                                 "no change detected (contentHash=" + hash + "); window skipped",
                                 "", "unchanged");
      return out;
    }
    rel = raw_.store(key, version, payload);
  } catch (const Error& ex) {
    out.status = IngestOutcome::Status::failed;
    out.error = ex.what();
    out.ingest = record_ingest(req, start, clock_.now(), {}, "", out.error, "failed");
    return out;
  }

  const auto type = profiler::detect_dataset_type(raw_.resolve(rel));
  const Timestamp end = clock_.now();
  const std::string output_log = "stored " + std::to_string(payload.size_bytes()) + " bytes in " +
                                 std::to_string(payload.files.size()) + " file(s) at " + rel +
                                 "; contentHash=" + hash;

  out.ingest = record_ingest(req, start, end, {}, output_log, "", "succeeded");
  out.version = version;
  out.content_hash = hash;
  out.dataset = graph_.write([&](GraphStore::Tx& tx) {
    const NodeId ds = tx.put_node(
        NodeLabel::DatalakeDataset,
        {{"name", src.text("name")},
         {"description", ""},
         {"type", std::string(profiler::to_string(type))},
         {"lakePath", rel},
         {"datasetKey", key},
         {"contentHash", hash},
         {"sizeBytes", static_cast<std::int64_t>(payload.size_bytes())},
         {"version", version},
         {"ingestedAt", end}});
    tx.put_edge(edges::kIngestDataset, out.ingest, ds);
    return ds;
  });

  try {
    raw_.write_manifest(key, version,
                        {{"contentHash", hash},
                         {"sizeBytes", payload.size_bytes()},
                         {"sourceLocation", src.text("location")},
                         {"ingestId", out.ingest.str()},
                         {"datasetId", out.dataset->str()}});
  } catch (const Error& ex) {
    graph_.set_props(out.ingest, {{"errorLog", std::string(ex.what())}});
  }

  if (hook_) {
    try {
      hook_(*out.dataset, out.ingest);
    } catch (const std::exception& ex) {
      const Node ingest = graph_.get(out.ingest);
      std::string log = ingest.text("errorLog");
      if (!log.empty()) log += "\n";
      graph_.set_props(out.ingest, {{"errorLog", log + ex.what()}});
    }
  }
  return out;
}

}  // namespace lakecat::ingestion
