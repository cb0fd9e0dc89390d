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

#include <nlohmann/json.hpp>

#include "lakecat/catalog/catalog.hpp"
#include "lakecat/lake.hpp"

namespace lakecat::catalog {

// Mutating operations taking and returning the JSON documents of the HTTP
// API. The CLI drives the same functions. Malformed bodies throw
// InvalidArgument; datasets hidden from the caller throw NotFound.

/// {location, type, name, owner, administrator?, credentialsRef?, streamOrigin?}
/// -> {id}. An unreachable location throws NotFound.
Json add_source(Lake& lake, const Json& body);

/// {mode, comment?, definedDuration?, windows?} -> {runs: [...]}.
/// Real-time ingestion with `windows` runs that many micro-batches.
Json ingest(Lake& lake, NodeId source, const Json& body, const Caller& who);

/// {description?, tags: [...]} -> dataset detail.
Json annotate(Lake& lake, NodeId dataset, const Json& body, const Caller& who);

/// {level, target?} -> {mark, target, level}. The target defaults to the
/// dataset and must otherwise be one of its entities or attributes.
Json mark(Lake& lake, NodeId dataset, const Json& body, const Caller& who);

/// {ds1, ds2, kind, value, name?, description?} -> {id}.
Json relate(Lake& lake, const Json& body, const Caller& who);

/// Runs relationship detection for one dataset -> relationships view.
Json link(Lake& lake, NodeId dataset, const Caller& who);

/// {key, value} -> {id, key, value}.
Json put_dict_entry(Lake& lake, const Json& body);

Json to_json(const ingestion::IngestOutcome& outcome);

}  // namespace lakecat::catalog
