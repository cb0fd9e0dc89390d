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
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lakecat/clock.hpp"
#include "lakecat/config.hpp"
#include "lakecat/lake.hpp"

namespace lakecat::testing {

std::filesystem::path fixtures_dir();
std::filesystem::path corpus_dir();

/// Fresh directory removed on destruction.
class TempDir {
 public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& rel) const { return path_ / rel; }

 private:
  std::filesystem::path path_;
};

void write_file(const std::filesystem::path& p, const std::string& bytes);
std::string read_file(const std::filesystem::path& p);

/// Deterministic clock; sleep_for advances time and fires `on_sleep`.
class FakeClock final : public Clock {
 public:
  explicit FakeClock(Timestamp start = Timestamp{1'700'000'000'000'000}) : now_(start) {}
  Timestamp now() override { return now_; }
  void sleep_for(std::chrono::microseconds d) override {
    now_.micros += d.count();
    ++sleeps;
    if (on_sleep) on_sleep(sleeps);
  }
  void advance(std::chrono::microseconds d) { now_.micros += d.count(); }

  int sleeps = 0;
  std::function<void(int)> on_sleep;

 private:
  Timestamp now_;
};

/// Config rooted in `dir`: store at dir/graph, raw zone at dir/raw.
Config test_config(const std::filesystem::path& dir);

struct CorpusSource {
  std::string name;
  std::string location;  // relative to corpus_dir()
  std::string type;
  std::string owner;
  std::string description;
  std::vector<std::string> tags;
  double credibility = 0.5;
  std::string dataset_type;
  int entities = 0;
  int columns = 0;
};

std::vector<CorpusSource> load_corpus();

struct IngestedCorpus {
  std::map<std::string, NodeId> sources;   // by source name
  std::map<std::string, NodeId> datasets;  // by source name
};

/// Registers, ingests and annotates every corpus source. The config's
/// credibility table is expected to carry the corpus scores.
IngestedCorpus ingest_corpus(Lake& lake, const std::string& user = "curator");

/// Adds the corpus credibility scores to a config.
void add_corpus_credibility(Config& c);

}  // namespace lakecat::testing
