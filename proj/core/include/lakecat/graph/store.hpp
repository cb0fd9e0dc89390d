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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "lakecat/graph/types.hpp"

namespace lakecat {

enum class Direction { out, in, both };

enum class OpenMode { read_write, read_only };

struct GraphStats {
  std::map<std::string, std::size_t> nodes;  // every registered label, zeros included
  std::map<std::string, std::size_t> edges;  // every registered edge label

  std::size_t node_total() const;
  std::size_t edge_total() const;
  std::size_t nodes_of(NodeLabel label) const;
  std::size_t edges_of(std::string_view label) const;

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

using NodePredicate = std::function<bool(const Node&)>;

/// Embedded typed property graph.
///
/// Every mutation is appended to `<dir>/events.log` as one canonical JSON
/// record before it becomes visible. `snapshot()` writes `<dir>/snapshot.json`;
/// `open()` loads the snapshot and replays the log tail behind it.
///
/// One writer at a time (transact() holds the writer lock for its whole
/// callback), any number of concurrent readers. A read-write open also takes
/// an flock() lease on `<dir>/LOCK` so a second process cannot write.
class GraphStore {
 public:
  struct Impl;

  /// Exclusive writer view handed to transact(). Reads inside see the
  /// writer's own mutations.
  class Tx {
   public:
    NodeId put_node(NodeLabel label, Properties props);
    EdgeId put_edge(std::string_view label, NodeId from, NodeId to);
    void set_props(NodeId node, Properties props);

    std::optional<Node> node(NodeId id) const;
    Node get(NodeId id) const;
    std::vector<Node> query(NodeLabel label, const NodePredicate& pred = {}) const;
    std::vector<Node> neighbors(NodeId node, std::string_view edge_label, Direction dir) const;
    std::vector<Edge> edges_of(NodeId node, std::string_view edge_label, Direction dir) const;

   private:
    friend class GraphStore;
    explicit Tx(Impl& impl) : impl_(&impl) {}
    Impl* impl_;
  };

  static GraphStore open(const std::filesystem::path& dir, OpenMode mode = OpenMode::read_write);
  static GraphStore in_memory();

  GraphStore(GraphStore&&) noexcept;
  GraphStore& operator=(GraphStore&&) noexcept;
  ~GraphStore();

  NodeId put_node(NodeLabel label, Properties props);
  EdgeId put_edge(std::string_view label, NodeId from, NodeId to);
  void set_props(NodeId node, Properties props);

  std::optional<Node> node(NodeId id) const;
  /// Throws NotFound.
  Node get(NodeId id) const;
  /// Nodes with `label` accepted by `pred`, in NodeId order.
  std::vector<Node> query(NodeLabel label, const NodePredicate& pred = {}) const;
  std::vector<Node> neighbors(NodeId node, std::string_view edge_label, Direction dir) const;
  std::vector<Edge> edges_of(NodeId node, std::string_view edge_label, Direction dir) const;
  GraphStats stats() const;

  /// Runs `fn` holding the writer lock; a check-then-create inside is atomic
  /// with respect to other writers.
  void transact(const std::function<void(Tx&)>& fn);

  template <typename F>
  auto write(F&& fn) {
    using R = std::invoke_result_t<F&, Tx&>;
    if constexpr (std::is_void_v<R>) {
      transact([&](Tx& tx) { fn(tx); });
    } else {
      std::optional<R> out;
      transact([&](Tx& tx) { out.emplace(fn(tx)); });
      return std::move(*out);
    }
  }

  /// Full node/edge dump in canonical encoding.
  std::string canonical_dump() const;
  /// Writes `<dir>/snapshot.json` atomically.
  void snapshot();
  /// Writes a snapshot document to an arbitrary path.
  void write_snapshot(const std::filesystem::path& path) const;
  std::string snapshot_document() const;

  /// Referential-integrity and registry-closure violations found by a full scan.
  std::vector<std::string> check_integrity() const;

  std::uint64_t last_seq() const;
  const std::vector<std::string>& warnings() const;
  bool persistent() const;
  const std::filesystem::path& directory() const;

 private:
  explicit GraphStore(std::unique_ptr<Impl> impl);
  std::unique_ptr<Impl> impl_;
};

}  // namespace lakecat
