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

#include "lakecat/graph/store.hpp"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>

#include <spdlog/spdlog.h>

#include "lakecat/error.hpp"
#include "lakecat/graph/codec.hpp"
#include "lakecat/graph/registry.hpp"

namespace fs = std::filesystem;

namespace lakecat {

using codec::EventKind;
using codec::GraphEvent;
using codec::Json;

namespace {

constexpr const char* kLogName = "events.log";
constexpr const char* kSnapshotName = "snapshot.json";
constexpr const char* kLockName = "LOCK";

std::string errno_text() { return std::strerror(errno); }

std::string fold(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

std::size_t GraphStats::node_total() const {
  std::size_t n = 0;
  for (const auto& [_, c] : nodes) n += c;
  return n;
}

std::size_t GraphStats::edge_total() const {
  std::size_t n = 0;
  for (const auto& [_, c] : edges) n += c;
  return n;
}

std::size_t GraphStats::nodes_of(NodeLabel label) const {
  auto it = nodes.find(std::string(to_string(label)));
  return it == nodes.end() ? 0 : it->second;
}

std::size_t GraphStats::edges_of(std::string_view label) const {
  auto it = edges.find(std::string(label));
  return it == edges.end() ? 0 : it->second;
}

struct GraphStore::Impl {
  fs::path dir;
  OpenMode mode = OpenMode::read_write;
  bool persistent = false;

  mutable std::shared_mutex mu;

  std::vector<Node> nodes;  // nodes[i].id == i + 1
  std::vector<Edge> edges;  // edges[i].id == i + 1
  std::vector<std::vector<std::size_t>> out_adj;
  std::vector<std::vector<std::size_t>> in_adj;
  std::array<std::vector<std::size_t>, kNodeLabelCount> by_label;
  std::map<std::string, std::size_t, std::less<>> edge_counts;
  std::uint64_t seq = 0;

  int log_fd = -1;
  int lock_fd = -1;
  off_t log_size = 0;
  std::vector<std::string> warnings;

  ~Impl() {
    if (log_fd >= 0) ::close(log_fd);
    if (lock_fd >= 0) {
      ::flock(lock_fd, LOCK_UN);
      ::close(lock_fd);
    }
  }

  const Node* find(NodeId id) const {
    return id.value >= 1 && id.value <= nodes.size() ? &nodes[id.value - 1] : nullptr;
  }

  const Node& require(NodeId id) const {
    const Node* n = find(id);
    if (n == nullptr) throw NotFound("no node " + id.str());
    return *n;
  }

  void require_writable() const {
    if (mode == OpenMode::read_only) throw StorageError("store opened read-only");
  }

  // Validation shared by the live path and replay.

  void validate_edge(const Edge& e) const {
    const EdgeSignature* sig = find_edge_signature(e.label);
    if (sig == nullptr) throw InvalidArgument("edge label '" + e.label + "' is not registered");
    const Node* from = find(e.from);
    const Node* to = find(e.to);
    if (from == nullptr || to == nullptr) {
      throw InvalidArgument("dangling endpoint for '" + e.label + "': " +
                            (from == nullptr ? e.from.str() : e.to.str()));
    }
    if (!sig->accepts(from->label, to->label)) {
      throw InvalidArgument("edge '" + e.label + "' cannot join " +
                            std::string(to_string(from->label)) + " to " +
                            std::string(to_string(to->label)));
    }
  }

  // Mutations below assume validation already happened.

  void apply_node(Node n) {
    const std::size_t idx = nodes.size();
    by_label[static_cast<std::size_t>(n.label)].push_back(idx);
    nodes.push_back(std::move(n));
    out_adj.emplace_back();
    in_adj.emplace_back();
  }

  void apply_edge(Edge e) {
    const std::size_t idx = edges.size();
    out_adj[e.from.value - 1].push_back(idx);
    in_adj[e.to.value - 1].push_back(idx);
    ++edge_counts[e.label];
    edges.push_back(std::move(e));
  }

  void apply_props(NodeId id, Properties props) {
    Node& n = nodes[id.value - 1];
    for (auto& [k, v] : props) n.props.insert_or_assign(k, std::move(v));
  }

  void append(EventKind kind, Json payload) {
    GraphEvent ev{seq + 1, Timestamp::now(), kind, std::move(payload)};
    if (persistent) {
      std::string line = codec::encode_event(ev);
      line.push_back('\n');
      const char* p = line.data();
      std::size_t left = line.size();
      while (left > 0) {
        const ssize_t w = ::write(log_fd, p, left);
        if (w < 0) {
          if (errno == EINTR) continue;
          const std::string why = errno_text();
          if (::ftruncate(log_fd, log_size) != 0) {
            spdlog::error("could not roll back partial event append: {}", errno_text());
          }
          throw StorageError("event log append failed: " + why);
        }
        p += w;
        left -= static_cast<std::size_t>(w);
      }
      log_size += static_cast<off_t>(line.size());
    }
    seq = ev.seq;
  }

  NodeId put_node(NodeLabel label, Properties props) {
    require_writable();
    Node n{NodeId{nodes.size() + 1}, label, std::move(props)};
    Json payload = codec::encode(n);  // rejects non-finite decimals
    append(EventKind::create_node, std::move(payload));
    const NodeId id = n.id;
    apply_node(std::move(n));
    return id;
  }

  EdgeId put_edge(std::string_view label, NodeId from, NodeId to) {
    require_writable();
    Edge e{EdgeId{edges.size() + 1}, std::string(label), from, to};
    validate_edge(e);
    append(EventKind::create_edge, codec::encode(e));
    const EdgeId id = e.id;
    apply_edge(std::move(e));
    return id;
  }

  void set_props(NodeId id, Properties props) {
    require_writable();
    require(id);
    Json payload{{"id", id.str()}, {"props", codec::encode(props)}};
    append(EventKind::set_props, std::move(payload));
    apply_props(id, std::move(props));
  }

  void replay(const GraphEvent& ev) {
    switch (ev.kind) {
      case EventKind::create_node: {
        Node n = codec::decode_node(ev.payload);
        if (n.id.value != nodes.size() + 1) {
          throw InvalidArgument("node id " + n.id.str() + " out of creation order");
        }
        apply_node(std::move(n));
        break;
      }
      case EventKind::create_edge: {
        Edge e = codec::decode_edge(ev.payload);
        if (e.id.value != edges.size() + 1) {
          throw InvalidArgument("edge id " + e.id.str() + " out of creation order");
        }
        validate_edge(e);
        apply_edge(std::move(e));
        break;
      }
      case EventKind::set_props: {
        if (!ev.payload.contains("id") || !ev.payload["id"].is_string()) {
          throw InvalidArgument("set-props without node id");
        }
        auto id = NodeId::parse(ev.payload["id"].get<std::string>());
        if (!id || find(*id) == nullptr) throw InvalidArgument("set-props on missing node");
        if (!ev.payload.contains("props")) throw InvalidArgument("set-props without props");
        apply_props(*id, codec::decode_properties(ev.payload["props"]));
        break;
      }
    }
    seq = ev.seq;
  }

  std::vector<Node> query(NodeLabel label, const NodePredicate& pred) const {
    std::vector<Node> out;
    for (std::size_t idx : by_label[static_cast<std::size_t>(label)]) {
      if (!pred || pred(nodes[idx])) out.push_back(nodes[idx]);
    }
    return out;
  }

  std::vector<Edge> edges_of(NodeId id, std::string_view label, Direction dir) const {
    require(id);
    std::vector<Edge> out;
    auto collect = [&](const std::vector<std::size_t>& adj) {
      for (std::size_t idx : adj) {
        if (label.empty() || edges[idx].label == label) out.push_back(edges[idx]);
      }
    };
    if (dir != Direction::in) collect(out_adj[id.value - 1]);
    if (dir != Direction::out) collect(in_adj[id.value - 1]);
    std::sort(out.begin(), out.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::vector<Node> neighbors(NodeId id, std::string_view label, Direction dir) const {
    std::vector<NodeId> ids;
    for (const Edge& e : edges_of(id, label, dir)) {
      if (dir != Direction::in && e.from == id) ids.push_back(e.to);
      if (dir != Direction::out && e.to == id) ids.push_back(e.from);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    std::vector<Node> out;
    out.reserve(ids.size());
    for (NodeId n : ids) out.push_back(nodes[n.value - 1]);
    return out;
  }

  Json dump_json() const {
    Json jn = Json::array();
    for (const Node& n : nodes) jn.push_back(codec::encode(n));
    Json je = Json::array();
    for (const Edge& e : edges) je.push_back(codec::encode(e));
    return Json{{"nodes", std::move(jn)}, {"edges", std::move(je)}};
  }

  Json snapshot_json() const {
    Json j = dump_json();
    j["seq"] = seq;
    j["registryVersion"] = kEdgeRegistryVersion;
    return j;
  }

  void load_snapshot(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    Json j = Json::parse(buf.str(), nullptr, false);
    if (j.is_discarded() || !j.is_object() || !j.contains("seq") || !j.contains("nodes") ||
        !j.contains("edges")) {
      throw StorageError("corrupt snapshot " + path.string());
    }
    try {
      for (const auto& jn : j["nodes"]) {
        Node n = codec::decode_node(jn);
        if (n.id.value != nodes.size() + 1) throw InvalidArgument("node ids not dense");
        apply_node(std::move(n));
      }
      for (const auto& je : j["edges"]) {
        Edge e = codec::decode_edge(je);
        if (e.id.value != edges.size() + 1) throw InvalidArgument("edge ids not dense");
        validate_edge(e);
        apply_edge(std::move(e));
      }
    } catch (const InvalidArgument& ex) {
      throw StorageError("corrupt snapshot " + path.string() + ": " + ex.what());
    }
    seq = j["seq"].get<std::uint64_t>();
  }

  void load_log(const fs::path& path) {
    std::string content;
    {
      std::ifstream in(path, std::ios::binary);
      if (!in) return;
      std::stringstream buf;
      buf << in.rdbuf();
      content = buf.str();
    }
    const std::uint64_t snapshot_seq = seq;
    const std::size_t complete = content.rfind('\n') == std::string::npos
                                     ? 0
                                     : content.rfind('\n') + 1;
    if (complete < content.size()) {
      const std::string msg = "truncated partial trailing event-log line (" +
                              std::to_string(content.size() - complete) + " bytes)";
      spdlog::warn("{}: {}", path.string(), msg);
      warnings.push_back(msg);
      if (mode == OpenMode::read_write) {
        fs::resize_file(path, complete);
      }
    }

    std::uint64_t prev = 0;
    std::size_t pos = 0;
    while (pos < complete) {
      const std::size_t nl = content.find('\n', pos);
      const std::string_view line(content.data() + pos, nl - pos);
      pos = nl + 1;
      const std::uint64_t expected = prev + 1;
      GraphEvent ev;
      try {
        ev = codec::decode_event(line);
      } catch (const std::exception& ex) {
        throw CorruptLog(expected, ex.what());
      }
      if (ev.seq != expected) {
        throw CorruptLog(expected, "sequence discontinuity (record claims " +
                                       std::to_string(ev.seq) + ")");
      }
      prev = ev.seq;
      if (ev.seq <= snapshot_seq) continue;
      try {
        replay(ev);
      } catch (const std::exception& ex) {
        throw CorruptLog(ev.seq, ex.what());
      }
    }
    if (prev < snapshot_seq) {
      throw CorruptLog(prev + 1, "event log ends before snapshot seq " +
                                     std::to_string(snapshot_seq));
    }
    log_size = static_cast<off_t>(complete);
  }
};

// ---------------------------------------------------------------------------

GraphStore::GraphStore(std::unique_ptr<Impl> impl) : impl_(std::move(impl)) {}
GraphStore::GraphStore(GraphStore&&) noexcept = default;
GraphStore& GraphStore::operator=(GraphStore&&) noexcept = default;
GraphStore::~GraphStore() = default;

GraphStore GraphStore::in_memory() { return GraphStore(std::make_unique<Impl>()); }

GraphStore GraphStore::open(const fs::path& dir, OpenMode mode) {
  auto impl = std::make_unique<Impl>();
  impl->dir = dir;
  impl->mode = mode;
  impl->persistent = true;

  if (mode == OpenMode::read_write) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw StorageError("cannot create store directory " + dir.string() + ": " + ec.message());
    impl->lock_fd = ::open((dir / kLockName).c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (impl->lock_fd < 0) throw StorageError("cannot open lock file: " + errno_text());
    if (::flock(impl->lock_fd, LOCK_EX | LOCK_NB) != 0) {
      throw StoreLocked("store " + dir.string() + " is locked by another writer");
    }
  } else if (!fs::is_directory(dir)) {
    throw NotFound("no store at " + dir.string());
  }

  if (fs::exists(dir / kSnapshotName)) impl->load_snapshot(dir / kSnapshotName);
  impl->load_log(dir / kLogName);

  if (mode == OpenMode::read_write) {
    impl->log_fd = ::open((dir / kLogName).c_str(),
                          O_WRONLY | O_CREAT | O_APPEND | O_CLOEXEC, 0644);
    if (impl->log_fd < 0) throw StorageError("cannot open event log: " + errno_text());
  }
  return GraphStore(std::move(impl));
}

NodeId GraphStore::put_node(NodeLabel label, Properties props) {
  std::unique_lock lock(impl_->mu);
  return impl_->put_node(label, std::move(props));
}

EdgeId GraphStore::put_edge(std::string_view label, NodeId from, NodeId to) {
  std::unique_lock lock(impl_->mu);
  return impl_->put_edge(label, from, to);
}

void GraphStore::set_props(NodeId node, Properties props) {
  std::unique_lock lock(impl_->mu);
  impl_->set_props(node, std::move(props));
}

std::optional<Node> GraphStore::node(NodeId id) const {
  std::shared_lock lock(impl_->mu);
  const Node* n = impl_->find(id);
  return n ? std::optional<Node>(*n) : std::nullopt;
}

Node GraphStore::get(NodeId id) const {
  std::shared_lock lock(impl_->mu);
  return impl_->require(id);
}

std::vector<Node> GraphStore::query(NodeLabel label, const NodePredicate& pred) const {
  std::shared_lock lock(impl_->mu);
  return impl_->query(label, pred);
}

std::vector<Node> GraphStore::neighbors(NodeId node, std::string_view edge_label,
                                        Direction dir) const {
  std::shared_lock lock(impl_->mu);
  return impl_->neighbors(node, edge_label, dir);
}

std::vector<Edge> GraphStore::edges_of(NodeId node, std::string_view edge_label,
                                       Direction dir) const {
  std::shared_lock lock(impl_->mu);
  return impl_->edges_of(node, edge_label, dir);
}

GraphStats GraphStore::stats() const {
  std::shared_lock lock(impl_->mu);
  GraphStats s;
  for (NodeLabel l : all_node_labels()) {
    s.nodes[std::string(to_string(l))] = impl_->by_label[static_cast<std::size_t>(l)].size();
  }
  for (const auto& sig : edge_registry()) {
    auto it = impl_->edge_counts.find(sig.label);
    s.edges[std::string(sig.label)] = it == impl_->edge_counts.end() ? 0 : it->second;
  }
  return s;
}

void GraphStore::transact(const std::function<void(Tx&)>& fn) {
  std::unique_lock lock(impl_->mu);
  Tx tx(*impl_);
  fn(tx);
}

std::string GraphStore::canonical_dump() const {
  std::shared_lock lock(impl_->mu);
  return codec::canonical(impl_->dump_json());
}

std::string GraphStore::snapshot_document() const {
  std::shared_lock lock(impl_->mu);
  return codec::canonical(impl_->snapshot_json());
}

void GraphStore::write_snapshot(const fs::path& path) const {
  const std::string doc = snapshot_document();
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << doc << '\n';
    out.flush();
    if (!out) throw StorageError("cannot write snapshot " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw StorageError("cannot install snapshot " + path.string() + ": " + ec.message());
}

void GraphStore::snapshot() {
  if (!impl_->persistent) throw StorageError("in-memory store has no snapshot location");
  impl_->require_writable();
  write_snapshot(impl_->dir / kSnapshotName);
}

std::vector<std::string> GraphStore::check_integrity() const {
  std::shared_lock lock(impl_->mu);
  std::vector<std::string> problems;
  for (const Edge& e : impl_->edges) {
    try {
      impl_->validate_edge(e);
    } catch (const InvalidArgument& ex) {
      problems.push_back(e.id.str() + ": " + ex.what());
    }
  }
  std::set<std::string> tag_names;
  for (std::size_t idx : impl_->by_label[static_cast<std::size_t>(NodeLabel::Tag)]) {
    const std::string name = fold(impl_->nodes[idx].text("name"));
    if (!tag_names.insert(name).second) problems.push_back("duplicate tag '" + name + "'");
  }
  return problems;
}

std::uint64_t GraphStore::last_seq() const {
  std::shared_lock lock(impl_->mu);
  return impl_->seq;
}

const std::vector<std::string>& GraphStore::warnings() const { return impl_->warnings; }
bool GraphStore::persistent() const { return impl_->persistent; }
const fs::path& GraphStore::directory() const { return impl_->dir; }

// Tx forwards to the already-locked implementation.

NodeId GraphStore::Tx::put_node(NodeLabel label, Properties props) {
  return impl_->put_node(label, std::move(props));
}

EdgeId GraphStore::Tx::put_edge(std::string_view label, NodeId from, NodeId to) {
  return impl_->put_edge(label, from, to);
}

void GraphStore::Tx::set_props(NodeId node, Properties props) {
  impl_->set_props(node, std::move(props));
}

std::optional<Node> GraphStore::Tx::node(NodeId id) const {
  const Node* n = impl_->find(id);
  return n ? std::optional<Node>(*n) : std::nullopt;
}

Node GraphStore::Tx::get(NodeId id) const { return impl_->require(id); }

std::vector<Node> GraphStore::Tx::query(NodeLabel label, const NodePredicate& pred) const {
  return impl_->query(label, pred);
}

std::vector<Node> GraphStore::Tx::neighbors(NodeId node, std::string_view edge_label,
                                            Direction dir) const {
  return impl_->neighbors(node, edge_label, dir);
}

std::vector<Edge> GraphStore::Tx::edges_of(NodeId node, std::string_view edge_label,
                                           Direction dir) const {
  return impl_->edges_of(node, edge_label, dir);
}

}  // namespace lakecat
