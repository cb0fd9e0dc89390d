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

#include "lakecat/users.hpp"

#include "lakecat/error.hpp"

namespace lakecat {

int clearance_of(const Clearances& clearances, std::string_view user) noexcept {
  auto it = clearances.find(user);
  return it == clearances.end() ? 0 : it->second;
}

NodeId ensure_user(GraphStore::Tx& tx, const std::string& name, const Clearances& clearances) {
  if (name.empty()) throw InvalidArgument("user name must be nonempty");
  auto found = tx.query(NodeLabel::User, [&](const Node& n) { return n.text("name") == name; });
  if (!found.empty()) return found.front().id;
  return tx.put_node(NodeLabel::User, {{"name", name}, {"clearance", clearance_of(clearances, name)}});
}

NodeId ensure_user(GraphStore& graph, const std::string& name, const Clearances& clearances) {
  return graph.write([&](GraphStore::Tx& tx) { return ensure_user(tx, name, clearances); });
}

}  // namespace lakecat
