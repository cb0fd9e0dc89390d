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

#include <functional>
#include <map>
#include <string>
#include <string_view>

#include "lakecat/graph/store.hpp"

namespace lakecat {

using Clearances = std::map<std::string, int, std::less<>>;

/// Configured clearance; unknown and anonymous users get 0.
int clearance_of(const Clearances& clearances, std::string_view user) noexcept;

/// The User node named `name`, created with its configured clearance when
/// missing. Throws InvalidArgument for an empty name.
NodeId ensure_user(GraphStore::Tx& tx, const std::string& name, const Clearances& clearances);
NodeId ensure_user(GraphStore& graph, const std::string& name, const Clearances& clearances);

}  // namespace lakecat
