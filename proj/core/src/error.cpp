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

#include "lakecat/error.hpp"

namespace lakecat {

CorruptLog::CorruptLog(std::uint64_t seq, const std::string& detail)
    : Error("corrupt event log at seq " + std::to_string(seq) + ": " + detail),
      seq_(seq) {}

}  // namespace lakecat
