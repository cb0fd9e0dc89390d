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

#include "lakecat/graph/types.hpp"

namespace lakecat {

/// Time source for ingestion runs. Real-time windows sleep through it, so a
/// test clock can drive a simulated stream deterministically.
class Clock {
 public:
  virtual ~Clock() = default;
  virtual Timestamp now() = 0;
  virtual void sleep_for(std::chrono::microseconds d) = 0;
};

class SystemClock final : public Clock {
 public:
  Timestamp now() override;
  void sleep_for(std::chrono::microseconds d) override;
};

SystemClock& system_clock();

}  // namespace lakecat
