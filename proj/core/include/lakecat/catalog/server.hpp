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

#include <memory>
#include <string>

#include "lakecat/lake.hpp"

namespace lakecat::catalog {

/// HTTP front end over a Lake. Callers identify themselves with the
/// X-User header; bodies and responses are JSON. Static assets under
/// config().ui_dir are served at /ui when that directory exists.
class Server {
 public:
  explicit Server(Lake& lake);
  ~Server();

  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  /// Binds host:port (0 picks a free port) and returns the bound port.
  int bind(const std::string& host, int port);
  /// Serves until stop(); call after bind().
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace lakecat::catalog
