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

#include "lakecat/catalog/server.hpp"

#include <filesystem>
#include <functional>

#include <httplib.h>
#include <spdlog/spdlog.h>

#include "lakecat/catalog/actions.hpp"
#include "lakecat/error.hpp"

namespace lakecat::catalog {

namespace {

constexpr const char* kJson = "application/json";

using Handler = std::function<Json(const httplib::Request&, const Caller&)>;

void reply(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

Json body_of(const httplib::Request& req) {
  if (req.body.empty()) return Json::object();
  Json j = Json::parse(req.body, nullptr, false);
  if (j.is_discarded() || !j.is_object()) throw InvalidArgument("request body must be a JSON object");
  return j;
}

}  // namespace

struct Server::Impl {
  explicit Impl(Lake& l) : lake(l) {}

  httplib::Server::Handler wrap(Handler h, int ok_status = 200) {
    return [this, h = std::move(h), ok_status](const httplib::Request& req, httplib::Response& res) {
      try {
        const Caller who = lake.catalog().caller(req.get_header_value("X-User"));
        reply(res, ok_status, h(req, who));
      } catch (const NotFound& ex) {
        reply(res, 404, {{"error", ex.what()}});
      } catch (const InvalidArgument& ex) {
        reply(res, 400, {{"error", ex.what()}});
      } catch (const StoreLocked& ex) {
        reply(res, 503, {{"error", ex.what()}});
      } catch (const std::exception& ex) {
        spdlog::error("{} {}: {}", req.method, req.path, ex.what());
        reply(res, 500, {{"error", ex.what()}});
      }
    };
  }

  void routes() {
    http.Post("/sources", wrap([this](const auto& req, const Caller&) {
                return add_source(lake, body_of(req));
              }, 201));
    http.Post(R"(/sources/([^/]+)/ingest)", wrap([this](const auto& req, const Caller& who) {
                return ingest(lake, Catalog::parse_id(req.matches[1].str()), body_of(req), who);
              }, 201));
    http.Get("/datasets", wrap([this](const auto& req, const Caller& who) {
               return lake.catalog().search(req.get_param_value("q"), who);
             }));
    http.Get(R"(/datasets/([^/]+))", wrap([this](const auto& req, const Caller& who) {
               return lake.catalog().dataset_detail(Catalog::parse_id(req.matches[1].str()), who);
             }));
    http.Get(R"(/datasets/([^/]+)/lineage)", wrap([this](const auto& req, const Caller& who) {
               return lake.catalog().lineage(Catalog::parse_id(req.matches[1].str()), who);
             }));
    http.Get(R"(/datasets/([^/]+)/relationships)", wrap([this](const auto& req, const Caller& who) {
               return lake.catalog().relationships(Catalog::parse_id(req.matches[1].str()), who);
             }));
    http.Post(R"(/datasets/([^/]+)/tags)", wrap([this](const auto& req, const Caller& who) {
                return annotate(lake, Catalog::parse_id(req.matches[1].str()), body_of(req), who);
              }));
    http.Post(R"(/datasets/([^/]+)/sensitivity)", wrap([this](const auto& req, const Caller& who) {
                return mark(lake, Catalog::parse_id(req.matches[1].str()), body_of(req), who);
              }));
    http.Post("/relationships", wrap([this](const auto& req, const Caller& who) {
                return relate(lake, body_of(req), who);
              }, 201));
    http.Get("/stats", wrap([this](const auto&, const Caller&) { return lake.catalog().stats(); }));
    http.Get("/global-dict", wrap([this](const auto&, const Caller&) { return lake.catalog().global_dict(); }));
    http.Post("/global-dict", wrap([this](const auto& req, const Caller&) {
                return put_dict_entry(lake, body_of(req));
              }));
    http.Get("/users", wrap([this](const auto&, const Caller&) {
               Json users = Json::array();
               for (const auto& [name, level] : lake.config().users) {
                 users.push_back({{"name", name}, {"clearance", level}});
               }
               return users;
             }));

    std::error_code ec;
    const auto ui = lake.config().ui_dir;
    if (!ui.empty() && std::filesystem::is_directory(ui, ec)) {
      http.set_mount_point("/ui", ui.string());
      http.Get("/", [](const httplib::Request&, httplib::Response& res) { res.set_redirect("/ui/"); });
    } else {
      spdlog::info("no UI assets at {}; /ui disabled", ui.string());
    }
    http.set_logger([](const httplib::Request& req, const httplib::Response& res) {
      spdlog::debug("{} {} -> {}", req.method, req.path, res.status);
    });
  }

  Lake& lake;
  httplib::Server http;
};

Server::Server(Lake& lake) : impl_(std::make_unique<Impl>(lake)) { impl_->routes(); }

Server::~Server() { stop(); }

int Server::bind(const std::string& host, int port) {
  if (port == 0) {
    const int bound = impl_->http.bind_to_any_port(host);
    if (bound < 0) throw StorageError("cannot bind " + host);
    return bound;
  }
  if (!impl_->http.bind_to_port(host, port)) {
    throw StorageError("cannot bind " + host + ":" + std::to_string(port));
  }
  return port;
}

void Server::run() { impl_->http.listen_after_bind(); }

void Server::stop() { impl_->http.stop(); }

}  // namespace lakecat::catalog
