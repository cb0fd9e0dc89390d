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

#include "lakecat_cli/cli.hpp"

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "lakecat/catalog/actions.hpp"
#include "lakecat/catalog/server.hpp"
#include "lakecat/error.hpp"
#include "lakecat/lake.hpp"

namespace lakecat::cli {

namespace {

using catalog::Json;

struct Options {
  std::string config_path;
  std::string format = "text";
  std::string user;
};

Config load_config(const Options& o) {
  std::string path = o.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv("LAKECAT_CONFIG"); env && *env) path = env;
  }
  Config c = path.empty() ? Config::defaults() : Config::load(path);
  c.apply_env();
  return c;
}

std::string caller_name(const Options& o) {
  if (!o.user.empty()) return o.user;
  if (const char* env = std::getenv("LAKECAT_USER"); env && *env) return env;
  return "anonymous";
}

std::unique_ptr<Lake> open_writable(const Options& o) {
  return Lake::open(load_config(o), OpenMode::read_write);
}

// Read commands do not take the writer lock, so they work next to a running
// server. A store that does not exist yet reads as empty.
std::unique_ptr<Lake> open_readable(const Options& o) {
  const Config c = load_config(o);
  std::error_code ec;
  if (!std::filesystem::is_directory(c.store, ec)) return Lake::attach(c, GraphStore::in_memory());
  return Lake::open(c, OpenMode::read_only);
}

NodeId id_arg(const std::string& text) {
  const auto id = NodeId::parse(text);
  if (!id) throw NotFound("no such node " + text);
  return *id;
}

void render_search(const Json& hits, std::ostream& out) {
  for (const auto& h : hits) {
    std::string tags;
    for (const auto& t : h["tags"]) tags += (tags.empty() ? "" : ",") + t.get<std::string>();
    out << h["id"].get<std::string>() << '\t' << h["name"].get<std::string>() << '\t'
        << h["type"].get<std::string>() << '\t' << tags << '\n';
  }
  out << hits.size() << " dataset(s)\n";
}

void render_stats(const Json& s, std::ostream& out) {
  for (const auto& [k, v] : s["nodes"].items()) out << k << '=' << v.get<std::size_t>() << '\n';
  for (const auto& [k, v] : s["edges"].items()) out << k << '=' << v.get<std::size_t>() << '\n';
  out << "nodes=" << s["totalNodes"].get<std::size_t>() << '\n';
  out << "edges=" << s["totalEdges"].get<std::size_t>() << '\n';
}

void render_relationships(const Json& rows, std::ostream& out) {
  for (const auto& r : rows) {
    out << r["other"]["id"].get<std::string>() << '\t' << r["other"]["name"].get<std::string>() << '\t'
        << r["kind"].get<std::string>() << '\t' << r["value"].get<double>();
    if (r.contains("name") && !r["name"].get<std::string>().empty()) out << '\t' << r["name"].get<std::string>();
    out << '\n';
  }
}

void emit(const Options& o, const Json& doc, std::ostream& out,
          void (*text)(const Json&, std::ostream&) = nullptr) {
  if (o.format == "json" || !text) {
    out << doc.dump(o.format == "json" ? -1 : 2) << '\n';
  } else {
    text(doc, out);
  }
}

std::atomic<catalog::Server*> g_server{nullptr};

extern "C" void on_signal(int) {
  if (auto* s = g_server.load()) s->stop();
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"lakecat: data-lake ingestion gateway and metadata catalog", "lakecat"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--config", o.config_path, "Configuration file (JSON)");
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--user", o.user, "Caller name used for clearance checks");

  std::function<void()> action;

  // source add
  auto* source = app.add_subcommand("source", "Manage data sources");
  source->require_subcommand(1);
  auto* source_add = source->add_subcommand("add", "Register a reachable data source");
  std::string location, type, name, owner, admin, origin, creds;
  source_add->add_option("--location", location, "Path, file://, http:// or stream-sim:// location")->required();
  source_add->add_option("--type", type, "Source type, e.g. \"csv file\"")->required();
  source_add->add_option("--name", name, "Source name")->required();
  source_add->add_option("--owner", owner, "Owner");
  source_add->add_option("--administrator", admin, "Administrator");
  source_add->add_option("--stream-origin", origin, "DatasetSource id this stream originates from");
  source_add->add_option("--credentials", creds, "Credentials reference");
  source_add->callback([&] {
    action = [&] {
      Json body = {{"location", location}, {"type", type}, {"name", name}, {"owner", owner}};
      if (!admin.empty()) body["administrator"] = admin;
      if (!origin.empty()) body["streamOrigin"] = origin;
      if (!creds.empty()) body["credentialsRef"] = creds;
      auto lake = open_writable(o);
      const Json r = catalog::add_source(*lake, body);
      if (o.format == "json") {
        out << r.dump() << '\n';
      } else {
        out << r["id"].get<std::string>() << '\n';
      }
    };
  });

  // ingest
  auto* ingest = app.add_subcommand("ingest", "Ingest a source into the raw zone and profile it");
  std::string source_id, mode = "batch", comment;
  std::optional<double> duration;
  std::optional<int> windows;
  ingest->add_option("source-id", source_id, "DatasetSource id")->required();
  ingest->add_option("--mode", mode, "batch | realtime | onetime")
      ->check(CLI::IsMember({"batch", "realtime", "real-time", "onetime", "one-time"}));
  ingest->add_option("--duration", duration, "definedDuration in seconds (real-time only)");
  ingest->add_option("--windows", windows, "Number of real-time windows");
  ingest->add_option("--comment", comment, "Free-text comment");
  ingest->callback([&] {
    action = [&] {
      Json body = {{"mode", mode}, {"comment", comment}};
      if (duration) body["definedDuration"] = *duration;
      if (windows) body["windows"] = *windows;
      auto lake = open_writable(o);
      const Json r = catalog::ingest(*lake, id_arg(source_id), body, lake->catalog().caller(caller_name(o)));
      if (o.format == "json") {
        out << r.dump() << '\n';
      } else {
        for (const auto& run : r["runs"]) {
          out << run["status"].get<std::string>() << " ingest=" << run["ingest"].get<std::string>();
          if (!run["dataset"].is_null()) {
            out << " dataset=" << run["dataset"].get<std::string>() << " version=" << run["version"].get<int>();
          }
          if (!run["error"].get<std::string>().empty()) out << " error=" << run["error"].get<std::string>();
          out << '\n';
        }
      }
    };
  });

  // search
  auto* search = app.add_subcommand("search", "Keyword search over names, descriptions and tags");
  std::string keyword;
  search->add_option("keyword", keyword, "Keyword (empty lists everything)");
  search->callback([&] {
    action = [&] {
      auto lake = open_readable(o);
      emit(o, lake->catalog().search(keyword, lake->catalog().caller(caller_name(o))), out, render_search);
    };
  });

  // show
  auto* show = app.add_subcommand("show", "Show a dataset");
  std::string dataset_id;
  bool want_lineage = false, want_schema = false, want_rel = false;
  show->add_option("dataset-id", dataset_id, "DatalakeDataset id")->required();
  auto* f_lineage = show->add_flag("--lineage", want_lineage, "Source and ingestion provenance");
  auto* f_schema = show->add_flag("--schema", want_schema, "Entities and attribute statistics");
  auto* f_rel = show->add_flag("--relationships", want_rel, "Related datasets");
  f_lineage->excludes(f_schema)->excludes(f_rel);
  f_schema->excludes(f_rel);
  show->callback([&] {
    action = [&] {
      auto lake = open_readable(o);
      const auto who = lake->catalog().caller(caller_name(o));
      const NodeId id = id_arg(dataset_id);
      if (want_lineage) {
        emit(o, lake->catalog().lineage(id, who), out);
      } else if (want_rel) {
        emit(o, lake->catalog().relationships(id, who), out, render_relationships);
      } else if (want_schema) {
        emit(o, lake->catalog().dataset_detail(id, who)["entities"], out);
      } else {
        emit(o, lake->catalog().dataset_detail(id, who), out);
      }
    };
  });

  // relate
  auto* relate = app.add_subcommand("relate", "Record a user-defined relationship between datasets");
  std::string ds1, ds2, kind, rel_name, rel_desc;
  double value = 0;
  relate->add_option("ds1", ds1, "First dataset id")->required();
  relate->add_option("ds2", ds2, "Second dataset id")->required();
  relate->add_option("--kind", kind, "Relationship kind")->required();
  relate->add_option("--value", value, "Relationship value")->required();
  relate->add_option("--name", rel_name, "Relationship name");
  relate->add_option("--description", rel_desc, "Relationship description");
  relate->callback([&] {
    action = [&] {
      auto lake = open_writable(o);
      const Json r = catalog::relate(*lake,
                                     {{"ds1", ds1}, {"ds2", ds2}, {"kind", kind}, {"value", value},
                                      {"name", rel_name}, {"description", rel_desc}},
                                     lake->catalog().caller(caller_name(o)));
      if (o.format == "json") {
        out << r.dump() << '\n';
      } else {
        out << r["id"].get<std::string>() << '\n';
      }
    };
  });

  // link
  auto* link = app.add_subcommand("link", "Detect relationships between a dataset and the rest of the lake");
  std::string link_id;
  link->add_option("dataset-id", link_id, "DatalakeDataset id")->required();
  link->callback([&] {
    action = [&] {
      auto lake = open_writable(o);
      emit(o, catalog::link(*lake, id_arg(link_id), lake->catalog().caller(caller_name(o))), out,
           render_relationships);
    };
  });

  // tag
  auto* tag = app.add_subcommand("tag", "Describe and tag a dataset");
  std::string tag_id;
  std::optional<std::string> description;
  std::vector<std::string> tags;
  tag->add_option("dataset-id", tag_id, "DatalakeDataset id")->required();
  tag->add_option("tags", tags, "Tags");
  tag->add_option("--description", description, "Dataset description");
  tag->callback([&] {
    action = [&] {
      Json body = {{"tags", tags}};
      if (description) body["description"] = *description;
      auto lake = open_writable(o);
      const Json detail = catalog::annotate(*lake, id_arg(tag_id), body, lake->catalog().caller(caller_name(o)));
      if (o.format == "json") {
        out << detail.dump() << '\n';
      } else {
        for (const auto& t : detail["tags"]) out << t.get<std::string>() << '\n';
      }
    };
  });

  // mark
  auto* mark = app.add_subcommand("mark", "Set the sensitivity level of a dataset, entity or attribute");
  std::string mark_id, target;
  int level = 0;
  mark->add_option("dataset-id", mark_id, "DatalakeDataset id")->required();
  mark->add_option("--level", level, "Sensitivity level")->required();
  mark->add_option("--target", target, "Entity or attribute id inside the dataset");
  mark->callback([&] {
    action = [&] {
      Json body = {{"level", level}};
      if (!target.empty()) body["target"] = target;
      auto lake = open_writable(o);
      emit(o, catalog::mark(*lake, id_arg(mark_id), body, lake->catalog().caller(caller_name(o))), out);
    };
  });

  // stats
  auto* stats = app.add_subcommand("stats", "Node and edge counts per label");
  stats->callback([&] {
    action = [&] {
      auto lake = open_readable(o);
      emit(o, lake->catalog().stats(), out, render_stats);
    };
  });

  // clusters
  auto* clusters = app.add_subcommand("clusters", "Logical clusters by tag affinity");
  clusters->callback([&] {
    action = [&] {
      auto lake = open_readable(o);
      Json doc = Json::array();
      for (const auto& members : lake->linker().logical_clusters()) {
        Json c = Json::array();
        for (NodeId id : members) c.push_back(id.str());
        doc.push_back(std::move(c));
      }
      emit(o, doc, out);
    };
  });

  // global-dict
  auto* dict = app.add_subcommand("global-dict", "List or set global dictionary entries");
  std::vector<std::string> set_pair;
  dict->add_option("--set", set_pair, "KEY VALUE")->expected(2);
  dict->callback([&] {
    action = [&] {
      if (set_pair.empty()) {
        auto lake = open_readable(o);
        emit(o, lake->catalog().global_dict(), out);
      } else {
        auto lake = open_writable(o);
        emit(o, catalog::put_dict_entry(*lake, {{"key", set_pair[0]}, {"value", set_pair[1]}}), out);
      }
    };
  });

  // snapshot
  auto* snapshot = app.add_subcommand("snapshot", "Write a snapshot of the graph store");
  snapshot->callback([&] {
    action = [&] {
      auto lake = open_writable(o);
      lake->graph().snapshot();
      out << "snapshot at seq " << lake->graph().last_seq() << '\n';
    };
  });

  // serve
  auto* serve = app.add_subcommand("serve", "Run the HTTP catalog service");
  std::optional<int> port;
  std::optional<std::string> host;
  serve->add_option("--port", port, "Port (0 picks a free one)");
  serve->add_option("--host", host, "Bind address");
  serve->callback([&] {
    action = [&] {
      Config c = load_config(o);
      if (port) c.port = *port;
      if (host) c.host = *host;
      auto lake = Lake::open(c, OpenMode::read_write);
      catalog::Server server(*lake);
      const int bound = server.bind(c.host, c.port);
      out << "listening on http://" << c.host << ':' << bound << std::endl;
      g_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      server.run();
      g_server = nullptr;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kExitUserError;
  }

  try {
    if (action) action();
    return kExitOk;
  } catch (const NotFound& e) {
    err << "not found: " << e.what() << '\n';
    return kExitUserError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUserError;
  } catch (const StoreLocked& e) {
    err << "error: " << e.what() << '\n';
    return kExitUserError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
}

}  // namespace lakecat::cli
