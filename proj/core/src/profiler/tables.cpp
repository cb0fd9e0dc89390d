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

#include "lakecat/profiler/tables.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lakecat/error.hpp"
#include "lakecat/profiler/delimited.hpp"
#include "lakecat/profiler/markup.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace lakecat::profiler {

namespace {

constexpr int kMaxFlattenDepth = 3;
constexpr std::size_t kSniffBytes = 8192;

std::string read_all(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw StorageError("cannot read " + p.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string lower_ext(const fs::path& p) {
  std::string ext = p.extension().string();
  if (!ext.empty()) ext.erase(0, 1);
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext;
}

bool looks_binary(std::string_view bytes) {
  const auto head = bytes.substr(0, kSniffBytes);
  return head.find('\0') != std::string_view::npos;
}

char first_significant(std::string_view bytes) {
  if (bytes.starts_with("\xEF\xBB\xBF")) bytes.remove_prefix(3);
  for (char c : bytes) {
    if (!std::isspace(static_cast<unsigned char>(c))) return c;
  }
  return '\0';
}

bool is_delimited_table(std::string_view text, const std::string& ext) {
  // A declared table stays a table; parse errors surface when profiling.
  if (ext == "csv" || ext == "tsv" || ext == "tab") return true;
  try {
    const auto t = parse_delimited(text, sniff_delimiter(text, ext));
    return t.header.size() >= 2;
  } catch (const InvalidArgument&) {
    return false;
  }
}

std::optional<std::string> cell_of(std::string raw) {
  if (is_null_token(raw)) return std::nullopt;
  return std::string(trim(raw));
}

EntityTable from_delimited(DelimitedTable t, std::string name) {
  EntityTable e;
  e.name = std::move(name);
  e.row_count = t.rows.size();
  e.columns.resize(t.header.size());
  for (std::size_t c = 0; c < t.header.size(); ++c) {
    std::string col(trim(t.header[c]));
    e.columns[c].name = col.empty() ? "column_" + std::to_string(c + 1) : col;
    e.columns[c].cells.reserve(t.rows.size());
  }
  for (auto& row : t.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) e.columns[c].cells.push_back(cell_of(std::move(row[c])));
  }
  return e;
}

EntityTable load_delimited_file(const fs::path& p, std::string name) {
  const std::string text = read_all(p);
  try {
    return from_delimited(parse_delimited(text, sniff_delimiter(text, lower_ext(p))), std::move(name));
  } catch (const InvalidArgument& ex) {
    throw InvalidArgument(p.filename().string() + ": " + ex.what());
  }
}

std::vector<EntityTable> load_directory(const fs::path& dir) {
  const fs::path manifest_path = dir / "manifest.json";
  json manifest = json::parse(read_all(manifest_path), nullptr, false);
  if (manifest.is_discarded() || !manifest.is_object() || !manifest.contains("tables") ||
      !manifest["tables"].is_array()) {
    throw InvalidArgument("manifest.json must hold a \"tables\" array");
  }
  std::vector<EntityTable> out;
  for (const auto& entry : manifest["tables"]) {
    std::string file;
    std::string entity;
    if (entry.is_string()) {
      file = entry.get<std::string>();
    } else if (entry.is_object() && entry.contains("file") && entry["file"].is_string()) {
      file = entry["file"].get<std::string>();
      if (entry.contains("entity") && entry["entity"].is_string()) entity = entry["entity"].get<std::string>();
    } else {
      throw InvalidArgument("manifest table entries must be file names or {file, entity}");
    }
    if (file.find("..") != std::string::npos) throw InvalidArgument("manifest path escapes dataset: " + file);
    if (entity.empty()) entity = fs::path(file).stem().string();
    const fs::path p = dir / file;
    if (!fs::is_regular_file(p)) throw InvalidArgument("manifest lists missing table " + file);
    out.push_back(load_delimited_file(p, entity));
  }
  return out;
}

// Builds an entity from records given as (flattened key -> cell) maps,
// keeping attributes in order of first appearance.
class RecordAccumulator {
 public:
  void add(std::vector<std::pair<std::string, std::optional<std::string>>> record) {
    std::vector<bool> seen(columns_.size(), false);
    for (auto& [key, cell] : record) {
      auto [it, inserted] = index_.try_emplace(key, columns_.size());
      if (inserted) {
        columns_.push_back(Column{key, std::vector<std::optional<std::string>>(rows_)});
        seen.push_back(false);
      }
      if (seen[it->second]) continue;
      seen[it->second] = true;
      columns_[it->second].cells.push_back(std::move(cell));
    }
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      if (!seen[c]) columns_[c].cells.push_back(std::nullopt);
    }
    ++rows_;
  }

  EntityTable finish(std::string name) && {
    return EntityTable{std::move(name), std::move(columns_), rows_};
  }

 private:
  std::map<std::string, std::size_t> index_;
  std::vector<Column> columns_;
  std::size_t rows_ = 0;
};

std::optional<std::string> json_cell(const json& v) {
  switch (v.type()) {
    case json::value_t::null: return std::nullopt;
    case json::value_t::string: return cell_of(v.get<std::string>());
    case json::value_t::boolean: return std::string(v.get<bool>() ? "true" : "false");
    default: return v.dump();
  }
}

void flatten_json(const json& obj, const std::string& prefix, int depth,
                  std::vector<std::pair<std::string, std::optional<std::string>>>& out) {
  for (const auto& [k, v] : obj.items()) {
    const std::string key = prefix.empty() ? k : prefix + "." + k;
    if (v.is_object() && depth < kMaxFlattenDepth) {
      flatten_json(v, key, depth + 1, out);
    } else {
      out.emplace_back(key, json_cell(v));
    }
  }
}

EntityTable entity_from_array(const json& arr, std::string name) {
  RecordAccumulator acc;
  for (const auto& rec : arr) {
    if (!rec.is_object()) continue;
    std::vector<std::pair<std::string, std::optional<std::string>>> flat;
    flatten_json(rec, "", 1, flat);
    acc.add(std::move(flat));
  }
  return std::move(acc).finish(std::move(name));
}

bool holds_objects(const json& v) {
  return v.is_array() && std::any_of(v.begin(), v.end(), [](const json& x) { return x.is_object(); });
}

std::vector<EntityTable> load_json(const std::string& text, std::string_view dataset_name) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw InvalidArgument("malformed JSON document");
  std::vector<EntityTable> out;
  if (holds_objects(doc)) {
    out.push_back(entity_from_array(doc, std::string(dataset_name)));
  } else if (doc.is_object()) {
    for (const auto& [k, v] : doc.items()) {
      if (holds_objects(v)) out.push_back(entity_from_array(v, k));
    }
  }
  return out;
}

void flatten_markup(const MarkupElement& el, const std::string& prefix, int depth,
                    std::vector<std::pair<std::string, std::optional<std::string>>>& out) {
  for (const auto& [k, v] : el.attributes) {
    out.emplace_back(prefix.empty() ? "@" + k : prefix + ".@" + k, cell_of(v));
  }
  for (const auto& child : el.children) {
    const std::string key = prefix.empty() ? child.name : prefix + "." + child.name;
    if ((!child.children.empty() || !child.attributes.empty()) && depth < kMaxFlattenDepth) {
      flatten_markup(child, key, depth + 1, out);
    } else {
      out.emplace_back(key, cell_of(child.text));
    }
  }
}

std::vector<EntityTable> load_markup(const std::string& text) {
  const MarkupElement root = parse_markup(text);
  std::vector<std::string> order;
  std::map<std::string, RecordAccumulator> groups;
  for (const auto& child : root.children) {
    auto [it, inserted] = groups.try_emplace(child.name);
    if (inserted) order.push_back(child.name);
    std::vector<std::pair<std::string, std::optional<std::string>>> flat;
    flatten_markup(child, "", 1, flat);
    it->second.add(std::move(flat));
  }
  std::vector<EntityTable> out;
  for (const auto& name : order) out.push_back(std::move(groups.at(name)).finish(name));
  return out;
}

}  // namespace

std::string_view to_string(DatasetType t) noexcept {
  switch (t) {
    case DatasetType::structured: return "structured";
    case DatasetType::semi_structured: return "semi-structured";
    case DatasetType::unstructured: return "unstructured";
  }
  return "?";
}

std::optional<DatasetType> parse_dataset_type(std::string_view text) noexcept {
  if (text == "structured") return DatasetType::structured;
  if (text == "semi-structured") return DatasetType::semi_structured;
  if (text == "unstructured") return DatasetType::unstructured;
  return std::nullopt;
}

std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_null_token(std::string_view cell) noexcept {
  cell = trim(cell);
  if (cell.empty()) return true;
  if (cell.size() > 4) return false;
  std::string low(cell);
  std::transform(low.begin(), low.end(), low.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return low == "na" || low == "nan" || low == "null";
}

std::optional<double> parse_decimal(std::string_view cell) noexcept {
  cell = trim(cell);
  if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
  if (cell.empty()) return std::nullopt;
  double v = 0;
  auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc{} || p != cell.data() + cell.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

bool is_numeric(const Column& c) {
  return std::all_of(c.cells.begin(), c.cells.end(), [](const auto& cell) {
    return !cell || parse_decimal(*cell).has_value();
  });
}

std::vector<std::optional<double>> numeric_values(const Column& c) {
  std::vector<std::optional<double>> out;
  out.reserve(c.cells.size());
  for (const auto& cell : c.cells) out.push_back(cell ? parse_decimal(*cell) : std::nullopt);
  return out;
}

DatasetType detect_dataset_type(const fs::path& path) {
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    return fs::is_regular_file(path / "manifest.json") ? DatasetType::structured
                                                        : DatasetType::unstructured;
  }
  const std::string bytes = read_all(path);
  if (looks_binary(bytes)) return DatasetType::unstructured;
  const std::string ext = lower_ext(path);
  const char first = first_significant(bytes);

  if (ext == "json" || first == '{' || first == '[') {
    json doc = json::parse(bytes, nullptr, false);
    if (!doc.is_discarded() && (doc.is_object() || doc.is_array())) return DatasetType::semi_structured;
  }
  if (ext == "xml" || first == '<') {
    try {
      parse_markup(bytes);
      return DatasetType::semi_structured;
    } catch (const InvalidArgument&) {
    }
  }
  if (is_delimited_table(bytes, ext)) return DatasetType::structured;
  return DatasetType::unstructured;
}

std::vector<EntityTable> load_entities(const fs::path& path, DatasetType type,
                                       std::string_view dataset_name) {
  switch (type) {
    case DatasetType::unstructured:
      throw NotApplicable("unstructured datasets have no entities");
    case DatasetType::structured:
      if (fs::is_directory(path)) return load_directory(path);
      return {load_delimited_file(path, std::string(dataset_name))};
    case DatasetType::semi_structured: {
      const std::string text = read_all(path);
      const char first = first_significant(text);
      if (first == '<') return load_markup(text);
      return load_json(text, dataset_name);
    }
  }
  return {};
}

}  // namespace lakecat::profiler
