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

#include "lakecat/graph/types.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "lakecat/error.hpp"

namespace lakecat {

namespace {

constexpr std::array<std::string_view, kNodeLabelCount> kLabelNames = {
    "DatasetSource",    "Ingest",           "DatalakeDataset",
    "EntityClass",      "NumericAttribute", "NominalAttribute",
    "Tag",              "VeracityIndex",    "SensitivityMark",
    "SensitivityLevel", "RelationshipDS",   "RelationshipAtt",
    "AnalysisDSRelationship", "AnalysisAttribute", "GlobalDictEntry",
    "User",
};

[[noreturn]] void type_mismatch(const Value& v, std::string_view wanted) {
  throw InvalidArgument("property holds " + std::string(v.type_name()) +
                        ", not " + std::string(wanted));
}

}  // namespace

Timestamp Timestamp::now() {
  using namespace std::chrono;
  return Timestamp{
      duration_cast<microseconds>(system_clock::now().time_since_epoch()).count()};
}

std::string Timestamp::iso() const {
  using namespace std::chrono;
  const sys_time<microseconds> tp{microseconds{micros}};
  const auto day = floor<days>(tp);
  const year_month_day ymd{day};
  const hh_mm_ss tod{tp - day};
  char buf[40];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02uT%02d:%02d:%02d.%06lldZ",
                static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                static_cast<unsigned>(ymd.day()), static_cast<int>(tod.hours().count()),
                static_cast<int>(tod.minutes().count()),
                static_cast<int>(tod.seconds().count()),
                static_cast<long long>(tod.subseconds().count()));
  return buf;
}

Timestamp Timestamp::from_iso(std::string_view text) {
  using namespace std::chrono;
  int y = 0;
  unsigned mo = 0, d = 0;
  int h = 0, mi = 0, s = 0;
  long long frac = 0;
  char z = 0;
  const std::string owned(text);
  if (text.size() != 27 ||
      std::sscanf(owned.c_str(), "%4d-%2u-%2uT%2d:%2d:%2d.%6lld%c", &y, &mo, &d, &h,
                  &mi, &s, &frac, &z) != 8 ||
      z != 'Z') {
    throw InvalidArgument("malformed timestamp '" + owned + "'");
  }
  const year_month_day ymd{year{y}, month{mo}, day{d}};
  if (!ymd.ok() || h > 23 || mi > 59 || s > 59) {
    throw InvalidArgument("out-of-range timestamp '" + owned + "'");
  }
  const auto tp = sys_days{ymd} + hours{h} + minutes{mi} + seconds{s} + microseconds{frac};
  return Timestamp{duration_cast<microseconds>(tp.time_since_epoch()).count()};
}

const std::string& Value::text() const {
  if (auto p = std::get_if<std::string>(&v_)) return *p;
  type_mismatch(*this, "text");
}

std::int64_t Value::integer() const {
  if (auto p = std::get_if<std::int64_t>(&v_)) return *p;
  type_mismatch(*this, "integer");
}

double Value::decimal() const {
  if (auto p = std::get_if<double>(&v_)) return *p;
  if (auto p = std::get_if<std::int64_t>(&v_)) return static_cast<double>(*p);
  type_mismatch(*this, "decimal");
}

bool Value::boolean() const {
  if (auto p = std::get_if<bool>(&v_)) return *p;
  type_mismatch(*this, "boolean");
}

Timestamp Value::timestamp() const {
  if (auto p = std::get_if<Timestamp>(&v_)) return *p;
  type_mismatch(*this, "timestamp");
}

std::string_view Value::type_name() const noexcept {
  switch (v_.index()) {
    case 0: return "text";
    case 1: return "integer";
    case 2: return "decimal";
    case 3: return "boolean";
    default: return "timestamp";
  }
}

std::string Value::to_string() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, Timestamp>) {
          return v.iso();
        } else if constexpr (std::is_same_v<T, double>) {
          std::ostringstream os;
          os.precision(15);
          os << v;
          return os.str();
        } else {
          return std::to_string(v);
        }
      },
      v_);
}

template <char Prefix>
std::string BasicId<Prefix>::str() const {
  char buf[24];
  std::snprintf(buf, sizeof buf, "%c%012llu", Prefix,
                static_cast<unsigned long long>(value));
  return buf;
}

template <char Prefix>
std::optional<BasicId<Prefix>> BasicId<Prefix>::parse(std::string_view text) {
  if (text.size() != 13 || text.front() != Prefix) return std::nullopt;
  std::uint64_t v = 0;
  const auto* first = text.data() + 1;
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last || v == 0) return std::nullopt;
  return BasicId{v};
}

template struct BasicId<'n'>;
template struct BasicId<'e'>;

std::string_view to_string(NodeLabel label) noexcept {
  return kLabelNames[static_cast<std::size_t>(label)];
}

std::optional<NodeLabel> parse_node_label(std::string_view text) noexcept {
  for (std::size_t i = 0; i < kLabelNames.size(); ++i) {
    if (kLabelNames[i] == text) return static_cast<NodeLabel>(i);
  }
  return std::nullopt;
}

const std::array<NodeLabel, kNodeLabelCount>& all_node_labels() noexcept {
  static const auto labels = [] {
    std::array<NodeLabel, kNodeLabelCount> out{};
    for (std::size_t i = 0; i < kNodeLabelCount; ++i) out[i] = static_cast<NodeLabel>(i);
    return out;
  }();
  return labels;
}

const Value* Node::find(std::string_view key) const {
  auto it = props.find(key);
  return it == props.end() ? nullptr : &it->second;
}

std::string Node::text(std::string_view key, std::string_view fallback) const {
  const Value* v = find(key);
  if (v == nullptr) return std::string(fallback);
  if (v->is<std::string>()) return v->text();
  return v->to_string();
}

std::optional<std::int64_t> Node::integer(std::string_view key) const {
  const Value* v = find(key);
  if (v == nullptr || !v->is<std::int64_t>()) return std::nullopt;
  return v->integer();
}

std::optional<double> Node::decimal(std::string_view key) const {
  const Value* v = find(key);
  if (v == nullptr || !(v->is<double>() || v->is<std::int64_t>())) return std::nullopt;
  return v->decimal();
}

std::optional<Timestamp> Node::timestamp(std::string_view key) const {
  const Value* v = find(key);
  if (v == nullptr || !v->is<Timestamp>()) return std::nullopt;
  return v->timestamp();
}

bool Node::flag(std::string_view key) const {
  const Value* v = find(key);
  return v != nullptr && v->is<bool>() && v->boolean();
}

}  // namespace lakecat
