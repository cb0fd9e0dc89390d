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

#include <array>
#include <compare>
#include <concepts>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace lakecat {

/// Microseconds since the Unix epoch, UTC. Rendered as ISO-8601 with a
/// six-digit fraction and a trailing 'Z'.
struct Timestamp {
  std::int64_t micros = 0;

  static Timestamp now();
  static Timestamp from_iso(std::string_view text);
  std::string iso() const;

  friend auto operator<=>(const Timestamp&, const Timestamp&) = default;
};

/// Scalar property value: text, integer, decimal, boolean or timestamp.
class Value {
 public:
  using Storage = std::variant<std::string, std::int64_t, double, bool, Timestamp>;

  Value() = default;
  Value(std::string v) : v_(std::move(v)) {}
  Value(std::string_view v) : v_(std::string(v)) {}
  Value(const char* v) : v_(std::string(v)) {}
  template <std::integral T>
    requires(!std::same_as<T, bool>)
  Value(T v) : v_(static_cast<std::int64_t>(v)) {}
  Value(double v) : v_(v) {}
  Value(bool v) : v_(v) {}
  Value(Timestamp v) : v_(v) {}

  template <typename T>
  bool is() const noexcept {
    return std::holds_alternative<T>(v_);
  }

  const std::string& text() const;
  std::int64_t integer() const;
  /// Integers widen to double.
  double decimal() const;
  bool boolean() const;
  Timestamp timestamp() const;

  const Storage& storage() const noexcept { return v_; }
  std::string_view type_name() const noexcept;
  /// Human-oriented rendering; timestamps as ISO text.
  std::string to_string() const;

  friend bool operator==(const Value&, const Value&) = default;

 private:
  Storage v_;
};

using Properties = std::map<std::string, Value, std::less<>>;

template <char Prefix>
struct BasicId {
  std::uint64_t value = 0;

  std::string str() const;
  static std::optional<BasicId> parse(std::string_view text);
  explicit operator bool() const noexcept { return value != 0; }

  friend auto operator<=>(const BasicId&, const BasicId&) = default;
};

/// Creation-ordered node identifier, rendered "n000000000042".
using NodeId = BasicId<'n'>;
/// Creation-ordered edge identifier, rendered "e000000000042".
using EdgeId = BasicId<'e'>;

extern template struct BasicId<'n'>;
extern template struct BasicId<'e'>;

enum class NodeLabel : std::uint8_t {
  DatasetSource,
  Ingest,
  DatalakeDataset,
  EntityClass,
  NumericAttribute,
  NominalAttribute,
  Tag,
  VeracityIndex,
  SensitivityMark,
  SensitivityLevel,
  RelationshipDS,
  RelationshipAtt,
  AnalysisDSRelationship,
  AnalysisAttribute,
  GlobalDictEntry,
  User,
};

inline constexpr std::size_t kNodeLabelCount = 16;

std::string_view to_string(NodeLabel label) noexcept;
std::optional<NodeLabel> parse_node_label(std::string_view text) noexcept;
const std::array<NodeLabel, kNodeLabelCount>& all_node_labels() noexcept;

inline bool is_attribute(NodeLabel l) noexcept {
  return l == NodeLabel::NumericAttribute || l == NodeLabel::NominalAttribute;
}

struct Node {
  NodeId id;
  NodeLabel label{};
  Properties props;

  const Value* find(std::string_view key) const;
  std::string text(std::string_view key, std::string_view fallback = {}) const;
  std::optional<std::int64_t> integer(std::string_view key) const;
  std::optional<double> decimal(std::string_view key) const;
  std::optional<Timestamp> timestamp(std::string_view key) const;
  bool flag(std::string_view key) const;

  friend bool operator==(const Node&, const Node&) = default;
};

struct Edge {
  EdgeId id;
  std::string label;
  NodeId from;
  NodeId to;

  friend bool operator==(const Edge&, const Edge&) = default;
};

}  // namespace lakecat
