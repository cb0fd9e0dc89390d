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

#include <gtest/gtest.h>

#include "harness.hpp"
#include "lakecat/config.hpp"
#include "lakecat/error.hpp"

namespace lakecat {
namespace {

using testing::TempDir;

TEST(Config, DefaultsValidate) {
  const Config c = Config::defaults();
  EXPECT_NO_THROW(c.validate());
  EXPECT_EQ(c.minhash_k, 128u);
  EXPECT_EQ(c.seed, 42u);
}

TEST(Config, RelativePathsResolveAgainstFile) {
  TempDir d;
  testing::write_file(d / "conf" / "c.json", R"({"store": "g", "rawZone": "/abs/raw", "uiDir": "ui"})");
  const Config c = Config::load(d / "conf" / "c.json");
  EXPECT_EQ(c.store, d / "conf" / "g");
  EXPECT_EQ(c.raw_zone, "/abs/raw");
  EXPECT_EQ(c.ui_dir, d / "conf" / "ui");
}

TEST(Config, UnknownKeysRejected) {
  EXPECT_THROW(Config::from_json({{"stroe", "x"}}), InvalidArgument);
  EXPECT_THROW(Config::from_json({{"thresholds", {{"datasets", {}}}}}), InvalidArgument);
  EXPECT_THROW(Config::from_json({{"veracityWeights", {{"beauty", 1}}}}), InvalidArgument);
}

TEST(Config, RangeChecks) {
  EXPECT_THROW(Config::from_json({{"port", 70000}}), InvalidArgument);
  EXPECT_THROW(Config::from_json({{"minhashK", 0}}), InvalidArgument);
  EXPECT_THROW(Config::from_json({{"thresholds", {{"dataset", {{"similarity", 1.5}}}}}}), InvalidArgument);
  EXPECT_THROW(Config::from_json({{"users", {{"bob", -1}}}}), InvalidArgument);
  EXPECT_THROW(Config::from_json({{"veracityWeights", {{"objectivity", 0.9}}}}), InvalidArgument);
  EXPECT_THROW(Config::from_json({{"port", "eighty"}}), InvalidArgument);
}

TEST(Config, JsonRoundTripAndHash) {
  Config c = Config::defaults();
  c.users = {{"ana", 2}};
  c.credibility = {{"src", 0.7}};
  c.dataset_thresholds["similarity"] = 0.4;
  const Config back = Config::from_json(c.to_json());
  EXPECT_EQ(back.to_json(), c.to_json());
  EXPECT_EQ(back.hash(), c.hash());
  EXPECT_EQ(c.hash().size(), 64u);
  Config d = c;
  d.seed = 7;
  EXPECT_NE(d.hash(), c.hash());
}

TEST(Config, EnvironmentOverrides) {
  Config c = Config::defaults();
  ::setenv("LAKECAT_PORT", "9191", 1);
  ::setenv("LAKECAT_STORE", "/tmp/somewhere", 1);
  c.apply_env();
  ::unsetenv("LAKECAT_PORT");
  ::unsetenv("LAKECAT_STORE");
  EXPECT_EQ(c.port, 9191);
  EXPECT_EQ(c.store, "/tmp/somewhere");
  ::setenv("LAKECAT_PORT", "x", 1);
  EXPECT_THROW(c.apply_env(), InvalidArgument);
  ::unsetenv("LAKECAT_PORT");
}

TEST(Config, ThresholdsReachTheGraph) {
  TempDir d;
  Config c = testing::test_config(d.path());
  c.dataset_thresholds["similarity"] = 0.9;
  c.attribute_thresholds["correlation"] = 0.95;
  auto lake = Lake::attach(c, GraphStore::in_memory());
  for (const auto& k : linker::relationship_ds_registry(lake->graph())) {
    if (k.name == "similarity") {
      EXPECT_EQ(k.threshold, 0.9);
    }
  }
  for (const auto& k : profiler::relationship_att_registry(lake->graph())) {
    if (k.name == "correlation") {
      EXPECT_EQ(k.threshold, 0.95);
    }
  }
  EXPECT_EQ(lake->graph().stats().nodes_of(NodeLabel::RelationshipDS), 4u);
  EXPECT_EQ(lake->graph().stats().nodes_of(NodeLabel::RelationshipAtt), 4u);
  EXPECT_EQ(lake->graph().stats().nodes_of(NodeLabel::SensitivityLevel), 4u);
}

}  // namespace
}  // namespace lakecat
