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

#include <thread>

#include "harness.hpp"
#include "lakecat/error.hpp"
#include "lakecat/graph/registry.hpp"
#include "lakecat/lake.hpp"

namespace lakecat::enrichment {
namespace {

namespace fs = std::filesystem;
using testing::TempDir;

class EnrichmentTest : public ::testing::Test {
 protected:
  void SetUp() override { reset(testing::test_config(dir.path())); }

  void reset(Config c) {
    c.credibility["trusted"] = 0.8;
    lake = Lake::attach(c, GraphStore::in_memory(), clock);
  }

  NodeId ingest_text(const std::string& file, const std::string& body, const std::string& name) {
    testing::write_file(dir / file, body);
    ingestion::SourceSpec spec;
    spec.connection = ingestion::SourceConnection::parse((dir / file).string());
    spec.name = name;
    const auto src = lake->ingestor().connect_data_source(spec);
    const auto out = lake->ingestor().ingest_dataset({*src, ingestion::IngestMode::batch, "", "curator", {}});
    return *out.dataset;
  }

  Node veracity_of(NodeId ds) {
    const auto v = lake->graph().neighbors(ds, edges::kDatasetVeracity, Direction::out);
    EXPECT_EQ(v.size(), 1u);
    return v.front();
  }

  TempDir dir;
  testing::FakeClock clock;
  std::unique_ptr<Lake> lake;
};

TEST_F(EnrichmentTest, SharedTagsAreDeduplicated) {
  const NodeId a = ingest_text("a.csv", "x\n1\n", "a");
  const NodeId b = ingest_text("b.csv", "y\n2\n", "b");
  lake->enrichment().annotate_semantics(a, std::string("first"), {"cancer", "Health"});
  lake->enrichment().annotate_semantics(b, std::nullopt, {" CANCER", "covid", ""});
  const auto s = lake->graph().stats();
  EXPECT_EQ(s.nodes_of(NodeLabel::Tag), 3u);
  EXPECT_EQ(s.edges_of(edges::kDatasetTag), 4u);
  EXPECT_EQ(lake->graph().get(a).text("description"), "first");
  EXPECT_EQ(lake->graph().get(b).text("description"), "");
}

TEST_F(EnrichmentTest, ReannotationChangesNothing) {
  const NodeId a = ingest_text("a.csv", "x\n1\n", "a");
  lake->enrichment().annotate_semantics(a, std::string("d"), {"cancer"});
  const auto dump = lake->graph().canonical_dump();
  lake->enrichment().annotate_semantics(a, std::string("d"), {"Cancer", "cancer"});
  EXPECT_EQ(lake->graph().canonical_dump(), dump);
}

TEST_F(EnrichmentTest, DescriptionLatestWins) {
  const NodeId a = ingest_text("a.csv", "x\n1\n", "a");
  lake->enrichment().annotate_semantics(a, std::string("one"), {});
  lake->enrichment().annotate_semantics(a, std::string("two"), {});
  EXPECT_EQ(lake->graph().get(a).text("description"), "two");
  EXPECT_EQ(lake->graph().stats().nodes_of(NodeLabel::Tag), 0u);
}

TEST_F(EnrichmentTest, ConcurrentAnnotationsShareTags) {
  std::vector<NodeId> ds;
  for (int i = 0; i < 6; ++i) {
    ds.push_back(ingest_text("d" + std::to_string(i) + ".csv", "x\n" + std::to_string(i) + "\n",
                             "d" + std::to_string(i)));
  }
  std::vector<std::thread> threads;
  for (const NodeId id : ds) {
    threads.emplace_back([&, id] {
      lake->enrichment().annotate_semantics(id, std::nullopt, {"shared", "Common", "t" + id.str()});
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(lake->graph().stats().nodes_of(NodeLabel::Tag), 2u + ds.size());
  EXPECT_EQ(lake->graph().stats().edges_of(edges::kDatasetTag), 3u * ds.size());
}

TEST_F(EnrichmentTest, AnnotatingANonDatasetFails) {
  EXPECT_THROW(lake->enrichment().annotate_semantics(NodeId{1}, std::nullopt, {"x"}), InvalidArgument);
  EXPECT_THROW(lake->enrichment().annotate_semantics(NodeId{999}, std::nullopt, {"x"}), NotFound);
}

TEST_F(EnrichmentTest, UnmarkedTargetsAreLevelZero) {
  const NodeId a = ingest_text("a.csv", "x,y\n1,2\n", "a");
  EXPECT_EQ(lake->enrichment().effective_sensitivity(a), 0);
  const auto entity = lake->graph().neighbors(a, edges::kDatasetEntity, Direction::out).front();
  EXPECT_EQ(lake->enrichment().effective_sensitivity(entity.id), 0);
}

TEST_F(EnrichmentTest, EffectiveLevelIsMaxOverContainment) {
  const NodeId ds = ingest_text("a.csv", "x,y\n1,2\n", "a");
  const NodeId entity = lake->graph().neighbors(ds, edges::kDatasetEntity, Direction::out).front().id;
  const NodeId att = lake->graph().neighbors(entity, edges::kEntityAttribute, Direction::out).front().id;
  // Every combination of levels on dataset, entity and attribute.
  for (int d = 0; d <= 3; ++d) {
    for (int e = 0; e <= 3; ++e) {
      for (int t = 0; t <= 3; ++t) {
        lake->enrichment().mark_sensitivity(ds, d, "curator");
        lake->enrichment().mark_sensitivity(entity, e, "curator");
        lake->enrichment().mark_sensitivity(att, t, "curator");
        EXPECT_EQ(lake->enrichment().effective_sensitivity(att), std::max({d, e, t}));
        EXPECT_EQ(lake->enrichment().effective_sensitivity(entity), std::max(d, e));
        EXPECT_EQ(lake->enrichment().effective_sensitivity(ds), d);
        EXPECT_EQ(lake->enrichment().own_sensitivity(att), t);
      }
    }
  }
}

TEST_F(EnrichmentTest, RemarkSupersedesPrevious) {
  const NodeId ds = ingest_text("a.csv", "x\n1\n", "a");
  const NodeId m1 = lake->enrichment().mark_sensitivity(ds, 3, "curator");
  lake->enrichment().mark_sensitivity(ds, 1, "curator");
  EXPECT_TRUE(lake->graph().get(m1).flag("superseded"));
  EXPECT_EQ(lake->enrichment().own_sensitivity(ds), 1);
  EXPECT_THROW(lake->enrichment().mark_sensitivity(ds, 9, "curator"), InvalidArgument);
  EXPECT_THROW(lake->enrichment().mark_sensitivity(NodeId{1}, 1, "curator"), InvalidArgument);
}

TEST_F(EnrichmentTest, MarkRecordsUser) {
  const NodeId ds = ingest_text("a.csv", "x\n1\n", "a");
  const NodeId m = lake->enrichment().mark_sensitivity(ds, 2, "clinician");
  const auto users = lake->graph().neighbors(m, edges::kMarkUser, Direction::out);
  ASSERT_EQ(users.size(), 1u);
  EXPECT_EQ(users[0].text("name"), "clinician");
  EXPECT_EQ(lake->graph().neighbors(m, edges::kMarkLevel, Direction::out).front().integer("level"), 2);
}

TEST_F(EnrichmentTest, VeracityAllNumericNoNulls) {
  const NodeId ds = ingest_text("t.csv", "a,b\n1,2\n3,4\n", "trusted");
  const Node v = veracity_of(ds);
  EXPECT_EQ(v.decimal("objectivity"), 1.0);
  EXPECT_EQ(v.decimal("truthfulness"), 1.0);
  EXPECT_EQ(v.decimal("credibility"), 0.8);
  // (1.0 + 1.0 + 0.8) / 3
  EXPECT_NEAR(*v.decimal("composite"), 0.9333333333333332, 1e-12);
}

TEST_F(EnrichmentTest, VeracityHalfNulls) {
  const NodeId ds = ingest_text("h.csv", "a,b\n1,\n,4\n", "half");
  const Node v = veracity_of(ds);
  EXPECT_EQ(v.decimal("truthfulness"), 0.5);
  EXPECT_EQ(v.decimal("credibility"), 0.5);
}

TEST_F(EnrichmentTest, VeracityMixedTypes) {
  const NodeId ds = ingest_text("m.csv", "a,b,c,d\n1,x,2,y\n", "mixed");
  EXPECT_EQ(veracity_of(ds).decimal("objectivity"), 0.5);
}

TEST_F(EnrichmentTest, VeracityWeightsPickComponent) {
  Config c = testing::test_config(dir.path());
  c.veracity_weights = {1.0, 0.0, 0.0};
  reset(c);
  const NodeId ds = ingest_text("m.csv", "a,b,c,d\n1,x,2,y\n", "trusted");
  const Node v = veracity_of(ds);
  EXPECT_EQ(v.decimal("composite"), v.decimal("objectivity"));
  EXPECT_EQ(v.decimal("weightObjectivity"), 1.0);
}

TEST_F(EnrichmentTest, VeracityRecomputeUpdatesInPlace) {
  const NodeId ds = ingest_text("t.csv", "a\n1\n", "trusted");
  const NodeId first = veracity_of(ds).id;
  clock.advance(std::chrono::seconds(5));
  EXPECT_EQ(lake->enrichment().compute_veracity(ds), first);
  EXPECT_EQ(lake->graph().stats().nodes_of(NodeLabel::VeracityIndex), 1u);
}

TEST_F(EnrichmentTest, VeracityUnstructured) {
  ingestion::SourceSpec spec;
  spec.connection = ingestion::SourceConnection::parse((testing::corpus_dir() / "chest_xray").string());
  spec.name = "xray";
  const auto src = lake->ingestor().connect_data_source(spec);
  const auto out = lake->ingestor().ingest_dataset({*src, ingestion::IngestMode::batch, "", "curator", {}});
  const Node v = veracity_of(*out.dataset);
  EXPECT_EQ(v.decimal("objectivity"), 0.0);
  EXPECT_EQ(v.decimal("truthfulness"), 1.0);
  EXPECT_NEAR(*v.decimal("composite"), 0.5, 1e-12);
}

TEST(VeracityWeights, Validation) {
  EXPECT_NO_THROW(VeracityWeights{}.validate());
  EXPECT_THROW((VeracityWeights{0.5, 0.5, 0.5}.validate()), InvalidArgument);
  EXPECT_THROW((VeracityWeights{1.5, -0.5, 0.0}.validate()), InvalidArgument);
}

TEST_F(EnrichmentTest, ManualRelationship) {
  const NodeId a = ingest_text("a.csv", "x\n1\n", "a");
  const NodeId b = ingest_text("b.csv", "x\n7\n", "b");
  const auto edges_before = lake->graph().stats().edge_total();
  const NodeId rel = lake->enrichment().input_relationship(a, b, "common-subject", "same cohort", "", 0.01);
  const Node n = lake->graph().get(rel);
  EXPECT_TRUE(n.flag("manual"));
  EXPECT_EQ(n.decimal("value"), 0.01);
  EXPECT_EQ(lake->graph().stats().edge_total(), edges_before + 3);
  const auto kind = lake->graph().neighbors(rel, edges::kAnalysisDsKind, Direction::out).front();
  EXPECT_EQ(kind.text("name"), "common-subject");
  EXPECT_FALSE(kind.flag("predefined"));
  EXPECT_THROW(lake->enrichment().input_relationship(a, a, "x", "", "", 1), InvalidArgument);

  // Automatic detection never touches or duplicates the manual node.
  lake->linker().calculate_relationships(a);
  lake->linker().calculate_relationships(a);
  const auto manual = lake->graph().query(NodeLabel::AnalysisDSRelationship,
                                          [](const Node& x) { return x.flag("manual"); });
  ASSERT_EQ(manual.size(), 1u);
  EXPECT_EQ(manual[0], n);
}

}  // namespace
}  // namespace lakecat::enrichment
