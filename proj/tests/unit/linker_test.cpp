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

#include <random>
#include <thread>

#include "harness.hpp"
#include "lakecat/error.hpp"
#include "lakecat/graph/codec.hpp"
#include "lakecat/graph/registry.hpp"
#include "lakecat/lake.hpp"
#include "lakecat/linker/hashing.hpp"
#include "lakecat/linker/measures.hpp"
#include "oracles.hpp"

namespace lakecat::linker {
namespace {

namespace fs = std::filesystem;
using testing::TempDir;

TEST(Hashing, FnvReferenceValues) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Hashing, RowHashGolden) {
  // Recomputed by a standalone Python FNV-1a 64 + fmix64 over the first
  // data row of lung_cancer.csv.
  const std::vector<std::string> row{"John", "Wick", "25", "3", "7", "1", "0"};
  EXPECT_EQ(row_hash(row), 0xc56ed509caef5e06ULL);
  EXPECT_EQ(row_hash(row, 7), 0x9ed99e3798fd0e6bULL);
  const std::vector<std::string> padded{"a", " b ", ""};
  EXPECT_EQ(row_hash(padded), 0x495b177a4ba887a1ULL);
}

TEST(Hashing, RowHashSeparatesCells) {
  const std::vector<std::string> a{"ab", "c"}, b{"a", "bc"};
  EXPECT_NE(row_hash(a), row_hash(b));
  const std::vector<std::string_view> av{"ab", "c"};
  EXPECT_EQ(row_hash(a), row_hash(av));
}

std::vector<std::uint64_t> range_set(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> v;
  for (std::uint64_t i = lo; i < hi; ++i) v.push_back(fmix64(i + 1));
  return v;
}

TEST(MinHash, IdenticalSetsEstimateOne) {
  const auto s = range_set(0, 300);
  EXPECT_EQ(estimate_jaccard(minhash(s, 128, 1), minhash(s, 128, 1)), 1.0);
}

TEST(MinHash, DisjointSets) {
  const auto a = range_set(0, 500), b = range_set(500, 1000);
  EXPECT_LE(estimate_jaccard(minhash(a, 128, 42), minhash(b, 128, 42)), 0.05);
}

TEST(MinHash, HalfOverlapWithinTolerance) {
  const auto a = range_set(0, 600), b = range_set(200, 800);  // J = 400/800
  EXPECT_NEAR(estimate_jaccard(minhash(a, 128, 42), minhash(b, 128, 42)), 0.5, 0.1);
}

TEST(MinHash, OrderAndDuplicatesDoNotMatter) {
  auto a = range_set(0, 100);
  auto b = a;
  std::reverse(b.begin(), b.end());
  b.push_back(a.front());
  EXPECT_EQ(minhash(a, 64, 3), minhash(b, 64, 3));
}

TEST(MinHash, MismatchedSignaturesRejected) {
  const auto s = range_set(0, 10);
  EXPECT_THROW(estimate_jaccard(minhash(s, 64, 1), minhash(s, 128, 1)), InvalidArgument);
  EXPECT_THROW(estimate_jaccard(minhash(s, 64, 1), minhash(s, 64, 2)), InvalidArgument);
}

TEST(MinHash, EstimateIsSymmetricProperty) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::uint64_t> a, b;
    for (int i = 0; i < 100; ++i) {
      a.push_back(rng() % 300);
      b.push_back(rng() % 300);
    }
    const auto sa = minhash(a, 128, trial), sb = minhash(b, 128, trial);
    EXPECT_EQ(estimate_jaccard(sa, sb), estimate_jaccard(sb, sa));
  }
}

TEST(Measures, Containment) {
  const std::set<int> a{1, 2, 3}, b{1, 2};
  EXPECT_DOUBLE_EQ(exact_containment(a, b), 2.0 / 3.0);
  EXPECT_EQ(exact_containment(b, a), 1.0);
  EXPECT_THROW(exact_containment(std::set<int>{}, a), InvalidArgument);
}

TEST(Measures, JaccardAgreesWithOracle) {
  std::mt19937 rng(11);
  for (int t = 0; t < 100; ++t) {
    std::set<int> a, b;
    for (int i = 0; i < 30; ++i) {
      a.insert(static_cast<int>(rng() % 50));
      b.insert(static_cast<int>(rng() % 50));
    }
    EXPECT_DOUBLE_EQ(jaccard(a, b), oracle::jaccard(a, b));
    EXPECT_DOUBLE_EQ(exact_containment(a, b), oracle::containment(a, b));
  }
  EXPECT_EQ(jaccard(std::set<int>{}, std::set<int>{}), 0.0);
}

TEST(Measures, PearsonEdges) {
  const std::vector<double> x{1, 2, 3, 4}, y{2, 4, 5, 4}, neg{-1, -2, -3, -4};
  EXPECT_NEAR(pearson(x, y), 0.7181848464596079, 1e-12);
  EXPECT_EQ(pearson(x, x), 1.0);
  EXPECT_EQ(pearson(x, neg), -1.0);
  EXPECT_THROW(pearson(x, std::vector<double>{1, 2}), InvalidArgument);
  EXPECT_THROW(pearson(std::vector<double>{1}, std::vector<double>{1}), InvalidArgument);
  EXPECT_THROW(pearson(x, std::vector<double>{3, 3, 3, 3}), InvalidArgument);
}

TEST(Measures, LevenshteinAgreesWithOracle) {
  std::mt19937 rng(5);
  const std::string alphabet = "abcd";
  for (int t = 0; t < 200; ++t) {
    std::string a, b;
    for (auto n = rng() % 9; n > 0; --n) a += alphabet[rng() % 4];
    for (auto n = rng() % 9; n > 0; --n) b += alphabet[rng() % 4];
    EXPECT_EQ(levenshtein(a, b), oracle::levenshtein(a, b)) << a << " / " << b;
    EXPECT_DOUBLE_EQ(name_similarity(a, b), oracle::name_similarity(a, b));
  }
  EXPECT_EQ(levenshtein("kitten", "sitting"), 3u);
  EXPECT_EQ(name_similarity("Age", "age"), 1.0);
}

TEST(Measures, TagJaccard) {
  EXPECT_DOUBLE_EQ(tag_jaccard({"cancer", "health"}, {"cancer", "covid"}), 1.0 / 3.0);
  EXPECT_EQ(tag_jaccard({"a"}, {"a"}), 1.0);
  EXPECT_EQ(tag_jaccard({}, {}), 0.0);
}

// Base table plus derivatives written as CSV files.
class LinkerTest : public ::testing::Test {
 protected:
  void SetUp() override {
    lake = Lake::attach(testing::test_config(dir.path()), GraphStore::in_memory());
    base_table = oracle::read_csv((testing::fixtures_dir() / "derived" / "chsi_base.csv").string());
  }

  NodeId ingest_table(const oracle::Table& t, const std::string& name) {
    const fs::path p = dir / (name + ".csv");
    oracle::write_csv(p.string(), t);
    ingestion::SourceSpec spec;
    spec.connection = ingestion::SourceConnection::parse(p.string());
    spec.name = name;
    const auto src = lake->ingestor().connect_data_source(spec);
    const auto out = lake->ingestor().ingest_dataset({*src, ingestion::IngestMode::batch, "", "curator", {}});
    EXPECT_TRUE(out.dataset) << out.error;
    return *out.dataset;
  }

  oracle::Table row_subset() const {
    oracle::Table t{base_table.header, {}};
    for (std::size_t i = 0; i < base_table.rows.size(); i += 2) t.rows.push_back(base_table.rows[i]);
    return t;
  }

  std::size_t live_relationships() const {
    return lake->graph()
        .query(NodeLabel::AnalysisDSRelationship, [](const Node& n) { return !n.flag("superseded"); })
        .size();
  }

  TempDir dir;
  std::unique_ptr<Lake> lake;
  oracle::Table base_table;
};

TEST_F(LinkerTest, RowSubsetContainment) {
  const NodeId base = ingest_table(base_table, "base");
  const NodeId sub = ingest_table(row_subset(), "sub");
  const auto s = lake->linker().score(base, sub);
  EXPECT_EQ(s.containment, 1.0);
  ASSERT_TRUE(s.similarity);
  EXPECT_NEAR(*s.similarity, 0.5, 0.1);
  EXPECT_EQ(lake->linker().score(sub, base).similarity, s.similarity);
}

TEST_F(LinkerTest, RowHashSetOfSubsetIsSubset) {
  const NodeId base = ingest_table(base_table, "base");
  const NodeId sub = ingest_table(row_subset(), "sub");
  const auto a = lake->linker().row_hash_set(base), b = lake->linker().row_hash_set(sub);
  EXPECT_TRUE(std::includes(a.begin(), a.end(), b.begin(), b.end()));
  EXPECT_EQ(a.size(), base_table.rows.size());
}

TEST_F(LinkerTest, UnstructuredHasNoRowHashes) {
  ingestion::SourceSpec spec;
  spec.connection = ingestion::SourceConnection::parse((testing::corpus_dir() / "chest_xray").string());
  spec.name = "xray";
  const auto src = lake->ingestor().connect_data_source(spec);
  const auto out = lake->ingestor().ingest_dataset({*src, ingestion::IngestMode::batch, "", "curator", {}});
  EXPECT_THROW(lake->linker().row_hash_set(*out.dataset), NotApplicable);
  const NodeId base = ingest_table(base_table, "base");
  const auto s = lake->linker().score(base, *out.dataset);
  EXPECT_FALSE(s.similarity);
  EXPECT_FALSE(s.containment);
  EXPECT_TRUE(s.logical_cluster);
}

TEST_F(LinkerTest, RecomputeIsIdempotent) {
  const NodeId base = ingest_table(base_table, "base");
  ingest_table(row_subset(), "sub");
  const auto first = lake->linker().calculate_relationships(base);
  const std::string dump = lake->graph().canonical_dump();
  const auto second = lake->linker().calculate_relationships(base);
  EXPECT_EQ(first, second);
  EXPECT_EQ(live_relationships(), 1u);
  EXPECT_EQ(lake->graph().stats().nodes_of(NodeLabel::AnalysisDSRelationship), 1u);
  EXPECT_EQ(lake->graph().canonical_dump(), dump);
}

TEST_F(LinkerTest, ConcurrentLinkingDoesNotDuplicate) {
  const NodeId base = ingest_table(base_table, "base");
  const NodeId sub = ingest_table(row_subset(), "sub");
  std::thread t1([&] { lake->linker().calculate_relationships(base); });
  std::thread t2([&] { lake->linker().calculate_relationships(sub); });
  t1.join();
  t2.join();
  EXPECT_EQ(live_relationships(), 1u);
}

TEST_F(LinkerTest, PersistedValuesMeetThresholds) {
  const NodeId base = ingest_table(base_table, "base");
  ingest_table(row_subset(), "sub");
  lake->linker().calculate_relationships(base);
  std::map<std::string, double> t;
  for (const auto& k : relationship_ds_registry(lake->graph())) t[k.name] = k.threshold;
  for (const Node& n : lake->graph().query(NodeLabel::AnalysisDSRelationship)) {
    EXPECT_GE(*n.decimal("value"), t.at(n.text("kind")));
  }
}

TEST_F(LinkerTest, UnprofiledDatasetRejected) {
  testing::write_file(dir / "bad.csv", "a,b\n1\n");
  ingestion::SourceSpec spec;
  spec.connection = ingestion::SourceConnection::parse((dir / "bad.csv").string());
  spec.name = "bad";
  const auto src = lake->ingestor().connect_data_source(spec);
  const auto out = lake->ingestor().ingest_dataset({*src, ingestion::IngestMode::batch, "", "curator", {}});
  EXPECT_THROW(lake->linker().calculate_relationships(*out.dataset), InvalidArgument);
}

TEST_F(LinkerTest, RelationshipSupersededWhenPairStopsQualifying) {
  const NodeId a = ingest_table(base_table, "a");
  const NodeId b = ingest_table(oracle::Table{{"q"}, {{"1"}}}, "b");
  lake->enrichment().annotate_semantics(a, std::nullopt, {"x"});
  lake->enrichment().annotate_semantics(b, std::nullopt, {"x"});
  auto rels = lake->linker().calculate_relationships(a);
  ASSERT_EQ(rels.size(), 1u);
  EXPECT_EQ(lake->graph().get(rels[0]).text("kind"), "logical-cluster");

  // Tag Jaccard drops to 1/3, below the logical-cluster threshold.
  lake->enrichment().annotate_semantics(a, std::nullopt, {"y", "z"});
  rels = lake->linker().calculate_relationships(b);
  EXPECT_TRUE(rels.empty());
  EXPECT_EQ(live_relationships(), 0u);
  const auto all = lake->graph().query(NodeLabel::AnalysisDSRelationship);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_TRUE(all[0].flag("superseded"));
}

TEST_F(LinkerTest, DeterministicAcrossRuns) {
  std::string dumps[2];
  for (auto& d : dumps) {
    lake = Lake::attach(testing::test_config(dir.path() / std::to_string(&d - dumps)), GraphStore::in_memory());
    const NodeId base = ingest_table(base_table, "base");
    ingest_table(row_subset(), "sub");
    lake->linker().calculate_relationships(base);
    nlohmann::json rel = nlohmann::json::array();
    for (const Node& n : lake->graph().query(NodeLabel::AnalysisDSRelationship)) rel.push_back(codec::encode(n));
    for (const Node& n : lake->graph().query(NodeLabel::AnalysisAttribute)) rel.push_back(codec::encode(n));
    d = rel.dump();
  }
  EXPECT_EQ(dumps[0], dumps[1]);
}

TEST_F(LinkerTest, LogicalClusters) {
  const NodeId a = ingest_table(base_table, "a");
  const NodeId b = ingest_table(row_subset(), "b");
  oracle::Table tiny{{"q"}, {{"1"}}};
  const NodeId c = ingest_table(tiny, "c");
  lake->enrichment().annotate_semantics(a, std::nullopt, {"Health", "county"});
  lake->enrichment().annotate_semantics(b, std::nullopt, {"health", "County "});
  lake->enrichment().annotate_semantics(c, std::nullopt, {"covid"});
  EXPECT_EQ(lake->linker().tag_jaccard(a, b), 1.0);
  const auto clusters = lake->linker().logical_clusters();
  ASSERT_EQ(clusters.size(), 1u);
  EXPECT_EQ(clusters[0], (std::vector<NodeId>{a, b}));
}

}  // namespace
}  // namespace lakecat::linker
