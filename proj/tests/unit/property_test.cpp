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

#include "harness.hpp"
#include "lakecat/graph/registry.hpp"
#include "lakecat/graph/store.hpp"
#include "lakecat/linker/hashing.hpp"
#include "lakecat/linker/measures.hpp"
#include "lakecat/profiler/stats.hpp"
#include "oracles.hpp"

namespace lakecat {
namespace {

using testing::TempDir;

// Random mutation sequences survive close/reopen and snapshot/reopen
// unchanged.
TEST(Properties, ReplayReproducesRandomHistories) {
  for (unsigned seed = 1; seed <= 10; ++seed) {
    std::mt19937 rng(seed);
    TempDir dir;
    std::string dump;
    GraphStats stats;
    {
      auto g = GraphStore::open(dir / "g");
      std::vector<NodeId> datasets, tags;
      for (int step = 0; step < 200; ++step) {
        switch (rng() % 4) {
          case 0:
            datasets.push_back(g.put_node(NodeLabel::DatalakeDataset, {{"name", "d" + std::to_string(step)}}));
            break;
          case 1:
            tags.push_back(g.put_node(NodeLabel::Tag, {{"name", "t" + std::to_string(step)}}));
            break;
          case 2:
            if (!datasets.empty() && !tags.empty()) {
              g.put_edge(edges::kDatasetTag, datasets[rng() % datasets.size()], tags[rng() % tags.size()]);
            }
            break;
          default:
            if (!datasets.empty()) {
              g.set_props(datasets[rng() % datasets.size()],
                          {{"score", static_cast<double>(rng() % 1000) / 7.0},
                           {"n", static_cast<std::int64_t>(rng())},
                           {"at", Timestamp{static_cast<std::int64_t>(rng())}}});
            }
        }
        if (step == 120) g.snapshot();
      }
      dump = g.canonical_dump();
      stats = g.stats();
    }
    auto g = GraphStore::open(dir / "g", OpenMode::read_only);
    EXPECT_EQ(g.canonical_dump(), dump) << "seed " << seed;
    EXPECT_EQ(g.stats(), stats);
    EXPECT_TRUE(g.check_integrity().empty());
  }
}

TEST(Properties, NumericStatsMatchOracleOnRandomColumns) {
  std::mt19937_64 rng(99);
  std::normal_distribution<double> normal(50.0, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::optional<double>> col;
    const auto n = rng() % 60;
    for (std::size_t i = 0; i < n; ++i) {
      if (rng() % 5 == 0) {
        col.push_back(std::nullopt);
      } else {
        col.push_back(std::round(normal(rng) * 100.0) / 100.0);
      }
    }
    const auto s = profiler::compute_numeric_stats(col);
    const auto o = oracle::numeric(col);
    ASSERT_EQ(s.count, o.count + o.nulls);
    ASSERT_EQ(s.null_count, o.nulls);
    ASSERT_EQ(s.distinct_count, o.distinct);
    if (o.count == 0) {
      EXPECT_FALSE(s.mean);
      continue;
    }
    EXPECT_EQ(*s.min, o.min);
    EXPECT_EQ(*s.max, o.max);
    EXPECT_LE(std::abs(*s.mean - static_cast<double>(o.mean)), 1e-9 * std::max(1.0L, std::abs(o.mean)));
    EXPECT_LE(std::abs(*s.std_dev - static_cast<double>(o.sd)), 1e-9 * std::max(1.0L, o.sd));
    EXPECT_GE(*s.mean, *s.min);
    EXPECT_LE(*s.mean, *s.max);
  }
}

TEST(Properties, NominalTopKIsSortedAndBounded) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::optional<std::string>> col;
    std::map<std::string, std::int64_t> freq;
    for (int i = 0; i < 40; ++i) {
      std::string v(1, static_cast<char>('a' + rng() % 8));
      freq[v]++;
      col.push_back(v);
    }
    const auto s = profiler::compute_nominal_stats(col);
    EXPECT_LE(s.top_k.size(), profiler::kTopK);
    EXPECT_EQ(s.distinct_count, static_cast<std::int64_t>(freq.size()));
    for (std::size_t i = 0; i < s.top_k.size(); ++i) {
      EXPECT_EQ(s.top_k[i].second, freq.at(s.top_k[i].first));
      if (i > 0) {
        const auto& p = s.top_k[i - 1];
        const auto& q = s.top_k[i];
        EXPECT_TRUE(p.second > q.second || (p.second == q.second && p.first < q.first));
      }
    }
  }
}

TEST(Properties, PearsonBoundedAndSymmetric) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(-100, 100);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> x(30), y(30);
    for (auto& v : x) v = u(rng);
    for (auto& v : y) v = u(rng);
    const double r = linker::pearson(x, y);
    EXPECT_GE(r, -1.0);
    EXPECT_LE(r, 1.0);
    EXPECT_NEAR(r, linker::pearson(y, x), 1e-15);
    // Invariant under positive affine maps.
    std::vector<double> z(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) z[i] = 3.0 * x[i] + 11.0;
    EXPECT_NEAR(linker::pearson(z, y), r, 1e-12);
  }
}

TEST(Properties, RowHashIgnoresSurroundingWhitespace) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<std::string> row, padded;
    for (int c = 0; c < 5; ++c) {
      std::string v = std::to_string(rng() % 100);
      row.push_back(v);
      padded.push_back(std::string(rng() % 3, ' ') + v + std::string(rng() % 3, ' '));
    }
    EXPECT_EQ(linker::row_hash(row), linker::row_hash(padded));
  }
}

TEST(Properties, JaccardAndContainmentBounds) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    std::set<int> a, b;
    for (int i = 0; i < 20; ++i) {
      a.insert(static_cast<int>(rng() % 40));
      b.insert(static_cast<int>(rng() % 40));
    }
    const double j = linker::jaccard(a, b);
    EXPECT_EQ(j, linker::jaccard(b, a));
    EXPECT_LE(j, std::min(linker::exact_containment(a, b), linker::exact_containment(b, a)));
  }
}

}  // namespace
}  // namespace lakecat
