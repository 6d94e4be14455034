// Copyright 2026 The spanopt Authors
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

#include "brute.hpp"
#include "spanopt/generators.hpp"
#include "spanopt/oracle.hpp"
#include "spanopt/preserver.hpp"

namespace spanopt {
namespace {

using testing::Diamond;
using testing::kInf;
using testing::RelaxDistances;

// Every demand distance in F equals its distance in G (independent check).
bool PreservesExactly(const Graph& g, const EdgeSet& f, const DemandSet& demands) {
  const auto mask = f.Mask(g.num_edges());
  for (const Demand& d : demands) {
    const int in_g = RelaxDistances(g, d.s)[d.t];
    const int in_f = RelaxDistances(g, d.s, &mask)[d.t];
    if (in_g == kInf || in_f != in_g) return false;
  }
  return true;
}

TEST(PreserverAlgorithm1, PathGraph) {
  Graph g(3, {{0, 1}, {1, 2}});
  const DemandSet demands({Demand::Exact(0, 2)});
  const auto f = PreserverAlgorithm1(g, demands, 2, 1);
  EXPECT_EQ(f, EdgeSet({0, 1}));
  EXPECT_EQ(ExactMinSolution(g, demands).opt, 2);
}

TEST(PreserverAlgorithm1, EmptyDemands) {
  EXPECT_TRUE(PreserverAlgorithm1(Diamond(), DemandSet{}, 4, 1).empty());
}

TEST(PreserverAlgorithm1, DiamondPairIsThick) {
  const DemandSet demands({Demand::Exact(0, 3)});
  Trace trace;
  const auto f = PreserverAlgorithm1(Diamond(), demands, 4, 1, &trace);
  EXPECT_EQ(trace.Get("threshold.k"), "2");
  EXPECT_EQ(trace.Get("threshold.thick"), "1");
  EXPECT_EQ(trace.Get("threshold.thin"), "0");
  EXPECT_TRUE(PreservesExactly(Diamond(), f, demands));
}

TEST(PreserverAlgorithm2, SingleEdgePair) {
  Graph g(2, {{0, 1}});
  const auto f = PreserverAlgorithm2(g, DemandSet({Demand::Exact(0, 1)}), 1, 3);
  EXPECT_EQ(f, EdgeSet({0}));
}

TEST(PreserverAlgorithm2, EmptyBucket) {
  EXPECT_TRUE(PreserverAlgorithm2(Diamond(), DemandSet{}, 1, 3).empty());
}

TEST(PreserverAlgorithm2, HubPathBothEdges) {
  Graph g(3, {{0, 1}, {1, 2}});
  const auto f = PreserverAlgorithm2(g, DemandSet({Demand::Exact(0, 2)}), 2, 3);
  EXPECT_EQ(f, EdgeSet({0, 1}));
}

TEST(PreserverAlgorithm3, RootOnShortestPath) {
  Graph g(3, {{0, 1}, {1, 2}});
  Algorithm3Stats stats;
  const auto f = PreserverAlgorithm3(g, DemandSet({Demand::Exact(0, 2)}), 2, 0.5, 3,
                                     nullptr, &stats);
  EXPECT_EQ(f, EdgeSet({0, 1}));
  ASSERT_EQ(stats.roots.size(), 1u);
  EXPECT_EQ(stats.remaining, (std::vector<int>{0}));
}

TEST(PreserverAlgorithm3, CrossingPairs) {
  // 0 -> 4 -> 2 and 1 -> 4 -> 3: both pairs cross at 4. A lone pair at its
  // own source has the same density 2, so either root order is acceptable.
  Graph g(5, {{0, 4}, {1, 4}, {4, 2}, {4, 3}});
  const DemandSet demands({Demand::Exact(0, 2), Demand::Exact(1, 3)});
  Algorithm3Stats stats;
  const auto f = PreserverAlgorithm3(g, demands, 2, 0.5, 3, nullptr, &stats);
  EXPECT_LE(stats.roots.size(), 2u);
  EXPECT_EQ(f.size(), 4);
  const auto oracle = ExactMinDensityJunctionTree(g, demands, 4);
  EXPECT_DOUBLE_EQ(oracle.density(), 2.0);
}

TEST(PreserverAlgorithm3, SharedHalfPathOneIteration) {
  // 0 -> 4 -> {2, 3}: one tree (rooted at 0 or 4) has density 3/2 < 2.
  Graph g(5, {{0, 4}, {4, 2}, {4, 3}, {0, 1}, {1, 2}});
  const DemandSet demands({Demand::Exact(0, 2), Demand::Exact(0, 3)});
  Algorithm3Stats stats;
  const auto f = PreserverAlgorithm3(g, demands, 2, 0.5, 3, nullptr, &stats);
  ASSERT_EQ(stats.roots.size(), 1u);
  EXPECT_EQ(stats.remaining, (std::vector<int>{0}));
  EXPECT_EQ(f.size(), 3);
}

TEST(PreserverAlgorithm3, BucketShrinksEachIteration) {
  RandomInstanceOptions opts;
  opts.max_pairs = 5;
  for (Seed seed = 0; seed < 30; ++seed) {
    const auto inst = RandomFeasibleInstance(DeriveSeed(5, seed), opts);
    const auto resolved = Resolve(inst.graph, inst.exact);
    // Bucket d* = 2 holds the pairs with distance in [2, 4).
    std::vector<int> idx;
    for (size_t p = 0; p < resolved.size(); ++p) {
      if (resolved[p].distance >= 2 && resolved[p].distance < 4) idx.push_back(static_cast<int>(p));
    }
    if (idx.empty()) continue;
    const DemandSet bucket = inst.exact.Subset(idx);
    Algorithm3Stats stats;
    const auto f = PreserverAlgorithm3(inst.graph, bucket, 2, 0.5, seed, nullptr, &stats);
    int prev = bucket.size();
    for (int r : stats.remaining) {
      EXPECT_LT(r, prev);
      prev = r;
    }
    EXPECT_EQ(prev, 0);
    EXPECT_TRUE(PreservesExactly(inst.graph, f, bucket));
  }
}

TEST(PreserverApprox, SingleEdgeDemand) {
  Graph g(3, {{0, 1}, {1, 2}, {2, 0}});
  const auto f = PreserverApprox(g, DemandSet({Demand::Exact(2, 0)}), 0.5, 1);
  EXPECT_EQ(f.size(), 1);
}

TEST(PreserverApprox, StarFromOneSource) {
  Graph g(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
  const DemandSet demands({Demand::Exact(0, 1), Demand::Exact(0, 2), Demand::Exact(0, 3)});
  const auto f = PreserverApprox(g, demands, 0.5, 1);
  EXPECT_EQ(ExactMinSolution(g, demands).opt, 3);
  EXPECT_EQ(f.size(), 3);
}

TEST(PreserverApprox, RandomInstancesAreExactPreservers) {
  double worst = 0.0;
  for (Seed seed = 0; seed < 200; ++seed) {
    const auto inst = RandomFeasibleInstance(DeriveSeed(11, seed));
    const auto f = PreserverApprox(inst.graph, inst.exact, 0.5, seed);
    ASSERT_TRUE(PreservesExactly(inst.graph, f, inst.exact)) << "seed " << seed;
    if (seed % 10 == 0) {
      const auto opt = ExactMinSolution(inst.graph, inst.exact, 25);
      EXPECT_LE(opt.opt, f.size());
      worst = std::max(worst, static_cast<double>(f.size()) / std::max(1, opt.opt));
    }
  }
  EXPECT_LE(worst, 20.0);
  RecordProperty("worst_ratio", std::to_string(worst));
}

}  // namespace
}  // namespace spanopt
