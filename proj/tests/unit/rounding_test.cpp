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

#include <cmath>
#include <numeric>
#include <set>

#include "brute.hpp"
#include "spanopt/errors.hpp"
#include "spanopt/generators.hpp"
#include "spanopt/gkr.hpp"
#include "spanopt/height_reduction.hpp"
#include "spanopt/rounding.hpp"

namespace spanopt {
namespace {

TEST(Rng, DeterministicAndSplittable) {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.Next(), b.Next());
  EXPECT_NE(DeriveSeed(42, 0), DeriveSeed(42, 1));
  Rng c(7);
  for (int i = 0; i < 1000; ++i) {
    const int v = c.UniformInt(-2, 3);
    EXPECT_GE(v, -2);
    EXPECT_LE(v, 3);
    const double u = c.Uniform01();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(RandomizedRound, FullCapacityPathKeptInRoundOne) {
  Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
  std::vector<double> x(3, 0.0);
  x[*g.find_edge(0, 1)] = 1.0;
  x[*g.find_edge(1, 2)] = 1.0;
  const auto targets = Resolve(g, DemandSet({Demand::AtMost(0, 2, 2)}));
  Trace trace;
  const EdgeSet h = RandomizedRound(g, x, 1.0 / std::log(3.0), targets, 5, 10, &trace);
  EXPECT_EQ(trace.Get("round.rounds"), "1");
  EXPECT_EQ(h, EdgeSet({*g.find_edge(0, 1), *g.find_edge(1, 2)}));
}

TEST(RandomizedRound, ZeroCapacityFails) {
  const Graph g = testing::Diamond();
  const std::vector<double> x(4, 0.0);
  const auto targets = Resolve(g, DemandSet({Demand::Exact(0, 3)}));
  EXPECT_THROW(RandomizedRound(g, x, 2.0, targets, 5, 20), RoundingFailureError);
}

TEST(RandomizedRound, DiamondHalvesAllKept) {
  const Graph g = testing::Diamond();
  const std::vector<double> x(4, 0.5);
  const auto targets = Resolve(g, DemandSet({Demand::Exact(0, 3)}));
  const double k = 4.0 / std::log(4.0);  // x * k ln n = 2 >= 1
  EXPECT_EQ(RandomizedRound(g, x, k, targets, 9).size(), 4);
}

TEST(RandomizedRound, OutputAlwaysVerifies) {
  for (int i = 0; i < 40; ++i) {
    const auto inst = RandomFeasibleInstance(DeriveSeed(1101, i));
    const auto targets = Resolve(inst.graph, inst.bounded);
    const std::vector<double> x(inst.graph.num_edges(), 0.3);
    const EdgeSet h = RandomizedRound(inst.graph, x, 1.0, targets, DeriveSeed(1102, i));
    EXPECT_TRUE(VerifyResolved(inst.graph, h, targets).AllSatisfied());
  }
}

TEST(HittingSet, Examples) {
  EXPECT_EQ(HittingSet({{0, 1}, {1, 2}}), (std::vector<Vertex>{1}));
  EXPECT_EQ(HittingSet({{0, 1}, {2, 3}}).size(), 2u);
  EXPECT_EQ(HittingSet({{4, 5, 6}}).size(), 1u);
  EXPECT_THROW(HittingSet({{0}, {}}), std::invalid_argument);
}

TEST(HittingSet, HitsEverySetWithinGreedyBound) {
  for (int i = 0; i < 200; ++i) {
    Rng rng(DeriveSeed(1201, i));
    const int n = rng.UniformInt(3, 12);
    const int k = rng.UniformInt(1, n);
    std::vector<std::vector<Vertex>> sets(rng.UniformInt(1, 8));
    for (auto& s : sets) {
      std::vector<Vertex> all(n);
      std::iota(all.begin(), all.end(), 0);
      for (int j = 0; j < k; ++j) std::swap(all[j], all[rng.UniformInt(j, n - 1)]);
      s.assign(all.begin(), all.begin() + k);
    }
    const auto x = HittingSet(sets);
    const std::set<Vertex> xs(x.begin(), x.end());
    for (const auto& s : sets) {
      EXPECT_TRUE(std::any_of(s.begin(), s.end(), [&](Vertex v) { return xs.count(v); }));
    }
    EXPECT_LE(x.size(), (1.0 + std::log(sets.size())) * n / k + 1e-9);
  }
}

Graph Complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) e.push_back({u, v});
    }
  }
  return Graph(n, e);
}

TEST(HeightReduce, SigmaOneIsAStar) {
  Graph g(4, {{0, 1}, {1, 2}});
  GraphMetric m(g);
  HeightReduceOptions o;
  o.sigma = 1;
  const ShallowTree t = HeightReduce(m, 0, o);
  EXPECT_EQ(t.size(), 3);  // root, 1, 2; vertex 3 unreachable
  EXPECT_EQ(t.height(), 1);
  EXPECT_EQ(t.node(2).weight, 2);
}

TEST(HeightReduce, CompleteThreeSigmaTwo) {
  const Graph g = Complete(3);
  GraphMetric m(g);
  HeightReduceOptions o;
  o.sigma = 2;
  const ShallowTree t = HeightReduce(m, 0, o);
  EXPECT_EQ(t.size(), 5);
  EXPECT_EQ(t.height(), 2);
}

TEST(HeightReduce, BudgetRefusal) {
  const Graph g = Complete(8);
  GraphMetric m(g);
  HeightReduceOptions o;
  o.sigma = 4;
  o.node_budget = 100;
  EXPECT_THROW(HeightReduce(m, 0, o), BudgetExceededError);
}

TEST(HeightReduce, WeightsAndWitnessesAgree) {
  for (int i = 0; i < 30; ++i) {
    RandomInstanceOptions opt;
    opt.max_vertices = 7;
    const Graph g = RandomFeasibleInstance(DeriveSeed(1301, i), opt).graph;
    GraphMetric m(g);
    HeightReduceOptions o;
    o.sigma = 1 + i % 3;
    const ShallowTree t = HeightReduce(m, 0, o);
    EXPECT_LE(t.height(), o.sigma);
    EXPECT_EQ(t.node(0).point, 0);
    const auto dist = AllPairsDistances(g);
    for (int v = 1; v < t.size(); ++v) {
      const auto& nd = t.node(v);
      const int from = t.node(nd.parent).point;
      EXPECT_EQ(nd.weight, dist[from][nd.point]);
      ASSERT_EQ(static_cast<int>(nd.witness.size()), nd.weight);
      // The witness is a path from Psi(parent) to Psi(child).
      int at = from;
      for (EdgeId e : nd.witness) {
        EXPECT_EQ(g.edge(e).from, at);
        at = g.edge(e).to;
      }
      EXPECT_EQ(at, nd.point);
    }
  }
}

TEST(ProjectTree, SingleEdgeAndEmpty) {
  Graph g(3, {{0, 1}, {1, 2}});
  GraphMetric m(g);
  HeightReduceOptions o;
  o.sigma = 1;
  const ShallowTree t = HeightReduce(m, 0, o);
  int leaf = -1;
  for (int v = 1; v < t.size(); ++v) {
    if (t.node(v).point == 2) leaf = v;
  }
  const std::vector<int> nodes{0, leaf};
  EXPECT_EQ(ProjectTree(t, nodes).size(), 2u);
  EXPECT_TRUE(ProjectTree(t, std::vector<int>{}).empty());
}

TEST(ProjectTree, OverlapIsStrictlyCheaper) {
  // Star sigma=1 from 0 to 2 and 3: both witnesses use edge (0,1).
  Graph g(4, {{0, 1}, {1, 2}, {1, 3}});
  GraphMetric m(g);
  HeightReduceOptions o;
  o.sigma = 1;
  const ShallowTree t = HeightReduce(m, 0, o);
  std::vector<int> nodes{0};
  long w = 0;
  for (int v = 1; v < t.size(); ++v) {
    if (t.node(v).point >= 2) {
      nodes.push_back(v);
      w += t.node(v).weight;
    }
  }
  EXPECT_EQ(w, 4);
  EXPECT_EQ(ProjectTree(t, nodes).size(), 3u);
}

TEST(ProjectTree, CostNeverExceedsTreeWeight) {
  for (int i = 0; i < 200; ++i) {
    RandomInstanceOptions opt;
    opt.max_vertices = 7;
    const Graph g = RandomFeasibleInstance(DeriveSeed(1401, i), opt).graph;
    GraphMetric m(g);
    HeightReduceOptions o;
    o.sigma = 2;
    const ShallowTree t = HeightReduce(m, 0, o);
    Rng rng(DeriveSeed(1402, i));
    std::vector<char> in(t.size(), 0);
    in[0] = 1;
    for (int v = 1; v < t.size(); ++v) {
      if (rng.UniformInt(0, 2) == 0) {
        for (int u = v; u >= 0 && !in[u]; u = t.node(u).parent) in[u] = 1;
      }
    }
    std::vector<int> nodes;
    long w = 0;
    for (int v = 0; v < t.size(); ++v) {
      if (!in[v]) continue;
      nodes.push_back(v);
      if (v) w += t.node(v).weight;
    }
    EXPECT_LE(static_cast<long>(ProjectTree(t, nodes).size()), w);
  }
}

TEST(Zelikovsky, StarIsUnchanged) {
  Arborescence a{0, {-1, 0, 0, 0}, {0, 2, 3, 1}};
  const auto r = ZelikovskyReduce(a, 1);
  EXPECT_EQ(r.leaves, (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(r.height, 1);
  EXPECT_EQ(r.total_weight, 6);
}

TEST(Zelikovsky, BinaryTreeTwoLevels) {
  // 0 -> {1, 2}, 1 -> {3, 4}, 2 -> {5, 6}; unit weights.
  Arborescence a{0, {-1, 0, 0, 1, 1, 2, 2}, {0, 1, 1, 1, 1, 1, 1}};
  const auto r = ZelikovskyReduce(a, 2);
  EXPECT_EQ(r.leaves, (std::vector<int>{3, 4, 5, 6}));
  EXPECT_EQ(r.height, 2);
  // Blocks {3,4} -> 1 and {5,6} -> 2, then {1,2} -> 0.
  EXPECT_EQ(r.edges.size(), 6u);
  EXPECT_EQ(r.total_weight, 6);
}

TEST(Zelikovsky, SingleLeafPath) {
  Arborescence a{0, {-1, 0, 1, 2}, {0, 1, 2, 3}};
  const auto r = ZelikovskyReduce(a, 3);
  ASSERT_EQ(r.edges.size(), 1u);
  EXPECT_EQ(r.edges[0].from, 0);
  EXPECT_EQ(r.edges[0].to, 3);
  EXPECT_EQ(r.edges[0].weight, 6);
}

TEST(Gkr, StarFullCapacityHitsAllInOnePass) {
  ShallowTree t;
  t.AddNode(-1, 0, 0, {});
  for (int i = 0; i < 4; ++i) t.AddNode(0, i + 1, 1, {});
  const std::vector<double> x(5, 1.0);
  const auto r = GkrRound(t, x, {{1}, {2, 3}, {4}}, 3);
  EXPECT_EQ(r.batches, 1);
  Rng rng(1);
  const auto pass = GkrPass(t, Monotonize(t, x), rng);
  EXPECT_EQ(std::count(pass.begin(), pass.end(), 1), 5);
}

TEST(Gkr, PathMarginals) {
  // r - a - b with x(r,a)=1, x(a,b)=1/2; plus a root edge with x=1/2.
  ShallowTree t;
  t.AddNode(-1, 0, 0, {});
  const int a = t.AddNode(0, 1, 1, {});
  const int b = t.AddNode(a, 2, 1, {});
  const int c = t.AddNode(0, 3, 1, {});
  std::vector<double> x(4, 0.0);
  x[a] = 1.0;
  x[b] = 0.5;
  x[c] = 0.5;
  const auto y = Monotonize(t, x);
  Rng rng(77);
  int hb = 0, hc = 0;
  const int trials = 10000;
  for (int i = 0; i < trials; ++i) {
    const auto p = GkrPass(t, y, rng);
    hb += p[b];
    hc += p[c];
  }
  EXPECT_NEAR(static_cast<double>(hb) / trials, 0.5, 0.02);
  EXPECT_NEAR(static_cast<double>(hc) / trials, 0.5, 0.02);
}

TEST(Gkr, MonotonizeCapsByParent) {
  ShallowTree t;
  t.AddNode(-1, 0, 0, {});
  const int a = t.AddNode(0, 1, 1, {});
  const int b = t.AddNode(a, 2, 1, {});
  const std::vector<double> x{0.0, 0.25, 0.75};
  const auto y = Monotonize(t, x);
  EXPECT_DOUBLE_EQ(y[a], 0.25);
  EXPECT_DOUBLE_EQ(y[b], 0.25);
}

TEST(Gkr, UnreachableGroupFails) {
  ShallowTree t;
  t.AddNode(-1, 0, 0, {});
  const int a = t.AddNode(0, 1, 1, {});
  const std::vector<double> x{1.0, 0.0};
  EXPECT_THROW(GkrRound(t, x, {{a}}, 1, 4), RoundingFailureError);
}

}  // namespace
}  // namespace spanopt
