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

#include <cstdlib>

#include "brute.hpp"
#include "spanopt/errors.hpp"
#include "spanopt/generators.hpp"
#include "spanopt/oracle.hpp"

namespace spanopt {
namespace {

using testing::Diamond;
using testing::kInf;
using testing::RandomDigraph;
using testing::RelaxDistances;

bool Satisfies(const Graph& g, const std::vector<char>& mask, const DemandSet& demands) {
  for (const Demand& d : demands) {
    const int full = RelaxDistances(g, d.s)[d.t];
    const int got = RelaxDistances(g, d.s, &mask)[d.t];
    if (got == kInf) return false;
    if (d.kind == BoundKind::kExact && got != full) return false;
    if (d.kind == BoundKind::kAtMost && got > d.bound) return false;
  }
  return true;
}

// Minimum over all 2^m subsets, no pruning.
int NaiveOpt(const Graph& g, const DemandSet& demands) {
  const int m = g.num_edges();
  int best = kInf;
  for (long bits = 0; bits < (1L << m); ++bits) {
    const int size = __builtin_popcountl(bits);
    if (size >= best) continue;
    std::vector<char> mask(m);
    for (int e = 0; e < m; ++e) mask[e] = (bits >> e) & 1;
    if (Satisfies(g, mask, demands)) best = size;
  }
  return best;
}

// Minimum density |F| / #pairs routed through r, over all subsets.
double NaiveDensity(const Graph& g, const DemandSet& demands, int r) {
  const int m = g.num_edges();
  double best = -1;
  for (long bits = 1; bits < (1L << m); ++bits) {
    std::vector<char> mask(m);
    for (int e = 0; e < m; ++e) mask[e] = (bits >> e) & 1;
    const auto from_r = RelaxDistances(g, r, &mask);
    int routed = 0;
    for (const Demand& d : demands) {
      const int a = RelaxDistances(g, d.s, &mask)[r];
      const int b = from_r[d.t];
      if (a == kInf || b == kInf) continue;
      const int limit = d.kind == BoundKind::kUnbounded ? kInf
                        : d.kind == BoundKind::kAtMost  ? d.bound
                                                        : RelaxDistances(g, d.s)[d.t];
      if (limit == kInf || a + b <= limit) ++routed;
    }
    if (routed == 0) continue;
    const double dens = static_cast<double>(__builtin_popcountl(bits)) / routed;
    if (best < 0 || dens < best) best = dens;
  }
  return best;
}

TEST(ExactMinSolution, PathPair) {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto sol = ExactMinSolution(g, DemandSet({Demand::Exact(0, 3)}));
  EXPECT_EQ(sol.opt, 3);
  EXPECT_EQ(sol.witness, EdgeSet({0, 1, 2}));
}

TEST(ExactMinSolution, Diamond) {
  EXPECT_EQ(ExactMinSolution(Diamond(), DemandSet({Demand::Exact(0, 3)})).opt, 2);
}

TEST(ExactMinSolution, SharedEdgeBeatsSum) {
  Graph g(4, {{0, 1}, {1, 2}, {1, 3}});
  const DemandSet both({Demand::Exact(0, 2), Demand::Exact(0, 3)});
  const int joint = ExactMinSolution(g, both).opt;
  const int a = ExactMinSolution(g, DemandSet({Demand::Exact(0, 2)})).opt;
  const int b = ExactMinSolution(g, DemandSet({Demand::Exact(0, 3)})).opt;
  EXPECT_EQ(joint, 3);
  EXPECT_LT(joint, a + b);
}

TEST(ExactMinSolution, MatchesNaiveEnumeration) {
  RandomInstanceOptions opts;
  opts.max_vertices = 6;
  opts.max_edges = 11;
  opts.max_pairs = 3;
  for (Seed seed = 0; seed < 40; ++seed) {
    const auto inst = RandomFeasibleInstance(DeriveSeed(3, seed), opts);
    for (const DemandSet* d : {&inst.exact, &inst.bounded, &inst.unbounded}) {
      const auto sol = ExactMinSolution(inst.graph, *d);
      EXPECT_EQ(sol.opt, NaiveOpt(inst.graph, *d)) << "seed " << seed;
      EXPECT_EQ(sol.witness.size(), sol.opt);
      EXPECT_TRUE(VerifySolution(inst.graph, sol.witness, *d).AllSatisfied());
    }
  }
}

TEST(ExactMinSolution, BudgetIsEnforced) {
  std::vector<Edge> edges;
  for (int u = 0; u < 7; ++u) {
    for (int v = 0; v < 7; ++v) {
      if (u != v) edges.push_back({u, v});
    }
  }
  Graph g(7, edges);
  const DemandSet demands({Demand::Unbounded(0, 6)});
  EXPECT_THROW(ExactMinSolution(g, demands, 10), BudgetExceededError);
}

TEST(OracleEdgeBudget, EnvironmentOverride) {
  ::unsetenv("SPANOPT_ORACLE_MAX_EDGES");
  EXPECT_EQ(OracleEdgeBudget(), kDefaultOracleEdges);
  ::setenv("SPANOPT_ORACLE_MAX_EDGES", "12", 1);
  EXPECT_EQ(OracleEdgeBudget(), 12);
  ::unsetenv("SPANOPT_ORACLE_MAX_EDGES");
}

TEST(JunctionOracle, SinglePairThroughRoot) {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto res = ExactMinDensityJunctionTree(g, DemandSet({Demand::Exact(0, 3)}), 2);
  ASSERT_TRUE(res.finite);
  EXPECT_EQ(res.edges, 3);
  EXPECT_EQ(res.pairs, 1);
}

TEST(JunctionOracle, CrossAtRoot) {
  Graph g(5, {{0, 4}, {1, 4}, {4, 2}, {4, 3}});
  const auto res = ExactMinDensityJunctionTree(
      g, DemandSet({Demand::Exact(0, 2), Demand::Exact(1, 3)}), 4);
  ASSERT_TRUE(res.finite);
  EXPECT_DOUBLE_EQ(res.density(), 2.0);
  // Ties prefer fewer edges: one pair alone already has density 2.
  EXPECT_EQ(res.edges, 2);
}

TEST(JunctionOracle, NoRouteIsNotFinite) {
  Graph g(3, {{0, 1}, {2, 1}});
  const auto res = ExactMinDensityJunctionTree(g, DemandSet({Demand::Unbounded(0, 1)}), 2);
  EXPECT_FALSE(res.finite);
  EXPECT_EQ(res.density(), 0.0);
}

TEST(JunctionOracle, MatchesNaiveEnumeration) {
  RandomInstanceOptions opts;
  opts.max_vertices = 5;
  opts.max_edges = 10;
  opts.max_pairs = 3;
  for (Seed seed = 0; seed < 25; ++seed) {
    const auto inst = RandomFeasibleInstance(DeriveSeed(8, seed), opts);
    for (Vertex r = 0; r < inst.graph.num_vertices(); ++r) {
      const auto res = ExactMinDensityJunctionTree(inst.graph, inst.bounded, r);
      const double naive = NaiveDensity(inst.graph, inst.bounded, r);
      EXPECT_EQ(res.finite, naive >= 0);
      if (res.finite) EXPECT_DOUBLE_EQ(res.density(), naive) << "seed " << seed << " r " << r;
    }
  }
}

TEST(EnumerateShortestPaths, Examples) {
  EXPECT_EQ(EnumerateShortestPaths(Diamond(), 0, 3),
            (std::vector<std::vector<Vertex>>{{0, 1, 3}, {0, 2, 3}}));
  EXPECT_EQ(EnumerateShortestPaths(Diamond(), 0, 1),
            (std::vector<std::vector<Vertex>>{{0, 1}}));
  EXPECT_TRUE(EnumerateShortestPaths(Diamond(), 3, 0).empty());
}

TEST(EnumerateShortestPaths, MatchesBrute) {
  for (Seed seed = 0; seed < 30; ++seed) {
    const Graph g = RandomDigraph(6, 0.35, seed);
    for (int s = 0; s < 6; ++s) {
      for (int t = 0; t < 6; ++t) {
        if (s == t) continue;
        EXPECT_EQ(EnumerateShortestPaths(g, s, t), testing::ShortestPathsBrute(g, s, t));
      }
    }
  }
}

}  // namespace
}  // namespace spanopt
