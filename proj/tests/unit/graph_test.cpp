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

#include <numeric>
#include <set>
#include <sstream>

#include "brute.hpp"
#include "spanopt/errors.hpp"
#include "spanopt/generators.hpp"
#include "spanopt/graph.hpp"
#include "spanopt/io.hpp"

namespace spanopt {
namespace {

using testing::Diamond;
using testing::kInf;

TEST(Graph, RejectsSelfLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST(Graph, EdgeIdsFollowSortedOrder) {
  Graph g(3, {{2, 0}, {0, 2}, {0, 1}});
  ASSERT_EQ(g.num_edges(), 3);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.edge(1), (Edge{0, 2}));
  EXPECT_EQ(g.edge(2), (Edge{2, 0}));
  EXPECT_EQ(g.find_edge(2, 0), 2);
  EXPECT_FALSE(g.find_edge(1, 0).has_value());
}

TEST(EdgeSet, SortsAndDeduplicates) {
  EdgeSet s({3, 1, 3, 0});
  EXPECT_EQ(s.ids(), (std::vector<EdgeId>{0, 1, 3}));
  s.Insert(2);
  EXPECT_TRUE(s.contains(2));
  EXPECT_EQ(EdgeSet::FromMask(s.Mask(5)), s);
}

TEST(Bfs, PathForward) {
  Graph g(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(BfsDistances(g, 0), (std::vector<int>{0, 1, 2}));
}

TEST(Bfs, IsolatedVertex) {
  Graph g(3, {{0, 1}});
  EXPECT_EQ(BfsDistances(g, 2), (std::vector<int>{kUnreachable, kUnreachable, 0}));
}

TEST(Bfs, CycleBackwardMatchesRelaxation) {
  Graph g(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  const auto back = BfsDistances(g, 0, Direction::kBackward);
  EXPECT_EQ(back[1], 3);
  for (int v = 0; v < 4; ++v) EXPECT_EQ(back[v], testing::RelaxDistances(g, v)[0]);
}

TEST(Bfs, SourceOutOfRange) {
  Graph g(2, {{0, 1}});
  EXPECT_THROW(BfsDistances(g, 5), std::out_of_range);
}

TEST(Bfs, AgreesWithRelaxationOnRandomGraphs) {
  for (int i = 0; i < 50; ++i) {
    const Graph g = RandomFeasibleInstance(DeriveSeed(101, i)).graph;
    const auto apsp = AllPairsDistances(g);
    for (int s = 0; s < g.num_vertices(); ++s) {
      const auto d = testing::RelaxDistances(g, s);
      for (int v = 0; v < g.num_vertices(); ++v) {
        EXPECT_EQ(apsp[s][v], d[v] == kInf ? kUnreachable : d[v]);
      }
    }
  }
}

std::set<std::pair<int, int>> PathEdges(const std::vector<std::vector<int>>& paths) {
  std::set<std::pair<int, int>> out;
  for (const auto& p : paths) {
    for (size_t i = 0; i + 1 < p.size(); ++i) out.insert({p[i], p[i + 1]});
  }
  return out;
}

TEST(LocalGraph, DiamondKeepsAllEdges) {
  const Graph g = Diamond();
  const auto lg = BuildLocalGraph(g, 0, 3);
  ASSERT_TRUE(lg.has_value());
  EXPECT_EQ(lg->edges.size(), 4);
  EXPECT_EQ(lg->vertices, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(LocalGraph, SingleEdge) {
  Graph g(2, {{0, 1}});
  const auto lg = BuildLocalGraph(g, 0, 1);
  ASSERT_TRUE(lg.has_value());
  EXPECT_EQ(lg->edges.size(), 1);
  EXPECT_EQ(lg->vertices.size(), 2u);
}

TEST(LocalGraph, DetourExcluded) {
  // Diamond plus c=4 with s->c, c->a.
  Graph g(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {0, 4}, {4, 1}});
  const auto lg = BuildLocalGraph(g, 0, 3);
  ASSERT_TRUE(lg.has_value());
  EXPECT_EQ(lg->edges.size(), 4);
  EXPECT_FALSE(lg->edges.contains(*g.find_edge(0, 4)));
  EXPECT_FALSE(lg->edges.contains(*g.find_edge(4, 1)));
}

TEST(LocalGraph, UnreachableIsNullopt) {
  Graph g(3, {{0, 1}});
  EXPECT_FALSE(BuildLocalGraph(g, 0, 2).has_value());
}

TEST(LocalGraph, MatchesExhaustiveShortestPaths) {
  int checked = 0;
  for (int i = 0; i < 80; ++i) {
    RandomInstanceOptions opt;
    opt.max_vertices = 8;
    const Graph g = RandomFeasibleInstance(DeriveSeed(202, i), opt).graph;
    for (int s = 0; s < g.num_vertices(); ++s) {
      for (int t = 0; t < g.num_vertices(); ++t) {
        if (s == t) continue;
        const auto brute = testing::ShortestPathsBrute(g, s, t);
        const auto lg = BuildLocalGraph(g, s, t);
        ASSERT_EQ(brute.empty(), !lg.has_value());
        if (!lg) continue;
        std::set<std::pair<int, int>> got;
        for (EdgeId e : lg->edges) got.insert({g.edge(e).from, g.edge(e).to});
        EXPECT_EQ(got, PathEdges(brute));
        // Every s->t path inside the local graph is shortest.
        std::vector<Edge> sub;
        for (EdgeId e : lg->edges) sub.push_back(g.edge(e));
        const Graph h(g.num_vertices(), sub);
        for (const auto& p : testing::AllSimplePaths(h, s, t)) {
          EXPECT_EQ(p.size(), brute.front().size());
        }
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(Thickness, DiamondBoundaries) {
  const Graph g = Diamond();
  DemandSet d({Demand::Exact(0, 3)});
  EXPECT_EQ(ClassifyThickness(g, d, 3).thick, (std::vector<int>{0}));
  EXPECT_EQ(ClassifyThickness(g, d, 5).thin, (std::vector<int>{0}));
  Graph e(2, {{0, 1}});
  EXPECT_EQ(ClassifyThickness(e, DemandSet({Demand::Exact(0, 1)}), 2).thick,
            (std::vector<int>{0}));
}

TEST(Verify, FullAndEmptySolutions) {
  const Graph g = Diamond();
  DemandSet d({Demand::Exact(0, 3), Demand::AtMost(0, 1, 3)});
  EXPECT_TRUE(VerifySolution(g, EdgeSet::All(g), d).AllSatisfied());
  const auto empty = VerifySolution(g, EdgeSet(), d);
  EXPECT_EQ(empty.NumSatisfied(), 0);
  EXPECT_EQ(empty.pairs[0].achieved, kUnreachable);
}

TEST(Verify, DiamondHalf) {
  const Graph g = Diamond();
  const EdgeSet h({*g.find_edge(0, 1), *g.find_edge(1, 3)});
  const auto r = VerifySolution(g, h, DemandSet({Demand::Exact(0, 3)}));
  ASSERT_TRUE(r.AllSatisfied());
  EXPECT_EQ(r.pairs[0].achieved, 2);
}

TEST(Verify, MatchesRelaxationOnRandomSubsets) {
  for (int i = 0; i < 60; ++i) {
    const auto inst = RandomFeasibleInstance(DeriveSeed(303, i));
    const Graph& g = inst.graph;
    Rng rng(DeriveSeed(304, i));
    std::vector<char> mask(g.num_edges());
    for (auto& b : mask) b = rng.UniformInt(0, 1);
    const auto report = VerifySolution(g, EdgeSet::FromMask(mask), inst.bounded);
    for (const auto& p : report.pairs) {
      const Demand& d = inst.bounded[p.demand];
      const int dist = testing::RelaxDistances(g, d.s, &mask)[d.t];
      EXPECT_EQ(p.satisfied, dist != kInf && dist <= d.bound);
    }
  }
}

TEST(Resolve, RejectsUnreachableAndShortBounds) {
  const Graph g = Diamond();
  EXPECT_THROW(Resolve(g, DemandSet({Demand::Exact(3, 0)})), InfeasibleInstanceError);
  EXPECT_THROW(Resolve(g, DemandSet({Demand::AtMost(0, 3, 1)})), InfeasibleInstanceError);
  const auto r = Resolve(g, DemandSet({Demand::Unbounded(0, 3)}));
  EXPECT_EQ(r[0].limit, kUnreachable);
  EXPECT_EQ(r[0].distance, 2);
}

TEST(DemandSet, RejectsBadPairs) {
  EXPECT_THROW(DemandSet({Demand::Exact(1, 1)}), std::invalid_argument);
  EXPECT_THROW(DemandSet({Demand::Exact(0, 1), Demand::AtMost(0, 1, 2)}),
               std::invalid_argument);
}

TEST(Buckets, PowersOfTwo) {
  // Path 0->1->2->3->4->5.
  Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  DemandSet d({Demand::Exact(0, 1), Demand::Exact(0, 2), Demand::Exact(0, 3),
               Demand::Exact(0, 4)});
  const auto b = DistanceBuckets(g, d);
  ASSERT_EQ(b.size(), 3u);
  EXPECT_EQ(b.at(1), (std::vector<int>{0}));
  EXPECT_EQ(b.at(2), (std::vector<int>{1, 2}));
  EXPECT_EQ(b.at(4), (std::vector<int>{3}));
  const auto single = DistanceBuckets(g, DemandSet({Demand::Exact(0, 5)}));
  EXPECT_EQ(single.begin()->first, 4);
  EXPECT_TRUE(DistanceBuckets(g, DemandSet()).empty());
}

TEST(Buckets, PartitionOnRandomInstances) {
  for (int i = 0; i < 50; ++i) {
    const auto inst = RandomFeasibleInstance(DeriveSeed(404, i));
    const auto dist = AllPairsDistances(inst.graph);
    const auto b = DistanceBuckets(inst.graph, inst.exact);
    std::vector<int> seen;
    for (const auto& [dstar, members] : b) {
      for (int p : members) {
        const int d = dist[inst.exact[p].s][inst.exact[p].t];
        EXPECT_LE(dstar, d);
        EXPECT_LT(d, 2 * dstar);
        seen.push_back(p);
      }
    }
    std::sort(seen.begin(), seen.end());
    std::vector<int> all(inst.exact.size());
    std::iota(all.begin(), all.end(), 0);
    EXPECT_EQ(seen, all);
  }
}

TEST(NearbyTerminals, StrictRadius) {
  Graph path(3, {{0, 1}, {1, 2}});
  auto nt = FindNearbyTerminals(path, 1, 1, DemandSet({Demand::Exact(0, 2)}));
  EXPECT_EQ(nt.sources, (std::vector<Vertex>{0}));
  EXPECT_EQ(nt.sinks, (std::vector<Vertex>{2}));
  // Source at distance exactly 2d* = 2 is excluded.
  Graph longer(4, {{0, 1}, {1, 2}, {2, 3}});
  nt = FindNearbyTerminals(longer, 2, 1, DemandSet({Demand::Exact(0, 3)}));
  EXPECT_TRUE(nt.sources.empty());
  EXPECT_EQ(nt.sinks, (std::vector<Vertex>{3}));
  // u unreachable from every source.
  nt = FindNearbyTerminals(path, 0, 1, DemandSet({Demand::Exact(1, 2)}));
  EXPECT_TRUE(nt.sources.empty());
}

TEST(MetricCompletion, TriangleAndWitnesses) {
  Graph g(3, {{0, 1}, {1, 2}, {2, 0}});
  MetricCompletion mc(g);
  EXPECT_EQ(mc.weight(0, 2), 2);
  EXPECT_EQ(mc.WitnessVertices(0, 2), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(mc.weight(0, 1), 1);
  Graph h(3, {{0, 1}});
  MetricCompletion mh(h);
  EXPECT_EQ(mh.weight(0, 2), kUnreachable);
  EXPECT_TRUE(mh.WitnessVertices(0, 2).empty());
}

TEST(MetricCompletion, WitnessIsLexicographicallySmallestShortestPath) {
  for (int i = 0; i < 40; ++i) {
    RandomInstanceOptions opt;
    opt.max_vertices = 7;
    const Graph g = RandomFeasibleInstance(DeriveSeed(505, i), opt).graph;
    MetricCompletion mc(g);
    for (int s = 0; s < g.num_vertices(); ++s) {
      for (int t = 0; t < g.num_vertices(); ++t) {
        if (s == t) continue;
        const auto brute = testing::ShortestPathsBrute(g, s, t);
        if (brute.empty()) {
          EXPECT_TRUE(mc.WitnessVertices(s, t).empty());
        } else {
          EXPECT_EQ(mc.WitnessVertices(s, t), brute.front());
        }
      }
    }
  }
}

TEST(Io, RoundTripsGraphDemandsAndSolutions) {
  const Graph g = Diamond();
  std::stringstream gs;
  WriteGraph(gs, g);
  const Graph back = ReadGraph(gs);
  EXPECT_EQ(std::vector<Edge>(back.edges().begin(), back.edges().end()),
            std::vector<Edge>(g.edges().begin(), g.edges().end()));
  DemandSet d({Demand::Exact(0, 3), Demand::AtMost(0, 1, 2), Demand::Unbounded(2, 3)});
  std::stringstream ds;
  WriteDemands(ds, d);
  EXPECT_EQ(ReadDemands(ds).pairs(), d.pairs());
  const EdgeSet h({0, 2});
  std::stringstream ss;
  WriteSolution(ss, g, h);
  EXPECT_EQ(ReadSolution(ss, g), h);
}

TEST(Io, ParseErrorsCarryLineNumbers) {
  std::istringstream bad("# comment\n3 2\n0 1\n1 x\n");
  try {
    ReadGraph(bad, "g.txt");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
  }
  std::istringstream dup("3 2\n0 1\n0 1\n");
  EXPECT_THROW(ReadGraph(dup), ParseError);
  std::istringstream dem("0 1 -\n0 1 *\n");
  try {
    ReadDemands(dem, "d.txt");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

}  // namespace
}  // namespace spanopt
