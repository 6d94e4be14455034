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

#include <algorithm>
#include <sstream>

#include "brute.hpp"
#include "brute_lp.hpp"
#include "spanopt/errors.hpp"
#include "spanopt/generators.hpp"
#include "spanopt/lp.hpp"
#include "spanopt/lp_builders.hpp"
#include "spanopt/oracle.hpp"

namespace spanopt {
namespace {

TEST(Simplex, LowerBound) {
  LpModel m;
  const int x = m.AddVariable("x", 1.0);
  m.AddConstraint({{x, 1.0}}, Sense::kGreaterEqual, 1.0);
  const auto s = SolveLp(m);
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(s.objective, 1.0, 1e-9);
}

TEST(Simplex, Infeasible) {
  LpModel m;
  const int x = m.AddVariable("x", 1.0);
  m.AddConstraint({{x, 1.0}}, Sense::kGreaterEqual, 1.0);
  m.AddConstraint({{x, 1.0}}, Sense::kLessEqual, 0.0);
  EXPECT_EQ(SolveLp(m).status, LpStatus::kInfeasible);
}

TEST(Simplex, Unbounded) {
  LpModel m;
  const int x = m.AddVariable("x", -1.0);
  m.AddConstraint({{x, 1.0}}, Sense::kGreaterEqual, 0.0);
  EXPECT_EQ(SolveLp(m).status, LpStatus::kUnbounded);
}

TEST(Simplex, EqualityAndRedundantRows) {
  LpModel m;
  const int x = m.AddVariable("x", 1.0);
  const int y = m.AddVariable("y", 2.0);
  m.AddConstraint({{x, 1.0}, {y, 1.0}}, Sense::kEqual, 3.0);
  m.AddConstraint({{x, 2.0}, {y, 2.0}}, Sense::kEqual, 6.0);
  m.AddConstraint({{x, 1.0}}, Sense::kLessEqual, 2.0);
  const auto s = SolveLp(m);
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(s.objective, 4.0, 1e-9);
  EXPECT_NEAR(s.value(x), 2.0, 1e-9);
}

TEST(Simplex, WritesLpFormat) {
  LpModel m;
  const int x = m.AddVariable("x", 1.0);
  m.AddConstraint({{x, 1.0}}, Sense::kGreaterEqual, 1.0, "c0");
  std::ostringstream out;
  m.WriteLp(out);
  EXPECT_NE(out.str().find("Minimize"), std::string::npos);
  EXPECT_NE(out.str().find("c0"), std::string::npos);
}

// Random bounded LPs against vertex enumeration.
TEST(Simplex, MatchesVertexEnumeration) {
  int optimal = 0, infeasible = 0;
  for (int i = 0; i < 300; ++i) {
    Rng rng(DeriveSeed(606, i));
    LpModel m;
    const int n = rng.UniformInt(1, 4);
    for (int j = 0; j < n; ++j) m.AddVariable("v" + std::to_string(j), rng.UniformInt(-3, 3));
    for (int j = 0; j < n; ++j) m.AddConstraint({{j, 1.0}}, Sense::kLessEqual, 5.0);
    const int rows = rng.UniformInt(1, 4);
    for (int r = 0; r < rows; ++r) {
      std::vector<Term> terms;
      for (int j = 0; j < n; ++j) terms.push_back({j, static_cast<double>(rng.UniformInt(-2, 3))});
      const Sense sense = static_cast<Sense>(rng.UniformInt(0, 2));
      m.AddConstraint(terms, sense, rng.UniformInt(-2, 6));
    }
    const auto want = testing::BruteMinimum(m);
    const auto got = SolveLp(m);
    if (!want) {
      EXPECT_EQ(got.status, LpStatus::kInfeasible) << "instance " << i;
      ++infeasible;
      continue;
    }
    ASSERT_TRUE(got.optimal()) << "instance " << i << " " << ToString(got.status);
    EXPECT_NEAR(got.objective, *want, 1e-7) << "instance " << i;
    for (double v : got.values) EXPECT_GE(v, -1e-9);
    for (const Constraint& c : m.constraints()) {
      double lhs = 0.0;
      for (const Term& t : c.terms) lhs += t.coef * got.values[t.var];
      if (c.sense != Sense::kGreaterEqual) {
        EXPECT_LE(lhs, c.rhs + 1e-7);
      }
      if (c.sense != Sense::kLessEqual) {
        EXPECT_GE(lhs, c.rhs - 1e-7);
      }
    }
    ++optimal;
  }
  EXPECT_GT(optimal, 100);
  EXPECT_GT(infeasible, 10);
}

double Solve(const FlowLp& lp) {
  const auto s = SolveLp(lp.model);
  EXPECT_TRUE(s.optimal()) << ToString(s.status);
  return s.objective;
}

TEST(PreserverLp, SingleEdgeAndDiamond) {
  Graph e(2, {{0, 1}});
  EXPECT_NEAR(Solve(BuildPreserverLp(e, DemandSet({Demand::Exact(0, 1)}))), 1.0, 1e-9);
  const Graph d = testing::Diamond();
  const FlowLp lp = BuildPreserverLp(d, DemandSet({Demand::Exact(0, 3)}));
  EXPECT_NEAR(Solve(lp), 2.0, 1e-9);
  // Vertex enumeration agrees on this small model.
  const auto brute = testing::BruteMinimum(lp.model);
  ASSERT_TRUE(brute.has_value());
  EXPECT_NEAR(*brute, 2.0, 1e-9);
}

TEST(PreserverLp, UnreachableThrows) {
  Graph g(3, {{0, 1}});
  EXPECT_THROW(BuildPreserverLp(g, DemandSet({Demand::Exact(0, 2)})), InfeasibleInstanceError);
}

TEST(PreserverLp, SharedEdgeCountedOnce) {
  // 0->1->2 and 0->1->3 share (0,1).
  Graph g(4, {{0, 1}, {1, 2}, {1, 3}});
  DemandSet d({Demand::Exact(0, 2), Demand::Exact(0, 3)});
  const double lp = Solve(BuildPreserverLp(g, d));
  EXPECT_NEAR(lp, 3.0, 1e-9);
  EXPECT_LE(lp, ExactMinSolution(g, d).opt + 1e-9);
}

TEST(PreserverLp, BelowOracleAndPermutationInvariant) {
  for (int i = 0; i < 60; ++i) {
    RandomInstanceOptions opt;
    opt.max_vertices = 8;
    const auto inst = RandomFeasibleInstance(DeriveSeed(707, i), opt);
    const double lp = Solve(BuildPreserverLp(inst.graph, inst.exact));
    EXPECT_LE(lp, ExactMinSolution(inst.graph, inst.exact, 25).opt + 1e-7);
    // Relabel vertices: the LP value must not change.
    const int n = inst.graph.num_vertices();
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = n - 1 - v;
    std::vector<Edge> edges;
    for (const Edge& e : inst.graph.edges()) edges.push_back({perm[e.from], perm[e.to]});
    std::vector<Demand> dem;
    for (const Demand& d : inst.exact) dem.push_back(Demand::Exact(perm[d.s], perm[d.t]));
    const double lp2 = Solve(BuildPreserverLp(Graph(n, edges), DemandSet(dem)));
    EXPECT_NEAR(lp, lp2, 1e-7);
  }
}

TEST(FlowLp, ShortestPathValues) {
  Graph e(2, {{0, 1}});
  EXPECT_NEAR(Solve(BuildFlowLp(e, DemandSet({Demand::Unbounded(0, 1)}))), 1.0, 1e-9);
  Graph path(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}});  // 0->2 shortcut
  EXPECT_NEAR(Solve(BuildFlowLp(path, DemandSet({Demand::Unbounded(0, 3)}))), 2.0, 1e-9);
  Graph p3(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_NEAR(Solve(BuildFlowLp(p3, DemandSet({Demand::Unbounded(0, 3)}))), 3.0, 1e-9);
  // Two vertex-disjoint pairs: 0->1->2 and 3->4.
  Graph two(5, {{0, 1}, {1, 2}, {3, 4}});
  EXPECT_NEAR(Solve(BuildFlowLp(two, DemandSet({Demand::Unbounded(0, 2), Demand::Unbounded(3, 4)}))),
              3.0, 1e-9);
}

TEST(FlowLp, BelowOracle) {
  for (int i = 0; i < 40; ++i) {
    RandomInstanceOptions opt;
    opt.max_vertices = 8;
    const auto inst = RandomFeasibleInstance(DeriveSeed(808, i), opt);
    const double lp = Solve(BuildFlowLp(inst.graph, inst.unbounded));
    EXPECT_LE(lp, ExactMinSolution(inst.graph, inst.unbounded, 25).opt + 1e-7);
  }
}

TEST(LayeredLp, TooShallowIsInfeasible) {
  Graph p(3, {{0, 1}, {1, 2}});
  LayeredLpOptions o;
  o.depth = 1;
  EXPECT_EQ(SolveLp(BuildLayeredLp(p, DemandSet({Demand::Unbounded(0, 2)}), o).model).status,
            LpStatus::kInfeasible);
}

TEST(LayeredLp, StayArcsAreFree) {
  Graph e(2, {{0, 1}});
  LayeredLpOptions o;
  o.depth = 3;
  // One unit of flow costs exactly the single edge; waiting is free.
  o.unit_flow_each = true;
  EXPECT_NEAR(Solve(BuildLayeredLp(e, DemandSet({Demand::Unbounded(0, 1)}), o)), 1.0, 1e-9);
  // With |f| <= 1 and total >= |P|/2, half a unit suffices.
  o.unit_flow_each = false;
  EXPECT_NEAR(Solve(BuildLayeredLp(e, DemandSet({Demand::Unbounded(0, 1)}), o)), 0.5, 1e-9);
}

TEST(LayeredLp, HalfOfThePairsSuffices) {
  // (0,1) at distance 1, (2,4) at distance 2; depth 1 reaches only the first.
  Graph g(5, {{0, 1}, {2, 3}, {3, 4}});
  LayeredLpOptions o;
  o.depth = 1;
  const FlowLp lp = BuildLayeredLp(g, DemandSet({Demand::Unbounded(0, 1), Demand::Unbounded(2, 4)}), o);
  const auto s = SolveLp(lp.model);
  ASSERT_TRUE(s.optimal());
  EXPECT_NEAR(FlowValue(lp, s, 0) + FlowValue(lp, s, 1), 1.0, 1e-9);
  EXPECT_NEAR(s.objective, 1.0, 1e-9);
}

TEST(LayeredLp, DeepLayersMatchFlowLp) {
  for (int i = 0; i < 40; ++i) {
    RandomInstanceOptions opt;
    opt.max_vertices = 6;
    opt.max_edges = 14;
    const auto inst = RandomFeasibleInstance(DeriveSeed(909, i), opt);
    LayeredLpOptions o;
    o.depth = std::max(1, inst.graph.num_vertices() - 1);
    o.unit_flow_each = true;
    const double layered = Solve(BuildLayeredLp(inst.graph, inst.unbounded, o));
    const double flow = Solve(BuildFlowLp(inst.graph, inst.unbounded));
    EXPECT_NEAR(layered, flow, 1e-7) << "instance " << i;
    o.collapse_long_pairs = true;
    EXPECT_NEAR(Solve(BuildLayeredLp(inst.graph, inst.unbounded, o)), flow, 1e-7);
  }
}

TEST(LayeredLp, PerPairBoundsRespectDistanceLimits) {
  // Integral solutions that meet every bound satisfy the per-pair model.
  for (int i = 0; i < 40; ++i) {
    RandomInstanceOptions opt;
    opt.max_vertices = 7;
    const auto inst = RandomFeasibleInstance(DeriveSeed(1001, i), opt);
    LayeredLpOptions o;
    o.depth = inst.graph.num_vertices();
    o.per_pair_bounds = true;
    o.unit_flow_each = true;
    const double lp = Solve(BuildLayeredLp(inst.graph, inst.bounded, o));
    EXPECT_LE(lp, ExactMinSolution(inst.graph, inst.bounded, 25).opt + 1e-7);
  }
}

}  // namespace
}  // namespace spanopt
