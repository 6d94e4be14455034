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

#ifndef SPANOPT_LP_BUILDERS_HPP_
#define SPANOPT_LP_BUILDERS_HPP_

#include <vector>

#include "spanopt/graph.hpp"
#include "spanopt/lp.hpp"

namespace spanopt {

// One flow variable: edge is the original edge id, or -1 for a layered
// stay-in-place arc. from/to are original vertices.
struct FlowArc {
  EdgeId edge = -1;
  Vertex from = 0;
  Vertex to = 0;
  int var = 0;
};

struct FlowLp {
  LpModel model;
  std::vector<int> x_var;      // per edge id; -1 when the edge is unused
  std::vector<int> value_var;  // per pair; -1 for a fixed unit or no flow
  std::vector<bool> routable;  // per pair: a flow path exists in the model
  std::vector<std::vector<FlowArc>> arcs;  // per pair
};

// Unit flow per pair inside its local (shortest-path) DAG.
FlowLp BuildPreserverLp(const Graph& g, const DemandSet& demands);

// Unit flow per pair in the whole graph (restricted to edges on some s->t
// path, which changes nothing about the optimum).
FlowLp BuildFlowLp(const Graph& g, const DemandSet& demands);

struct LayeredLpOptions {
  int depth = 1;  // D0
  // Route pair (s, t) to layer min(D0, D(s, t)) instead of D0.
  bool per_pair_bounds = false;
  // Require one unit per pair instead of |f| <= 1 and total >= |P| / 2.
  bool unit_flow_each = false;
  // Pairs whose target layer is >= n - 1 get a plain flow block: with that
  // many layers every simple path fits, so the block is equivalent.
  bool collapse_long_pairs = false;
};

// Layered relaxation. Stay-in-place arcs use no edge capacity.
FlowLp BuildLayeredLp(const Graph& g, const DemandSet& demands,
                      const LayeredLpOptions& options);

// x_e per edge id (0 for edges without a variable).
std::vector<double> EdgeValues(const FlowLp& lp, const LpSolution& sol,
                               int num_edges);
// |f| for a pair (1 when the value is fixed and the pair is routable).
double FlowValue(const FlowLp& lp, const LpSolution& sol, int pair);
// Original vertices touched by an arc carrying more than tol flow, plus s, t.
std::vector<Vertex> FlowSupport(const FlowLp& lp, const LpSolution& sol,
                                int pair, Vertex s, Vertex t,
                                double tol = 1e-9);

}  // namespace spanopt

#endif  // SPANOPT_LP_BUILDERS_HPP_
