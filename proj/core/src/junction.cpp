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

#include "spanopt/junction.hpp"

#include <algorithm>
#include <cmath>

#include "spanopt/errors.hpp"
#include "spanopt/gkr.hpp"
#include "spanopt/height_reduction.hpp"
#include "spanopt/label_cover.hpp"

namespace spanopt {

std::vector<int> PairsThroughRoot(const Graph& g, const EdgeSet& f,
                                  const std::vector<ResolvedDemand>& demands,
                                  Vertex r) {
  const auto mask = f.Mask(g.num_edges());
  const auto from_r = BfsDistances(g, r, Direction::kForward, &mask);
  const auto to_r = BfsDistances(g, r, Direction::kBackward, &mask);
  std::vector<int> out;
  for (size_t p = 0; p < demands.size(); ++p) {
    const int a = to_r[demands[p].s];
    const int b = from_r[demands[p].t];
    if (a == kUnreachable || b == kUnreachable) continue;
    if (demands[p].limit != kUnreachable &&
        static_cast<long>(a) + b > demands[p].limit) {
      continue;
    }
    out.push_back(static_cast<int>(p));
  }
  return out;
}

namespace {

// Forward (or backward) reachability from seeds over junction arcs.
std::vector<char> Reach(const JunctionGraph& h, const std::vector<int>& seeds,
                        bool backward) {
  std::vector<char> seen(h.num_vertices(), 0);
  std::vector<int> stack = seeds;
  for (int s : seeds) seen[s] = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int a : backward ? h.in_arcs(u) : h.out_arcs(u)) {
      const int v = backward ? h.arc(a).from : h.arc(a).to;
      if (!seen[v]) {
        seen[v] = 1;
        stack.push_back(v);
      }
    }
  }
  return seen;
}

}  // namespace

JunctionResult JunctionTreeDensity(const Graph& g, const DemandSet& demands,
                                   Vertex r, Seed seed,
                                   const JunctionOptions& options,
                                   Trace* trace) {
  const auto resolved = Resolve(g, demands);
  const int n = g.num_vertices();
  if (r < 0 || r >= n) throw std::out_of_range("root out of range");
  JunctionResult result;

  bool connectivity = options.connectivity;
  int max_finite = -1;
  for (const auto& d : resolved) {
    if (d.limit != kUnreachable) max_finite = std::max(max_finite, d.limit);
  }
  if (max_finite < 0) connectivity = true;
  const LabelCoverInstance inst =
      connectivity ? BuildConnectivityInstance(g, r, resolved)
                   : BuildGr(g, r, resolved, std::min(n - 1, max_finite));
  const JunctionGraph& h = inst.graph;
  if (trace) {
    trace->Add("junction.root", r);
    trace->Add("junction.mode", connectivity ? "connectivity" : "layered");
    trace->Add("junction.gr_vertices", h.num_vertices());
    trace->Add("junction.gr_arcs", h.num_arcs());
  }

  const auto to_root = JunctionDistances(h, inst.root, true);
  const auto from_root = JunctionDistances(h, inst.root, false);
  std::vector<char> target(h.num_vertices(), 0);
  std::vector<int> kept_sources, kept_sinks;
  for (size_t p = 0; p < inst.pairs.size(); ++p) {
    const auto& pair = inst.pairs[p];
    for (int sc : pair.source_copies) {
      if (to_root[sc] == kUnreachable) continue;
      for (int tc : pair.sink_copies) {
        if (from_root[tc] == kUnreachable) continue;
        if (!inst.Related(static_cast<int>(p), h.vertex(sc).label,
                          h.vertex(tc).label)) {
          continue;
        }
        if (!target[sc]) kept_sources.push_back(sc);
        if (!target[tc]) kept_sinks.push_back(tc);
        target[sc] = target[tc] = 1;
      }
    }
  }
  if (kept_sources.empty()) {
    if (trace) trace->Add("junction.routable", 0);
    return result;
  }

  const auto fwd = Reach(h, kept_sources, false);
  const auto bwd = Reach(h, kept_sinks, true);
  std::vector<int> points{inst.root};
  for (int v = 0; v < h.num_vertices(); ++v) {
    if (v == inst.root) continue;
    const JunctionSide side = h.vertex(v).side;
    const bool in_ok = side == JunctionSide::kIn && fwd[v] && to_root[v] != kUnreachable;
    const bool out_ok = side == JunctionSide::kOut && bwd[v] && from_root[v] != kUnreachable;
    if (in_ok || out_ok) points.push_back(v);
  }
  const JunctionMetric metric(h, points);
  std::vector<char> point_target(points.size(), 0);
  for (size_t i = 0; i < points.size(); ++i) point_target[i] = target[points[i]];

  int sigma = std::max(1, static_cast<int>(std::ceil(1.0 / options.epsilon - 1e-9)));
  ShallowTree tree;
  LabelCoverLp lp;
  for (;; --sigma) {
    try {
      tree = HeightReduce(metric, 0, {sigma, options.node_budget, &point_target});
    } catch (const BudgetExceededError&) {
      if (sigma == 1) throw;
      continue;
    }
    lp = BuildLabelCoverLp(tree, inst, points);
    if (sigma == 1 || lp.model.num_variables() <= options.max_lp_columns) break;
  }
  result.sigma = sigma;
  if (trace) {
    trace->Add("junction.relevant_vertices", points.size());
    trace->Add("junction.sigma", sigma);
    trace->Add("junction.tree_nodes", tree.size());
    trace->Add("junction.lp_rows", lp.model.num_constraints());
    trace->Add("junction.lp_cols", lp.model.num_variables());
  }

  const LabelCoverSolution sol = SolveLabelCoverLp(lp, tree.size());
  if (sol.status != LpStatus::kOptimal) {
    throw Error(std::string("label cover LP: ") + ToString(sol.status));
  }
  result.lp_value = sol.objective;
  const PrunedReps pruned = MedianPrune(sol.masses);
  const BucketChoice choice = ChooseBucket(pruned);
  const auto xstar = ScaleCapacities(sol.x, choice.i_star);
  std::vector<std::vector<int>> groups;
  for (int k : choice.members) {
    groups.push_back(pruned.pairs[k].SourcePrefixNodes());
    groups.push_back(pruned.pairs[k].SinkPrefixNodes());
  }
  if (trace) {
    trace->Add("junction.lp_value", sol.objective);
    for (const auto& pp : pruned.pairs) {
      trace->Add("junction.gamma." + std::to_string(inst.pairs[pp.pair].demand),
                 ToString(pp.gamma));
    }
    for (const auto& [i, m] : choice.bucket_mass) {
      trace->Add("junction.bucket." + std::to_string(i), ToString(m));
    }
    trace->Add("junction.i_star", choice.i_star);
    trace->Add("junction.bucket_pairs", choice.members.size());
  }

  std::vector<char> is_rep(tree.size(), 0);
  for (int v = 1; v < tree.size(); ++v) {
    is_rep[v] = h.vertex(points[tree.node(v).point]).pair >= 0;
  }
  for (int attempt = 0; attempt < options.retry_cap; ++attempt) {
    GkrResult gkr;
    try {
      gkr = GkrRound(tree, xstar, groups, DeriveSeed(seed, attempt), 64);
    } catch (const RoundingFailureError&) {
      continue;
    }
    std::vector<char> keep(tree.size(), 0);
    for (int v = tree.size() - 1; v >= 1; --v) {
      if (gkr.included[v] && is_rep[v]) keep[v] = 1;
      if (keep[v]) keep[tree.node(v).parent] = 1;
    }
    std::vector<int> nodes;
    for (int v = 0; v < tree.size(); ++v) {
      if (keep[v]) nodes.push_back(v);
    }
    std::vector<EdgeId> ids;
    for (int a : ProjectTree(tree, nodes)) {
      if (h.arc(a).original >= 0) ids.push_back(h.arc(a).original);
    }
    EdgeSet f(std::move(ids));
    auto sat = PairsThroughRoot(g, f, resolved, r);
    if (sat.empty()) continue;
    result.edges = std::move(f);
    result.satisfied = std::move(sat);
    if (trace) {
      trace->Add("junction.attempts", attempt + 1);
      trace->Add("junction.gkr_passes", gkr.passes_per_batch * gkr.batches);
      trace->Add("junction.edges", result.edges.size());
      trace->Add("junction.satisfied", result.satisfied.size());
    }
    return result;
  }
  throw RoundingFailureError("junction rounding failed at root " +
                             std::to_string(r));
}

}  // namespace spanopt
