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

#include "spanopt/lp_builders.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace spanopt {
namespace {

FlowLp Skeleton(const Graph& g, int num_pairs) {
  FlowLp lp;
  lp.x_var.assign(g.num_edges(), -1);
  lp.value_var.assign(num_pairs, -1);
  lp.routable.assign(num_pairs, false);
  lp.arcs.resize(num_pairs);
  return lp;
}

int XVar(FlowLp& lp, const Graph& g, EdgeId e) {
  if (lp.x_var[e] < 0) {
    lp.x_var[e] = lp.model.AddVariable(
        "x_" + std::to_string(g.edge(e).from) + "_" + std::to_string(g.edge(e).to),
        1.0);
  }
  return lp.x_var[e];
}

// Flow block on an explicit arc list. Node ids are arbitrary keys; source and
// sink are node keys. value_var < 0 means a fixed unit of flow.
struct NodeArc {
  int tail = 0;
  int head = 0;
  EdgeId edge = -1;
  Vertex from = 0;
  Vertex to = 0;
};

void AddFlowBlock(FlowLp& lp, const Graph& g, int pair,
                  const std::vector<NodeArc>& arcs, int num_nodes, int source,
                  int sink, int value_var) {
  const std::string tag = "p" + std::to_string(pair);
  std::vector<std::vector<Term>> balance(num_nodes);
  std::vector<std::vector<Term>> cap(g.num_edges());
  for (size_t a = 0; a < arcs.size(); ++a) {
    const NodeArc& arc = arcs[a];
    const int var = lp.model.AddVariable(
        "f" + tag + "_" + std::to_string(a), 0.0);
    lp.arcs[pair].push_back({arc.edge, arc.from, arc.to, var});
    balance[arc.tail].push_back({var, 1.0});
    balance[arc.head].push_back({var, -1.0});
    if (arc.edge >= 0) cap[arc.edge].push_back({var, 1.0});
  }
  for (int v = 0; v < num_nodes; ++v) {
    if (balance[v].empty() && v != source && v != sink) continue;
    std::vector<Term> terms = balance[v];
    double rhs = 0.0;
    if (v == source || v == sink) {
      const double sgn = v == source ? 1.0 : -1.0;
      if (value_var >= 0) {
        terms.push_back({value_var, -sgn});
      } else {
        rhs = sgn;
      }
    }
    lp.model.AddConstraint(std::move(terms), Sense::kEqual, rhs,
                           "bal" + tag + "_" + std::to_string(v));
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (cap[e].empty()) continue;
    std::vector<Term> terms = cap[e];
    terms.push_back({XVar(lp, g, e), -1.0});
    lp.model.AddConstraint(std::move(terms), Sense::kLessEqual, 0.0,
                           "cap" + tag + "_" + std::to_string(e));
  }
}

// Arcs of g usable by some s->t walk of length <= limit.
std::vector<NodeArc> PlainArcs(const Graph& g, std::span<const int> from_s,
                               std::span<const int> to_t, long limit) {
  std::vector<NodeArc> arcs;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (from_s[ed.from] == kUnreachable || to_t[ed.to] == kUnreachable) continue;
    if (static_cast<long>(from_s[ed.from]) + 1 + to_t[ed.to] > limit) continue;
    arcs.push_back({ed.from, ed.to, e, ed.from, ed.to});
  }
  return arcs;
}

}  // namespace

FlowLp BuildPreserverLp(const Graph& g, const DemandSet& demands) {
  const auto resolved = Resolve(g, demands);
  FlowLp lp = Skeleton(g, demands.size());
  for (int p = 0; p < demands.size(); ++p) {
    const auto from_s = BfsDistances(g, resolved[p].s, Direction::kForward);
    const auto to_t = BfsDistances(g, resolved[p].t, Direction::kBackward);
    const auto arcs = PlainArcs(g, from_s, to_t, resolved[p].distance);
    AddFlowBlock(lp, g, p, arcs, g.num_vertices(), resolved[p].s,
                 resolved[p].t, -1);
    lp.routable[p] = true;
  }
  return lp;
}

FlowLp BuildFlowLp(const Graph& g, const DemandSet& demands) {
  const auto resolved = Resolve(g, demands);
  FlowLp lp = Skeleton(g, demands.size());
  for (int p = 0; p < demands.size(); ++p) {
    const auto from_s = BfsDistances(g, resolved[p].s, Direction::kForward);
    const auto to_t = BfsDistances(g, resolved[p].t, Direction::kBackward);
    const auto arcs = PlainArcs(g, from_s, to_t, 2L * g.num_vertices());
    AddFlowBlock(lp, g, p, arcs, g.num_vertices(), resolved[p].s,
                 resolved[p].t, -1);
    lp.routable[p] = true;
  }
  return lp;
}

FlowLp BuildLayeredLp(const Graph& g, const DemandSet& demands,
                      const LayeredLpOptions& options) {
  if (options.depth < 1) throw std::invalid_argument("layered LP depth < 1");
  const auto resolved = Resolve(g, demands);
  const int n = g.num_vertices();
  FlowLp lp = Skeleton(g, demands.size());
  std::vector<Term> total;
  for (int p = 0; p < demands.size(); ++p) {
    const ResolvedDemand& d = resolved[p];
    int layers = options.depth;
    if (options.per_pair_bounds && d.limit != kUnreachable) {
      layers = std::min(layers, d.limit);
    }
    const auto from_s = BfsDistances(g, d.s, Direction::kForward);
    const auto to_t = BfsDistances(g, d.t, Direction::kBackward);
    if (from_s[d.t] > layers) continue;  // no admissible walk
    lp.routable[p] = true;
    int value_var = -1;
    if (!options.unit_flow_each) {
      value_var = lp.model.AddVariable("F" + std::to_string(p), 0.0);
      lp.value_var[p] = value_var;
      lp.model.AddConstraint({{value_var, 1.0}}, Sense::kLessEqual, 1.0,
                             "unit" + std::to_string(p));
      total.push_back({value_var, 1.0});
    }
    if (options.collapse_long_pairs && layers >= n - 1) {
      const auto arcs = PlainArcs(g, from_s, to_t, 2L * n);
      AddFlowBlock(lp, g, p, arcs, n, d.s, d.t, value_var);
      continue;
    }
    // Node (v, j) is kept iff d(s, v) <= j and d(v, t) <= layers - j.
    auto kept = [&](Vertex v, int j) {
      return from_s[v] != kUnreachable && to_t[v] != kUnreachable &&
             from_s[v] <= j && to_t[v] <= layers - j;
    };
    auto key = [&](Vertex v, int j) { return j * n + v; };
    std::vector<NodeArc> arcs;
    for (int j = 1; j <= layers; ++j) {
      for (Vertex u = 0; u < n; ++u) {
        if (!kept(u, j - 1)) continue;
        if (kept(u, j)) arcs.push_back({key(u, j - 1), key(u, j), -1, u, u});
        for (EdgeId e = g.out_begin(u); e < g.out_end(u); ++e) {
          const Vertex v = g.edge(e).to;
          if (kept(v, j)) arcs.push_back({key(u, j - 1), key(v, j), e, u, v});
        }
      }
    }
    AddFlowBlock(lp, g, p, arcs, n * (layers + 1), key(d.s, 0),
                 key(d.t, layers), value_var);
  }
  if (!options.unit_flow_each) {
    lp.model.AddConstraint(std::move(total), Sense::kGreaterEqual,
                           demands.size() / 2.0, "half");
  } else {
    for (int p = 0; p < demands.size(); ++p) {
      if (!lp.routable[p]) {
        // Unroutable pair with a forced unit: record an infeasible row.
        const int v = lp.model.AddVariable("dead" + std::to_string(p), 0.0);
        lp.model.AddConstraint({{v, 1.0}}, Sense::kLessEqual, -1.0,
                               "dead" + std::to_string(p));
      }
    }
  }
  return lp;
}

std::vector<double> EdgeValues(const FlowLp& lp, const LpSolution& sol,
                               int num_edges) {
  std::vector<double> x(num_edges, 0.0);
  for (int e = 0; e < num_edges && e < static_cast<int>(lp.x_var.size()); ++e) {
    if (lp.x_var[e] >= 0) x[e] = sol.value(lp.x_var[e]);
  }
  return x;
}

double FlowValue(const FlowLp& lp, const LpSolution& sol, int pair) {
  if (!lp.routable[pair]) return 0.0;
  if (lp.value_var[pair] < 0) return 1.0;
  return sol.value(lp.value_var[pair]);
}

std::vector<Vertex> FlowSupport(const FlowLp& lp, const LpSolution& sol,
                                int pair, Vertex s, Vertex t, double tol) {
  std::vector<Vertex> out{s, t};
  for (const FlowArc& a : lp.arcs[pair]) {
    if (sol.value(a.var) > tol) {
      out.push_back(a.from);
      out.push_back(a.to);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace spanopt
