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

#include "spanopt/label_cover.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

namespace spanopt {

int JunctionGraph::AddVertex(const JunctionVertex& v) {
  vertices_.push_back(v);
  return num_vertices() - 1;
}

int JunctionGraph::AddArc(int from, int to, int weight, EdgeId original) {
  if (from < 0 || to < 0 || from >= num_vertices() || to >= num_vertices()) {
    throw std::out_of_range("junction arc endpoint");
  }
  arcs_.push_back({from, to, weight, original});
  return num_arcs() - 1;
}

void JunctionGraph::Finalize() {
  out_.assign(num_vertices(), {});
  in_.assign(num_vertices(), {});
  for (int a = 0; a < num_arcs(); ++a) {
    out_[arcs_[a].from].push_back(a);
    in_[arcs_[a].to].push_back(a);
  }
  for (auto& list : out_) {
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      return std::tie(arcs_[a].to, a) < std::tie(arcs_[b].to, b);
    });
  }
  for (auto& list : in_) {
    std::sort(list.begin(), list.end(), [&](int a, int b) {
      return std::tie(arcs_[a].from, a) < std::tie(arcs_[b].from, b);
    });
  }
}

namespace {

int PairBound(const ResolvedDemand& d, int n) {
  if (d.limit == kUnreachable) return 2 * std::max(0, n - 1);
  return d.limit;
}

}  // namespace

LabelCoverInstance BuildGr(const Graph& g, Vertex r,
                           std::span<const ResolvedDemand> demands,
                           int max_layer) {
  const int n = g.num_vertices();
  if (r < 0 || r >= n) throw std::out_of_range("root out of range");
  const int L = max_layer < 0 ? n - 1 : std::min(n - 1, max_layer);
  LabelCoverInstance inst;
  JunctionGraph& h = inst.graph;
  inst.root = h.AddVertex({r, 0, JunctionSide::kRoot});
  // id[v][layer + L]
  std::vector<std::vector<int>> id(n, std::vector<int>(2 * L + 1, -1));
  id[r][L] = inst.root;
  for (int layer = -L; layer <= L; ++layer) {
    if (layer == 0) continue;
    const JunctionSide side = layer < 0 ? JunctionSide::kIn : JunctionSide::kOut;
    for (Vertex v = 0; v < n; ++v) {
      if (v == r) continue;
      id[v][layer + L] = h.AddVertex({v, layer, side});
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Vertex u = g.edge(e).from;
    const Vertex v = g.edge(e).to;
    for (int i = -L; i < L; ++i) {
      const int a = id[u][i + L];
      const int b = id[v][i + 1 + L];
      if (a >= 0 && b >= 0) h.AddArc(a, b, 1, e);
    }
  }
  for (size_t p = 0; p < demands.size(); ++p) {
    const ResolvedDemand& d = demands[p];
    LabelCoverPair pair;
    pair.demand = static_cast<int>(p);
    pair.s = d.s;
    pair.t = d.t;
    pair.bound = PairBound(d, n);
    const int lo_s = d.s == r ? 0 : 1;
    const int hi_s = d.s == r ? 0 : L;
    for (int i = lo_s; i <= hi_s; ++i) {
      JunctionVertex c{d.s, -i, JunctionSide::kIn, static_cast<int>(p), i, true, false};
      const int cid = h.AddVertex(c);
      h.AddArc(cid, id[d.s][-i + L], 0, -1);
      pair.source_copies.push_back(cid);
    }
    const int lo_t = d.t == r ? 0 : 1;
    const int hi_t = d.t == r ? 0 : L;
    for (int j = lo_t; j <= hi_t; ++j) {
      JunctionVertex c{d.t, j, JunctionSide::kOut, static_cast<int>(p), j, false, true};
      const int cid = h.AddVertex(c);
      h.AddArc(id[d.t][j + L], cid, 0, -1);
      pair.sink_copies.push_back(cid);
    }
    inst.pairs.push_back(std::move(pair));
  }
  h.Finalize();
  return inst;
}

LabelCoverInstance BuildGr(const Graph& g, Vertex r, const DemandSet& demands,
                           int max_layer) {
  const auto resolved = Resolve(g, demands);
  return BuildGr(g, r, resolved, max_layer);
}

LabelCoverInstance BuildConnectivityInstance(
    const Graph& g, Vertex r, std::span<const ResolvedDemand> demands) {
  const int n = g.num_vertices();
  if (r < 0 || r >= n) throw std::out_of_range("root out of range");
  LabelCoverInstance inst;
  JunctionGraph& h = inst.graph;
  inst.root = h.AddVertex({r, 0, JunctionSide::kRoot});
  std::vector<int> in_id(n, inst.root), out_id(n, inst.root);
  for (Vertex v = 0; v < n; ++v) {
    if (v != r) in_id[v] = h.AddVertex({v, -1, JunctionSide::kIn});
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v != r) out_id[v] = h.AddVertex({v, 1, JunctionSide::kOut});
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Vertex u = g.edge(e).from;
    const Vertex v = g.edge(e).to;
    if (v == r) {
      h.AddArc(in_id[u], inst.root, 1, e);
    } else if (u == r) {
      h.AddArc(inst.root, out_id[v], 1, e);
    } else {
      h.AddArc(in_id[u], in_id[v], 1, e);
      h.AddArc(out_id[u], out_id[v], 1, e);
    }
  }
  for (size_t p = 0; p < demands.size(); ++p) {
    const ResolvedDemand& d = demands[p];
    LabelCoverPair pair;
    pair.demand = static_cast<int>(p);
    pair.s = d.s;
    pair.t = d.t;
    pair.bound = 0;
    const int sc = h.AddVertex(
        {d.s, -1, JunctionSide::kIn, static_cast<int>(p), 0, true, false});
    h.AddArc(sc, in_id[d.s], 0, -1);
    pair.source_copies.push_back(sc);
    const int tc = h.AddVertex(
        {d.t, 1, JunctionSide::kOut, static_cast<int>(p), 0, false, true});
    h.AddArc(out_id[d.t], tc, 0, -1);
    pair.sink_copies.push_back(tc);
    inst.pairs.push_back(std::move(pair));
  }
  h.Finalize();
  return inst;
}

std::vector<int> JunctionDistances(const JunctionGraph& h, int source,
                                   bool backward) {
  std::vector<int> dist(h.num_vertices(), kUnreachable);
  std::deque<int> dq{source};
  dist[source] = 0;
  while (!dq.empty()) {
    const int u = dq.front();
    dq.pop_front();
    const auto& arcs = backward ? h.in_arcs(u) : h.out_arcs(u);
    for (int a : arcs) {
      const JunctionArc& arc = h.arc(a);
      const int v = backward ? arc.from : arc.to;
      const int nd = dist[u] + arc.weight;
      if (nd < dist[v]) {
        dist[v] = nd;
        if (arc.weight == 0) {
          dq.push_front(v);
        } else {
          dq.push_back(v);
        }
      }
    }
  }
  return dist;
}

JunctionMetric::JunctionMetric(const JunctionGraph& h, std::vector<int> points)
    : h_(h), points_(std::move(points)) {
  dist_to_.reserve(points_.size());
  for (int p : points_) dist_to_.push_back(JunctionDistances(h_, p, true));
}

int JunctionMetric::Weight(int from, int to) const {
  if (from == to) return kUnreachable;
  const JunctionSide sa = h_.vertex(points_[from]).side;
  const JunctionSide sb = h_.vertex(points_[to]).side;
  if (sb == JunctionSide::kRoot) return kUnreachable;
  if (sb == JunctionSide::kIn &&
      (sa == JunctionSide::kRoot || sa == JunctionSide::kIn)) {
    return Dist(points_[to], from);
  }
  if (sb == JunctionSide::kOut &&
      (sa == JunctionSide::kRoot || sa == JunctionSide::kOut)) {
    return Dist(points_[from], to);
  }
  return kUnreachable;
}

std::vector<int> JunctionMetric::Witness(int from, int to) const {
  if (Weight(from, to) == kUnreachable) return {};
  if (h_.vertex(points_[to]).side == JunctionSide::kIn) {
    return PathTo(points_[to], from);
  }
  return PathTo(points_[from], to);
}

std::vector<int> JunctionMetric::PathTo(int u, int target_point) const {
  std::vector<int> path;
  const int y = points_[target_point];
  int cur = u;
  while (cur != y) {
    const int here = Dist(cur, target_point);
    int next = -1;
    for (int a : h_.out_arcs(cur)) {
      const JunctionArc& arc = h_.arc(a);
      const int d = Dist(arc.to, target_point);
      if (d != kUnreachable && d + arc.weight == here) {
        next = a;
        break;
      }
    }
    if (next < 0) throw std::logic_error("junction witness walk stuck");
    path.push_back(next);
    cur = h_.arc(next).to;
  }
  return path;
}

LabelCoverLp BuildLabelCoverLp(const ShallowTree& tree,
                               const LabelCoverInstance& instance,
                               std::span<const int> point_vertex) {
  LabelCoverLp lp;
  const int num_pairs = static_cast<int>(instance.pairs.size());
  lp.masses.resize(num_pairs);
  for (int p = 0; p < num_pairs; ++p) {
    lp.masses[p].pair = p;
    lp.masses[p].bound = instance.pairs[p].bound;
  }
  for (int v = 1; v < tree.size(); ++v) {
    const JunctionVertex& hv = instance.graph.vertex(point_vertex[tree.node(v).point]);
    if (hv.pair < 0) continue;
    auto& m = lp.masses[hv.pair];
    (hv.source_copy ? m.sources : m.sinks).push_back({v, hv.label});
  }
  lp.x_var.assign(tree.size(), -1);
  lp.z_var.assign(tree.size(), -1);
  auto z_of = [&](int node) {
    if (lp.z_var[node] < 0) {
      lp.z_var[node] = lp.model.AddVariable("z" + std::to_string(node), 0.0);
    }
    return lp.z_var[node];
  };
  std::vector<Term> total;
  std::map<int, std::vector<Term>> row_terms;  // by representative node
  for (int p = 0; p < num_pairs; ++p) {
    const auto& m = lp.masses[p];
    for (size_t a = 0; a < m.sources.size(); ++a) {
      for (size_t b = 0; b < m.sinks.size(); ++b) {
        if (!instance.Related(p, m.sources[a].label, m.sinks[b].label)) continue;
        const int var = lp.model.AddVariable(
            "y" + std::to_string(p) + "_" + std::to_string(m.sources[a].node) +
                "_" + std::to_string(m.sinks[b].node),
            0.0);
        lp.y_vars.push_back({p, static_cast<int>(a), static_cast<int>(b), var});
        total.push_back({var, 1.0});
        row_terms[m.sources[a].node].push_back({var, 1.0});
        row_terms[m.sinks[b].node].push_back({var, 1.0});
      }
    }
  }
  lp.model.AddConstraint(std::move(total), Sense::kEqual, 1.0, "mass");
  for (auto& [node, terms] : row_terms) {
    terms.push_back({z_of(node), -1.0});
    lp.model.AddConstraint(std::move(terms), Sense::kLessEqual, 0.0,
                           "rep" + std::to_string(node));
  }
  for (int node = 1; node < tree.size(); ++node) {
    if (lp.z_var[node] < 0) continue;
    for (int e = node; e != 0; e = tree.node(e).parent) {
      if (lp.x_var[e] < 0) {
        lp.x_var[e] = lp.model.AddVariable("x" + std::to_string(e),
                                           tree.node(e).weight);
      }
      lp.model.AddConstraint({{lp.z_var[node], 1.0}, {lp.x_var[e], -1.0}},
                             Sense::kLessEqual, 0.0,
                             "cap" + std::to_string(node) + "_" + std::to_string(e));
    }
  }
  return lp;
}

LabelCoverSolution SolveLabelCoverLp(const LabelCoverLp& lp,
                                     int num_tree_nodes) {
  LabelCoverSolution out;
  const LpSolution sol = SolveLp(lp.model);
  out.status = sol.status;
  if (!sol.optimal()) return out;
  out.objective = sol.objective;
  out.x.assign(num_tree_nodes, 0.0);
  out.z.assign(num_tree_nodes, 0.0);
  for (int v = 0; v < num_tree_nodes; ++v) {
    out.x[v] = sol.value(lp.x_var[v]);
    out.z[v] = sol.value(lp.z_var[v]);
  }
  out.masses = lp.masses;
  for (const auto& yv : lp.y_vars) {
    const double val = sol.value(yv.var);
    if (val <= 0.0) continue;
    out.masses[yv.pair].y.push_back({yv.source, yv.sink, ToRational(val)});
  }
  return out;
}

std::vector<int> PrunedPair::SourcePrefixNodes() const {
  std::vector<int> out;
  for (int i = 0; i < mu_source; ++i) out.push_back(sorted_sources[i].node);
  return out;
}

std::vector<int> PrunedPair::SinkPrefixNodes() const {
  std::vector<int> out;
  for (int i = 0; i < mu_sink; ++i) out.push_back(sorted_sinks[i].node);
  return out;
}

namespace {

std::vector<int> SortedOrder(const std::vector<Representative>& reps) {
  std::vector<int> order(reps.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return std::tie(reps[a].label, reps[a].node) <
           std::tie(reps[b].label, reps[b].node);
  });
  return order;
}

// Shortest prefix whose mass reaches half; returns (length, mass).
std::pair<int, Rational> MedianPrefix(const std::vector<Rational>& mass,
                                      const Rational& half) {
  Rational acc = 0;
  for (size_t k = 0; k < mass.size(); ++k) {
    acc += mass[k];
    if (acc >= half) return {static_cast<int>(k) + 1, acc};
  }
  return {static_cast<int>(mass.size()), acc};
}

}  // namespace

PrunedReps MedianPrune(std::span<const PairMassInput> inputs) {
  PrunedReps out;
  for (const PairMassInput& in : inputs) {
    Rational gamma = 0;
    for (const auto& y : in.y) {
      if (y.y < 0) throw std::invalid_argument("negative y mass");
      if (y.y == 0) continue;
      if (in.sources.at(y.source).label + in.sinks.at(y.sink).label > in.bound) {
        throw std::invalid_argument("y mass on an unrelated representative pair");
      }
      gamma += y.y;
    }
    if (gamma == 0) continue;
    const auto src_order = SortedOrder(in.sources);
    const auto snk_order = SortedOrder(in.sinks);
    std::vector<int> src_rank(in.sources.size()), snk_rank(in.sinks.size());
    for (size_t k = 0; k < src_order.size(); ++k) src_rank[src_order[k]] = static_cast<int>(k);
    for (size_t k = 0; k < snk_order.size(); ++k) snk_rank[snk_order[k]] = static_cast<int>(k);
    std::vector<Rational> row(in.sources.size()), col(in.sinks.size());
    for (const auto& y : in.y) {
      row[src_rank[y.source]] += y.y;
      col[snk_rank[y.sink]] += y.y;
    }
    PrunedPair pp;
    pp.pair = in.pair;
    pp.gamma = gamma;
    for (int k : src_order) pp.sorted_sources.push_back(in.sources[k]);
    for (int k : snk_order) pp.sorted_sinks.push_back(in.sinks[k]);
    const Rational half = gamma / 2;
    std::tie(pp.mu_source, pp.retained_source) = MedianPrefix(row, half);
    std::tie(pp.mu_sink, pp.retained_sink) = MedianPrefix(col, half);
    out.pairs.push_back(std::move(pp));
  }
  return out;
}

int BucketIndex(const Rational& gamma) {
  if (gamma <= 0) throw std::invalid_argument("bucket of non-positive mass");
  int i = 0;
  while (gamma <= PowerOfTwo(-i - 1)) ++i;
  return i;
}

BucketChoice ChooseBucket(const PrunedReps& pruned) {
  std::map<int, Rational> mass;
  for (const auto& p : pruned.pairs) mass[BucketIndex(p.gamma)] += p.gamma;
  BucketChoice choice;
  bool first = true;
  for (const auto& [i, m] : mass) {
    choice.bucket_mass.emplace_back(i, m);
    if (first || m > choice.mass) {
      choice.i_star = i;
      choice.mass = m;
      first = false;
    }
  }
  for (size_t k = 0; k < pruned.pairs.size(); ++k) {
    if (BucketIndex(pruned.pairs[k].gamma) == choice.i_star) {
      choice.members.push_back(static_cast<int>(k));
    }
  }
  return choice;
}

std::vector<double> ScaleCapacities(std::span<const double> x, int i_star) {
  const double f = std::ldexp(1.0, i_star + 2);
  std::vector<double> out(x.size());
  for (size_t k = 0; k < x.size(); ++k) out[k] = std::min(1.0, f * x[k]);
  return out;
}

}  // namespace spanopt
