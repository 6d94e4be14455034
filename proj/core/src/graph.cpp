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

#include "spanopt/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "spanopt/errors.hpp"

namespace spanopt {

Graph::Graph(int num_vertices, std::vector<Edge> edges)
    : n_(num_vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  for (const Edge& e : edges_) {
    if (e.from < 0 || e.from >= n_ || e.to < 0 || e.to >= n_) {
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(e.from) + "," +
                                  std::to_string(e.to) + ")");
    }
    if (e.from == e.to) {
      throw std::invalid_argument("self-loop at vertex " +
                                  std::to_string(e.from));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
  out_offset_.assign(n_ + 1, 0);
  in_offset_.assign(n_ + 1, 0);
  for (const Edge& e : edges_) {
    ++out_offset_[e.from + 1];
    ++in_offset_[e.to + 1];
  }
  for (int v = 0; v < n_; ++v) {
    out_offset_[v + 1] += out_offset_[v];
    in_offset_[v + 1] += in_offset_[v];
  }
  in_ids_.assign(edges_.size(), 0);
  std::vector<int> fill(in_offset_.begin(), in_offset_.end() - 1);
  for (EdgeId id = 0; id < num_edges(); ++id) {
    in_ids_[fill[edges_[id].to]++] = id;
  }
}

std::optional<EdgeId> Graph::find_edge(Vertex u, Vertex v) const {
  if (u < 0 || u >= n_) return std::nullopt;
  auto first = edges_.begin() + out_offset_[u];
  auto last = edges_.begin() + out_offset_[u + 1];
  auto it = std::lower_bound(first, last, Edge{u, v});
  if (it == last || it->to != v) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

EdgeSet::EdgeSet(std::vector<EdgeId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

EdgeSet EdgeSet::All(const Graph& g) {
  EdgeSet s;
  s.ids_.resize(g.num_edges());
  for (int i = 0; i < g.num_edges(); ++i) s.ids_[i] = i;
  return s;
}

EdgeSet EdgeSet::FromMask(const std::vector<char>& mask) {
  EdgeSet s;
  for (int i = 0; i < static_cast<int>(mask.size()); ++i) {
    if (mask[i]) s.ids_.push_back(i);
  }
  return s;
}

bool EdgeSet::contains(EdgeId e) const {
  return std::binary_search(ids_.begin(), ids_.end(), e);
}

void EdgeSet::Insert(EdgeId e) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), e);
  if (it == ids_.end() || *it != e) ids_.insert(it, e);
}

void EdgeSet::InsertAll(std::span<const EdgeId> ids) {
  if (ids.empty()) return;
  std::vector<EdgeId> extra(ids.begin(), ids.end());
  std::sort(extra.begin(), extra.end());
  std::vector<EdgeId> merged;
  merged.reserve(ids_.size() + extra.size());
  std::set_union(ids_.begin(), ids_.end(), extra.begin(), extra.end(),
                 std::back_inserter(merged));
  ids_ = std::move(merged);
}

std::vector<char> EdgeSet::Mask(int m) const {
  std::vector<char> mask(m, 0);
  for (EdgeId e : ids_) mask[e] = 1;
  return mask;
}

DemandSet::DemandSet(std::vector<Demand> pairs) : pairs_(std::move(pairs)) {
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Demand& d : pairs_) {
    if (d.s == d.t) throw std::invalid_argument("demand with s == t");
    if (d.s < 0 || d.t < 0) throw std::invalid_argument("negative vertex");
    if (d.kind == BoundKind::kAtMost && d.bound < 1) {
      throw std::invalid_argument("distance bound must be positive");
    }
    if (!seen.insert({d.s, d.t}).second) {
      throw std::invalid_argument("repeated demand pair (" +
                                  std::to_string(d.s) + "," +
                                  std::to_string(d.t) + ")");
    }
  }
}

DemandSet DemandSet::Subset(std::span<const int> indices) const {
  std::vector<Demand> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(pairs_[i]);
  return DemandSet(std::move(out));
}

std::vector<int> BfsDistances(const Graph& g, Vertex source,
                              Direction direction,
                              const std::vector<char>* mask) {
  const int n = g.num_vertices();
  if (source < 0 || source >= n) {
    throw std::out_of_range("BFS source out of range");
  }
  std::vector<int> dist(n, kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(n);
  dist[source] = 0;
  queue.push_back(source);
  for (size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const int next = dist[u] + 1;
    if (direction == Direction::kForward) {
      for (EdgeId e = g.out_begin(u); e < g.out_end(u); ++e) {
        if (mask && !(*mask)[e]) continue;
        const Vertex v = g.edge(e).to;
        if (dist[v] == kUnreachable) {
          dist[v] = next;
          queue.push_back(v);
        }
      }
    } else {
      for (EdgeId e : g.in_edges(u)) {
        if (mask && !(*mask)[e]) continue;
        const Vertex v = g.edge(e).from;
        if (dist[v] == kUnreachable) {
          dist[v] = next;
          queue.push_back(v);
        }
      }
    }
  }
  return dist;
}

std::vector<std::vector<int>> AllPairsDistances(const Graph& g) {
  std::vector<std::vector<int>> dist(g.num_vertices());
  for (Vertex u = 0; u < g.num_vertices(); ++u) dist[u] = BfsDistances(g, u);
  return dist;
}

std::vector<ResolvedDemand> Resolve(const Graph& g, const DemandSet& demands) {
  std::vector<ResolvedDemand> out;
  out.reserve(demands.size());
  std::map<Vertex, std::vector<int>> cache;
  for (const Demand& d : demands) {
    if (d.s >= g.num_vertices() || d.t >= g.num_vertices()) {
      throw InfeasibleInstanceError("demand endpoint out of range");
    }
    auto it = cache.find(d.s);
    if (it == cache.end()) it = cache.emplace(d.s, BfsDistances(g, d.s)).first;
    const int dist = it->second[d.t];
    if (dist == kUnreachable) {
      throw InfeasibleInstanceError("pair (" + std::to_string(d.s) + "," +
                                    std::to_string(d.t) + ") is unreachable");
    }
    ResolvedDemand r{d.s, d.t, dist, dist, false};
    switch (d.kind) {
      case BoundKind::kExact:
        r.exact = true;
        break;
      case BoundKind::kAtMost:
        if (d.bound < dist) {
          throw InfeasibleInstanceError(
              "bound " + std::to_string(d.bound) + " below distance " +
              std::to_string(dist) + " for pair (" + std::to_string(d.s) +
              "," + std::to_string(d.t) + ")");
        }
        r.limit = d.bound;
        break;
      case BoundKind::kUnbounded:
        r.limit = kUnreachable;
        break;
    }
    out.push_back(r);
  }
  return out;
}

std::optional<LocalGraph> BuildLocalGraph(const Graph& g, Vertex s, Vertex t,
                                          std::span<const int> from_s,
                                          std::span<const int> to_t) {
  const int total = from_s[t];
  if (total == kUnreachable) return std::nullopt;
  std::vector<EdgeId> ids;
  std::vector<char> in(g.num_vertices(), 0);
  in[s] = in[t] = 1;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (from_s[ed.from] == kUnreachable || to_t[ed.to] == kUnreachable) {
      continue;
    }
    if (from_s[ed.from] + 1 + to_t[ed.to] == total) {
      ids.push_back(e);
      in[ed.from] = in[ed.to] = 1;
    }
  }
  LocalGraph lg{EdgeSet(std::move(ids)), {}};
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) lg.vertices.push_back(v);
  }
  return lg;
}

std::optional<LocalGraph> BuildLocalGraph(const Graph& g, Vertex s, Vertex t) {
  const auto from_s = BfsDistances(g, s, Direction::kForward);
  const auto to_t = BfsDistances(g, t, Direction::kBackward);
  return BuildLocalGraph(g, s, t, from_s, to_t);
}

ThicknessPartition ClassifyThickness(const Graph& g, const DemandSet& demands,
                                     double k) {
  ThicknessPartition part;
  for (int i = 0; i < demands.size(); ++i) {
    auto lg = BuildLocalGraph(g, demands[i].s, demands[i].t);
    if (!lg) {
      throw InfeasibleInstanceError("pair " + std::to_string(i) +
                                    " is unreachable");
    }
    if (static_cast<double>(lg->vertices.size()) >= k) {
      part.thick.push_back(i);
    } else {
      part.thin.push_back(i);
    }
  }
  return part;
}

bool VerificationReport::AllSatisfied() const {
  return std::all_of(pairs.begin(), pairs.end(),
                     [](const PairReport& p) { return p.satisfied; });
}

int VerificationReport::NumSatisfied() const {
  return static_cast<int>(std::count_if(
      pairs.begin(), pairs.end(),
      [](const PairReport& p) { return p.satisfied; }));
}

VerificationReport VerifyResolved(const Graph& g, const EdgeSet& solution,
                                  std::span<const ResolvedDemand> demands) {
  const std::vector<char> mask = solution.Mask(g.num_edges());
  VerificationReport report;
  std::map<Vertex, std::vector<int>> cache;
  for (int i = 0; i < static_cast<int>(demands.size()); ++i) {
    const ResolvedDemand& d = demands[i];
    auto it = cache.find(d.s);
    if (it == cache.end()) {
      it = cache.emplace(d.s, BfsDistances(g, d.s, Direction::kForward, &mask))
               .first;
    }
    PairReport p;
    p.demand = i;
    p.achieved = it->second[d.t];
    p.limit = d.limit;
    p.satisfied = p.achieved != kUnreachable && p.achieved <= d.limit;
    report.pairs.push_back(p);
  }
  return report;
}

VerificationReport VerifySolution(const Graph& g, const EdgeSet& solution,
                                  const DemandSet& demands) {
  const std::vector<char> mask = solution.Mask(g.num_edges());
  VerificationReport report;
  for (int i = 0; i < demands.size(); ++i) {
    const Demand& d = demands[i];
    PairReport p;
    p.demand = i;
    const auto full = BfsDistances(g, d.s);
    const auto sub = BfsDistances(g, d.s, Direction::kForward, &mask);
    p.achieved = sub[d.t];
    switch (d.kind) {
      case BoundKind::kExact:
        p.limit = full[d.t];
        break;
      case BoundKind::kAtMost:
        p.limit = d.bound;
        break;
      case BoundKind::kUnbounded:
        p.limit = kUnreachable;
        break;
    }
    p.satisfied = p.achieved != kUnreachable && p.achieved <= p.limit;
    report.pairs.push_back(p);
  }
  return report;
}

std::map<int, std::vector<int>> DistanceBuckets(const Graph& g,
                                                const DemandSet& demands) {
  const auto resolved = Resolve(g, demands);
  std::map<int, std::vector<int>> buckets;
  for (int i = 0; i < static_cast<int>(resolved.size()); ++i) {
    int d_star = 1;
    while (2 * d_star <= resolved[i].distance) d_star *= 2;
    buckets[d_star].push_back(i);
  }
  return buckets;
}

NearbyTerminals FindNearbyTerminals(const Graph& g, Vertex u, int d_star,
                                    const DemandSet& bucket) {
  const auto to_u = BfsDistances(g, u, Direction::kBackward);
  const auto from_u = BfsDistances(g, u, Direction::kForward);
  std::set<Vertex> sources, sinks;
  for (const Demand& d : bucket) {
    if (to_u[d.s] != kUnreachable && to_u[d.s] < 2 * d_star) sources.insert(d.s);
    if (from_u[d.t] != kUnreachable && from_u[d.t] < 2 * d_star) {
      sinks.insert(d.t);
    }
  }
  return {{sources.begin(), sources.end()}, {sinks.begin(), sinks.end()}};
}

std::vector<EdgeId> CanonicalShortestPath(
    const Graph& g, const std::vector<std::vector<int>>& dist, Vertex u,
    Vertex v) {
  std::vector<EdgeId> path;
  if (u == v || dist[u][v] == kUnreachable) return path;
  Vertex cur = u;
  while (cur != v) {
    const int remaining = dist[cur][v];
    // Out-edges are sorted by head, so the first match is the smallest.
    for (EdgeId e = g.out_begin(cur); e < g.out_end(cur); ++e) {
      const Vertex w = g.edge(e).to;
      if (dist[w][v] != kUnreachable && dist[w][v] == remaining - 1) {
        path.push_back(e);
        cur = w;
        break;
      }
    }
  }
  return path;
}

MetricCompletion::MetricCompletion(const Graph& g)
    : graph_(g), dist_(AllPairsDistances(g)) {}

std::vector<EdgeId> MetricCompletion::WitnessEdges(Vertex u, Vertex v) const {
  return CanonicalShortestPath(graph_, dist_, u, v);
}

std::vector<Vertex> MetricCompletion::WitnessVertices(Vertex u,
                                                      Vertex v) const {
  if (dist_[u][v] == kUnreachable) return {};
  std::vector<Vertex> seq{u};
  for (EdgeId e : WitnessEdges(u, v)) seq.push_back(graph_.edge(e).to);
  return seq;
}

EdgeSet ShortestPathTree(const Graph& g, Vertex root, Direction direction) {
  const int n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> queue{root};
  std::vector<EdgeId> tree;
  seen[root] = 1;
  for (size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    if (direction == Direction::kForward) {
      for (EdgeId e = g.out_begin(u); e < g.out_end(u); ++e) {
        const Vertex v = g.edge(e).to;
        if (!seen[v]) {
          seen[v] = 1;
          tree.push_back(e);
          queue.push_back(v);
        }
      }
    } else {
      for (EdgeId e : g.in_edges(u)) {
        const Vertex v = g.edge(e).from;
        if (!seen[v]) {
          seen[v] = 1;
          tree.push_back(e);
          queue.push_back(v);
        }
      }
    }
  }
  return EdgeSet(std::move(tree));
}

}  // namespace spanopt
