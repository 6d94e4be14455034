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

#include "spanopt/oracle.hpp"

#include <cstdlib>
#include <string>

#include "spanopt/errors.hpp"

namespace spanopt {

int OracleEdgeBudget(int fallback) {
  if (const char* env = std::getenv("SPANOPT_ORACLE_MAX_EDGES")) {
    try {
      const int v = std::stoi(env);
      if (v > 0 && v < 63) return v;
    } catch (const std::exception&) {
    }
  }
  return fallback;
}

namespace {

using Mask = std::uint64_t;

// Graph restricted to a list of candidate edges; subsets are bitmasks.
class SubsetGraph {
 public:
  SubsetGraph(const Graph& g, std::vector<EdgeId> edges)
      : n_(g.num_vertices()), ids_(std::move(edges)), out_(n_), in_(n_) {
    for (int i = 0; i < static_cast<int>(ids_.size()); ++i) {
      const Edge& e = g.edge(ids_[i]);
      out_[e.from].push_back({e.to, i});
      in_[e.to].push_back({e.from, i});
    }
  }

  int size() const { return static_cast<int>(ids_.size()); }

  Mask OutMask(Vertex v) const {
    Mask m = 0;
    for (const auto& [w, i] : out_[v]) m |= Mask{1} << i;
    return m;
  }
  Mask InMask(Vertex v) const {
    Mask m = 0;
    for (const auto& [w, i] : in_[v]) m |= Mask{1} << i;
    return m;
  }

  // Hop distance src -> dst inside subset, or kUnreachable.
  int Distance(Mask subset, Vertex src, Vertex dst, int cap) const {
    if (src == dst) return 0;
    std::uint32_t seen = 1u << src;
    std::uint32_t frontier = seen;
    for (int d = 1; d <= cap && frontier; ++d) {
      std::uint32_t next = 0;
      for (int u = 0; u < n_; ++u) {
        if (!(frontier >> u & 1)) continue;
        for (const auto& [w, i] : out_[u]) {
          if ((subset >> i & 1) && !(seen >> w & 1)) next |= 1u << w;
        }
      }
      if (next >> dst & 1) return d;
      seen |= next;
      frontier = next;
    }
    return kUnreachable;
  }

  EdgeSet ToEdgeSet(Mask subset) const {
    std::vector<EdgeId> out;
    for (int i = 0; i < size(); ++i) {
      if (subset >> i & 1) out.push_back(ids_[i]);
    }
    return EdgeSet(std::move(out));
  }

 private:
  int n_;
  std::vector<EdgeId> ids_;
  std::vector<std::vector<std::pair<int, int>>> out_;
  std::vector<std::vector<std::pair<int, int>>> in_;
};

// Calls visit(mask) for every c-subset of [0, n) in colex order; stops when
// visit returns true.
template <typename F>
bool ForEachSubset(int n, int c, F&& visit) {
  if (c == 0) return visit(Mask{0});
  if (c > n) return false;
  Mask m = (Mask{1} << c) - 1;
  const Mask limit = Mask{1} << n;
  while (m < limit) {
    if (visit(m)) return true;
    const Mask lo = m & (~m + 1);
    const Mask ripple = m + lo;
    m = (((ripple ^ m) >> 2) / lo) | ripple;
  }
  return false;
}

long Plus(long a, long b) {
  return (a >= kUnreachable || b >= kUnreachable) ? kUnreachable : a + b;
}

// d is admissible for limit; an unreachable d never is, even when the limit
// itself is kUnreachable (plain connectivity).
bool Within(long d, int limit) { return d < kUnreachable && d <= limit; }

void RequireSmallGraph(const Graph& g) {
  if (g.num_vertices() > 32) {
    throw BudgetExceededError("oracle supports at most 32 vertices");
  }
}

}  // namespace

OracleSolution ExactMinSolution(const Graph& g, const DemandSet& demands,
                                int max_edges) {
  RequireSmallGraph(g);
  if (max_edges < 0) max_edges = OracleEdgeBudget();
  const auto resolved = Resolve(g, demands);
  std::vector<std::vector<int>> from(resolved.size()), to(resolved.size());
  for (size_t p = 0; p < resolved.size(); ++p) {
    from[p] = BfsDistances(g, resolved[p].s);
    to[p] = BfsDistances(g, resolved[p].t, Direction::kBackward);
  }
  std::vector<EdgeId> useful;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    for (size_t p = 0; p < resolved.size(); ++p) {
      if (Within(Plus(Plus(from[p][ed.from], 1), to[p][ed.to]), resolved[p].limit)) {
        useful.push_back(e);
        break;
      }
    }
  }
  if (static_cast<int>(useful.size()) > max_edges) {
    throw BudgetExceededError("oracle: " + std::to_string(useful.size()) +
                              " candidate edges exceed budget " +
                              std::to_string(max_edges));
  }
  SubsetGraph sg(g, useful);
  std::vector<Mask> need;
  int lower = 0;
  for (const auto& p : resolved) {
    need.push_back(sg.OutMask(p.s));
    need.push_back(sg.InMask(p.t));
    lower = std::max(lower, p.distance);
  }
  const int cap = g.num_vertices();
  OracleSolution result;
  for (int c = lower; c <= sg.size(); ++c) {
    Mask found = 0;
    const bool hit = ForEachSubset(sg.size(), c, [&](Mask m) {
      for (Mask nm : need) {
        if (!(m & nm)) return false;
      }
      ++result.subsets_checked;
      for (const auto& p : resolved) {
        const int lim = std::min(p.limit, cap);
        if (!Within(sg.Distance(m, p.s, p.t, lim), p.limit)) return false;
      }
      found = m;
      return true;
    });
    if (hit) {
      result.opt = c;
      result.witness = sg.ToEdgeSet(found);
      return result;
    }
  }
  // Unreachable after Resolve succeeded: the full useful set is feasible.
  throw Error("oracle: no feasible subset");
}

JunctionOracleResult ExactMinDensityJunctionTree(const Graph& g,
                                                 const DemandSet& demands,
                                                 Vertex r, int max_edges) {
  RequireSmallGraph(g);
  if (r < 0 || r >= g.num_vertices()) throw std::invalid_argument("root out of range");
  if (max_edges < 0) max_edges = OracleEdgeBudget(kDefaultJunctionOracleEdges);
  const auto resolved = Resolve(g, demands);
  const auto from_r = BfsDistances(g, r);
  const auto to_r = BfsDistances(g, r, Direction::kBackward);
  std::vector<int> routable;
  std::vector<std::vector<int>> from_s, to_t;
  for (size_t p = 0; p < resolved.size(); ++p) {
    from_s.push_back(BfsDistances(g, resolved[p].s));
    to_t.push_back(BfsDistances(g, resolved[p].t, Direction::kBackward));
    if (Within(Plus(to_r[resolved[p].s], from_r[resolved[p].t]), resolved[p].limit)) {
      routable.push_back(static_cast<int>(p));
    }
  }
  JunctionOracleResult result;
  if (routable.empty()) return result;
  // An edge is useful if it lies on an admissible s->r or r->t leg.
  std::vector<EdgeId> useful;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    for (int p : routable) {
      const auto& d = resolved[p];
      const long in_leg = Plus(Plus(from_s[p][ed.from], 1), to_r[ed.to]);
      const long out_leg = Plus(Plus(from_r[ed.from], 1), to_t[p][ed.to]);
      if (Within(Plus(in_leg, from_r[d.t]), d.limit) || Within(Plus(to_r[d.s], out_leg), d.limit)) {
        useful.push_back(e);
        break;
      }
    }
  }
  if (static_cast<int>(useful.size()) > max_edges) {
    throw BudgetExceededError("junction oracle: " + std::to_string(useful.size()) +
                              " candidate edges exceed budget " +
                              std::to_string(max_edges));
  }
  SubsetGraph sg(g, useful);
  const int cap = g.num_vertices();
  Mask best = 0;
  int best_pairs = 0;
  int best_size = 0;
  for (int c = 0; c <= sg.size(); ++c) {
    // A subset of size c can only win with more than c * best_pairs / best_size pairs.
    if (best_pairs > 0 &&
        static_cast<long>(c) * best_pairs >= static_cast<long>(best_size) *
                                                 static_cast<long>(routable.size())) {
      break;
    }
    ForEachSubset(sg.size(), c, [&](Mask m) {
      int count = 0;
      for (int p : routable) {
        const auto& d = resolved[p];
        const long a = sg.Distance(m, d.s, r, cap);
        const long b = sg.Distance(m, r, d.t, cap);
        if (Within(Plus(a, b), d.limit)) ++count;
      }
      if (count == 0) return false;
      // c / count < best_size / best_pairs
      if (best_pairs == 0 ||
          static_cast<long>(c) * best_pairs < static_cast<long>(best_size) * count) {
        best = m;
        best_pairs = count;
        best_size = c;
      }
      return false;
    });
  }
  result.finite = best_pairs > 0;
  result.edges = best_size;
  result.pairs = best_pairs;
  result.witness = sg.ToEdgeSet(best);
  for (int p : routable) {
    const auto& d = resolved[p];
    if (Within(Plus(sg.Distance(best, d.s, r, cap), sg.Distance(best, r, d.t, cap)), d.limit)) {
      result.satisfied.push_back(p);
    }
  }
  return result;
}

std::vector<std::vector<Vertex>> EnumerateShortestPaths(const Graph& g, Vertex s,
                                                        Vertex t) {
  std::vector<std::vector<Vertex>> out;
  const auto to_t = BfsDistances(g, t, Direction::kBackward);
  if (to_t[s] == kUnreachable) return out;
  std::vector<Vertex> path{s};
  // Out-edges are sorted by head, so the DFS emits paths in lexicographic order.
  auto dfs = [&](auto&& self, Vertex u) -> void {
    if (u == t) {
      out.push_back(path);
      return;
    }
    for (EdgeId e = g.out_begin(u); e < g.out_end(u); ++e) {
      const Vertex v = g.edge(e).to;
      if (to_t[v] != kUnreachable && to_t[v] + 1 == to_t[u]) {
        path.push_back(v);
        self(self, v);
        path.pop_back();
      }
    }
  };
  dfs(dfs, s);
  return out;
}

}  // namespace spanopt
