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

#include "spanopt/preserver.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

#include "settle.hpp"
#include "spanopt/errors.hpp"
#include "spanopt/junction.hpp"
#include "spanopt/lp_builders.hpp"

namespace spanopt {
namespace {

using internal::HubMode;
using internal::ThresholdProblem;

// Preserver LP plus local-graph supports for a demand set.
ThresholdProblem ExactProblem(const Graph& g, const DemandSet& demands) {
  ThresholdProblem prob;
  prob.pairs = Resolve(g, demands);
  const FlowLp lp = BuildPreserverLp(g, demands);
  const LpSolution sol = SolveLp(lp.model);
  if (!sol.optimal()) {
    throw Error(std::string("preserver LP: ") + ToString(sol.status));
  }
  prob.x = EdgeValues(lp, sol, g.num_edges());
  for (const auto& d : prob.pairs) {
    auto local = BuildLocalGraph(g, d.s, d.t);
    prob.support.push_back(local->vertices);
    prob.hubs_ok.push_back(local->vertices);
  }
  return prob;
}

EdgeSet CheckedThreshold(const Graph& g, const std::vector<std::vector<int>>& dist,
                         const ThresholdProblem& prob, double k, HubMode mode,
                         int d_star, Seed seed, Trace* trace) {
  EdgeSet f = internal::ThresholdRound(g, dist, prob, k, mode, d_star, seed, trace);
  if (!VerifyResolved(g, f, prob.pairs).AllSatisfied()) {
    throw std::logic_error("threshold rounding left a pair unsatisfied");
  }
  return f;
}

// G_{d*}(u): shortest-path in-DAG and out-DAG of u within distance < 2 d*,
// glued at u (vertex 0) with every other vertex renamed per side.
struct RootedUnion {
  Graph graph;
  std::vector<EdgeId> back;  // edge id in graph -> edge id in g
  std::vector<int> in_id;    // -1 when absent
  std::vector<int> out_id;
};

RootedUnion BuildRootedUnion(const Graph& g,
                             const std::vector<std::vector<int>>& dist, Vertex u,
                             int d_star) {
  const int n = g.num_vertices();
  RootedUnion ru;
  ru.in_id.assign(n, -1);
  ru.out_id.assign(n, -1);
  int next = 1;
  ru.in_id[u] = ru.out_id[u] = 0;
  auto near_in = [&](Vertex w) {
    return dist[w][u] != kUnreachable && dist[w][u] < 2 * d_star;
  };
  auto near_out = [&](Vertex w) {
    return dist[u][w] != kUnreachable && dist[u][w] < 2 * d_star;
  };
  for (Vertex w = 0; w < n; ++w) {
    if (w != u && near_in(w)) ru.in_id[w] = next++;
  }
  for (Vertex w = 0; w < n; ++w) {
    if (w != u && near_out(w)) ru.out_id[w] = next++;
  }
  std::vector<std::pair<Edge, EdgeId>> edges;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Vertex a = g.edge(e).from;
    const Vertex b = g.edge(e).to;
    if (ru.in_id[a] >= 0 && ru.in_id[b] >= 0 && a != u &&
        dist[a][u] == dist[b][u] + 1) {
      edges.push_back({{ru.in_id[a], ru.in_id[b]}, e});
    }
    if (ru.out_id[a] >= 0 && ru.out_id[b] >= 0 && b != u &&
        dist[u][b] == dist[u][a] + 1) {
      edges.push_back({{ru.out_id[a], ru.out_id[b]}, e});
    }
  }
  std::sort(edges.begin(), edges.end());
  std::vector<Edge> plain;
  for (const auto& [edge, orig] : edges) {
    plain.push_back(edge);
    ru.back.push_back(orig);
  }
  ru.graph = Graph(next, std::move(plain));
  return ru;
}

}  // namespace

EdgeSet PreserverAlgorithm1(const Graph& g, const DemandSet& demands,
                            double opt_guess, Seed seed, Trace* trace) {
  if (demands.empty()) return {};
  if (opt_guess < 1) throw std::invalid_argument("opt_guess must be >= 1");
  const ThresholdProblem prob = ExactProblem(g, demands);
  const double k = g.num_vertices() / std::sqrt(opt_guess);
  return CheckedThreshold(g, AllPairsDistances(g), prob, k, HubMode::kTrees, 0,
                          seed, trace);
}

EdgeSet PreserverAlgorithm2(const Graph& g, const DemandSet& bucket, int d_star,
                            Seed seed, Trace* trace) {
  if (bucket.empty()) return {};
  const ThresholdProblem prob = ExactProblem(g, bucket);
  const double k = std::sqrt(static_cast<double>(d_star) * g.num_vertices());
  return CheckedThreshold(g, AllPairsDistances(g), prob, k,
                          HubMode::kNearbyPaths, d_star, seed, trace);
}

EdgeSet PreserverAlgorithm3(const Graph& g, const DemandSet& bucket, int d_star,
                            double epsilon, Seed seed, Trace* trace,
                            Algorithm3Stats* stats) {
  if (bucket.empty()) return {};
  const auto resolved = Resolve(g, bucket);
  const auto dist = AllPairsDistances(g);
  const int n = g.num_vertices();
  std::vector<int> remaining(resolved.size());
  for (size_t i = 0; i < remaining.size(); ++i) remaining[i] = static_cast<int>(i);
  EdgeSet f;
  JunctionOptions jopt;
  jopt.epsilon = epsilon;
  for (int iter = 0; !remaining.empty(); ++iter) {
    std::optional<EdgeSet> best_edges;
    long best_pairs = 0;
    Vertex best_root = -1;
    for (Vertex u = 0; u < n; ++u) {
      std::vector<int> through;
      for (int p : remaining) {
        const auto& d = resolved[p];
        if (dist[d.s][u] != kUnreachable && dist[u][d.t] != kUnreachable &&
            dist[d.s][u] + dist[u][d.t] == d.distance) {
          through.push_back(p);
        }
      }
      if (through.empty()) continue;
      const RootedUnion ru = BuildRootedUnion(g, dist, u, d_star);
      std::vector<Demand> local;
      for (int p : through) {
        local.push_back(Demand::Exact(ru.in_id[resolved[p].s],
                                      ru.out_id[resolved[p].t]));
      }
      JunctionResult jr;
      try {
        jr = JunctionTreeDensity(ru.graph, DemandSet(local), 0,
                                 DeriveSeed(seed, static_cast<std::uint64_t>(iter) * n + u),
                                 jopt);
      } catch (const RoundingFailureError&) {
        continue;
      }
      if (!jr.feasible()) continue;
      std::vector<EdgeId> ids;
      for (EdgeId e : jr.edges) ids.push_back(ru.back[e]);
      EdgeSet fu(std::move(ids));
      const long pairs = static_cast<long>(jr.satisfied.size());
      if (!best_edges ||
          internal::RatioLess(fu.size(), pairs, best_edges->size(), best_pairs)) {
        best_edges = std::move(fu);
        best_pairs = pairs;
        best_root = u;
      }
    }
    if (best_edges) {
      f.InsertAll(*best_edges);
    } else {
      // No root produced a tree: settle one pair directly.
      const auto& d = resolved[remaining.front()];
      f.InsertAll(CanonicalShortestPath(g, dist, d.s, d.t));
    }
    std::vector<ResolvedDemand> rest;
    for (int p : remaining) rest.push_back(resolved[p]);
    const auto report = VerifyResolved(g, f, rest);
    std::vector<int> still;
    for (size_t i = 0; i < rest.size(); ++i) {
      if (!report.pairs[i].satisfied) still.push_back(remaining[i]);
    }
    if (still.size() >= remaining.size()) {
      throw std::logic_error("junction cover made no progress");
    }
    remaining = std::move(still);
    if (stats) {
      stats->remaining.push_back(static_cast<int>(remaining.size()));
      stats->roots.push_back(best_root);
    }
    if (trace) {
      trace->Add("alg3.root", best_root);
      trace->Add("alg3.remaining", remaining.size());
    }
  }
  return f;
}

EdgeSet PreserverApprox(const Graph& g, const DemandSet& demands,
                        double epsilon, Seed seed, Trace* trace) {
  const auto resolved = Resolve(g, demands);
  EdgeSet best = EdgeSet::All(g);
  if (demands.empty()) return {};
  const int n = g.num_vertices();
  const auto dist = AllPairsDistances(g);
  std::optional<ThresholdProblem> lp_cache;
  std::optional<EdgeSet> bucket_result;
  bool bucket_failed = false;
  for (long guess : internal::OptGuesses(g.num_edges())) {
    std::optional<EdgeSet> candidate;
    try {
      if (internal::AtLeastFourFifths(guess, n)) {
        if (!lp_cache) lp_cache = ExactProblem(g, demands);
        const double k = n / std::sqrt(static_cast<double>(guess));
        candidate = CheckedThreshold(g, dist, *lp_cache, k, HubMode::kTrees, 0,
                                     DeriveSeed(seed, guess), nullptr);
      } else {
        if (!bucket_result && !bucket_failed) {
          try {
            EdgeSet acc;
            for (const auto& [d_star, idx] : DistanceBuckets(g, demands)) {
              const DemandSet bucket = demands.Subset(idx);
              const Seed bs = DeriveSeed(seed, 1000003ULL + d_star);
              const bool small = static_cast<long long>(d_star) * d_star * d_star *
                                     d_star * d_star <= n;
              acc.InsertAll(small ? PreserverAlgorithm2(g, bucket, d_star, bs)
                                  : PreserverAlgorithm3(g, bucket, d_star,
                                                        epsilon, bs));
            }
            bucket_result = std::move(acc);
          } catch (const RoundingFailureError&) {
            bucket_failed = true;
          }
        }
        if (bucket_result) candidate = *bucket_result;
      }
    } catch (const RoundingFailureError&) {
      candidate.reset();
    }
    if (!candidate) continue;
    if (!VerifyResolved(g, *candidate, resolved).AllSatisfied()) continue;
    if (trace) trace->Add("preserver.guess." + std::to_string(guess), candidate->size());
    if (candidate->size() < best.size()) best = std::move(*candidate);
  }
  if (trace) trace->Add("preserver.edges", best.size());
  return best;
}

}  // namespace spanopt
