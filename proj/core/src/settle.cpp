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

#include "settle.hpp"

#include <algorithm>
#include <stdexcept>

#include "spanopt/rounding.hpp"

namespace spanopt::internal {

std::vector<Vertex> AdmissibleHubs(const std::vector<std::vector<int>>& dist,
                                   const std::vector<Vertex>& support, Vertex s,
                                   Vertex t, long limit) {
  std::vector<Vertex> out;
  for (Vertex u : support) {
    const int a = dist[s][u];
    const int b = dist[u][t];
    if (a == kUnreachable || b == kUnreachable) continue;
    if (limit != kUnreachable && static_cast<long>(a) + b > limit) continue;
    out.push_back(u);
  }
  return out;
}

EdgeSet ThresholdRound(const Graph& g, const std::vector<std::vector<int>>& dist,
                       const ThresholdProblem& problem, double k, HubMode mode,
                       int d_star, Seed seed, Trace* trace) {
  std::vector<ResolvedDemand> thin;
  std::vector<int> thick;
  for (size_t p = 0; p < problem.pairs.size(); ++p) {
    if (static_cast<double>(problem.support[p].size()) >= k) {
      thick.push_back(static_cast<int>(p));
    } else {
      thin.push_back(problem.pairs[p]);
    }
  }
  EdgeSet f;
  if (!thin.empty()) {
    f = RandomizedRound(g, problem.x, k, thin, seed, 2000, trace);
  }
  std::vector<Vertex> hubs;
  if (!thick.empty()) {
    std::vector<std::vector<Vertex>> sets;
    for (int p : thick) {
      if (problem.hubs_ok[p].empty()) {
        throw std::logic_error("thick pair without an admissible hub");
      }
      sets.push_back(problem.hubs_ok[p]);
    }
    hubs = HittingSet(sets);
  }
  auto add_path = [&](Vertex a, Vertex b) {
    f.InsertAll(CanonicalShortestPath(g, dist, a, b));
  };
  switch (mode) {
    case HubMode::kTrees:
      for (Vertex u : hubs) {
        f.InsertAll(ShortestPathTree(g, u, Direction::kForward));
        f.InsertAll(ShortestPathTree(g, u, Direction::kBackward));
      }
      break;
    case HubMode::kNearbyPaths:
      for (Vertex u : hubs) {
        for (const auto& d : problem.pairs) {
          if (dist[d.s][u] != kUnreachable && dist[d.s][u] < 2 * d_star) {
            add_path(d.s, u);
          }
          if (dist[u][d.t] != kUnreachable && dist[u][d.t] < 2 * d_star) {
            add_path(u, d.t);
          }
        }
      }
      break;
    case HubMode::kPairPaths:
      for (int p : thick) {
        const auto& ok = problem.hubs_ok[p];
        for (Vertex u : hubs) {
          if (std::binary_search(ok.begin(), ok.end(), u)) {
            add_path(problem.pairs[p].s, u);
            add_path(u, problem.pairs[p].t);
            break;
          }
        }
      }
      break;
  }
  if (trace) {
    trace->Add("threshold.k", k);
    trace->Add("threshold.thin", thin.size());
    trace->Add("threshold.thick", thick.size());
    trace->Add("threshold.hubs", hubs.size());
    trace->Add("threshold.edges", f.size());
  }
  return f;
}

std::vector<long> OptGuesses(int m) {
  std::vector<long> out;
  for (long g = 1; g < m; g *= 2) out.push_back(g);
  out.push_back(std::max(1, m));
  return out;
}

bool AtLeastFourFifths(long a, int n) {
  long double a5 = 1, n4 = 1;
  for (int i = 0; i < 5; ++i) a5 *= a;
  for (int i = 0; i < 4; ++i) n4 *= n;
  return a5 >= n4;
}

int FifthRootCeil(int n) {
  int d = 1;
  while (static_cast<long long>(d) * d * d * d * d < n) ++d;
  return d;
}

std::vector<int> SatisfiedPairs(const Graph& g, const EdgeSet& f,
                                const std::vector<ResolvedDemand>& pairs) {
  const auto report = VerifyResolved(g, f, pairs);
  std::vector<int> out;
  for (size_t p = 0; p < report.pairs.size(); ++p) {
    if (report.pairs[p].satisfied) out.push_back(static_cast<int>(p));
  }
  return out;
}

}  // namespace spanopt::internal
