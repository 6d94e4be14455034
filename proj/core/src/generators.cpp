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

#include "spanopt/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace spanopt {

RandomInstance RandomFeasibleInstance(Seed seed, const RandomInstanceOptions& options) {
  if (options.min_vertices < 2 || options.max_vertices < options.min_vertices ||
      options.max_pairs < 1 || options.max_slack < 0) {
    throw std::invalid_argument("bad random instance options");
  }
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(DeriveSeed(seed, attempt));
    const int n = rng.UniformInt(options.min_vertices, options.max_vertices);
    const int cap = std::min(options.max_edges, n * (n - 1));
    const int m = rng.UniformInt(std::min(n, cap), cap);
    std::vector<Edge> all;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u != v) all.push_back({u, v});
      }
    }
    // Partial Fisher-Yates for m distinct arcs.
    for (int i = 0; i < m; ++i) {
      std::swap(all[i], all[rng.UniformInt(i, static_cast<int>(all.size()) - 1)]);
    }
    all.resize(m);
    Graph g(n, all);
    const auto dist = AllPairsDistances(g);
    std::vector<std::pair<int, int>> reachable;
    for (int s = 0; s < n; ++s) {
      for (int t = 0; t < n; ++t) {
        if (s != t && dist[s][t] != kUnreachable) reachable.push_back({s, t});
      }
    }
    if (reachable.empty()) continue;
    const int k = rng.UniformInt(1, std::min<int>(options.max_pairs, reachable.size()));
    for (int i = 0; i < k; ++i) {
      std::swap(reachable[i],
                reachable[rng.UniformInt(i, static_cast<int>(reachable.size()) - 1)]);
    }
    std::vector<Demand> exact, bounded, unbounded;
    for (int i = 0; i < k; ++i) {
      const auto [s, t] = reachable[i];
      exact.push_back(Demand::Exact(s, t));
      bounded.push_back(Demand::AtMost(s, t, dist[s][t] + rng.UniformInt(0, options.max_slack)));
      unbounded.push_back(Demand::Unbounded(s, t));
    }
    return {std::move(g), DemandSet(std::move(exact)), DemandSet(std::move(bounded)),
            DemandSet(std::move(unbounded))};
  }
}

}  // namespace spanopt
