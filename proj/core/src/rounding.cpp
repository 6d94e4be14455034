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

#include "spanopt/rounding.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "spanopt/errors.hpp"

namespace spanopt {

EdgeSet RandomizedRound(const Graph& g, std::span<const double> x, double k,
                        std::span<const ResolvedDemand> targets, Seed seed,
                        int max_rounds, Trace* trace) {
  const double scale = k * std::log(std::max(2, g.num_vertices()));
  std::vector<double> prob(g.num_edges());
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    prob[e] = std::min(1.0, std::max(0.0, x[e]) * scale);
  }
  Rng rng(seed);
  std::vector<char> mask(g.num_edges(), 0);
  if (trace) trace->Add("round.seed", seed);
  for (int round = 1; round <= max_rounds; ++round) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (prob[e] > 0.0 && rng.Uniform01() < prob[e]) mask[e] = 1;
    }
    const EdgeSet current = EdgeSet::FromMask(mask);
    if (VerifyResolved(g, current, targets).AllSatisfied()) {
      if (trace) {
        trace->Add("round.rounds", round);
        trace->Add("round.edges", current.size());
      }
      return current;
    }
  }
  throw RoundingFailureError("randomized rounding did not satisfy all pairs in " +
                             std::to_string(max_rounds) + " rounds");
}

std::vector<Vertex> HittingSet(const std::vector<std::vector<Vertex>>& sets) {
  std::vector<std::vector<Vertex>> normalized;
  for (const auto& s : sets) {
    if (s.empty()) throw std::invalid_argument("hitting set: empty input set");
    std::vector<Vertex> c = s;
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    normalized.push_back(std::move(c));
  }
  std::vector<char> hit(normalized.size(), 0);
  size_t remaining = normalized.size();
  std::vector<Vertex> chosen;
  while (remaining > 0) {
    std::map<Vertex, int> count;
    for (size_t i = 0; i < normalized.size(); ++i) {
      if (hit[i]) continue;
      for (Vertex v : normalized[i]) ++count[v];
    }
    Vertex best = -1;
    int best_count = 0;
    for (const auto& [v, c] : count) {
      if (c > best_count) {
        best = v;
        best_count = c;
      }
    }
    chosen.push_back(best);
    for (size_t i = 0; i < normalized.size(); ++i) {
      if (!hit[i] && std::binary_search(normalized[i].begin(),
                                        normalized[i].end(), best)) {
        hit[i] = 1;
        --remaining;
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace spanopt
