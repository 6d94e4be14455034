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

#ifndef SPANOPT_JUNCTION_HPP_
#define SPANOPT_JUNCTION_HPP_

#include <cstddef>
#include <vector>

#include "spanopt/graph.hpp"
#include "spanopt/rng.hpp"
#include "spanopt/trace.hpp"

namespace spanopt {

struct JunctionOptions {
  double epsilon = 0.5;  // sigma = ceil(1 / epsilon)
  std::size_t node_budget = 20000;
  // The tree height is lowered while the label cover LP has more columns.
  int max_lp_columns = 2500;
  int retry_cap = 16;
  // Force the connectivity instance even when some pair has a finite bound.
  bool connectivity = false;
};

struct JunctionResult {
  EdgeSet edges;
  std::vector<int> satisfied;  // demand indices with d_F(s,r) + d_F(r,t) <= limit
  int sigma = 0;
  double lp_value = 0.0;

  bool feasible() const { return !satisfied.empty(); }
  double density() const {
    return satisfied.empty() ? 0.0
                             : static_cast<double>(edges.size()) / satisfied.size();
  }
};

// Junction tree through r with low density |F| / #satisfied. The layered
// instance is used unless every demand is unbounded (or connectivity is set).
// Returns an empty result when no pair can be routed through r; throws
// RoundingFailureError when every retry fails.
JunctionResult JunctionTreeDensity(const Graph& g, const DemandSet& demands,
                                   Vertex r, Seed seed,
                                   const JunctionOptions& options = {},
                                   Trace* trace = nullptr);

// Pairs routed through r within their limits by F.
std::vector<int> PairsThroughRoot(const Graph& g, const EdgeSet& f,
                                  const std::vector<ResolvedDemand>& demands,
                                  Vertex r);

}  // namespace spanopt

#endif  // SPANOPT_JUNCTION_HPP_
