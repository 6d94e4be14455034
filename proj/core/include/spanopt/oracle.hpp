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

#ifndef SPANOPT_ORACLE_HPP_
#define SPANOPT_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "spanopt/graph.hpp"

namespace spanopt {

inline constexpr int kDefaultOracleEdges = 22;
inline constexpr int kDefaultJunctionOracleEdges = 18;

// Subset-search budget; SPANOPT_ORACLE_MAX_EDGES overrides the default.
int OracleEdgeBudget(int fallback = kDefaultOracleEdges);

struct OracleSolution {
  int opt = 0;
  EdgeSet witness;
  std::uint64_t subsets_checked = 0;
};

// Minimum-cardinality edge set satisfying every demand. Only edges lying on
// some admissible s->t walk are searched; the budget applies to that count.
// Throws InfeasibleInstanceError (via Resolve) and BudgetExceededError.
OracleSolution ExactMinSolution(const Graph& g, const DemandSet& demands,
                                int max_edges = -1);

struct JunctionOracleResult {
  bool finite = false;  // false when no pair can be routed through r
  int edges = 0;
  int pairs = 0;
  EdgeSet witness;
  std::vector<int> satisfied;

  double density() const {
    return finite ? static_cast<double>(edges) / pairs : 0.0;
  }
};

// Minimizes |F| / #{pairs with d_F(s,r) + d_F(r,t) <= limit}; ties go to the
// smaller |F|, then to the first subset in cardinality-then-colex order.
JunctionOracleResult ExactMinDensityJunctionTree(const Graph& g,
                                                 const DemandSet& demands,
                                                 Vertex r, int max_edges = -1);

// All shortest s->t paths as vertex sequences, lexicographically ordered.
std::vector<std::vector<Vertex>> EnumerateShortestPaths(const Graph& g, Vertex s,
                                                        Vertex t);

}  // namespace spanopt

#endif  // SPANOPT_ORACLE_HPP_
