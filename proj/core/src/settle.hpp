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

#ifndef SPANOPT_SRC_SETTLE_HPP_
#define SPANOPT_SRC_SETTLE_HPP_

#include <vector>

#include "spanopt/graph.hpp"
#include "spanopt/rng.hpp"
#include "spanopt/trace.hpp"

namespace spanopt::internal {

// How a hub settles the thick pairs it hits.
enum class HubMode {
  kTrees,        // full shortest-path trees out of and into the hub
  kNearbyPaths,  // phi paths to/from every terminal within 2 d* of the hub
  kPairPaths,    // phi(s, hub) and phi(hub, t) for each settled pair
};

struct ThresholdProblem {
  std::vector<ResolvedDemand> pairs;
  std::vector<double> x;                     // per edge
  std::vector<std::vector<Vertex>> support;  // V^{s,t}; decides thickness
  std::vector<std::vector<Vertex>> hubs_ok;  // admissible hubs, nonempty
};

// Thin pairs (|support| < k) by randomized rounding of x, thick pairs through
// a greedy hitting set of their admissible hubs.
EdgeSet ThresholdRound(const Graph& g, const std::vector<std::vector<int>>& dist,
                       const ThresholdProblem& problem, double k, HubMode mode,
                       int d_star, Seed seed, Trace* trace);

// Support vertices u with d(s,u) + d(u,t) <= limit (finite when the limit is
// kUnreachable).
std::vector<Vertex> AdmissibleHubs(const std::vector<std::vector<int>>& dist,
                                   const std::vector<Vertex>& support, Vertex s,
                                   Vertex t, long limit);

// OPT guesses 1, 2, 4, ... below m, then m.
std::vector<long> OptGuesses(int m);
// a^5 >= n^4, i.e. a >= n^(4/5).
bool AtLeastFourFifths(long a, int n);
// Smallest integer D with D^5 >= n.
int FifthRootCeil(int n);

// Pairs of `pairs` satisfied by f (indices).
std::vector<int> SatisfiedPairs(const Graph& g, const EdgeSet& f,
                                const std::vector<ResolvedDemand>& pairs);

// a/b < c/d for positive denominators.
inline bool RatioLess(long a, long b, long c, long d) { return a * d < c * b; }

}  // namespace spanopt::internal

#endif  // SPANOPT_SRC_SETTLE_HPP_
