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

#ifndef SPANOPT_DSF_HPP_
#define SPANOPT_DSF_HPP_

#include <string>
#include <vector>

#include "spanopt/graph.hpp"
#include "spanopt/rng.hpp"
#include "spanopt/trace.hpp"

namespace spanopt {

// Threshold rounding on the plain flow LP; every pair is only required to be
// connected.
EdgeSet DsfAlgorithm1(const Graph& g, const DemandSet& demands,
                      double opt_guess, Seed seed, Trace* trace = nullptr);

struct Algorithm4Result {
  EdgeSet edges;
  std::vector<int> satisfied;  // demand indices
  std::string branch;          // "hub" or "junction"
  bool lp_feasible = false;
  long hub_edges = -1, hub_pairs = 0;            // -1: branch unavailable
  long junction_edges = -1, junction_pairs = 0;  // best root
  Vertex junction_root = -1;
};

// One density step. With bounded == false every demand is treated as pure
// connectivity; otherwise pairs carry their at-most / exact bounds.
Algorithm4Result DsfAlgorithm4(const Graph& g, const DemandSet& demands,
                               bool bounded, double epsilon, Seed seed,
                               Trace* trace = nullptr);

// Directed Steiner forest with unit costs (bounds in demands are ignored).
EdgeSet DsfApprox(const Graph& g, const DemandSet& demands, double epsilon,
                  Seed seed, Trace* trace = nullptr);

// Pairwise spanner: d_H(s,t) <= D(s,t). Exact demands use D = d_G(s,t);
// unbounded demands are rejected with std::invalid_argument.
EdgeSet PairwiseSpannerApprox(const Graph& g, const DemandSet& demands,
                              double epsilon, Seed seed, Trace* trace = nullptr);

}  // namespace spanopt

#endif  // SPANOPT_DSF_HPP_
