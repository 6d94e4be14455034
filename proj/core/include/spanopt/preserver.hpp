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

#ifndef SPANOPT_PRESERVER_HPP_
#define SPANOPT_PRESERVER_HPP_

#include <vector>

#include "spanopt/graph.hpp"
#include "spanopt/rng.hpp"
#include "spanopt/trace.hpp"

namespace spanopt {

// Threshold rounding with k = n / sqrt(opt_guess): thin pairs by LP rounding,
// thick pairs by hub shortest-path trees.
EdgeSet PreserverAlgorithm1(const Graph& g, const DemandSet& demands,
                            double opt_guess, Seed seed, Trace* trace = nullptr);

// One distance bucket [d*, 2d*) with k = sqrt(d* n); hubs add phi paths to
// and from every nearby terminal.
EdgeSet PreserverAlgorithm2(const Graph& g, const DemandSet& bucket, int d_star,
                            Seed seed, Trace* trace = nullptr);

struct Algorithm3Stats {
  std::vector<int> remaining;  // bucket size after each iteration
  std::vector<Vertex> roots;   // chosen root per iteration (-1: fallback)
};

// Greedy junction-tree cover of one bucket: every iteration applies the root
// with the lowest edges-per-pair ratio.
EdgeSet PreserverAlgorithm3(const Graph& g, const DemandSet& bucket, int d_star,
                            double epsilon, Seed seed, Trace* trace = nullptr,
                            Algorithm3Stats* stats = nullptr);

// Exact distance preserver. Tries every OPT guess and returns the smallest
// verified output (the full edge set if nothing smaller verifies).
EdgeSet PreserverApprox(const Graph& g, const DemandSet& demands,
                        double epsilon, Seed seed, Trace* trace = nullptr);

}  // namespace spanopt

#endif  // SPANOPT_PRESERVER_HPP_
