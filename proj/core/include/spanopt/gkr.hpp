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

#ifndef SPANOPT_GKR_HPP_
#define SPANOPT_GKR_HPP_

#include <span>
#include <vector>

#include "spanopt/height_reduction.hpp"
#include "spanopt/rng.hpp"
#include "spanopt/trace.hpp"

namespace spanopt {

// Capacities are indexed by tree node (the edge to its parent); the root's
// entry is ignored. Returns y with y[root] = 1 and
// y[v] = min(x[v], y[parent(v)]) clamped to [0, 1].
std::vector<double> Monotonize(const ShallowTree& tree, std::span<const double> x);

// One dependent-rounding pass over monotone capacities: the root is always
// kept and a child of a kept node v is kept with probability y[child]/y[v].
std::vector<char> GkrPass(const ShallowTree& tree, std::span<const double> y,
                          Rng& rng);

struct GkrResult {
  std::vector<char> included;  // per node; a connected subtree with the root
  int passes_per_batch = 0;
  int batches = 0;
};

// Unions ceil(8 * height * ln(2 * |groups| * size)) passes per batch and
// retries whole batches until every group (a list of node ids) is hit.
// Throws RoundingFailureError after retry_cap batches.
GkrResult GkrRound(const ShallowTree& tree, std::span<const double> x,
                   const std::vector<std::vector<int>>& groups, Seed seed,
                   int retry_cap = 64, Trace* trace = nullptr);

}  // namespace spanopt

#endif  // SPANOPT_GKR_HPP_
