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

#ifndef SPANOPT_ROUNDING_HPP_
#define SPANOPT_ROUNDING_HPP_

#include <span>
#include <vector>

#include "spanopt/graph.hpp"
#include "spanopt/rng.hpp"
#include "spanopt/trace.hpp"

namespace spanopt {

// Keeps each edge independently with probability min(1, x_e * k * ln n) per
// round and unions rounds until every target pair meets its limit. Throws
// RoundingFailureError after max_rounds.
EdgeSet RandomizedRound(const Graph& g, std::span<const double> x, double k,
                        std::span<const ResolvedDemand> targets, Seed seed,
                        int max_rounds = 2000, Trace* trace = nullptr);

// Greedy hitting set: repeatedly takes the vertex in most unhit sets (ties to
// the smaller id). Result sorted. Throws std::invalid_argument on an empty
// input set.
std::vector<Vertex> HittingSet(const std::vector<std::vector<Vertex>>& sets);

}  // namespace spanopt

#endif  // SPANOPT_ROUNDING_HPP_
