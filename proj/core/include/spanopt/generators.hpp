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

#ifndef SPANOPT_GENERATORS_HPP_
#define SPANOPT_GENERATORS_HPP_

#include "spanopt/graph.hpp"
#include "spanopt/rng.hpp"

namespace spanopt {

struct RandomInstanceOptions {
  int min_vertices = 4;
  int max_vertices = 10;
  int max_edges = 25;
  int max_pairs = 5;
  int max_slack = 2;  // spanner bound = d(s,t) + uniform slack in [0, max_slack]
};

// One random digraph with three demand sets over the same reachable pairs.
struct RandomInstance {
  Graph graph;
  DemandSet exact;    // preserver demands
  DemandSet bounded;  // spanner demands
  DemandSet unbounded;  // Steiner forest demands
};

// Every pair in the result is reachable, so all three demand sets are feasible.
RandomInstance RandomFeasibleInstance(Seed seed,
                                      const RandomInstanceOptions& options = {});

}  // namespace spanopt

#endif  // SPANOPT_GENERATORS_HPP_
