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

#ifndef SPANOPT_MINREP_HPP_
#define SPANOPT_MINREP_HPP_

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "spanopt/rng.hpp"

namespace spanopt {

// Bipartite Min-Rep instance. A = [0, r*sigma), B = [r*sigma, 2*r*sigma);
// vertex v lies in group v / sigma, so groups 0..r-1 partition A (the U
// supernodes) and groups r..2r-1 partition B (the V supernodes).
struct MinRepInstance {
  int r = 0;
  int sigma = 0;
  std::vector<std::pair<int, int>> edges;  // (a, b), a in A, b in B; sorted

  int num_vertices() const { return 2 * r * sigma; }
  int num_groups() const { return 2 * r; }
  int group_of(int v) const { return v / sigma; }
  int group_begin(int g) const { return g * sigma; }
  // Superedges (u, v) with u < r <= v, sorted.
  std::vector<std::pair<int, int>> Superedges() const;
  // Max supernode degree (the degree when the supergraph is regular).
  int SupergraphDegree() const;
};

// Checks ranges and bipartiteness; throws std::invalid_argument.
void ValidateMinRep(const MinRepInstance& inst);

// True iff every superedge has an instance edge with both ends in cover.
bool RepCoverVerify(const MinRepInstance& inst, const std::vector<int>& cover);

// Smallest cover size by exhaustive search (num_vertices <= 24).
int MinRepOptimum(const MinRepInstance& inst);

struct PlantedMinRep {
  MinRepInstance instance;
  std::vector<int> cover;  // one planted representative per group, sorted
};

// YES instance with a d-regular supergraph (circulant, shuffled by seed);
// every superedge carries a perfect matching between its groups that contains
// the planted pair, so the optimum is exactly 2r.
PlantedMinRep MinRepYes(int r, int sigma, int d, Seed seed);

// Text format: "minrep r sigma m", m lines "a b", optional "cover c1 c2 ...".
void WriteMinRep(std::ostream& out, const MinRepInstance& inst,
                 const std::vector<int>* cover = nullptr);
MinRepInstance ReadMinRep(std::istream& in, std::vector<int>* cover = nullptr,
                          const std::string& source = "<minrep>");

}  // namespace spanopt

#endif  // SPANOPT_MINREP_HPP_
