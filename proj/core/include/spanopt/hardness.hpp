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

#ifndef SPANOPT_HARDNESS_HPP_
#define SPANOPT_HARDNESS_HPP_

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spanopt/graph.hpp"
#include "spanopt/minrep.hpp"

namespace spanopt {

// Simple undirected graph; edges normalized to u < v, sorted, ids by position.
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  // Throws std::invalid_argument on self-loops, duplicates or bad endpoints.
  UndirectedGraph(int n, std::vector<std::pair<int, int>> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::pair<int, int>& edge(int e) const { return edges_[e]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  // (neighbor, edge id), sorted by neighbor.
  const std::vector<std::pair<int, int>>& neighbors(int v) const { return adj_[v]; }
  std::optional<int> find_edge(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<std::pair<int, int>>> adj_;
};

// Hop distances from source using only edges with mask[e] != 0 (all when null).
std::vector<int> UndirectedBfs(const UndirectedGraph& g, int source,
                               const std::vector<char>* mask = nullptr);

// d_H(u, v) <= d_G(u, v) + k for all pairs.
bool VerifyAdditive(const UndirectedGraph& g, const EdgeSet& h, int k);

enum class EdgeFamily { kIn, kCon, kPath, kL, kP, kSo, kSi, kSm, kM, kOut, kGroup, kStar };
inline constexpr int kNumEdgeFamilies = 12;
const char* ToString(EdgeFamily family);

enum class VertexRole { kOuter, kInner, kSpecial, kMiddle, kL, kP, kQ, kT, kHub };
const char* ToString(VertexRole role);

// Role with up to three indices. Outer/L/P: (supernode, copy i, position j);
// inner: (min-rep vertex); special/Q: (supernode); middle: (superedge,
// level); T: (main vertex y, level). Copies and positions are 1-based.
struct RoleInfo {
  VertexRole role = VertexRole::kHub;
  int a = -1;
  int b = -1;
  int c = -1;
};

struct SpannerInstance {
  UndirectedGraph graph;
  std::vector<RoleInfo> roles;      // per vertex
  std::vector<EdgeFamily> family;   // per edge
  int k = 1;
  int x = 1;
  int main_vertices = 0;            // |V_R|; ids [0, |V_R|) are V_R
  MinRepInstance source;
  std::vector<std::pair<int, int>> superedges;

  int Outer(int u, int i, int j = 1) const;  // i in [1, x], j in [1, max(1, k-1)]
  int Inner(int a) const { return inner_base + a; }
  int Special(int u) const { return special_base + u; }
  int Middle(int e, int level = 1) const;
  int CountFamily(EdgeFamily f) const;
  bool IsSuperedgeSideU(int u) const { return u < source.r; }

  int outer_base = 0;
  int inner_base = 0;
  int special_base = 0;
  int middle_base = 0;
  int levels = 1;  // max(1, k - 1)
  int middle_levels = 1;  // max(1, k - 2)
  int l_base = -1;
  int p_base = -1;
  int p_len = 0;  // ceil((k - 1) / 2)
  int q_base = -1;
  int hub = -1;
  int t_base = -1;
};

SpannerInstance ReducePlus1(const MinRepInstance& inst, int x);
// k >= 3.
SpannerInstance ReducePlusK(const MinRepInstance& inst, int x, int k);

// Cover must hold exactly one vertex per group and be valid.
EdgeSet CompletenessWitnessPlus1(const SpannerInstance& g,
                                 const std::vector<int>& cover);
// Any valid cover.
EdgeSet CompletenessWitnessPlusK(const SpannerInstance& g,
                                 const std::vector<int>& cover);

// Canonical path test for superedge index e and copy i.
bool HasCanonicalPath(const SpannerInstance& g, const std::vector<char>& mask,
                      int e, int i);

struct Canonicalization {
  EdgeSet edges;
  int paths_added = 0;
  std::map<int, int> charges;  // charged edge of H -> number of added edges
  int max_charge = 0;
};

// Adds the canonical path through the smallest crossing instance edge for
// every (superedge, copy) lacking one and charges the new edges to an outer
// edge of h. Throws std::invalid_argument when h is not a +k spanner (k as
// built into g).
Canonicalization Canonicalize(const SpannerInstance& g, const EdgeSet& h);

// C_i = inner vertices joined to their copy-i (innermost) outer node.
// Throws std::invalid_argument when h is not canonical.
std::vector<std::vector<int>> ExtractCovers(const SpannerInstance& g,
                                            const EdgeSet& h);

// Undirected graph text ("n m" + edges) and a role sidecar.
void WriteUndirected(std::ostream& out, const UndirectedGraph& g);
UndirectedGraph ReadUndirected(std::istream& in,
                               const std::string& source = "<graph>");
void WriteRoles(std::ostream& out, const SpannerInstance& g);

}  // namespace spanopt

#endif  // SPANOPT_HARDNESS_HPP_
