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

#ifndef SPANOPT_GRAPH_HPP_
#define SPANOPT_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace spanopt {

using Vertex = int;
using EdgeId = int;

// Distance value for "no path".
inline constexpr int kUnreachable = std::numeric_limits<int>::max();

struct Edge {
  Vertex from = 0;
  Vertex to = 0;
  auto operator<=>(const Edge&) const = default;
};

// Immutable directed unweighted graph. Edges are kept in sorted (from, to)
// order and an edge id is its position in that order.
class Graph {
 public:
  Graph() = default;
  // Throws std::invalid_argument on self-loops, duplicates or bad endpoints.
  Graph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  // Out-edges of u are the contiguous id range [out_begin(u), out_end(u)).
  EdgeId out_begin(Vertex u) const { return out_offset_[u]; }
  EdgeId out_end(Vertex u) const { return out_offset_[u + 1]; }
  std::span<const EdgeId> in_edges(Vertex v) const {
    return std::span<const EdgeId>(in_ids_).subspan(
        in_offset_[v], in_offset_[v + 1] - in_offset_[v]);
  }
  int out_degree(Vertex u) const { return out_end(u) - out_begin(u); }
  int in_degree(Vertex v) const { return in_offset_[v + 1] - in_offset_[v]; }

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> out_offset_{0};
  std::vector<int> in_offset_{0};
  std::vector<EdgeId> in_ids_;
};

// Sorted, duplicate-free list of edge ids.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(std::vector<EdgeId> ids);
  static EdgeSet All(const Graph& g);
  static EdgeSet FromMask(const std::vector<char>& mask);

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  bool contains(EdgeId e) const;
  const std::vector<EdgeId>& ids() const { return ids_; }
  auto begin() const { return ids_.begin(); }
  auto end() const { return ids_.end(); }

  void Insert(EdgeId e);
  void InsertAll(std::span<const EdgeId> ids);
  void InsertAll(const EdgeSet& other) { InsertAll(other.ids()); }
  // Membership mask of length m.
  std::vector<char> Mask(int m) const;

  bool operator==(const EdgeSet&) const = default;

 private:
  std::vector<EdgeId> ids_;
};

enum class BoundKind { kExact, kAtMost, kUnbounded };

struct Demand {
  Vertex s = 0;
  Vertex t = 0;
  BoundKind kind = BoundKind::kExact;
  int bound = 0;  // meaningful only for kAtMost

  static Demand Exact(Vertex s, Vertex t) { return {s, t, BoundKind::kExact, 0}; }
  static Demand AtMost(Vertex s, Vertex t, int d) {
    return {s, t, BoundKind::kAtMost, d};
  }
  static Demand Unbounded(Vertex s, Vertex t) {
    return {s, t, BoundKind::kUnbounded, 0};
  }
  bool operator==(const Demand&) const = default;
};

// Ordered list of demand pairs; s != t and each (s, t) appears once.
class DemandSet {
 public:
  DemandSet() = default;
  // Throws std::invalid_argument on s == t, repeated pairs or bound < 1.
  explicit DemandSet(std::vector<Demand> pairs);

  int size() const { return static_cast<int>(pairs_.size()); }
  bool empty() const { return pairs_.empty(); }
  const Demand& operator[](int i) const { return pairs_[i]; }
  const std::vector<Demand>& pairs() const { return pairs_; }
  auto begin() const { return pairs_.begin(); }
  auto end() const { return pairs_.end(); }

  DemandSet Subset(std::span<const int> indices) const;

 private:
  std::vector<Demand> pairs_;
};

// A demand with its distance resolved: limit is the largest admissible
// d_H(s, t) (kUnreachable for pure connectivity).
struct ResolvedDemand {
  Vertex s = 0;
  Vertex t = 0;
  int distance = 0;  // d_G(s, t)
  int limit = 0;
  bool exact = false;
};

// Checks endpoints and reachability; throws InfeasibleInstanceError when a
// pair is unreachable or its bound is below d_G(s, t).
std::vector<ResolvedDemand> Resolve(const Graph& g, const DemandSet& demands);

enum class Direction { kForward, kBackward };

// Hop distances from (forward) or to (backward) source. The optional mask
// restricts the traversal to edges e with mask[e] != 0.
std::vector<int> BfsDistances(const Graph& g, Vertex source,
                              Direction direction = Direction::kForward,
                              const std::vector<char>* mask = nullptr);

// dist[u][v] for all pairs.
std::vector<std::vector<int>> AllPairsDistances(const Graph& g);

struct LocalGraph {
  EdgeSet edges;
  std::vector<Vertex> vertices;  // sorted
};

// Union of all shortest s->t paths; nullopt when t is unreachable.
std::optional<LocalGraph> BuildLocalGraph(const Graph& g, Vertex s, Vertex t);
// Same, reusing precomputed forward distances from s and backward to t.
std::optional<LocalGraph> BuildLocalGraph(const Graph& g, Vertex s, Vertex t,
                                          std::span<const int> from_s,
                                          std::span<const int> to_t);

struct ThicknessPartition {
  std::vector<int> thick;  // demand indices
  std::vector<int> thin;
};

// A pair is thick iff its local graph has at least k vertices.
ThicknessPartition ClassifyThickness(const Graph& g, const DemandSet& demands,
                                     double k);

struct PairReport {
  int demand = 0;
  int achieved = kUnreachable;
  int limit = 0;
  bool satisfied = false;
};

struct VerificationReport {
  std::vector<PairReport> pairs;
  bool AllSatisfied() const;
  int NumSatisfied() const;
};

VerificationReport VerifySolution(const Graph& g, const EdgeSet& solution,
                                  const DemandSet& demands);
// Same check against already-resolved demands.
VerificationReport VerifyResolved(const Graph& g, const EdgeSet& solution,
                                  std::span<const ResolvedDemand> demands);

// Buckets keyed by power-of-two d*; pair lands where d* <= d(s,t) < 2d*.
// Values are indices into demands.
std::map<int, std::vector<int>> DistanceBuckets(const Graph& g,
                                                const DemandSet& demands);

struct NearbyTerminals {
  std::vector<Vertex> sources;  // S^u, sorted
  std::vector<Vertex> sinks;    // T^u, sorted
};

NearbyTerminals FindNearbyTerminals(const Graph& g, Vertex u, int d_star,
                                    const DemandSet& bucket);

// Complete weighted digraph over V with weight(u, v) = d_G(u, v) and a
// witness path phi(u, v): the lexicographically smallest shortest path.
class MetricCompletion {
 public:
  explicit MetricCompletion(const Graph& g);

  int num_vertices() const { return graph_.num_vertices(); }
  int weight(Vertex u, Vertex v) const { return dist_[u][v]; }
  const std::vector<std::vector<int>>& distances() const { return dist_; }
  // Vertex sequence of phi(u, v); empty when v is unreachable from u.
  std::vector<Vertex> WitnessVertices(Vertex u, Vertex v) const;
  // Edge ids of phi(u, v).
  std::vector<EdgeId> WitnessEdges(Vertex u, Vertex v) const;

  const Graph& graph() const { return graph_; }

 private:
  Graph graph_;
  std::vector<std::vector<int>> dist_;
};

// Lexicographically smallest shortest path u -> v as edge ids, given all-pairs
// distances. Empty when u == v or unreachable.
std::vector<EdgeId> CanonicalShortestPath(
    const Graph& g, const std::vector<std::vector<int>>& dist, Vertex u,
    Vertex v);

// BFS shortest-path tree out of (forward) or into (backward) root. Each
// reached vertex keeps the edge from its first discoverer.
EdgeSet ShortestPathTree(const Graph& g, Vertex root, Direction direction);

}  // namespace spanopt

#endif  // SPANOPT_GRAPH_HPP_
