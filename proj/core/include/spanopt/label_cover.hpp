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

#ifndef SPANOPT_LABEL_COVER_HPP_
#define SPANOPT_LABEL_COVER_HPP_

#include <span>
#include <vector>

#include "spanopt/graph.hpp"
#include "spanopt/height_reduction.hpp"
#include "spanopt/lp.hpp"
#include "spanopt/rational.hpp"

namespace spanopt {

enum class JunctionSide { kRoot, kIn, kOut };

struct JunctionVertex {
  Vertex original = -1;  // underlying vertex of g (terminal for copies)
  int layer = 0;
  JunctionSide side = JunctionSide::kRoot;
  int pair = -1;   // >= 0 for terminal copies
  int label = 0;   // distance label of a terminal copy
  bool source_copy = false;
  bool sink_copy = false;
};

struct JunctionArc {
  int from = 0;
  int to = 0;
  int weight = 1;
  EdgeId original = -1;  // -1 for zero-weight attach arcs
};

// Directed graph on which the junction pipeline runs. Call Finalize() after
// the last AddArc.
class JunctionGraph {
 public:
  int AddVertex(const JunctionVertex& v);
  int AddArc(int from, int to, int weight, EdgeId original);
  void Finalize();

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arcs() const { return static_cast<int>(arcs_.size()); }
  const JunctionVertex& vertex(int v) const { return vertices_[v]; }
  const JunctionArc& arc(int a) const { return arcs_[a]; }
  // Arc ids sorted by head (out) / tail (in) vertex id.
  const std::vector<int>& out_arcs(int v) const { return out_[v]; }
  const std::vector<int>& in_arcs(int v) const { return in_[v]; }

 private:
  std::vector<JunctionVertex> vertices_;
  std::vector<JunctionArc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

struct LabelCoverPair {
  int demand = 0;
  Vertex s = 0;
  Vertex t = 0;
  int bound = 0;  // labels i, j are related iff i + j <= bound
  std::vector<int> source_copies;  // junction vertex ids
  std::vector<int> sink_copies;
};

struct LabelCoverInstance {
  JunctionGraph graph;
  int root = 0;
  std::vector<LabelCoverPair> pairs;

  bool Related(int pair, int source_label, int sink_label) const {
    return source_label + sink_label <= pairs[pair].bound;
  }
};

// Layered graph around r: (r, 0) plus (v, layer) for v != r and
// 1 <= |layer| <= max_layer, arcs between consecutive layers for every edge
// of g, and terminal copies (s^t, -i), (t^s, j) on zero-weight arcs.
// Pair bounds: exact -> d(s,t), at-most -> D, unbounded -> 2(n-1).
// max_layer < 0 means n - 1.
LabelCoverInstance BuildGr(const Graph& g, Vertex r,
                           std::span<const ResolvedDemand> demands,
                           int max_layer = -1);
LabelCoverInstance BuildGr(const Graph& g, Vertex r, const DemandSet& demands,
                           int max_layer = -1);

// Connectivity variant: one in-copy and one out-copy of every vertex glued
// at r, single copies with label 0 and bound 0.
LabelCoverInstance BuildConnectivityInstance(
    const Graph& g, Vertex r, std::span<const ResolvedDemand> demands);

// 0-1 BFS distances in a junction graph; backward gives d(v -> source).
std::vector<int> JunctionDistances(const JunctionGraph& h, int source,
                                   bool backward);

// Metric over selected junction vertices (points[0] must be the root):
// root -> in-side b weighs d(b -> root); root -> out-side b weighs
// d(root -> b); in-side a -> b weighs d(b -> a); out-side a -> b weighs
// d(a -> b); all other combinations are unreachable. Witnesses are arc ids of
// the lexicographically smallest lightest path.
class JunctionMetric : public RootedMetric {
 public:
  JunctionMetric(const JunctionGraph& h, std::vector<int> points);
  int num_points() const override { return static_cast<int>(points_.size()); }
  int Weight(int from, int to) const override;
  std::vector<int> Witness(int from, int to) const override;
  int vertex_of(int point) const { return points_[point]; }

 private:
  // Arc ids of the lightest lexicographically smallest path u -> points_[t].
  std::vector<int> PathTo(int u, int target_point) const;
  int Dist(int u, int target_point) const {
    return dist_to_[target_point][u];
  }

  const JunctionGraph& h_;
  std::vector<int> points_;
  std::vector<std::vector<int>> dist_to_;  // per point, d(v -> point)
};

struct Representative {
  int node = 0;   // shallow-tree node
  int label = 0;
};

struct RepresentativeMass {
  int source = 0;  // index into sources
  int sink = 0;    // index into sinks
  Rational y;
};

struct PairMassInput {
  int pair = 0;
  int bound = 0;
  std::vector<Representative> sources;
  std::vector<Representative> sinks;
  std::vector<RepresentativeMass> y;
};

struct LabelCoverLp {
  LpModel model;
  std::vector<int> x_var;  // per tree node, -1 when unused
  std::vector<int> z_var;  // per tree node, -1 for non-representatives
  struct YVar {
    int pair;
    int source;  // index into masses[pair].sources
    int sink;
    int var;
  };
  std::vector<YVar> y_vars;
  std::vector<PairMassInput> masses;  // per instance pair, y left empty
};

// Label cover relaxation on a shallow tree whose points map to junction
// vertices through point_vertex.
LabelCoverLp BuildLabelCoverLp(const ShallowTree& tree,
                               const LabelCoverInstance& instance,
                               std::span<const int> point_vertex);

struct LabelCoverSolution {
  LpStatus status = LpStatus::kNumericalFailure;
  double objective = 0.0;
  std::vector<double> x;  // per tree node
  std::vector<double> z;  // per tree node
  std::vector<PairMassInput> masses;  // with exact y filled in
};

LabelCoverSolution SolveLabelCoverLp(const LabelCoverLp& lp,
                                     int num_tree_nodes);

struct PrunedPair {
  int pair = 0;
  Rational gamma;
  int mu_source = 0;  // prefix lengths (>= 1)
  int mu_sink = 0;
  std::vector<Representative> sorted_sources;
  std::vector<Representative> sorted_sinks;
  Rational retained_source;  // y-mass of rows inside the source prefix
  Rational retained_sink;

  std::vector<int> SourcePrefixNodes() const;
  std::vector<int> SinkPrefixNodes() const;
};

struct PrunedReps {
  std::vector<PrunedPair> pairs;  // pairs with gamma > 0 only
};

// Sorts representatives by (label, node), takes the shortest prefixes whose
// mass reaches gamma / 2. Throws std::invalid_argument on y mass assigned to
// an unrelated representative pair.
PrunedReps MedianPrune(std::span<const PairMassInput> inputs);

struct BucketChoice {
  int i_star = 0;
  std::vector<int> members;  // indices into PrunedReps::pairs
  Rational mass;
  std::vector<std::pair<int, Rational>> bucket_mass;  // sorted by i
};

// P_i holds pairs with gamma in (2^-i-1, 2^-i]; picks the heaviest bucket,
// ties to the smaller i.
BucketChoice ChooseBucket(const PrunedReps& pruned);
int BucketIndex(const Rational& gamma);

// x* = min(1, 2^(i*+2) x).
std::vector<double> ScaleCapacities(std::span<const double> x, int i_star);

}  // namespace spanopt

#endif  // SPANOPT_LABEL_COVER_HPP_
