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

#ifndef SPANOPT_HEIGHT_REDUCTION_HPP_
#define SPANOPT_HEIGHT_REDUCTION_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "spanopt/graph.hpp"

namespace spanopt {

// Weighted complete digraph over points 0..num_points-1 with a concrete
// witness path (as ids in some underlying arc space) behind every weight.
class RootedMetric {
 public:
  virtual ~RootedMetric() = default;
  virtual int num_points() const = 0;
  // kUnreachable when there is no witness.
  virtual int Weight(int from, int to) const = 0;
  virtual std::vector<int> Witness(int from, int to) const = 0;
};

// Metric completion of a graph; witnesses are edge ids.
class GraphMetric : public RootedMetric {
 public:
  explicit GraphMetric(const Graph& g) : metric_(g) {}
  int num_points() const override { return metric_.num_vertices(); }
  int Weight(int from, int to) const override {
    return metric_.weight(from, to);
  }
  std::vector<int> Witness(int from, int to) const override {
    return metric_.WitnessEdges(from, to);
  }
  const MetricCompletion& completion() const { return metric_; }

 private:
  MetricCompletion metric_;
};

struct ShallowTreeNode {
  int parent = -1;
  int depth = 0;
  int point = 0;              // Psi: metric point of this node
  int weight = 0;             // w-hat of the edge to the parent
  std::vector<int> witness;   // Phi of the edge to the parent
};

// Rooted tree stored in preorder; node 0 is the root and every parent index
// is smaller than its child's.
class ShallowTree {
 public:
  int AddNode(int parent, int point, int weight, std::vector<int> witness);

  int size() const { return static_cast<int>(nodes_.size()); }
  const ShallowTreeNode& node(int i) const { return nodes_[i]; }
  const std::vector<int>& children(int i) const { return children_[i]; }
  int height() const { return height_; }
  long TotalWeight() const;

 private:
  std::vector<ShallowTreeNode> nodes_;
  std::vector<std::vector<int>> children_;
  int height_ = 0;
};

struct HeightReduceOptions {
  int sigma = 1;
  std::size_t node_budget = 200000;
  // When set, only nodes with a target point in their subtree are kept, and
  // paths only continue through points that can still reach a target.
  const std::vector<char>* targets = nullptr;
};

// Tree of all simple paths from root with at most sigma hops of finite
// weight. Throws BudgetExceededError when the node budget would be exceeded.
ShallowTree HeightReduce(const RootedMetric& metric, int root,
                         const HeightReduceOptions& options);

// Union of the witnesses of the given nodes' parent edges. Every listed
// non-root node's parent must be the root or listed as well; throws
// std::invalid_argument otherwise.
std::vector<int> ProjectTree(const ShallowTree& tree, std::span<const int> nodes);

// Arborescence over vertices 0..n-1: parent[root] == -1 and weight[v] is the
// weight of the edge parent[v] -> v.
struct Arborescence {
  int root = 0;
  std::vector<int> parent;
  std::vector<long> weight;
};

struct ReducedEdge {
  int from = 0;  // an ancestor of `to` in the input arborescence
  int to = 0;
  long weight = 0;
};

struct ReducedArborescence {
  std::vector<ReducedEdge> edges;
  std::vector<int> leaves;  // sorted
  int height = 0;
  long total_weight = 0;
};

// Height reduction by repeated DFS-order blocking of size
// ceil(|L|^(1/sigma)); the last level is attached straight to the root.
ReducedArborescence ZelikovskyReduce(const Arborescence& tree, int sigma);

}  // namespace spanopt

#endif  // SPANOPT_HEIGHT_REDUCTION_HPP_
