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

#include "spanopt/height_reduction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "spanopt/errors.hpp"

namespace spanopt {

int ShallowTree::AddNode(int parent, int point, int weight,
                         std::vector<int> witness) {
  const int id = size();
  ShallowTreeNode node;
  node.parent = parent;
  node.point = point;
  node.weight = weight;
  node.witness = std::move(witness);
  if (parent >= 0) {
    if (parent >= id) throw std::invalid_argument("parent must precede child");
    node.depth = nodes_[parent].depth + 1;
    children_[parent].push_back(id);
  } else if (id != 0) {
    throw std::invalid_argument("only node 0 may be the root");
  }
  height_ = std::max(height_, node.depth);
  nodes_.push_back(std::move(node));
  children_.emplace_back();
  return id;
}

long ShallowTree::TotalWeight() const {
  long total = 0;
  for (int i = 1; i < size(); ++i) total += nodes_[i].weight;
  return total;
}

ShallowTree HeightReduce(const RootedMetric& metric, int root,
                         const HeightReduceOptions& options) {
  if (options.sigma < 1) throw std::invalid_argument("sigma must be >= 1");
  const int n = metric.num_points();
  const std::vector<char>* targets = options.targets;
  // can_reach[v]: some target other than v is at finite weight from v.
  std::vector<char> can_reach(n, 1);
  if (targets) {
    for (int v = 0; v < n; ++v) {
      can_reach[v] = 0;
      for (int w = 0; w < n && !can_reach[v]; ++w) {
        if (w != v && (*targets)[w] && metric.Weight(v, w) != kUnreachable) {
          can_reach[v] = 1;
        }
      }
    }
  }

  struct Raw {
    int parent;
    int point;
    int weight;
  };
  std::vector<Raw> raw{{-1, root, 0}};
  std::vector<char> on_path(n, 0);
  on_path[root] = 1;
  std::function<void(int, int)> grow = [&](int node, int depth) {
    if (depth == options.sigma) return;
    const int from = raw[node].point;
    for (int w = 0; w < n; ++w) {
      if (on_path[w]) continue;
      const int wt = metric.Weight(from, w);
      if (wt == kUnreachable) continue;
      const bool is_target = !targets || (*targets)[w];
      const bool extendable = depth + 1 < options.sigma && can_reach[w];
      if (targets && !is_target && !extendable) continue;
      if (raw.size() >= options.node_budget) {
        throw BudgetExceededError("height reduction exceeds node budget of " +
                                  std::to_string(options.node_budget));
      }
      raw.push_back({node, w, wt});
      const int child = static_cast<int>(raw.size()) - 1;
      on_path[w] = 1;
      grow(child, depth + 1);
      on_path[w] = 0;
    }
  };
  grow(0, 0);

  // Prune subtrees without targets (raw is already in preorder).
  std::vector<char> keep(raw.size(), targets ? 0 : 1);
  if (targets) {
    keep[0] = 1;
    for (size_t i = raw.size(); i-- > 1;) {
      if ((*targets)[raw[i].point]) keep[i] = 1;
      if (keep[i]) keep[raw[i].parent] = 1;
    }
  }
  ShallowTree tree;
  std::vector<int> new_id(raw.size(), -1);
  for (size_t i = 0; i < raw.size(); ++i) {
    if (!keep[i]) continue;
    const int parent = raw[i].parent < 0 ? -1 : new_id[raw[i].parent];
    std::vector<int> witness;
    if (raw[i].parent >= 0) {
      witness = metric.Witness(raw[raw[i].parent].point, raw[i].point);
    }
    new_id[i] = tree.AddNode(parent, raw[i].point, raw[i].weight,
                             std::move(witness));
  }
  return tree;
}

std::vector<int> ProjectTree(const ShallowTree& tree,
                             std::span<const int> nodes) {
  std::vector<char> in(tree.size(), 0);
  for (int v : nodes) {
    if (v < 0 || v >= tree.size()) throw std::out_of_range("bad tree node");
    in[v] = 1;
  }
  std::vector<int> out;
  for (int v : nodes) {
    if (v == 0) continue;
    const int p = tree.node(v).parent;
    if (p != 0 && !in[p]) {
      throw std::invalid_argument("subtree is not connected to the root");
    }
    const auto& w = tree.node(v).witness;
    out.insert(out.end(), w.begin(), w.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ReducedArborescence ZelikovskyReduce(const Arborescence& tree, int sigma) {
  if (sigma < 1) throw std::invalid_argument("sigma must be >= 1");
  const int n = static_cast<int>(tree.parent.size());
  std::vector<std::vector<int>> kids(n);
  for (int v = 0; v < n; ++v) {
    if (v == tree.root) continue;
    if (tree.parent[v] < 0 || tree.parent[v] >= n) {
      throw std::invalid_argument("arborescence has a detached vertex");
    }
    kids[tree.parent[v]].push_back(v);
  }
  // DFS order, depth and weighted depth.
  std::vector<int> order;
  std::vector<int> depth(n, 0);
  std::vector<long> wdepth(n, 0);
  std::vector<int> stack{tree.root};
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto it = kids[v].rbegin(); it != kids[v].rend(); ++it) {
      depth[*it] = depth[v] + 1;
      wdepth[*it] = wdepth[v] + tree.weight[*it];
      stack.push_back(*it);
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument("arborescence is not connected");
  }
  ReducedArborescence out;
  std::vector<int> level;
  for (int v : order) {
    if (v != tree.root && kids[v].empty()) level.push_back(v);
  }
  out.leaves = level;
  std::sort(out.leaves.begin(), out.leaves.end());
  if (level.empty()) return out;

  const double root_l = std::pow(static_cast<double>(level.size()), 1.0 / sigma);
  int delta = static_cast<int>(std::ceil(root_l - 1e-9));
  delta = std::max(delta, 2);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  auto lca = [&](int a, int b) {
    while (depth[a] > depth[b]) a = tree.parent[a];
    while (depth[b] > depth[a]) b = tree.parent[b];
    while (a != b) {
      a = tree.parent[a];
      b = tree.parent[b];
    }
    return a;
  };
  auto attach = [&](int anc, int v) {
    if (anc == v) return;
    out.edges.push_back({anc, v, wdepth[v] - wdepth[anc]});
  };

  while (true) {
    ++out.height;
    if (static_cast<int>(level.size()) <= delta) {
      for (int v : level) attach(tree.root, v);
      break;
    }
    std::vector<int> next;
    for (size_t b = 0; b < level.size(); b += delta) {
      const size_t e = std::min(level.size(), b + delta);
      int a = level[b];
      for (size_t i = b + 1; i < e; ++i) a = lca(a, level[i]);
      for (size_t i = b; i < e; ++i) attach(a, level[i]);
      next.push_back(a);
    }
    std::sort(next.begin(), next.end(),
              [&](int a, int b) { return pos[a] < pos[b]; });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  // Height counts levels actually used by edges.
  std::vector<int> hdepth(n, -1);
  hdepth[tree.root] = 0;
  std::vector<int> par(n, -1);
  for (const auto& e : out.edges) par[e.to] = e.from;
  std::function<int(int)> hd = [&](int v) -> int {
    if (hdepth[v] >= 0) return hdepth[v];
    return hdepth[v] = hd(par[v]) + 1;
  };
  out.height = 0;
  for (const auto& e : out.edges) {
    out.height = std::max(out.height, hd(e.to));
    out.total_weight += e.weight;
  }
  return out;
}

}  // namespace spanopt
