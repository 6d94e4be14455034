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

#include "spanopt/gkr.hpp"

#include <algorithm>
#include <cmath>

#include "spanopt/errors.hpp"

namespace spanopt {

std::vector<double> Monotonize(const ShallowTree& tree,
                               std::span<const double> x) {
  std::vector<double> y(tree.size(), 0.0);
  if (tree.size() == 0) return y;
  y[0] = 1.0;
  for (int v = 1; v < tree.size(); ++v) {
    y[v] = std::clamp(std::min(x[v], y[tree.node(v).parent]), 0.0, 1.0);
  }
  return y;
}

std::vector<char> GkrPass(const ShallowTree& tree, std::span<const double> y,
                          Rng& rng) {
  std::vector<char> in(tree.size(), 0);
  if (tree.size() == 0) return in;
  in[0] = 1;
  for (int v = 1; v < tree.size(); ++v) {
    const int p = tree.node(v).parent;
    if (!in[p] || y[v] <= 0.0) continue;
    const double prob = y[v] / y[p];
    if (prob >= 1.0 || rng.Uniform01() < prob) in[v] = 1;
  }
  return in;
}

GkrResult GkrRound(const ShallowTree& tree, std::span<const double> x,
                   const std::vector<std::vector<int>>& groups, Seed seed,
                   int retry_cap, Trace* trace) {
  const std::vector<double> y = Monotonize(tree, x);
  GkrResult result;
  const double h = std::max(1, tree.height());
  const double arg = 2.0 * std::max<size_t>(1, groups.size()) *
                     std::max(2, tree.size());
  result.passes_per_batch = static_cast<int>(std::ceil(8.0 * h * std::log(arg)));
  Rng rng(seed);
  if (trace) {
    trace->Add("gkr.seed", seed);
    trace->Add("gkr.passes_per_batch", result.passes_per_batch);
  }
  for (int batch = 1; batch <= retry_cap; ++batch) {
    std::vector<char> in(tree.size(), 0);
    for (int p = 0; p < result.passes_per_batch; ++p) {
      const auto pass = GkrPass(tree, y, rng);
      for (int v = 0; v < tree.size(); ++v) in[v] |= pass[v];
    }
    const bool all_hit = std::all_of(groups.begin(), groups.end(), [&](const auto& g) {
      return std::any_of(g.begin(), g.end(), [&](int v) { return in[v] != 0; });
    });
    if (all_hit) {
      result.included = std::move(in);
      result.batches = batch;
      if (trace) trace->Add("gkr.batches", batch);
      return result;
    }
  }
  throw RoundingFailureError("group Steiner rounding failed after " +
                             std::to_string(retry_cap) + " batches");
}

}  // namespace spanopt
