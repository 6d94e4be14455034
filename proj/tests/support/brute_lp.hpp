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

#ifndef SPANOPT_TESTS_BRUTE_LP_HPP_
#define SPANOPT_TESTS_BRUTE_LP_HPP_

// Vertex enumeration for tiny bounded LPs: every basic solution is found by
// solving n tight constraints with Gaussian elimination.

#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "spanopt/lp.hpp"

namespace spanopt::testing {

struct Row {
  std::vector<double> a;  // a . x <= b
  double b = 0.0;
};

inline std::optional<std::vector<double>> SolveSquare(std::vector<std::vector<double>> m,
                                                      std::vector<double> rhs) {
  const int n = static_cast<int>(rhs.size());
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r) {
      if (std::abs(m[r][c]) > 1e-10 && (piv < 0 || std::abs(m[r][c]) > std::abs(m[piv][c]))) piv = r;
    }
    if (piv < 0) return std::nullopt;
    std::swap(m[c], m[piv]);
    std::swap(rhs[c], rhs[piv]);
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = m[r][c] / m[c][c];
      for (int k = c; k < n; ++k) m[r][k] -= f * m[c][k];
      rhs[r] -= f * rhs[c];
    }
  }
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
  return x;
}

// Minimum over all vertices; nullopt when the polytope is empty. The caller
// guarantees boundedness.
inline std::optional<double> BruteMinimum(const LpModel& model) {
  const int n = model.num_variables();
  std::vector<Row> rows;
  for (const Constraint& c : model.constraints()) {
    Row r{std::vector<double>(n, 0.0), c.rhs};
    for (const Term& t : c.terms) r.a[t.var] += t.coef;
    if (c.sense != Sense::kGreaterEqual) rows.push_back(r);
    if (c.sense != Sense::kLessEqual) {
      Row neg = r;
      for (auto& v : neg.a) v = -v;
      neg.b = -neg.b;
      rows.push_back(neg);
    }
  }
  for (int j = 0; j < n; ++j) {
    Row r{std::vector<double>(n, 0.0), 0.0};
    r.a[j] = -1.0;
    rows.push_back(r);
  }
  std::optional<double> best;
  std::vector<int> pick;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(pick.size()) == n) {
      std::vector<std::vector<double>> m;
      std::vector<double> rhs;
      for (int i : pick) {
        m.push_back(rows[i].a);
        rhs.push_back(rows[i].b);
      }
      const auto x = SolveSquare(m, rhs);
      if (!x) return;
      for (const Row& r : rows) {
        double lhs = 0.0;
        for (int j = 0; j < n; ++j) lhs += r.a[j] * (*x)[j];
        if (lhs > r.b + 1e-7) return;
      }
      double obj = 0.0;
      for (int j = 0; j < n; ++j) obj += model.cost(j) * (*x)[j];
      if (!best || obj < *best) best = obj;
      return;
    }
    for (int i = from; i < static_cast<int>(rows.size()); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return best;
}

}  // namespace spanopt::testing

#endif  // SPANOPT_TESTS_BRUTE_LP_HPP_
