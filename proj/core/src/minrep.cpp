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

#include "spanopt/minrep.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "spanopt/errors.hpp"

namespace spanopt {

std::vector<std::pair<int, int>> MinRepInstance::Superedges() const {
  std::set<std::pair<int, int>> s;
  for (const auto& [a, b] : edges) s.insert({group_of(a), group_of(b)});
  return {s.begin(), s.end()};
}

int MinRepInstance::SupergraphDegree() const {
  std::vector<int> deg(num_groups(), 0);
  for (const auto& [u, v] : Superedges()) {
    ++deg[u];
    ++deg[v];
  }
  return deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
}

void ValidateMinRep(const MinRepInstance& inst) {
  if (inst.r < 1 || inst.sigma < 1) {
    throw std::invalid_argument("min-rep needs r >= 1 and sigma >= 1");
  }
  const int half = inst.r * inst.sigma;
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : inst.edges) {
    if (a < 0 || a >= half || b < half || b >= 2 * half) {
      throw std::invalid_argument("min-rep edge must join A to B");
    }
    if (!seen.insert({a, b}).second) {
      throw std::invalid_argument("duplicate min-rep edge");
    }
  }
}

bool RepCoverVerify(const MinRepInstance& inst, const std::vector<int>& cover) {
  std::vector<char> in(inst.num_vertices(), 0);
  for (int v : cover) {
    if (v >= 0 && v < inst.num_vertices()) in[v] = 1;
  }
  std::set<std::pair<int, int>> covered;
  for (const auto& [a, b] : inst.edges) {
    if (in[a] && in[b]) covered.insert({inst.group_of(a), inst.group_of(b)});
  }
  return covered.size() == inst.Superedges().size();
}

int MinRepOptimum(const MinRepInstance& inst) {
  const int n = inst.num_vertices();
  if (n > 24) throw BudgetExceededError("min-rep optimum limited to 24 vertices");
  int best = n;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size >= best) continue;
    std::vector<int> cover;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1u) cover.push_back(v);
    }
    if (RepCoverVerify(inst, cover)) best = size;
  }
  return best;
}

PlantedMinRep MinRepYes(int r, int sigma, int d, Seed seed) {
  if (r < 1 || sigma < 1 || d < 1 || d > r) {
    throw std::invalid_argument("min-rep generator needs 1 <= d <= r, sigma >= 1");
  }
  Rng rng(seed);
  auto shuffle = [&](std::vector<int>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[i], v[rng.UniformInt(0, i)]);
    }
  };
  PlantedMinRep out;
  MinRepInstance& inst = out.instance;
  inst.r = r;
  inst.sigma = sigma;
  std::vector<int> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  shuffle(perm);
  std::vector<int> planted(2 * r);
  for (int g = 0; g < 2 * r; ++g) planted[g] = rng.UniformInt(0, sigma - 1);
  for (int u = 0; u < r; ++u) {
    for (int j = 0; j < d; ++j) {
      const int v = r + perm[(u + j) % r];
      // Matching k -> match[k] with the planted pair fixed.
      std::vector<int> rest;
      for (int k = 0; k < sigma; ++k) {
        if (k != planted[v]) rest.push_back(k);
      }
      shuffle(rest);
      std::vector<int> match(sigma);
      int next = 0;
      for (int k = 0; k < sigma; ++k) {
        match[k] = k == planted[u] ? planted[v] : rest[next++];
      }
      for (int k = 0; k < sigma; ++k) {
        inst.edges.push_back({inst.group_begin(u) + k,
                              inst.group_begin(v) + match[k]});
      }
    }
  }
  std::sort(inst.edges.begin(), inst.edges.end());
  for (int g = 0; g < 2 * r; ++g) out.cover.push_back(inst.group_begin(g) + planted[g]);
  return out;
}

void WriteMinRep(std::ostream& out, const MinRepInstance& inst,
                 const std::vector<int>* cover) {
  out << "minrep " << inst.r << ' ' << inst.sigma << ' ' << inst.edges.size()
      << '\n';
  for (const auto& [a, b] : inst.edges) out << a << ' ' << b << '\n';
  if (cover) {
    out << "cover";
    for (int c : *cover) out << ' ' << c;
    out << '\n';
  }
}

MinRepInstance ReadMinRep(std::istream& in, std::vector<int>* cover,
                          const std::string& source) {
  std::string line;
  int line_no = 0;
  auto next = [&](std::istringstream& ss) {
    while (std::getline(in, line)) {
      ++line_no;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      ss.clear();
      ss.str(line);
      return true;
    }
    return false;
  };
  std::istringstream ss;
  if (!next(ss)) throw ParseError(source, line_no, "empty min-rep file");
  std::string tag;
  MinRepInstance inst;
  size_t m = 0;
  if (!(ss >> tag >> inst.r >> inst.sigma >> m) || tag != "minrep") {
    throw ParseError(source, line_no, "header must be \"minrep r sigma m\"");
  }
  for (size_t i = 0; i < m; ++i) {
    if (!next(ss)) throw ParseError(source, line_no, "missing edge lines");
    int a = 0, b = 0;
    if (!(ss >> a >> b)) throw ParseError(source, line_no, "edge line must be \"a b\"");
    inst.edges.push_back({a, b});
  }
  std::sort(inst.edges.begin(), inst.edges.end());
  try {
    ValidateMinRep(inst);
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, line_no, e.what());
  }
  if (next(ss)) {
    if (!(ss >> tag) || tag != "cover") {
      throw ParseError(source, line_no, "expected \"cover ...\"");
    }
    int c = 0;
    std::vector<int> cv;
    while (ss >> c) cv.push_back(c);
    if (cover) *cover = cv;
  }
  return inst;
}

}  // namespace spanopt
