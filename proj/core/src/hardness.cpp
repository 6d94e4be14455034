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

#include "spanopt/hardness.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "spanopt/errors.hpp"

namespace spanopt {

UndirectedGraph::UndirectedGraph(int n, std::vector<std::pair<int, int>> edges)
    : n_(n), adj_(n) {
  for (auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("undirected edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw std::invalid_argument("duplicate undirected edge");
  }
  edges_ = std::move(edges);
  for (int e = 0; e < num_edges(); ++e) {
    adj_[edges_[e].first].push_back({edges_[e].second, e});
    adj_[edges_[e].second].push_back({edges_[e].first, e});
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::optional<int> UndirectedGraph::find_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
  if (it == edges_.end() || *it != std::make_pair(u, v)) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> UndirectedBfs(const UndirectedGraph& g, int source,
                               const std::vector<char>* mask) {
  std::vector<int> dist(g.num_vertices(), kUnreachable);
  std::deque<int> q{source};
  dist[source] = 0;
  while (!q.empty()) {
    const int u = q.front();
    q.pop_front();
    for (const auto& [v, e] : g.neighbors(u)) {
      if (mask && !(*mask)[e]) continue;
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        q.push_back(v);
      }
    }
  }
  return dist;
}

bool VerifyAdditive(const UndirectedGraph& g, const EdgeSet& h, int k) {
  const auto mask = h.Mask(g.num_edges());
  for (int s = 0; s < g.num_vertices(); ++s) {
    const auto dg = UndirectedBfs(g, s);
    const auto dh = UndirectedBfs(g, s, &mask);
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (dg[v] == kUnreachable) continue;
      if (dh[v] == kUnreachable || dh[v] > dg[v] + k) return false;
    }
  }
  return true;
}

const char* ToString(EdgeFamily f) {
  switch (f) {
    case EdgeFamily::kIn: return "in";
    case EdgeFamily::kCon: return "con";
    case EdgeFamily::kPath: return "path";
    case EdgeFamily::kL: return "L";
    case EdgeFamily::kP: return "P";
    case EdgeFamily::kSo: return "so";
    case EdgeFamily::kSi: return "si";
    case EdgeFamily::kSm: return "sm";
    case EdgeFamily::kM: return "M";
    case EdgeFamily::kOut: return "out";
    case EdgeFamily::kGroup: return "group";
    case EdgeFamily::kStar: return "star";
  }
  return "?";
}

const char* ToString(VertexRole r) {
  switch (r) {
    case VertexRole::kOuter: return "outer";
    case VertexRole::kInner: return "inner";
    case VertexRole::kSpecial: return "special";
    case VertexRole::kMiddle: return "middle";
    case VertexRole::kL: return "ell";
    case VertexRole::kP: return "p";
    case VertexRole::kQ: return "q";
    case VertexRole::kT: return "t";
    case VertexRole::kHub: return "hub";
  }
  return "?";
}

int SpannerInstance::Outer(int u, int i, int j) const {
  return outer_base + (u * x + (i - 1)) * levels + (j - 1);
}

int SpannerInstance::Middle(int e, int level) const {
  return middle_base + e * middle_levels + (level - 1);
}

int SpannerInstance::CountFamily(EdgeFamily f) const {
  return static_cast<int>(std::count(family.begin(), family.end(), f));
}

namespace {

// Collects edges; the first family to add an edge keeps it.
class EdgeCollector {
 public:
  void Add(int u, int v, EdgeFamily f) {
    if (u > v) std::swap(u, v);
    if (seen_.emplace(std::make_pair(u, v), f).second) order_.push_back({u, v});
  }
  void Finish(SpannerInstance& g, int n) {
    g.graph = UndirectedGraph(n, order_);
    g.family.resize(g.graph.num_edges());
    for (int e = 0; e < g.graph.num_edges(); ++e) {
      g.family[e] = seen_.at(g.graph.edge(e));
    }
  }

 private:
  std::map<std::pair<int, int>, EdgeFamily> seen_;
  std::vector<std::pair<int, int>> order_;
};

// Shared skeleton: outer, inner, special, middle blocks and roles.
void LayoutCommon(SpannerInstance& g, const MinRepInstance& inst, int x, int k) {
  ValidateMinRep(inst);
  if (x < 1) throw std::invalid_argument("x must be >= 1");
  g.source = inst;
  g.superedges = inst.Superedges();
  g.k = k;
  g.x = x;
  g.levels = k == 1 ? 1 : k - 1;
  g.middle_levels = k == 1 ? 1 : k - 2;
  const int np = inst.num_groups();
  int next = 0;
  auto push = [&](VertexRole role, int a, int b, int c) {
    g.roles.push_back({role, a, b, c});
    return next++;
  };
  g.outer_base = next;
  for (int u = 0; u < np; ++u) {
    for (int i = 1; i <= x; ++i) {
      for (int j = 1; j <= g.levels; ++j) push(VertexRole::kOuter, u, i, j);
    }
  }
  g.inner_base = next;
  for (int a = 0; a < inst.num_vertices(); ++a) push(VertexRole::kInner, a, -1, -1);
  g.special_base = next;
  for (int u = 0; u < np; ++u) push(VertexRole::kSpecial, u, -1, -1);
  g.middle_base = next;
  for (size_t e = 0; e < g.superedges.size(); ++e) {
    for (int l = 1; l <= g.middle_levels; ++l) {
      push(VertexRole::kMiddle, static_cast<int>(e), l, -1);
    }
  }
  if (k > 1) {
    g.l_base = next;
    for (int u = 0; u < np; ++u) {
      for (int i = 1; i <= x; ++i) {
        for (int j = 1; j <= k - 1; ++j) push(VertexRole::kL, u, i, j);
      }
    }
    g.p_len = k / 2;  // ceil((k - 1) / 2)
    g.p_base = next;
    for (int u = 0; u < np; ++u) {
      for (int i = 1; i <= x; ++i) {
        for (int j = 1; j <= g.p_len; ++j) push(VertexRole::kP, u, i, j);
      }
    }
    g.q_base = next;
    for (int u = 0; u < np; ++u) push(VertexRole::kQ, u, -1, -1);
  }
  g.main_vertices = next;
  g.hub = push(VertexRole::kHub, -1, -1, -1);
  g.t_base = next;
  const int tl = k == 1 ? 1 : k - 1;
  for (int y = 0; y < g.main_vertices; ++y) {
    for (int l = 1; l <= tl; ++l) push(VertexRole::kT, y, l, -1);
  }
}

void CommonEdges(SpannerInstance& g, EdgeCollector& ec) {
  const MinRepInstance& inst = g.source;
  for (const auto& [a, b] : inst.edges) ec.Add(g.Inner(a), g.Inner(b), EdgeFamily::kIn);
  for (int u = 0; u < inst.num_groups(); ++u) {
    for (int i = 1; i <= g.x; ++i) {
      for (int s = 0; s < inst.sigma; ++s) {
        ec.Add(g.Outer(u, i, 1), g.Inner(inst.group_begin(u) + s), EdgeFamily::kCon);
      }
    }
  }
}

void GroupEdges(SpannerInstance& g, EdgeCollector& ec) {
  const MinRepInstance& inst = g.source;
  for (int u = 0; u < inst.num_groups(); ++u) {
    for (int a = 0; a < inst.sigma; ++a) {
      for (int b = a + 1; b < inst.sigma; ++b) {
        ec.Add(g.Inner(inst.group_begin(u) + a), g.Inner(inst.group_begin(u) + b),
               EdgeFamily::kGroup);
      }
    }
  }
}

}  // namespace

SpannerInstance ReducePlus1(const MinRepInstance& inst, int x) {
  SpannerInstance g;
  LayoutCommon(g, inst, x, 1);
  EdgeCollector ec;
  CommonEdges(g, ec);
  for (size_t e = 0; e < g.superedges.size(); ++e) {
    const auto [u, v] = g.superedges[e];
    for (int i = 1; i <= x; ++i) {
      ec.Add(g.Outer(u, i), g.Middle(static_cast<int>(e)), EdgeFamily::kOut);
      ec.Add(g.Outer(v, i), g.Middle(static_cast<int>(e)), EdgeFamily::kOut);
    }
  }
  for (int u = 0; u < inst.num_groups(); ++u) {
    for (int i = 1; i <= x; ++i) ec.Add(g.Outer(u, i), g.Special(u), EdgeFamily::kSo);
  }
  for (int a = 0; a < inst.num_vertices(); ++a) {
    ec.Add(g.Inner(a), g.Special(inst.group_of(a)), EdgeFamily::kSi);
  }
  for (size_t e = 0; e < g.superedges.size(); ++e) {
    const auto [u, v] = g.superedges[e];
    ec.Add(g.Special(u), g.Middle(static_cast<int>(e)), EdgeFamily::kSm);
    ec.Add(g.Special(v), g.Middle(static_cast<int>(e)), EdgeFamily::kSm);
  }
  GroupEdges(g, ec);
  for (int y = 0; y < g.main_vertices; ++y) {
    ec.Add(g.hub, g.t_base + y, EdgeFamily::kStar);
    ec.Add(g.t_base + y, y, EdgeFamily::kStar);
  }
  ec.Finish(g, static_cast<int>(g.roles.size()));
  return g;
}

SpannerInstance ReducePlusK(const MinRepInstance& inst, int x, int k) {
  if (k < 3) throw std::invalid_argument("+k reduction needs k >= 3");
  SpannerInstance g;
  LayoutCommon(g, inst, x, k);
  const int np = inst.num_groups();
  auto ell = [&](int u, int i, int j) { return g.l_base + (u * x + (i - 1)) * (k - 1) + (j - 1); };
  auto pv = [&](int u, int i, int j) { return g.p_base + (u * x + (i - 1)) * g.p_len + (j - 1); };
  EdgeCollector ec;
  CommonEdges(g, ec);
  for (int u = 0; u < np; ++u) {
    for (int i = 1; i <= x; ++i) {
      for (int j = 1; j <= k - 2; ++j) {
        ec.Add(g.Outer(u, i, j), g.Outer(u, i, j + 1), EdgeFamily::kPath);
      }
    }
  }
  for (int u = 0; u < np; ++u) {
    for (int i = 1; i <= x; ++i) {
      ec.Add(g.Outer(u, i, k - 1), ell(u, i, 1), EdgeFamily::kL);
      for (int j = 1; j <= k - 2; ++j) ec.Add(ell(u, i, j), ell(u, i, j + 1), EdgeFamily::kL);
      ec.Add(ell(u, i, k - 1), g.Special(u), EdgeFamily::kL);
    }
  }
  for (int u = 0; u < np; ++u) {
    for (int i = 1; i <= x; ++i) {
      ec.Add(g.Outer(u, i, k - 1), pv(u, i, 1), EdgeFamily::kP);
      for (int j = 1; j <= g.p_len - 1; ++j) ec.Add(pv(u, i, j), pv(u, i, j + 1), EdgeFamily::kP);
      ec.Add(pv(u, i, g.p_len), g.q_base + u, EdgeFamily::kP);
    }
  }
  for (int u = 0; u < np; ++u) {
    for (int i = 1; i <= x; ++i) ec.Add(g.Special(u), ell(u, i, k - 1), EdgeFamily::kSo);
  }
  for (size_t e = 0; e < g.superedges.size(); ++e) {
    const auto [u, v] = g.superedges[e];
    const int ei = static_cast<int>(e);
    ec.Add(g.Special(u), g.Middle(ei, 1), EdgeFamily::kSm);
    ec.Add(g.Special(v), g.Middle(ei, k - 2), EdgeFamily::kSm);
  }
  for (size_t e = 0; e < g.superedges.size(); ++e) {
    for (int l = 1; l <= k - 3; ++l) {
      ec.Add(g.Middle(static_cast<int>(e), l), g.Middle(static_cast<int>(e), l + 1),
             EdgeFamily::kM);
    }
  }
  for (size_t e = 0; e < g.superedges.size(); ++e) {
    const auto [u, v] = g.superedges[e];
    const int ei = static_cast<int>(e);
    for (int i = 1; i <= x; ++i) {
      ec.Add(g.Outer(u, i, k - 1), g.Middle(ei, 1), EdgeFamily::kOut);
      ec.Add(g.Outer(v, i, k - 1), g.Middle(ei, k - 2), EdgeFamily::kOut);
    }
  }
  GroupEdges(g, ec);
  auto tv = [&](int y, int l) { return g.t_base + y * (k - 1) + (l - 1); };
  for (int y = 0; y < g.main_vertices; ++y) {
    ec.Add(g.hub, tv(y, k - 1), EdgeFamily::kStar);
    for (int l = 1; l <= k - 2; ++l) ec.Add(tv(y, l), tv(y, l + 1), EdgeFamily::kStar);
    ec.Add(y, tv(y, 1), EdgeFamily::kStar);
  }
  ec.Finish(g, static_cast<int>(g.roles.size()));
  return g;
}

namespace {

void RequireCover(const SpannerInstance& g, const std::vector<int>& cover) {
  if (!RepCoverVerify(g.source, cover)) throw std::invalid_argument("invalid rep cover");
}

int EdgeOrThrow(const SpannerInstance& g, int u, int v) {
  auto e = g.graph.find_edge(u, v);
  if (!e) throw std::logic_error("construction edge missing");
  return *e;
}

}  // namespace

EdgeSet CompletenessWitnessPlus1(const SpannerInstance& g,
                                 const std::vector<int>& cover) {
  if (g.k != 1) throw std::invalid_argument("not a +1 instance");
  RequireCover(g, cover);
  const MinRepInstance& inst = g.source;
  std::vector<int> rep(inst.num_groups(), -1);
  for (int c : cover) {
    const int grp = inst.group_of(c);
    if (rep[grp] >= 0) throw std::invalid_argument("cover needs one vertex per group");
    rep[grp] = c;
  }
  if (std::count(rep.begin(), rep.end(), -1) > 0) {
    throw std::invalid_argument("cover needs one vertex per group");
  }
  std::vector<int> ids;
  for (int e = 0; e < g.graph.num_edges(); ++e) {
    switch (g.family[e]) {
      case EdgeFamily::kIn:
      case EdgeFamily::kSo:
      case EdgeFamily::kSi:
      case EdgeFamily::kSm:
      case EdgeFamily::kStar:
        ids.push_back(e);
        break;
      default:
        break;
    }
  }
  for (int u = 0; u < inst.num_groups(); ++u) {
    for (int i = 1; i <= g.x; ++i) ids.push_back(EdgeOrThrow(g, g.Outer(u, i), g.Inner(rep[u])));
    for (int s = 0; s < inst.sigma; ++s) {
      const int a = inst.group_begin(u) + s;
      if (a != rep[u]) ids.push_back(EdgeOrThrow(g, g.Inner(rep[u]), g.Inner(a)));
    }
  }
  return EdgeSet(std::move(ids));
}

EdgeSet CompletenessWitnessPlusK(const SpannerInstance& g,
                                 const std::vector<int>& cover) {
  if (g.k < 3) throw std::invalid_argument("not a +k instance");
  RequireCover(g, cover);
  std::vector<int> ids;
  for (int e = 0; e < g.graph.num_edges(); ++e) {
    if (g.family[e] != EdgeFamily::kCon && g.family[e] != EdgeFamily::kOut) ids.push_back(e);
  }
  for (int c : cover) {
    const int u = g.source.group_of(c);
    for (int i = 1; i <= g.x; ++i) ids.push_back(EdgeOrThrow(g, g.Outer(u, i, 1), g.Inner(c)));
  }
  return EdgeSet(std::move(ids));
}

namespace {

bool Has(const SpannerInstance& g, const std::vector<char>& mask, int u, int v) {
  auto e = g.graph.find_edge(u, v);
  return e && mask[*e];
}

// E_path chain of copy i of supernode u is present.
bool ChainPresent(const SpannerInstance& g, const std::vector<char>& mask, int u,
                  int i) {
  for (int j = 1; j + 1 <= g.levels; ++j) {
    if (!Has(g, mask, g.Outer(u, i, j), g.Outer(u, i, j + 1))) return false;
  }
  return true;
}

std::vector<int> CanonicalEdges(const SpannerInstance& g, int e, int i, int a,
                                int b) {
  const auto [u, v] = g.superedges[e];
  std::vector<int> out;
  for (int j = 1; j + 1 <= g.levels; ++j) {
    out.push_back(EdgeOrThrow(g, g.Outer(u, i, j), g.Outer(u, i, j + 1)));
    out.push_back(EdgeOrThrow(g, g.Outer(v, i, j), g.Outer(v, i, j + 1)));
  }
  out.push_back(EdgeOrThrow(g, g.Outer(u, i, 1), g.Inner(a)));
  out.push_back(EdgeOrThrow(g, g.Inner(a), g.Inner(b)));
  out.push_back(EdgeOrThrow(g, g.Inner(b), g.Outer(v, i, 1)));
  return out;
}

}  // namespace

bool HasCanonicalPath(const SpannerInstance& g, const std::vector<char>& mask,
                      int e, int i) {
  const auto [u, v] = g.superedges[e];
  if (!ChainPresent(g, mask, u, i) || !ChainPresent(g, mask, v, i)) return false;
  const MinRepInstance& inst = g.source;
  const int ou = g.Outer(u, i, 1);
  const int ov = g.Outer(v, i, 1);
  for (const auto& [a, b] : inst.edges) {
    if (inst.group_of(a) != u || inst.group_of(b) != v) continue;
    if (Has(g, mask, ou, g.Inner(a)) && Has(g, mask, g.Inner(a), g.Inner(b)) &&
        Has(g, mask, g.Inner(b), ov)) {
      return true;
    }
  }
  return false;
}

Canonicalization Canonicalize(const SpannerInstance& g, const EdgeSet& h) {
  if (!VerifyAdditive(g.graph, h, g.k)) {
    throw std::invalid_argument("input is not an additive spanner at the instance's stretch");
  }
  const std::vector<char> original = h.Mask(g.graph.num_edges());
  std::vector<char> mask = original;
  Canonicalization out;
  const MinRepInstance& inst = g.source;
  for (size_t e = 0; e < g.superedges.size(); ++e) {
    const auto [u, v] = g.superedges[e];
    const int ei = static_cast<int>(e);
    // Smallest instance edge crossing the superedge.
    std::pair<int, int> cross{-1, -1};
    for (const auto& ab : inst.edges) {
      if (inst.group_of(ab.first) == u && inst.group_of(ab.second) == v) {
        cross = ab;
        break;
      }
    }
    for (int i = 1; i <= g.x; ++i) {
      if (HasCanonicalPath(g, mask, ei, i)) continue;
      const auto first = g.graph.find_edge(g.Outer(u, i, g.levels), g.Middle(ei, 1));
      const auto second =
          g.graph.find_edge(g.Outer(v, i, g.levels), g.Middle(ei, g.middle_levels));
      int charged = -1;
      if (first && original[*first]) {
        charged = *first;
      } else if (second && original[*second]) {
        charged = *second;
      } else {
        throw std::logic_error("no outer edge available for charging");
      }
      int added = 0;
      for (int id : CanonicalEdges(g, ei, i, cross.first, cross.second)) {
        if (!mask[id]) {
          mask[id] = 1;
          ++added;
        }
      }
      ++out.paths_added;
      out.charges[charged] += added;
      out.max_charge = std::max(out.max_charge, out.charges[charged]);
    }
  }
  out.edges = EdgeSet::FromMask(mask);
  return out;
}

std::vector<std::vector<int>> ExtractCovers(const SpannerInstance& g,
                                            const EdgeSet& h) {
  const auto mask = h.Mask(g.graph.num_edges());
  for (size_t e = 0; e < g.superedges.size(); ++e) {
    for (int i = 1; i <= g.x; ++i) {
      if (!HasCanonicalPath(g, mask, static_cast<int>(e), i)) {
        throw std::invalid_argument("edge set is not canonical");
      }
    }
  }
  std::vector<std::vector<int>> covers(g.x);
  for (int i = 1; i <= g.x; ++i) {
    for (int a = 0; a < g.source.num_vertices(); ++a) {
      if (Has(g, mask, g.Outer(g.source.group_of(a), i, 1), g.Inner(a))) {
        covers[i - 1].push_back(a);
      }
    }
  }
  return covers;
}

void WriteUndirected(std::ostream& out, const UndirectedGraph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

UndirectedGraph ReadUndirected(std::istream& in, const std::string& source) {
  std::string line;
  int line_no = 0;
  std::vector<std::vector<long>> rows;
  std::vector<int> row_lines;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::vector<long> vals;
    std::string tok;
    while (ss >> tok) {
      try {
        size_t used = 0;
        vals.push_back(std::stol(tok, &used));
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError(source, line_no, "expected integer, got '" + tok + "'");
      }
    }
    if (vals.empty()) continue;
    if (vals.size() != 2) throw ParseError(source, line_no, "expected two integers");
    rows.push_back(vals);
    row_lines.push_back(line_no);
  }
  if (rows.empty()) throw ParseError(source, line_no, "missing header");
  const long n = rows[0][0];
  const long m = rows[0][1];
  if (n < 0 || m < 0) throw ParseError(source, row_lines[0], "negative count");
  if (static_cast<long>(rows.size()) - 1 != m) {
    throw ParseError(source, line_no, "edge count does not match header");
  }
  std::vector<std::pair<int, int>> edges;
  for (long i = 1; i <= m; ++i) {
    if (rows[i][0] < 0 || rows[i][0] >= n || rows[i][1] < 0 || rows[i][1] >= n) {
      throw ParseError(source, row_lines[i], "edge endpoint out of range");
    }
    edges.push_back({static_cast<int>(rows[i][0]), static_cast<int>(rows[i][1])});
  }
  try {
    return UndirectedGraph(static_cast<int>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw ParseError(source, line_no, e.what());
  }
}

void WriteRoles(std::ostream& out, const SpannerInstance& g) {
  out << "# k=" << g.k << " x=" << g.x << " main=" << g.main_vertices << '\n';
  for (size_t v = 0; v < g.roles.size(); ++v) {
    const RoleInfo& r = g.roles[v];
    std::string name = ToString(r.role);
    if (r.role == VertexRole::kOuter) {
      name = g.IsSuperedgeSideU(r.a) ? "outer_left" : "outer_right";
    }
    out << "vertex " << v << ' ' << name << ' ' << r.a << ' ' << r.b << ' ' << r.c
        << '\n';
  }
  for (int e = 0; e < g.graph.num_edges(); ++e) {
    out << "edge " << g.graph.edge(e).first << ' ' << g.graph.edge(e).second << ' '
        << ToString(g.family[e]) << '\n';
  }
}

}  // namespace spanopt
