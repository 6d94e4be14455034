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

#include "spanopt/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "spanopt/errors.hpp"

namespace spanopt {
namespace {

// Yields non-empty, non-comment lines split into tokens.
class LineReader {
 public:
  LineReader(std::istream& in, std::string source)
      : in_(in), source_(std::move(source)) {}

  bool Next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      std::istringstream ss(line);
      tokens.clear();
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  int line() const { return line_no_; }
  [[noreturn]] void Fail(const std::string& what) const {
    throw ParseError(source_, line_no_, what);
  }
  const std::string& source() const { return source_; }

  int Int(const std::string& tok, const char* what) const {
    int value = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      Fail(std::string("expected integer ") + what + ", got '" + tok + "'");
    }
    return value;
  }

 private:
  std::istream& in_;
  std::string source_;
  int line_no_ = 0;
};

std::ifstream OpenOrThrow(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  return in;
}

struct EdgeList {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<int> lines;
};

EdgeList ReadEdgeList(LineReader& reader) {
  std::vector<std::string> tok;
  if (!reader.Next(tok)) reader.Fail("missing header line \"n m\"");
  if (tok.size() != 2) reader.Fail("header must be \"n m\"");
  EdgeList list;
  list.n = reader.Int(tok[0], "vertex count");
  const int m = reader.Int(tok[1], "edge count");
  if (list.n < 0 || m < 0) reader.Fail("negative count in header");
  for (int i = 0; i < m; ++i) {
    if (!reader.Next(tok)) {
      reader.Fail("expected " + std::to_string(m) + " edges, found " +
                  std::to_string(i));
    }
    if (tok.size() != 2) reader.Fail("edge line must be \"u v\"");
    const int u = reader.Int(tok[0], "endpoint");
    const int v = reader.Int(tok[1], "endpoint");
    if (u < 0 || u >= list.n || v < 0 || v >= list.n) {
      reader.Fail("edge endpoint out of range");
    }
    if (u == v) reader.Fail("self-loop");
    list.edges.push_back({u, v});
    list.lines.push_back(reader.line());
  }
  if (reader.Next(tok)) reader.Fail("trailing content after edge list");
  return list;
}

}  // namespace

Graph ReadGraph(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  EdgeList list = ReadEdgeList(reader);
  std::vector<Edge> sorted = list.edges;
  std::vector<int> order(sorted.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return list.edges[a] < list.edges[b];
  });
  for (size_t i = 1; i < order.size(); ++i) {
    if (list.edges[order[i]] == list.edges[order[i - 1]]) {
      throw ParseError(source, std::max(list.lines[order[i]], list.lines[order[i - 1]]),
                       "duplicate edge");
    }
  }
  return Graph(list.n, std::move(list.edges));
}

Graph ReadGraphFile(const std::string& path) {
  auto in = OpenOrThrow(path);
  return ReadGraph(in, path);
}

void WriteGraph(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.from << ' ' << e.to << '\n';
}

DemandSet ReadDemands(std::istream& in, const std::string& source) {
  LineReader reader(in, source);
  std::vector<std::string> tok;
  std::vector<Demand> pairs;
  std::vector<std::pair<Vertex, Vertex>> seen;
  while (reader.Next(tok)) {
    if (tok.size() != 3) reader.Fail("demand line must be \"s t D\"");
    const int s = reader.Int(tok[0], "source");
    const int t = reader.Int(tok[1], "target");
    if (s < 0 || t < 0) reader.Fail("negative vertex id");
    if (s == t) reader.Fail("demand with s == t");
    for (const auto& [a, b] : seen) {
      if (a == s && b == t) reader.Fail("repeated demand pair");
    }
    seen.emplace_back(s, t);
    if (tok[2] == "-") {
      pairs.push_back(Demand::Exact(s, t));
    } else if (tok[2] == "*") {
      pairs.push_back(Demand::Unbounded(s, t));
    } else {
      const int bound = reader.Int(tok[2], "bound");
      if (bound < 1) reader.Fail("bound must be positive");
      pairs.push_back(Demand::AtMost(s, t, bound));
    }
  }
  return DemandSet(std::move(pairs));
}

DemandSet ReadDemandsFile(const std::string& path) {
  auto in = OpenOrThrow(path);
  return ReadDemands(in, path);
}

void WriteDemands(std::ostream& out, const DemandSet& demands) {
  for (const Demand& d : demands) {
    out << d.s << ' ' << d.t << ' ';
    switch (d.kind) {
      case BoundKind::kExact:
        out << '-';
        break;
      case BoundKind::kUnbounded:
        out << '*';
        break;
      case BoundKind::kAtMost:
        out << d.bound;
        break;
    }
    out << '\n';
  }
}

EdgeSet ReadSolution(std::istream& in, const Graph& g,
                     const std::string& source) {
  LineReader reader(in, source);
  EdgeList list = ReadEdgeList(reader);
  if (list.n != g.num_vertices()) {
    throw ParseError(source, 1, "vertex count does not match the graph");
  }
  std::vector<EdgeId> ids;
  for (size_t i = 0; i < list.edges.size(); ++i) {
    auto id = g.find_edge(list.edges[i].from, list.edges[i].to);
    if (!id) throw ParseError(source, list.lines[i], "edge not in graph");
    ids.push_back(*id);
  }
  return EdgeSet(std::move(ids));
}

EdgeSet ReadSolutionFile(const std::string& path, const Graph& g) {
  auto in = OpenOrThrow(path);
  return ReadSolution(in, g, path);
}

void WriteSolution(std::ostream& out, const Graph& g, const EdgeSet& solution) {
  out << g.num_vertices() << ' ' << solution.size() << '\n';
  for (EdgeId e : solution) {
    out << g.edge(e).from << ' ' << g.edge(e).to << '\n';
  }
}

}  // namespace spanopt
