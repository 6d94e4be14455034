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

#ifndef SPANOPT_IO_HPP_
#define SPANOPT_IO_HPP_

#include <iosfwd>
#include <string>

#include "spanopt/graph.hpp"

namespace spanopt {

// Graph text format: "n m" followed by m lines "u v". Blank lines and lines
// starting with '#' are ignored. Errors carry the 1-based line number.
Graph ReadGraph(std::istream& in, const std::string& source = "<graph>");
Graph ReadGraphFile(const std::string& path);
void WriteGraph(std::ostream& out, const Graph& g);

// Demand text format: lines "s t D" where D is "-" (exact), "*" (unbounded)
// or a positive integer bound.
DemandSet ReadDemands(std::istream& in, const std::string& source = "<demands>");
DemandSet ReadDemandsFile(const std::string& path);
void WriteDemands(std::ostream& out, const DemandSet& demands);

// Solutions use the graph format; every listed edge must exist in g.
EdgeSet ReadSolution(std::istream& in, const Graph& g,
                     const std::string& source = "<solution>");
EdgeSet ReadSolutionFile(const std::string& path, const Graph& g);
void WriteSolution(std::ostream& out, const Graph& g, const EdgeSet& solution);

}  // namespace spanopt

#endif  // SPANOPT_IO_HPP_
