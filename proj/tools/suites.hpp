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

#ifndef SPANOPT_TOOLS_SUITES_HPP_
#define SPANOPT_TOOLS_SUITES_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "spanopt/graph.hpp"
#include "spanopt/rng.hpp"

namespace spanopt::suites {

// Random-corpus feasibility check of the three approximation drivers plus
// the two spanner specializations (D = d_G and D = n).
struct FeasibilityRecord {
  int index = 0;
  int n = 0;
  int m = 0;
  int pairs = 0;
  int preserver_size = 0;
  int spanner_size = 0;
  int dsf_size = 0;
  bool preserver_ok = false;
  bool spanner_ok = false;
  bool dsf_ok = false;
  bool spanner_as_preserver_ok = false;
  bool spanner_as_dsf_ok = false;
  std::string error;  // non-empty when a driver threw

  bool ok() const {
    return error.empty() && preserver_ok && spanner_ok && dsf_ok;
  }
  bool coherent() const {
    return error.empty() && spanner_as_preserver_ok && spanner_as_dsf_ok;
  }
};

// Either half can be skipped; skipped checks stay false.
FeasibilityRecord RunFeasibility(Seed seed, int index, double epsilon,
                                 bool drivers = true, bool coherence = true);

// Approximation output against the brute-force optimum.
struct RatioRecord {
  int index = 0;
  int attempt = 0;  // generator stream used (instances over budget are skipped)
  int n = 0;
  int m = 0;
  int pairs = 0;
  int opt = 0;
  int preserver_size = 0;
  Vertex root = -1;
  bool junction_opt_finite = false;
  int junction_opt_edges = 0;
  int junction_opt_pairs = 0;
  int junction_edges = 0;
  int junction_pairs = 0;
  std::string error;

  double preserver_ratio() const {
    return opt > 0 ? static_cast<double>(preserver_size) / opt : 1.0;
  }
  // alg density / optimal density; infinite when the routine found nothing
  // although a finite optimum exists.
  double junction_ratio() const;
};

RatioRecord RunRatio(Seed seed, int index, double epsilon);

// Closed-form family counts against generated Min-Rep reductions.
struct ReductionRecord {
  int index = 0;
  int r = 0;
  int sigma = 0;
  int d = 0;
  int x = 0;
  int k = 0;
  int vertices = 0;
  int edges = 0;
  bool counts_match = false;
  std::string mismatch;
};

ReductionRecord RunReductionCounts(Seed seed, int index);

struct DeskOptions {
  Seed seed = 7;
  double epsilon = 0.5;
  int feasibility = 500;
  int ratio = 100;
  int reductions = 20;
  int jobs = 1;
};

// Runs the three suites and writes key=value records plus summary tables.
// Output depends only on the options (never on timing or job count).
// Returns false when any record fails its check.
bool RunDesk(const DeskOptions& options, std::ostream& out);

// Runs fn(i) for i in [0, count) on `jobs` workers; results keep index order.
template <typename R, typename F>
std::vector<R> ParallelMap(int count, int jobs, F fn);

}  // namespace spanopt::suites

#include "suites_inl.hpp"

#endif  // SPANOPT_TOOLS_SUITES_HPP_
