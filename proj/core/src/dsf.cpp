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

#include "spanopt/dsf.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>

#include "settle.hpp"
#include "spanopt/errors.hpp"
#include "spanopt/junction.hpp"
#include "spanopt/lp_builders.hpp"

namespace spanopt {
namespace {

using internal::HubMode;
using internal::ThresholdProblem;

DemandSet AsConnectivity(const DemandSet& demands) {
  std::vector<Demand> out;
  for (const Demand& d : demands) out.push_back(Demand::Unbounded(d.s, d.t));
  return DemandSet(std::move(out));
}

DemandSet AsBounded(const Graph& g, const DemandSet& demands) {
  const auto resolved = Resolve(g, demands);
  std::vector<Demand> out;
  for (size_t i = 0; i < resolved.size(); ++i) {
    const Demand& d = demands[static_cast<int>(i)];
    if (d.kind == BoundKind::kUnbounded) {
      throw std::invalid_argument("pairwise spanner needs finite bounds");
    }
    out.push_back(Demand::AtMost(d.s, d.t, resolved[i].limit));
  }
  return DemandSet(std::move(out));
}

ThresholdProblem FlowProblem(const Graph& g, const DemandSet& demands,
                             const FlowLp& lp, const LpSolution& sol,
                             const std::vector<std::vector<int>>& dist,
                             const std::vector<int>& pairs, long hub_cap) {
  const auto resolved = Resolve(g, demands);
  ThresholdProblem prob;
  prob.x = EdgeValues(lp, sol, g.num_edges());
  for (int p : pairs) {
    const auto& d = resolved[p];
    prob.pairs.push_back(d);
    prob.support.push_back(FlowSupport(lp, sol, p, d.s, d.t));
    long limit = d.limit;
    if (hub_cap != kUnreachable) {
      limit = limit == kUnreachable ? hub_cap : std::min<long>(limit, hub_cap);
    }
    prob.hubs_ok.push_back(
        internal::AdmissibleHubs(dist, prob.support.back(), d.s, d.t, limit));
  }
  return prob;
}

std::vector<int> AllIndices(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

struct CachedLp {
  FlowLp lp;
  LpSolution sol;
};

// Threshold algorithm on an already solved LP (flow or layered unit-each).
EdgeSet ThresholdOnLp(const Graph& g, const DemandSet& demands,
                      const CachedLp& cached,
                      const std::vector<std::vector<int>>& dist,
                      double opt_guess, Seed seed, Trace* trace) {
  const ThresholdProblem prob =
      FlowProblem(g, demands, cached.lp, cached.sol, dist,
                  AllIndices(demands.size()), kUnreachable);
  const double k = g.num_vertices() / std::sqrt(opt_guess);
  EdgeSet f = internal::ThresholdRound(g, dist, prob, k, HubMode::kTrees, 0,
                                       seed, trace);
  if (!VerifyResolved(g, f, prob.pairs).AllSatisfied()) {
    throw std::logic_error("threshold rounding left a pair unsatisfied");
  }
  return f;
}

CachedLp SolveOrThrow(FlowLp lp) {
  CachedLp c{std::move(lp), {}};
  c.sol = SolveLp(c.lp.model);
  if (!c.sol.optimal()) {
    throw Error(std::string("flow LP: ") + ToString(c.sol.status));
  }
  return c;
}

// Repeats the density step on the unsatisfied remainder.
EdgeSet CoverLoop(const Graph& g, const DemandSet& demands, bool bounded,
                  double epsilon, Seed seed, Trace* trace) {
  const auto resolved = Resolve(g, demands);
  const auto dist = AllPairsDistances(g);
  std::vector<int> remaining = AllIndices(demands.size());
  EdgeSet f;
  for (int iter = 0; !remaining.empty(); ++iter) {
    const DemandSet sub = demands.Subset(remaining);
    bool progressed = false;
    try {
      const Algorithm4Result r =
          DsfAlgorithm4(g, sub, bounded, epsilon, DeriveSeed(seed, iter), trace);
      f.InsertAll(r.edges);
      progressed = !r.satisfied.empty();
    } catch (const RoundingFailureError&) {
    }
    if (!progressed) {
      const auto& d = resolved[remaining.front()];
      f.InsertAll(CanonicalShortestPath(g, dist, d.s, d.t));
    }
    std::vector<ResolvedDemand> rest;
    for (int p : remaining) rest.push_back(resolved[p]);
    const auto report = VerifyResolved(g, f, rest);
    std::vector<int> still;
    for (size_t i = 0; i < rest.size(); ++i) {
      if (!report.pairs[i].satisfied) still.push_back(remaining[i]);
    }
    if (still.size() >= remaining.size()) {
      throw std::logic_error("cover loop made no progress");
    }
    remaining = std::move(still);
    if (trace) trace->Add("cover.remaining", remaining.size());
  }
  return f;
}

// Driver shared by both problems: threshold algorithm for large guesses,
// cover loop otherwise; smallest verified output wins.
template <typename Threshold>
EdgeSet GuessDriver(const Graph& g, const DemandSet& demands, bool bounded,
                    double epsilon, Seed seed, Trace* trace,
                    Threshold&& threshold) {
  const auto resolved = Resolve(g, demands);
  if (demands.empty()) return {};
  EdgeSet best = EdgeSet::All(g);
  std::optional<EdgeSet> cover;
  bool cover_failed = false;
  for (long guess : internal::OptGuesses(g.num_edges())) {
    std::optional<EdgeSet> candidate;
    try {
      if (internal::AtLeastFourFifths(guess, g.num_vertices())) {
        candidate = threshold(static_cast<double>(guess), DeriveSeed(seed, guess));
      } else {
        if (!cover && !cover_failed) {
          try {
            cover = CoverLoop(g, demands, bounded, epsilon,
                              DeriveSeed(seed, 7777777ULL), trace);
          } catch (const RoundingFailureError&) {
            cover_failed = true;
          }
        }
        candidate = cover;
      }
    } catch (const RoundingFailureError&) {
      candidate.reset();
    }
    if (!candidate) continue;
    if (!VerifyResolved(g, *candidate, resolved).AllSatisfied()) continue;
    if (trace) trace->Add("driver.guess." + std::to_string(guess), candidate->size());
    if (candidate->size() < best.size()) best = std::move(*candidate);
  }
  if (trace) trace->Add("driver.edges", best.size());
  return best;
}

}  // namespace

EdgeSet DsfAlgorithm1(const Graph& g, const DemandSet& demands,
                      double opt_guess, Seed seed, Trace* trace) {
  if (demands.empty()) return {};
  if (opt_guess < 1) throw std::invalid_argument("opt_guess must be >= 1");
  const DemandSet conn = AsConnectivity(demands);
  const CachedLp cached = SolveOrThrow(BuildFlowLp(g, conn));
  return ThresholdOnLp(g, conn, cached, AllPairsDistances(g), opt_guess, seed,
                       trace);
}

Algorithm4Result DsfAlgorithm4(const Graph& g, const DemandSet& input,
                               bool bounded, double epsilon, Seed seed,
                               Trace* trace) {
  if (input.empty()) throw std::invalid_argument("algorithm 4 needs demands");
  const DemandSet demands = bounded ? AsBounded(g, input) : AsConnectivity(input);
  const auto resolved = Resolve(g, demands);
  const auto dist = AllPairsDistances(g);
  const int n = g.num_vertices();
  const int d0 = internal::FifthRootCeil(n);
  Algorithm4Result res;

  // Hub branch over P_{1/4}.
  std::optional<EdgeSet> f0;
  std::vector<int> p0;
  LayeredLpOptions lopt;
  lopt.depth = d0;
  lopt.per_pair_bounds = bounded;
  lopt.collapse_long_pairs = true;
  const FlowLp lp = BuildLayeredLp(g, demands, lopt);
  const LpSolution sol = SolveLp(lp.model);
  res.lp_feasible = sol.optimal();
  if (res.lp_feasible) {
    std::vector<int> quarter;
    for (int p = 0; p < demands.size(); ++p) {
      if (FlowValue(lp, sol, p) >= 0.25 - 1e-9) quarter.push_back(p);
    }
    if (!quarter.empty()) {
      ThresholdProblem prob = FlowProblem(g, demands, lp, sol, dist, quarter,
                                          bounded ? kUnreachable : 2L * d0);
      const double k = std::sqrt(static_cast<double>(d0) * n);
      try {
        EdgeSet f = internal::ThresholdRound(g, dist, prob, k,
                                             HubMode::kPairPaths, d0,
                                             DeriveSeed(seed, 1), trace);
        p0 = internal::SatisfiedPairs(g, f, resolved);
        if (!p0.empty()) {
          res.hub_edges = f.size();
          res.hub_pairs = static_cast<long>(p0.size());
          f0 = std::move(f);
        }
      } catch (const RoundingFailureError&) {
      }
    }
  }

  // Junction branch: best root.
  JunctionOptions jopt;
  jopt.epsilon = epsilon;
  std::optional<JunctionResult> best;
  for (Vertex u = 0; u < n; ++u) {
    JunctionResult jr;
    try {
      jr = JunctionTreeDensity(g, demands, u, DeriveSeed(seed, 100 + u), jopt);
    } catch (const RoundingFailureError&) {
      continue;
    }
    if (!jr.feasible()) continue;
    jr.satisfied = internal::SatisfiedPairs(g, jr.edges, resolved);
    if (!best || internal::RatioLess(jr.edges.size(), jr.satisfied.size(),
                                     best->edges.size(), best->satisfied.size())) {
      best = std::move(jr);
      res.junction_root = u;
    }
  }
  if (best) {
    res.junction_edges = best->edges.size();
    res.junction_pairs = static_cast<long>(best->satisfied.size());
  }

  if (!f0 && !best) {
    throw RoundingFailureError("algorithm 4: both branches came back empty");
  }
  const bool take_hub =
      f0 && (!best || !internal::RatioLess(res.junction_edges, res.junction_pairs,
                                           res.hub_edges, res.hub_pairs));
  if (take_hub) {
    res.edges = std::move(*f0);
    res.satisfied = std::move(p0);
    res.branch = "hub";
  } else {
    res.edges = std::move(best->edges);
    res.satisfied = std::move(best->satisfied);
    res.branch = "junction";
  }
  if (trace) {
    trace->Add("alg4.d0", d0);
    trace->Add("alg4.lp_feasible", res.lp_feasible ? 1 : 0);
    trace->Add("alg4.branch", res.branch);
    trace->Add("alg4.edges", res.edges.size());
    trace->Add("alg4.satisfied", res.satisfied.size());
  }
  return res;
}

EdgeSet DsfApprox(const Graph& g, const DemandSet& demands, double epsilon,
                  Seed seed, Trace* trace) {
  const DemandSet conn = AsConnectivity(demands);
  const auto dist = AllPairsDistances(g);
  std::optional<CachedLp> cached;
  return GuessDriver(g, conn, false, epsilon, seed, trace,
                     [&](double guess, Seed s) {
                       if (!cached) cached = SolveOrThrow(BuildFlowLp(g, conn));
                       return ThresholdOnLp(g, conn, *cached, dist, guess, s,
                                            nullptr);
                     });
}

EdgeSet PairwiseSpannerApprox(const Graph& g, const DemandSet& demands,
                              double epsilon, Seed seed, Trace* trace) {
  const DemandSet bounded = AsBounded(g, demands);
  const auto dist = AllPairsDistances(g);
  std::optional<CachedLp> cached;
  return GuessDriver(g, bounded, true, epsilon, seed, trace,
                     [&](double guess, Seed s) {
                       if (!cached) {
                         LayeredLpOptions lopt;
                         lopt.depth = 1;
                         for (const Demand& d : bounded) {
                           lopt.depth = std::max(lopt.depth, d.bound);
                         }
                         lopt.per_pair_bounds = true;
                         lopt.unit_flow_each = true;
                         lopt.collapse_long_pairs = true;
                         cached = SolveOrThrow(BuildLayeredLp(g, bounded, lopt));
                       }
                       return ThresholdOnLp(g, bounded, *cached, dist, guess, s,
                                            nullptr);
                     });
}

}  // namespace spanopt
