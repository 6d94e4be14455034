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

#include "suites.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>

#include "spanopt/dsf.hpp"
#include "spanopt/errors.hpp"
#include "spanopt/generators.hpp"
#include "spanopt/hardness.hpp"
#include "spanopt/junction.hpp"
#include "spanopt/minrep.hpp"
#include "spanopt/oracle.hpp"
#include "spanopt/preserver.hpp"

namespace spanopt::suites {

namespace {

// Stream ids keep the three suites on disjoint generator seeds.
constexpr std::uint64_t kFeasibilityStream = 1;
constexpr std::uint64_t kRatioStream = 2;
constexpr std::uint64_t kReductionStream = 3;
constexpr int kRatioAttempts = 64;

DemandSet WithBound(const Graph& g, const DemandSet& demands, bool distance) {
  const auto dist = AllPairsDistances(g);
  std::vector<Demand> out;
  for (const Demand& d : demands) {
    out.push_back(Demand::AtMost(d.s, d.t, distance ? dist[d.s][d.t] : g.num_vertices()));
  }
  return DemandSet(std::move(out));
}

std::string Fixed(double v) {
  if (std::isinf(v)) return "inf";
  std::ostringstream ss;
  ss << std::fixed << std::setprecision(4) << v;
  return ss.str();
}

}  // namespace

FeasibilityRecord RunFeasibility(Seed seed, int index, double epsilon, bool drivers,
                                 bool coherence) {
  FeasibilityRecord rec;
  rec.index = index;
  const Seed base = DeriveSeed(DeriveSeed(seed, kFeasibilityStream), index);
  const RandomInstance inst = RandomFeasibleInstance(base);
  const Graph& g = inst.graph;
  rec.n = g.num_vertices();
  rec.m = g.num_edges();
  rec.pairs = inst.exact.size();
  const Seed algo = DeriveSeed(base, 1);
  try {
    if (drivers) {
      const EdgeSet p = PreserverApprox(g, inst.exact, epsilon, algo);
      rec.preserver_size = p.size();
      rec.preserver_ok = VerifySolution(g, p, inst.exact).AllSatisfied();
      const EdgeSet s = PairwiseSpannerApprox(g, inst.bounded, epsilon, algo);
      rec.spanner_size = s.size();
      rec.spanner_ok = VerifySolution(g, s, inst.bounded).AllSatisfied();
      const EdgeSet d = DsfApprox(g, inst.unbounded, epsilon, algo);
      rec.dsf_size = d.size();
      rec.dsf_ok = VerifySolution(g, d, inst.unbounded).AllSatisfied();
    }
    if (coherence) {
      const EdgeSet sp =
          PairwiseSpannerApprox(g, WithBound(g, inst.exact, true), epsilon, algo);
      rec.spanner_as_preserver_ok = VerifySolution(g, sp, inst.exact).AllSatisfied();
      const EdgeSet sd =
          PairwiseSpannerApprox(g, WithBound(g, inst.exact, false), epsilon, algo);
      rec.spanner_as_dsf_ok = VerifySolution(g, sd, inst.unbounded).AllSatisfied();
    }
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  return rec;
}

double RatioRecord::junction_ratio() const {
  if (!junction_opt_finite) return 1.0;
  if (junction_pairs == 0) return std::numeric_limits<double>::infinity();
  const double alg = static_cast<double>(junction_edges) / junction_pairs;
  const double opt = static_cast<double>(junction_opt_edges) / junction_opt_pairs;
  return alg / opt;
}

RatioRecord RunRatio(Seed seed, int index, double epsilon) {
  RatioRecord rec;
  rec.index = index;
  const Seed stream = DeriveSeed(DeriveSeed(seed, kRatioStream), index);
  for (int attempt = 0; attempt < kRatioAttempts; ++attempt) {
    const Seed base = DeriveSeed(stream, attempt);
    const RandomInstance inst = RandomFeasibleInstance(base);
    const Graph& g = inst.graph;
    OracleSolution opt;
    try {
      opt = ExactMinSolution(g, inst.exact, kDefaultOracleEdges);
    } catch (const BudgetExceededError&) {
      continue;
    }
    // Root: most pairs routable through it, ties to the smaller id.
    const auto dist = AllPairsDistances(g);
    int best_count = -1;
    for (Vertex r = 0; r < g.num_vertices(); ++r) {
      int count = 0;
      for (const Demand& d : inst.bounded) {
        const long a = dist[d.s][r];
        const long b = dist[r][d.t];
        if (a != kUnreachable && b != kUnreachable && a + b <= d.bound) ++count;
      }
      if (count > best_count) {
        best_count = count;
        rec.root = r;
      }
    }
    JunctionOracleResult jopt;
    try {
      jopt = ExactMinDensityJunctionTree(g, inst.bounded, rec.root,
                                         kDefaultJunctionOracleEdges);
    } catch (const BudgetExceededError&) {
      continue;
    }
    rec.attempt = attempt;
    rec.n = g.num_vertices();
    rec.m = g.num_edges();
    rec.pairs = inst.exact.size();
    rec.opt = opt.opt;
    rec.junction_opt_finite = jopt.finite;
    rec.junction_opt_edges = jopt.edges;
    rec.junction_opt_pairs = jopt.pairs;
    const Seed algo = DeriveSeed(base, 1);
    try {
      rec.preserver_size = PreserverApprox(g, inst.exact, epsilon, algo).size();
      JunctionOptions jo;
      jo.epsilon = epsilon;
      const JunctionResult jr = JunctionTreeDensity(g, inst.bounded, rec.root, algo, jo);
      rec.junction_edges = jr.edges.size();
      rec.junction_pairs = static_cast<int>(jr.satisfied.size());
    } catch (const std::exception& e) {
      rec.error = e.what();
    }
    return rec;
  }
  rec.error = "no instance within oracle budget";
  return rec;
}

ReductionRecord RunReductionCounts(Seed seed, int index) {
  ReductionRecord rec;
  rec.index = index;
  Rng rng(DeriveSeed(DeriveSeed(seed, kReductionStream), index));
  rec.r = rng.UniformInt(1, 3);
  rec.sigma = rng.UniformInt(1, 3);
  rec.d = rng.UniformInt(1, rec.r);
  rec.x = rng.UniformInt(1, 3);
  static constexpr int kStretch[] = {1, 3, 4, 5};
  rec.k = kStretch[index % 4];
  const PlantedMinRep planted = MinRepYes(rec.r, rec.sigma, rec.d, rng.Next());
  const MinRepInstance& mr = planted.instance;
  const SpannerInstance g =
      rec.k == 1 ? ReducePlus1(mr, rec.x) : ReducePlusK(mr, rec.x, rec.k);
  rec.vertices = g.graph.num_vertices();
  rec.edges = g.graph.num_edges();

  const long np = mr.num_groups();
  const long sg = mr.sigma;
  const long se = static_cast<long>(mr.Superedges().size());
  const long ein = static_cast<long>(mr.edges.size());
  const long x = rec.x;
  const long k = rec.k;
  std::vector<long> want(kNumEdgeFamilies, 0);
  auto at = [&](EdgeFamily f) -> long& { return want[static_cast<int>(f)]; };
  long vr = 0;
  long vg = 0;
  at(EdgeFamily::kIn) = ein;
  at(EdgeFamily::kCon) = np * x * sg;
  at(EdgeFamily::kGroup) = np * sg * (sg - 1) / 2;
  at(EdgeFamily::kOut) = 2 * x * se;
  at(EdgeFamily::kSm) = 2 * se;
  if (k == 1) {
    vr = np * x + np * sg + np + se;
    vg = 2 * vr + 1;
    at(EdgeFamily::kSo) = np * x;
    at(EdgeFamily::kSi) = np * sg;
    at(EdgeFamily::kStar) = 2 * vr;
  } else {
    const long p = k / 2;
    vr = np * x * (k - 1) + np * sg + np + se * (k - 2) + np * x * (k - 1) +
         np * x * p + np;
    vg = k * vr + 1;
    at(EdgeFamily::kPath) = np * x * (k - 2);
    at(EdgeFamily::kL) = np * x * k;
    at(EdgeFamily::kP) = np * x * (p + 1);
    at(EdgeFamily::kM) = se * (k - 3);
    at(EdgeFamily::kStar) = k * vr;
  }
  std::ostringstream mismatch;
  if (g.main_vertices != vr) mismatch << "V_R=" << g.main_vertices << "!=" << vr << ' ';
  if (g.graph.num_vertices() != vg) {
    mismatch << "V_G=" << g.graph.num_vertices() << "!=" << vg << ' ';
  }
  for (int f = 0; f < kNumEdgeFamilies; ++f) {
    const int got = g.CountFamily(static_cast<EdgeFamily>(f));
    if (got != want[f]) {
      mismatch << ToString(static_cast<EdgeFamily>(f)) << '=' << got << "!=" << want[f]
               << ' ';
    }
  }
  rec.mismatch = mismatch.str();
  rec.counts_match = rec.mismatch.empty();
  return rec;
}

bool RunDesk(const DeskOptions& o, std::ostream& out) {
  bool all_ok = true;
  out << "suite=desk\nseed=" << o.seed << "\nepsilon=" << o.epsilon << '\n';

  const auto feas = ParallelMap<FeasibilityRecord>(
      o.feasibility, o.jobs, [&](int i) { return RunFeasibility(o.seed, i, o.epsilon); });
  int feas_ok = 0;
  int coherent = 0;
  long sum_p = 0, sum_s = 0, sum_d = 0;
  for (const auto& r : feas) {
    out << "feasibility index=" << r.index << " n=" << r.n << " m=" << r.m
        << " pairs=" << r.pairs << " preserver=" << r.preserver_size
        << " spanner=" << r.spanner_size << " dsf=" << r.dsf_size
        << " ok=" << (r.ok() ? 1 : 0) << " coherent=" << (r.coherent() ? 1 : 0);
    if (!r.error.empty()) out << " error=\"" << r.error << '"';
    out << '\n';
    feas_ok += r.ok();
    coherent += r.coherent();
    sum_p += r.preserver_size;
    sum_s += r.spanner_size;
    sum_d += r.dsf_size;
  }
  all_ok = all_ok && feas_ok == o.feasibility && coherent == o.feasibility;

  const auto ratio = ParallelMap<RatioRecord>(
      o.ratio, o.jobs, [&](int i) { return RunRatio(o.seed, i, o.epsilon); });
  double max_pr = 0.0, max_jr = 0.0, sum_pr = 0.0, sum_jr = 0.0;
  int ratio_ok = 0;
  for (const auto& r : ratio) {
    out << "ratio index=" << r.index << " attempt=" << r.attempt << " n=" << r.n
        << " m=" << r.m << " pairs=" << r.pairs << " opt=" << r.opt
        << " preserver=" << r.preserver_size << " preserver_ratio=" << Fixed(r.preserver_ratio())
        << " root=" << r.root << " junction_opt=" << r.junction_opt_edges << '/'
        << r.junction_opt_pairs << " junction=" << r.junction_edges << '/' << r.junction_pairs
        << " junction_ratio=" << Fixed(r.junction_ratio());
    if (!r.error.empty()) out << " error=\"" << r.error << '"';
    out << '\n';
    if (r.error.empty()) ++ratio_ok;
    max_pr = std::max(max_pr, r.preserver_ratio());
    max_jr = std::max(max_jr, r.junction_ratio());
    sum_pr += r.preserver_ratio();
    sum_jr += r.junction_ratio();
  }
  all_ok = all_ok && ratio_ok == o.ratio;

  const auto red = ParallelMap<ReductionRecord>(
      o.reductions, o.jobs, [&](int i) { return RunReductionCounts(o.seed, i); });
  int red_ok = 0;
  for (const auto& r : red) {
    out << "reduction index=" << r.index << " r=" << r.r << " sigma=" << r.sigma
        << " d=" << r.d << " x=" << r.x << " k=" << r.k << " vertices=" << r.vertices
        << " edges=" << r.edges << " counts_match=" << (r.counts_match ? 1 : 0);
    if (!r.counts_match) out << " mismatch=\"" << r.mismatch << '"';
    out << '\n';
    red_ok += r.counts_match;
  }
  all_ok = all_ok && red_ok == o.reductions;

  out << "summary.feasibility.instances=" << o.feasibility << '\n'
      << "summary.feasibility.passed=" << feas_ok << '\n'
      << "summary.feasibility.coherent=" << coherent << '\n'
      << "summary.feasibility.total_preserver_edges=" << sum_p << '\n'
      << "summary.feasibility.total_spanner_edges=" << sum_s << '\n'
      << "summary.feasibility.total_dsf_edges=" << sum_d << '\n'
      << "summary.ratio.instances=" << o.ratio << '\n'
      << "summary.ratio.completed=" << ratio_ok << '\n'
      << "summary.ratio.preserver_max=" << Fixed(max_pr) << '\n'
      << "summary.ratio.preserver_mean=" << Fixed(o.ratio ? sum_pr / o.ratio : 0.0) << '\n'
      << "summary.ratio.junction_max=" << Fixed(max_jr) << '\n'
      << "summary.ratio.junction_mean=" << Fixed(o.ratio ? sum_jr / o.ratio : 0.0) << '\n'
      << "summary.reduction.instances=" << o.reductions << '\n'
      << "summary.reduction.matching=" << red_ok << '\n'
      << "summary.status=" << (all_ok ? "pass" : "fail") << '\n';
  return all_ok;
}

}  // namespace spanopt::suites
