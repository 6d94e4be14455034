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

#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "spanopt/dsf.hpp"
#include "spanopt/errors.hpp"
#include "spanopt/hardness.hpp"
#include "spanopt/io.hpp"
#include "spanopt/junction.hpp"
#include "spanopt/minrep.hpp"
#include "spanopt/oracle.hpp"
#include "spanopt/preserver.hpp"
#include "spanopt/trace.hpp"
#include "suites.hpp"

namespace spanopt::cli {

namespace {

struct Common {
  std::string graph;
  std::string demands;
  double epsilon = 0.5;
  Seed seed = 1;
  std::string out;
  bool trace = false;
};

void AddCommon(CLI::App* app, Common& c, bool need_demands) {
  app->add_option("--graph", c.graph, "Graph file")->required()->check(CLI::ExistingFile);
  auto* d = app->add_option("--demands", c.demands, "Demand file")->check(CLI::ExistingFile);
  if (need_demands) d->required();
  app->add_option("--epsilon", c.epsilon, "Accuracy parameter")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--seed", c.seed, "Random seed")->capture_default_str();
  app->add_option("--out", c.out, "Write the solution edges to this file");
  app->add_flag("--trace", c.trace, "Print the pipeline trace");
}

void WriteFileOrThrow(const std::string& path, const std::function<void(std::ostream&)>& fn) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  fn(f);
  if (!f) throw std::runtime_error("write to " + path + " failed");
}

void WritePairs(std::ostream& out, const Graph& g, const DemandSet& demands,
                const VerificationReport& report) {
  for (const PairReport& p : report.pairs) {
    const Demand& d = demands[p.demand];
    out << "pair index=" << p.demand << " s=" << d.s << " t=" << d.t << " distance=";
    if (p.achieved == kUnreachable) {
      out << "inf";
    } else {
      out << p.achieved;
    }
    out << " limit=";
    if (p.limit == kUnreachable) {
      out << "inf";
    } else {
      out << p.limit;
    }
    out << " ok=" << (p.satisfied ? 1 : 0) << '\n';
  }
  (void)g;
}

int Solve(const std::string& algorithm, const Common& c, std::ostream& out) {
  const Graph g = ReadGraphFile(c.graph);
  const DemandSet demands = ReadDemandsFile(c.demands);
  Trace trace;
  Trace* tp = c.trace ? &trace : nullptr;
  EdgeSet h;
  if (algorithm == "preserver") {
    h = PreserverApprox(g, demands, c.epsilon, c.seed, tp);
  } else if (algorithm == "dsf") {
    h = DsfApprox(g, demands, c.epsilon, c.seed, tp);
  } else {
    h = PairwiseSpannerApprox(g, demands, c.epsilon, c.seed, tp);
  }
  const auto report = VerifySolution(g, h, demands);
  out << "algorithm=" << algorithm << "\nseed=" << c.seed << "\nepsilon=" << c.epsilon
      << "\nvertices=" << g.num_vertices() << "\nedges=" << g.num_edges()
      << "\npairs=" << demands.size() << "\nsize=" << h.size() << '\n';
  for (EdgeId e : h) out << "edge " << g.edge(e).from << ' ' << g.edge(e).to << '\n';
  WritePairs(out, g, demands, report);
  if (tp) {
    for (const auto& [k, v] : trace.entries()) out << "trace " << k << '=' << v << '\n';
  }
  out << "status=" << (report.AllSatisfied() ? "ok" : "violated") << '\n';
  if (!c.out.empty()) {
    WriteFileOrThrow(c.out, [&](std::ostream& f) { WriteSolution(f, g, h); });
  }
  return report.AllSatisfied() ? kExitOk : kExitInternal;
}

struct MinRepArgs {
  int r = 2;
  int sigma = 2;
  int d = 1;
  Seed seed = 1;
  std::string out;
};

int GenMinRep(const MinRepArgs& a, std::ostream& out) {
  const PlantedMinRep p = MinRepYes(a.r, a.sigma, a.d, a.seed);
  if (a.out.empty()) {
    WriteMinRep(out, p.instance, &p.cover);
  } else {
    WriteFileOrThrow(a.out, [&](std::ostream& f) { WriteMinRep(f, p.instance, &p.cover); });
    out << "r=" << a.r << "\nsigma=" << a.sigma << "\nd=" << a.d
        << "\nedges=" << p.instance.edges.size() << "\ncover_size=" << p.cover.size()
        << "\nstatus=ok\n";
  }
  return kExitOk;
}

struct ReduceArgs {
  std::string mode;
  std::string minrep;
  int x = 1;
  int k = 3;
  std::string out;
  std::string roles;
  std::string witness;
};

int Reduce(const ReduceArgs& a, std::ostream& out) {
  std::ifstream in(a.minrep);
  if (!in) throw std::runtime_error("cannot open " + a.minrep);
  std::vector<int> cover;
  const MinRepInstance inst = ReadMinRep(in, &cover, a.minrep);
  SpannerInstance g;
  if (a.mode == "+1") {
    g = ReducePlus1(inst, a.x);
  } else if (a.mode == "+k") {
    g = ReducePlusK(inst, a.x, a.k);
  } else {
    throw std::invalid_argument("reduce mode must be +1 or +k");
  }
  out << "mode=" << a.mode << "\nk=" << g.k << "\nx=" << g.x
      << "\nmain_vertices=" << g.main_vertices << "\nvertices=" << g.graph.num_vertices()
      << "\nedges=" << g.graph.num_edges() << '\n';
  for (int f = 0; f < kNumEdgeFamilies; ++f) {
    const auto fam = static_cast<EdgeFamily>(f);
    out << "family." << ToString(fam) << '=' << g.CountFamily(fam) << '\n';
  }
  if (!a.out.empty()) {
    WriteFileOrThrow(a.out, [&](std::ostream& f) { WriteUndirected(f, g.graph); });
  }
  if (!a.roles.empty()) {
    WriteFileOrThrow(a.roles, [&](std::ostream& f) { WriteRoles(f, g); });
  }
  if (!a.witness.empty()) {
    if (cover.empty()) throw std::invalid_argument("witness needs a cover line in the min-rep file");
    const EdgeSet h = g.k == 1 ? CompletenessWitnessPlus1(g, cover)
                               : CompletenessWitnessPlusK(g, cover);
    WriteFileOrThrow(a.witness, [&](std::ostream& f) {
      f << g.graph.num_vertices() << ' ' << h.size() << '\n';
      for (int e : h) f << g.graph.edge(e).first << ' ' << g.graph.edge(e).second << '\n';
    });
    out << "witness_edges=" << h.size() << '\n';
  }
  out << "status=ok\n";
  return kExitOk;
}

struct VerifyArgs {
  std::string graph;
  std::string demands;
  std::string solution;
  std::optional<int> k;
};

int Verify(const VerifyArgs& a, std::ostream& out) {
  if (a.k) {
    std::ifstream gi(a.graph);
    if (!gi) throw std::runtime_error("cannot open " + a.graph);
    const UndirectedGraph g = ReadUndirected(gi, a.graph);
    std::ifstream si(a.solution);
    if (!si) throw std::runtime_error("cannot open " + a.solution);
    const UndirectedGraph sol = ReadUndirected(si, a.solution);
    if (sol.num_vertices() != g.num_vertices()) {
      throw ParseError(a.solution, 1, "vertex count does not match the graph");
    }
    std::vector<int> ids;
    for (const auto& [u, v] : sol.edges()) {
      const auto e = g.find_edge(u, v);
      if (!e) throw ParseError(a.solution, 1, "edge " + std::to_string(u) + " " + std::to_string(v) + " not in graph");
      ids.push_back(*e);
    }
    const EdgeSet h(std::move(ids));
    const auto mask = h.Mask(g.num_edges());
    long checked = 0, violated = 0;
    for (int s = 0; s < g.num_vertices(); ++s) {
      const auto dg = UndirectedBfs(g, s);
      const auto dh = UndirectedBfs(g, s, &mask);
      for (int t = 0; t < g.num_vertices(); ++t) {
        if (t == s || dg[t] == kUnreachable) continue;
        ++checked;
        if (dh[t] == kUnreachable || dh[t] > dg[t] + *a.k) {
          if (violated < 20) {
            out << "violation s=" << s << " t=" << t << " distance_g=" << dg[t]
                << " distance_h=" << (dh[t] == kUnreachable ? std::string("inf") : std::to_string(dh[t]))
                << '\n';
          }
          ++violated;
        }
      }
    }
    out << "mode=additive\nk=" << *a.k << "\nsize=" << h.size() << "\npairs_checked=" << checked
        << "\npairs_violated=" << violated << "\nresult=" << (violated ? "fail" : "pass")
        << '\n';
    return violated ? kExitInfeasible : kExitOk;
  }
  if (a.demands.empty()) throw std::invalid_argument("verify needs --demands or --k");
  const Graph g = ReadGraphFile(a.graph);
  const DemandSet demands = ReadDemandsFile(a.demands);
  const EdgeSet h = ReadSolutionFile(a.solution, g);
  const auto report = VerifySolution(g, h, demands);
  out << "mode=demands\nsize=" << h.size() << '\n';
  WritePairs(out, g, demands, report);
  out << "pairs_satisfied=" << report.NumSatisfied() << "\nresult="
      << (report.AllSatisfied() ? "pass" : "fail") << '\n';
  return report.AllSatisfied() ? kExitOk : kExitInfeasible;
}

struct OracleArgs {
  std::string graph;
  std::string demands;
  std::optional<int> root;
  std::optional<int> max_edges;
  std::string out;
};

int Oracle(const OracleArgs& a, std::ostream& out) {
  const Graph g = ReadGraphFile(a.graph);
  const DemandSet demands = ReadDemandsFile(a.demands);
  if (a.root) {
    const auto res = ExactMinDensityJunctionTree(
        g, demands, *a.root, a.max_edges ? *a.max_edges : OracleEdgeBudget(kDefaultJunctionOracleEdges));
    out << "problem=junction_density\nroot=" << *a.root
        << "\nfinite=" << (res.finite ? 1 : 0) << '\n';
    if (res.finite) {
      out << "edges=" << res.edges << "\npairs=" << res.pairs << "\ndensity=" << res.density()
          << '\n';
      for (EdgeId e : res.witness) out << "edge " << g.edge(e).from << ' ' << g.edge(e).to << '\n';
      for (int p : res.satisfied) out << "satisfied " << p << '\n';
    }
    out << "status=ok\n";
    return kExitOk;
  }
  const auto res = ExactMinSolution(g, demands, a.max_edges ? *a.max_edges : OracleEdgeBudget());
  out << "problem=min_solution\nopt=" << res.opt << "\nsubsets_checked=" << res.subsets_checked
      << '\n';
  for (EdgeId e : res.witness) out << "edge " << g.edge(e).from << ' ' << g.edge(e).to << '\n';
  out << "status=ok\n";
  if (!a.out.empty()) {
    WriteFileOrThrow(a.out, [&](std::ostream& f) { WriteSolution(f, g, res.witness); });
  }
  return kExitOk;
}

struct BenchArgs {
  std::string suite = "desk";
  suites::DeskOptions desk;
  std::string out;
};

int Bench(const BenchArgs& a, std::ostream& out) {
  if (a.suite != "desk") throw std::invalid_argument("unknown suite '" + a.suite + "'");
  bool ok = false;
  if (a.out.empty()) {
    ok = suites::RunDesk(a.desk, out);
  } else {
    WriteFileOrThrow(a.out, [&](std::ostream& f) { ok = suites::RunDesk(a.desk, f); });
    out << "status=" << (ok ? "pass" : "fail") << '\n';
  }
  return ok ? kExitOk : kExitInternal;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distance preservers, pairwise spanners and directed Steiner forest"};
  app.require_subcommand(1);

  Common preserver, dsf, spanner;
  auto* sp = app.add_subcommand("solve-preserver", "Approximate a pairwise distance preserver");
  AddCommon(sp, preserver, true);
  auto* sd = app.add_subcommand("solve-dsf", "Approximate a directed Steiner forest");
  AddCommon(sd, dsf, true);
  auto* ss = app.add_subcommand("solve-spanner", "Approximate a pairwise spanner");
  AddCommon(ss, spanner, true);

  MinRepArgs mr;
  auto* gm = app.add_subcommand("gen-minrep", "Generate a YES Min-Rep instance");
  gm->add_option("--r", mr.r, "Supernodes per side")->check(CLI::PositiveNumber);
  gm->add_option("--sigma", mr.sigma, "Group size")->check(CLI::PositiveNumber);
  gm->add_option("--d", mr.d, "Supergraph degree")->check(CLI::PositiveNumber);
  gm->add_option("--seed", mr.seed, "Random seed");
  gm->add_option("--out", mr.out, "Output file");

  ReduceArgs ra;
  auto* rd = app.add_subcommand("reduce", "Build an additive-spanner instance from Min-Rep");
  rd->add_option("mode", ra.mode, "+1 or +k")->required();
  rd->add_option("--minrep", ra.minrep, "Min-Rep file")->required()->check(CLI::ExistingFile);
  rd->add_option("--x", ra.x, "Copies per supernode")->check(CLI::PositiveNumber);
  rd->add_option("--k", ra.k, "Additive stretch for +k (>= 3)");
  rd->add_option("--out", ra.out, "Undirected graph output");
  rd->add_option("--roles", ra.roles, "Role map output");
  rd->add_option("--witness", ra.witness, "Completeness witness output (needs a cover)");

  VerifyArgs va;
  auto* vf = app.add_subcommand("verify", "Check a solution");
  vf->add_option("--graph", va.graph, "Graph file")->required()->check(CLI::ExistingFile);
  vf->add_option("--solution", va.solution, "Solution file")->required()->check(CLI::ExistingFile);
  vf->add_option("--demands", va.demands, "Demand file")->check(CLI::ExistingFile);
  vf->add_option("--k", va.k, "Additive stretch (undirected graph)");

  OracleArgs oa;
  auto* oc = app.add_subcommand("oracle", "Exact solution by subset search");
  oc->add_option("--graph", oa.graph, "Graph file")->required()->check(CLI::ExistingFile);
  oc->add_option("--demands", oa.demands, "Demand file")->required()->check(CLI::ExistingFile);
  oc->add_option("--root", oa.root, "Minimum-density junction tree at this root");
  oc->add_option("--max-edges", oa.max_edges, "Candidate edge budget");
  oc->add_option("--out", oa.out, "Write the optimal solution to this file");

  BenchArgs ba;
  auto* bc = app.add_subcommand("bench", "Run a benchmark suite");
  bc->add_option("--suite", ba.suite, "Suite name")->capture_default_str();
  bc->add_option("--seed", ba.desk.seed, "Random seed")->capture_default_str();
  bc->add_option("--epsilon", ba.desk.epsilon, "Accuracy parameter")->check(CLI::PositiveNumber);
  bc->add_option("--feasibility", ba.desk.feasibility, "Feasibility instances")->check(CLI::NonNegativeNumber);
  bc->add_option("--ratio", ba.desk.ratio, "Oracle ratio instances")->check(CLI::NonNegativeNumber);
  bc->add_option("--reductions", ba.desk.reductions, "Reduction instances")->check(CLI::NonNegativeNumber);
  bc->add_option("--jobs", ba.desk.jobs, "Worker threads")->check(CLI::PositiveNumber);
  bc->add_option("--out", ba.out, "Report file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  }

  try {
    if (*sp) return Solve("preserver", preserver, out);
    if (*sd) return Solve("dsf", dsf, out);
    if (*ss) return Solve("spanner", spanner, out);
    if (*gm) return GenMinRep(mr, out);
    if (*rd) return Reduce(ra, out);
    if (*vf) return Verify(va, out);
    if (*oc) return Oracle(oa, out);
    if (*bc) return Bench(ba, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const InfeasibleInstanceError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const BudgetExceededError& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace spanopt::cli
