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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "spanopt/io.hpp"
#include "spanopt/minrep.hpp"

namespace spanopt {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("spanopt_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string WriteFile(const std::string& name, const std::string& body) {
    std::ofstream(Path(name)) << body;
    return Path(name);
  }

  int Run(std::vector<std::string> args) {
    args.insert(args.begin(), "spanopt");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    out_.str("");
    err_.str("");
    return cli::run(static_cast<int>(argv.size()), argv.data(), out_, err_);
  }

  void WriteDiamond() {
    std::ostringstream g, d;
    WriteGraph(g, Graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}));
    WriteDemands(d, DemandSet({Demand::Exact(0, 3)}));
    graph_ = WriteFile("g.txt", g.str());
    demands_ = WriteFile("d.txt", d.str());
  }

  fs::path dir_;
  std::ostringstream out_, err_;
  std::string graph_, demands_;
};

TEST_F(CliTest, SolvePreserverWritesVerifiableSolution) {
  WriteDiamond();
  ASSERT_EQ(Run({"solve-preserver", "--graph", graph_, "--demands", demands_, "--out",
                 Path("sol.txt")}),
            cli::kExitOk)
      << err_.str();
  EXPECT_NE(out_.str().find("size=2\n"), std::string::npos);
  EXPECT_NE(out_.str().find("status=ok"), std::string::npos);
  EXPECT_EQ(Run({"verify", "--graph", graph_, "--demands", demands_, "--solution",
                 Path("sol.txt")}),
            cli::kExitOk);
  EXPECT_NE(out_.str().find("result=pass"), std::string::npos);
}

TEST_F(CliTest, SolversAreDeterministic) {
  WriteDiamond();
  for (const char* cmd : {"solve-preserver", "solve-dsf", "solve-spanner"}) {
    ASSERT_EQ(Run({cmd, "--graph", graph_, "--demands", demands_, "--seed", "5", "--trace"}),
              cli::kExitOk)
        << cmd << ": " << err_.str();
    const std::string first = out_.str();
    Run({cmd, "--graph", graph_, "--demands", demands_, "--seed", "5", "--trace"});
    EXPECT_EQ(out_.str(), first) << cmd;
  }
}

TEST_F(CliTest, VerifyReportsViolation) {
  WriteDiamond();
  std::ostringstream s;
  WriteSolution(s, Graph(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}), EdgeSet({0}));
  const std::string sol = WriteFile("bad.txt", s.str());
  EXPECT_EQ(Run({"verify", "--graph", graph_, "--demands", demands_, "--solution", sol}),
            cli::kExitInfeasible);
  EXPECT_NE(out_.str().find("result=fail"), std::string::npos);
}

TEST_F(CliTest, MalformedGraphIsInfeasibleExit) {
  const std::string g = WriteFile("g.txt", "3 1\n0 9\n");
  const std::string d = WriteFile("d.txt", "");
  EXPECT_EQ(Run({"solve-dsf", "--graph", g, "--demands", d}), cli::kExitInfeasible);
  EXPECT_FALSE(err_.str().empty());
}

TEST_F(CliTest, UnknownSubcommandFails) {
  EXPECT_NE(Run({"frobnicate"}), cli::kExitOk);
}

TEST_F(CliTest, OracleExactAndBudget) {
  WriteDiamond();
  ASSERT_EQ(Run({"oracle", "--graph", graph_, "--demands", demands_}), cli::kExitOk);
  EXPECT_NE(out_.str().find("opt=2\n"), std::string::npos);
  EXPECT_EQ(Run({"oracle", "--graph", graph_, "--demands", demands_, "--max-edges", "1"}),
            cli::kExitBudget);
  ASSERT_EQ(Run({"oracle", "--graph", graph_, "--demands", demands_, "--root", "1"}),
            cli::kExitOk);
  EXPECT_NE(out_.str().find("density=2\n"), std::string::npos);
}

TEST_F(CliTest, GenerateReduceAndVerifyWitness) {
  ASSERT_EQ(Run({"gen-minrep", "--r", "1", "--sigma", "2", "--d", "1", "--seed", "3",
                 "--out", Path("mr.txt")}),
            cli::kExitOk);
  ASSERT_EQ(Run({"reduce", "+1", "--minrep", Path("mr.txt"), "--x", "2", "--out",
                 Path("g.txt"), "--roles", Path("roles.txt"), "--witness", Path("h.txt")}),
            cli::kExitOk)
      << err_.str();
  EXPECT_NE(out_.str().find("family.star="), std::string::npos);
  EXPECT_EQ(Run({"verify", "--graph", Path("g.txt"), "--solution", Path("h.txt"), "--k", "1"}),
            cli::kExitOk);
  EXPECT_NE(out_.str().find("result=pass"), std::string::npos);
  EXPECT_EQ(Run({"verify", "--graph", Path("g.txt"), "--solution", Path("h.txt"), "--k", "0"}),
            cli::kExitInfeasible);

  ASSERT_EQ(Run({"reduce", "+k", "--minrep", Path("mr.txt"), "--k", "4", "--witness",
                 Path("hk.txt"), "--out", Path("gk.txt")}),
            cli::kExitOk);
  EXPECT_EQ(Run({"verify", "--graph", Path("gk.txt"), "--solution", Path("hk.txt"), "--k", "4"}),
            cli::kExitOk);
  EXPECT_EQ(Run({"reduce", "+k", "--minrep", Path("mr.txt"), "--k", "2"}),
            cli::kExitInfeasible);
}

TEST_F(CliTest, SmallBenchIsDeterministic) {
  const std::vector<std::string> args{"bench", "--seed", "3", "--feasibility", "4",
                                      "--ratio", "2", "--reductions", "4"};
  ASSERT_EQ(Run(args), cli::kExitOk) << err_.str();
  const std::string first = out_.str();
  EXPECT_NE(first.find("summary.status=pass"), std::string::npos);
  auto with_jobs = args;
  with_jobs.insert(with_jobs.end(), {"--jobs", "2"});
  ASSERT_EQ(Run(with_jobs), cli::kExitOk);
  EXPECT_EQ(out_.str(), first);
}

}  // namespace
}  // namespace spanopt
