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

#ifndef SPANOPT_LP_HPP_
#define SPANOPT_LP_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace spanopt {

enum class Sense { kLessEqual, kGreaterEqual, kEqual };

struct Term {
  int var = 0;
  double coef = 0.0;
};

struct Constraint {
  std::vector<Term> terms;
  Sense sense = Sense::kLessEqual;
  double rhs = 0.0;
  std::string name;
};

// Minimization LP over non-negative variables.
class LpModel {
 public:
  int AddVariable(std::string name, double cost = 0.0);
  // Repeated variables in terms are merged; zero coefficients dropped.
  int AddConstraint(std::vector<Term> terms, Sense sense, double rhs,
                    std::string name = "");
  void SetCost(int var, double cost) { costs_.at(var) = cost; }

  int num_variables() const { return static_cast<int>(costs_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  double cost(int var) const { return costs_[var]; }
  const std::string& name(int var) const { return names_[var]; }
  const std::vector<Constraint>& constraints() const { return constraints_; }

  // CPLEX LP text, for debugging with external solvers.
  void WriteLp(std::ostream& out) const;

 private:
  std::vector<double> costs_;
  std::vector<std::string> names_;
  std::vector<Constraint> constraints_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded, kNumericalFailure };

const char* ToString(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kNumericalFailure;
  double objective = 0.0;
  std::vector<double> values;
  long iterations = 0;

  bool optimal() const { return status == LpStatus::kOptimal; }
  double value(int var) const { return var < 0 ? 0.0 : values[var]; }
};

struct SimplexOptions {
  double feasibility_tol = 1e-7;
  double pivot_tol = 1e-9;
  double cost_tol = 1e-9;
  // Consecutive degenerate pivots before switching to Bland's rule.
  int degenerate_switch = 50;
  long max_iterations = 0;  // 0: 50 * (rows + columns)
};

// Dense two-phase primal simplex.
LpSolution SolveLp(const LpModel& model, const SimplexOptions& options = {});

}  // namespace spanopt

#endif  // SPANOPT_LP_HPP_
