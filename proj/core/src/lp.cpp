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

#include "spanopt/lp.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace spanopt {

int LpModel::AddVariable(std::string name, double cost) {
  costs_.push_back(cost);
  if (name.empty()) name = "v" + std::to_string(costs_.size() - 1);
  names_.push_back(std::move(name));
  return static_cast<int>(costs_.size()) - 1;
}

int LpModel::AddConstraint(std::vector<Term> terms, Sense sense, double rhs,
                           std::string name) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  for (const Term& t : terms) {
    if (t.var < 0 || t.var >= num_variables()) {
      throw std::out_of_range("constraint references unknown variable");
    }
    if (!merged.empty() && merged.back().var == t.var) {
      merged.back().coef += t.coef;
    } else {
      merged.push_back(t);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coef == 0.0; });
  if (name.empty()) name = "c" + std::to_string(constraints_.size());
  constraints_.push_back({std::move(merged), sense, rhs, std::move(name)});
  return static_cast<int>(constraints_.size()) - 1;
}

void LpModel::WriteLp(std::ostream& out) const {
  auto write_terms = [&](auto begin, auto end, auto coef_of, auto var_of) {
    bool first = true;
    for (auto it = begin; it != end; ++it) {
      const double c = coef_of(*it);
      if (c == 0.0) continue;
      out << (c < 0 ? " - " : (first ? " " : " + ")) << std::abs(c) << ' '
          << names_[var_of(*it)];
      first = false;
    }
    if (first) out << " 0 " << (names_.empty() ? "x" : names_[0]);
  };
  out << "Minimize\n obj:";
  std::vector<int> all(costs_.size());
  for (size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  write_terms(all.begin(), all.end(), [&](int v) { return costs_[v]; },
              [](int v) { return v; });
  out << "\nSubject To\n";
  for (const Constraint& c : constraints_) {
    out << ' ' << c.name << ':';
    write_terms(c.terms.begin(), c.terms.end(),
                [](const Term& t) { return t.coef; },
                [](const Term& t) { return t.var; });
    switch (c.sense) {
      case Sense::kLessEqual:
        out << " <= ";
        break;
      case Sense::kGreaterEqual:
        out << " >= ";
        break;
      case Sense::kEqual:
        out << " = ";
        break;
    }
    out << c.rhs << '\n';
  }
  out << "End\n";
}

const char* ToString(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kNumericalFailure:
      return "numerical_failure";
  }
  return "unknown";
}

namespace {

class Tableau {
 public:
  Tableau(int rows, int cols)
      : rows_(rows), width_(cols + 1), data_(static_cast<size_t>(rows) * width_) {}

  double* row(int i) { return data_.data() + static_cast<size_t>(i) * width_; }
  int rows() const { return rows_; }
  int width() const { return width_; }
  int rhs() const { return width_ - 1; }

  void DropRow(int i) {
    if (i != rows_ - 1) {
      std::copy(row(rows_ - 1), row(rows_ - 1) + width_, row(i));
    }
    --rows_;
    data_.resize(static_cast<size_t>(rows_) * width_);
  }

 private:
  int rows_;
  int width_;
  std::vector<double> data_;
};

enum class Outcome { kOptimal, kUnbounded, kIterationLimit };

class Simplex {
 public:
  Simplex(Tableau& t, std::vector<int>& basis, const SimplexOptions& opt,
          long max_iter)
      : t_(t), basis_(basis), opt_(opt), max_iter_(max_iter) {}

  void Pivot(int r, int c, std::vector<double>& d) {
    double* pr = t_.row(r);
    const double inv = 1.0 / pr[c];
    nz_.clear();
    for (int k = 0; k < t_.width(); ++k) {
      if (pr[k] != 0.0) {
        pr[k] *= inv;
        if (std::abs(pr[k]) < 1e-14) {
          pr[k] = 0.0;
        } else {
          nz_.push_back(k);
        }
      }
    }
    pr[c] = 1.0;
    for (int i = 0; i < t_.rows(); ++i) {
      if (i == r) continue;
      double* ri = t_.row(i);
      const double f = ri[c];
      if (f == 0.0) continue;
      for (int k : nz_) ri[k] -= f * pr[k];
      ri[c] = 0.0;
    }
    const double f = d[c];
    if (f != 0.0) {
      for (int k : nz_) d[k] -= f * pr[k];
      d[c] = 0.0;
    }
    basis_[r] = c;
  }

  // Minimizes the reduced-cost row d over columns with allowed[j] != 0.
  Outcome Run(std::vector<double>& d, const std::vector<char>& allowed) {
    int degenerate = 0;
    bool bland = false;
    const int cols = t_.width() - 1;
    while (true) {
      int enter = -1;
      double best = -opt_.cost_tol;
      for (int j = 0; j < cols; ++j) {
        if (!allowed[j] || d[j] >= -opt_.cost_tol) continue;
        if (bland) {
          enter = j;
          break;
        }
        if (d[j] < best) {
          best = d[j];
          enter = j;
        }
      }
      if (enter < 0) return Outcome::kOptimal;
      int leave = -1;
      double ratio = 0.0;
      for (int i = 0; i < t_.rows(); ++i) {
        const double a = t_.row(i)[enter];
        if (a <= opt_.pivot_tol) continue;
        const double q = std::max(0.0, t_.row(i)[t_.rhs()]) / a;
        if (leave < 0 || q < ratio - 1e-12) {
          leave = i;
          ratio = q;
        } else if (q <= ratio + 1e-12 && basis_[i] < basis_[leave]) {
          leave = i;
        }
      }
      if (leave < 0) return Outcome::kUnbounded;
      if (ratio <= 1e-12) {
        if (++degenerate > opt_.degenerate_switch) bland = true;
      } else {
        degenerate = 0;
        bland = false;
      }
      Pivot(leave, enter, d);
      if (++iterations_ > max_iter_) return Outcome::kIterationLimit;
    }
  }

  long iterations() const { return iterations_; }

 private:
  Tableau& t_;
  std::vector<int>& basis_;
  const SimplexOptions& opt_;
  long max_iter_;
  long iterations_ = 0;
  std::vector<int> nz_;
};

}  // namespace

LpSolution SolveLp(const LpModel& model, const SimplexOptions& options) {
  const int n = model.num_variables();
  const auto& cons = model.constraints();
  const int m = static_cast<int>(cons.size());

  // Column layout: structural, slack/surplus, artificial.
  int num_slack = 0;
  int num_art = 0;
  std::vector<int> slack_col(m, -1);
  std::vector<int> art_col(m, -1);
  std::vector<double> sign(m, 1.0);
  std::vector<Sense> sense(m);
  for (int i = 0; i < m; ++i) {
    sense[i] = cons[i].sense;
    if (cons[i].rhs < 0) {
      sign[i] = -1.0;
      if (sense[i] == Sense::kLessEqual) {
        sense[i] = Sense::kGreaterEqual;
      } else if (sense[i] == Sense::kGreaterEqual) {
        sense[i] = Sense::kLessEqual;
      }
    }
    if (sense[i] != Sense::kEqual) slack_col[i] = n + num_slack++;
  }
  for (int i = 0; i < m; ++i) {
    if (sense[i] != Sense::kLessEqual) art_col[i] = n + num_slack + num_art++;
  }
  const int cols = n + num_slack + num_art;
  Tableau t(m, cols);
  std::vector<int> basis(m);
  double bmax = 1.0;
  for (int i = 0; i < m; ++i) {
    double* r = t.row(i);
    for (const Term& term : cons[i].terms) r[term.var] = sign[i] * term.coef;
    r[t.rhs()] = sign[i] * cons[i].rhs;
    bmax = std::max(bmax, std::abs(r[t.rhs()]));
    if (slack_col[i] >= 0) {
      r[slack_col[i]] = sense[i] == Sense::kLessEqual ? 1.0 : -1.0;
    }
    if (art_col[i] >= 0) {
      r[art_col[i]] = 1.0;
      basis[i] = art_col[i];
    } else {
      basis[i] = slack_col[i];
    }
  }

  const long max_iter = options.max_iterations > 0
                            ? options.max_iterations
                            : 50L * (m + cols) + 1000;
  LpSolution sol;
  Simplex simplex(t, basis, options, max_iter);
  auto is_art = [&](int col) { return col >= n + num_slack; };

  if (num_art > 0) {
    std::vector<double> d(t.width(), 0.0);
    for (int j = n + num_slack; j < cols; ++j) d[j] = 1.0;
    for (int i = 0; i < m; ++i) {
      if (!is_art(basis[i])) continue;
      const double* r = t.row(i);
      for (int k = 0; k < t.width(); ++k) d[k] -= r[k];
    }
    std::vector<char> allowed(cols, 1);
    const Outcome out = simplex.Run(d, allowed);
    sol.iterations = simplex.iterations();
    if (out == Outcome::kIterationLimit) return sol;
    double infeas = 0.0;
    for (int i = 0; i < t.rows(); ++i) {
      if (is_art(basis[i])) infeas += std::max(0.0, t.row(i)[t.rhs()]);
    }
    if (infeas > options.feasibility_tol * bmax) {
      sol.status = LpStatus::kInfeasible;
      return sol;
    }
    // Drive remaining artificials out of the basis; drop redundant rows.
    for (int i = 0; i < t.rows();) {
      if (!is_art(basis[i])) {
        ++i;
        continue;
      }
      const double* r = t.row(i);
      int best = -1;
      double best_abs = 1e-7;
      for (int j = 0; j < n + num_slack; ++j) {
        if (std::abs(r[j]) > best_abs) {
          best_abs = std::abs(r[j]);
          best = j;
        }
      }
      if (best >= 0) {
        simplex.Pivot(i, best, d);
        ++i;
      } else {
        t.DropRow(i);
        basis[i] = basis.back();
        basis.pop_back();
      }
    }
  }

  std::vector<double> d(t.width(), 0.0);
  for (int j = 0; j < n; ++j) d[j] = model.cost(j);
  for (int i = 0; i < t.rows(); ++i) {
    const int b = basis[i];
    const double cb = b < n ? model.cost(b) : 0.0;
    if (cb == 0.0) continue;
    const double* r = t.row(i);
    for (int k = 0; k < t.width(); ++k) d[k] -= cb * r[k];
  }
  std::vector<char> allowed(cols, 0);
  for (int j = 0; j < n + num_slack; ++j) allowed[j] = 1;
  const Outcome out = simplex.Run(d, allowed);
  sol.iterations = simplex.iterations();
  if (out == Outcome::kIterationLimit) return sol;
  if (out == Outcome::kUnbounded) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }

  sol.values.assign(n, 0.0);
  for (int i = 0; i < t.rows(); ++i) {
    if (basis[i] < n) sol.values[basis[i]] = t.row(i)[t.rhs()];
  }
  for (double& v : sol.values) {
    if (v < -1e-6) return sol;  // numerical failure
    if (v < 1e-12) v = 0.0;
  }
  // Residual check against the original rows.
  for (const Constraint& c : cons) {
    double lhs = 0.0;
    double scale = std::max(1.0, std::abs(c.rhs));
    for (const Term& term : c.terms) {
      lhs += term.coef * sol.values[term.var];
      scale = std::max(scale, std::abs(term.coef * sol.values[term.var]));
    }
    const double tol = options.feasibility_tol * scale;
    const bool ok = (c.sense == Sense::kLessEqual && lhs <= c.rhs + tol) ||
                    (c.sense == Sense::kGreaterEqual && lhs >= c.rhs - tol) ||
                    (c.sense == Sense::kEqual && std::abs(lhs - c.rhs) <= tol);
    if (!ok) return sol;
  }
  sol.objective = 0.0;
  for (int j = 0; j < n; ++j) sol.objective += model.cost(j) * sol.values[j];
  sol.status = LpStatus::kOptimal;
  return sol;
}

}  // namespace spanopt
