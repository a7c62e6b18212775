// Copyright 2026 The nashqcp Authors.
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

// Bounded-variable linear programming for node relaxations.
//
// LpSolver runs a primal simplex over a dense tableau. Every variable,
// including the logical variable of each row, carries finite bounds, so
// there is no separate artificial basis: phase 1 starts from the all-logical
// basis and minimizes the sum of bound violations, phase 2 minimizes the
// objective from the feasible basis phase 1 leaves behind.
//
// Pricing is Dantzig with a steepest-edge pick among the best few
// candidates; after 50 consecutive degenerate pivots the solver switches to
// Bland's rule until it makes progress again. The ratio test is Harris'
// two-pass test.
//
// Presolve removes fixed variables and rows that their bounds already
// satisfy. The dense tableau costs rows x (columns + rows) doubles, which is
// comfortable up to a few thousand rows; the relaxations built for games of
// up to five players with three strategies stay below that.

#ifndef NASHQCP_LP_H_
#define NASHQCP_LP_H_

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "nashqcp/errors.h"
#include "nashqcp/linear.h"

namespace nashqcp {

struct Interval {
  double lower = 0.0;
  double upper = 0.0;

  double width() const { return upper - lower; }
  bool contains(double x) const { return lower <= x && x <= upper; }
};

struct LpRow {
  std::vector<std::pair<VarId, double>> terms;
  Sense sense = Sense::kEqual;
  double rhs = 0.0;

  double activity(const std::vector<double>& x) const {
    double sum = 0.0;
    for (const auto& [id, coef] : terms) sum += coef * x[id];
    return sum;
  }
};

struct LinearProgram {
  std::vector<double> lower;
  std::vector<double> upper;
  std::vector<double> objective;
  std::vector<LpRow> rows;
  bool maximize = false;

  std::size_t num_variables() const { return lower.size(); }
  std::size_t num_rows() const { return rows.size(); }

  VarId add_variable(double lo, double up, double cost = 0.0) {
    lower.push_back(lo);
    upper.push_back(up);
    objective.push_back(cost);
    return lower.size() - 1;
  }
  void add_row(LpRow row) { rows.push_back(std::move(row)); }

  // Largest bound or row violation of x.
  double max_violation(const std::vector<double>& x) const {
    double worst = 0.0;
    for (std::size_t j = 0; j < lower.size(); ++j) {
      worst = std::max({worst, lower[j] - x[j], x[j] - upper[j]});
    }
    for (const auto& row : rows) {
      worst = std::max(worst, row_violation(row.activity(x), row.sense, row.rhs));
    }
    return worst;
  }

  void validate() const {
    const std::size_t n = lower.size();
    if (upper.size() != n || objective.size() != n) {
      throw InputError("bound and objective vectors differ in length");
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!std::isfinite(lower[j]) || !std::isfinite(upper[j])) {
        throw InputError("every LP variable needs finite bounds");
      }
    }
    for (const auto& row : rows) {
      for (const auto& [id, coef] : row.terms) {
        if (id >= n) throw InputError("row refers to an unknown variable");
        if (!std::isfinite(coef)) throw InputError("non-finite coefficient");
      }
      if (!std::isfinite(row.rhs)) throw InputError("non-finite right side");
    }
  }
};

enum class LpStatus : char {
  kOptimal,
  kInfeasible,
  kIterationLimit,
  // Final basis failed the feasibility audit even after refactorization.
  kNumericFailure,
};

struct LpSolution {
  LpStatus status = LpStatus::kNumericFailure;
  std::vector<double> values;
  double objective = 0.0;
  // Infeasible only: row multipliers y of the phase-1 optimum. The sum of
  // violations cannot be reduced along any direction, and y certifies it.
  std::vector<double> farkas;
  std::size_t iterations = 0;
};

struct LpOptions {
  double primal_tolerance = 1e-9;
  double optimality_tolerance = 1e-9;
  double pivot_tolerance = 1e-10;
  int bland_after_degenerate = 50;
  // 0 means 50 * (rows + columns).
  std::size_t iteration_limit = 0;
};

// The McCormick envelope of w = x * y over the box x_box by y_box, as four
// rows in the order
//   w >= lx*y + ly*x - lx*ly,   w >= ux*y + uy*x - ux*uy,
//   w <= ux*y + ly*x - ux*ly,   w <= lx*y + uy*x - lx*uy.
// A degenerate box (lx == ux or ly == uy) collapses the envelope to the
// equality w = x * y.
inline std::array<LpRow, 4> mccormick_rows(VarId w, VarId x, VarId y,
                                           Interval x_box, Interval y_box) {
  const double lx = x_box.lower, ux = x_box.upper;
  const double ly = y_box.lower, uy = y_box.upper;
  if (!(lx <= ux) || !(ly <= uy) || !std::isfinite(lx) || !std::isfinite(ux) ||
      !std::isfinite(ly) || !std::isfinite(uy)) {
    throw InputError("McCormick envelope needs finite non-empty boxes");
  }
  auto row = [&](double cx, double cy, Sense sense, double rhs) {
    return LpRow{{{w, 1.0}, {x, -cx}, {y, -cy}}, sense, rhs};
  };
  return {row(ly, lx, Sense::kGreaterEqual, -lx * ly),
          row(uy, ux, Sense::kGreaterEqual, -ux * uy),
          row(ly, ux, Sense::kLessEqual, -ux * ly),
          row(uy, lx, Sense::kLessEqual, -lx * uy)};
}

class LpSolver {
 public:
  explicit LpSolver(LinearProgram lp, LpOptions options = {})
      : lp_(std::move(lp)), options_(options) {
    lp_.validate();
  }

  const LinearProgram& program() const { return lp_; }

  // Tightens (or replaces) the bounds of one variable. When the new box lies
  // inside the old one and the variable survived presolve, the next solve()
  // starts from the current basis; otherwise it rebuilds.
  void set_bounds(VarId var, double lower, double upper) {
    if (var >= lp_.num_variables()) throw InputError("unknown variable");
    const bool nested = lower >= lp_.lower[var] && upper <= lp_.upper[var];
    lp_.lower[var] = lower;
    lp_.upper[var] = upper;
    if (!loaded_) return;
    const std::size_t col = var_col_[var];
    if (!nested || col == kNone || in_dropped_row_[var] || lower > upper) {
      loaded_ = false;
      return;
    }
    lo_[col] = lower;
    up_[col] = upper;
    if (!is_basic_[col]) {
      const double target = at_upper_[col] ? upper : lower;
      move_nonbasic(col, target);
    }
  }

  LpSolution solve() {
    LpSolution solution;
    if (!loaded_) {
      if (!load(solution)) return solution;
    }
    const std::size_t limit =
        options_.iteration_limit > 0
            ? options_.iteration_limit
            : 50 * (lp_.num_rows() + lp_.num_variables());
    for (int attempt = 0; attempt < 3; ++attempt) {
      const Outcome outcome = iterate(limit, solution);
      if (outcome == Outcome::kIterationLimit) {
        solution.status = LpStatus::kIterationLimit;
        solution.values = current_values();
        return solution;
      }
      if (outcome == Outcome::kInfeasible) {
        solution.status = LpStatus::kInfeasible;
        solution.farkas = farkas_multipliers();
        return solution;
      }
      solution.values = current_values();
      if (lp_.max_violation(solution.values) <= options_.primal_tolerance) {
        solution.status = LpStatus::kOptimal;
        solution.objective = 0.0;
        for (std::size_t j = 0; j < solution.values.size(); ++j) {
          solution.objective += lp_.objective[j] * solution.values[j];
        }
        return solution;
      }
      reinvert();
    }
    solution.status = LpStatus::kNumericFailure;
    return solution;
  }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  static constexpr std::size_t kPricingCandidates = 8;

  enum class Outcome { kOptimal, kInfeasible, kIterationLimit };

  double& at(std::size_t row, std::size_t col) {
    return tableau_[row * num_cols_ + col];
  }
  double at(std::size_t row, std::size_t col) const {
    return tableau_[row * num_cols_ + col];
  }

  // Presolve and set up the all-logical basis. Returns false (with the
  // solution filled in) when presolve already proves infeasibility.
  bool load(LpSolution& solution) {
    const std::size_t n = lp_.num_variables();
    const double tol = options_.primal_tolerance;
    var_col_.assign(n, kNone);
    in_dropped_row_.assign(n, false);
    col_var_.clear();
    kept_rows_.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (lp_.lower[j] > lp_.upper[j]) {
        solution.status = LpStatus::kInfeasible;
        solution.farkas.assign(lp_.num_rows(), 0.0);
        return false;
      }
      if (lp_.lower[j] < lp_.upper[j]) {
        var_col_[j] = col_var_.size();
        col_var_.push_back(j);
      }
    }
    const std::size_t num_struct = col_var_.size();

    struct KeptRow {
      std::size_t index;
      double lower, upper;
    };
    std::vector<KeptRow> kept;
    for (std::size_t k = 0; k < lp_.num_rows(); ++k) {
      const auto& row = lp_.rows[k];
      double constant = 0.0, min_act = 0.0, max_act = 0.0;
      bool has_free = false;
      for (const auto& [id, coef] : row.terms) {
        if (coef == 0.0) continue;
        if (var_col_[id] == kNone) {
          constant += coef * lp_.lower[id];
        } else {
          has_free = true;
          min_act += coef * (coef > 0 ? lp_.lower[id] : lp_.upper[id]);
          max_act += coef * (coef > 0 ? lp_.upper[id] : lp_.lower[id]);
        }
      }
      const double rhs = row.rhs - constant;
      double lo = row.sense == Sense::kLessEqual ? min_act : rhs;
      double hi = row.sense == Sense::kGreaterEqual ? max_act : rhs;
      auto infeasible = [&] {
        solution.status = LpStatus::kInfeasible;
        solution.farkas.assign(lp_.num_rows(), 0.0);
        solution.farkas[k] = max_act < lo ? 1.0 : -1.0;
        return false;
      };
      if (min_act > hi + tol || max_act < lo - tol) return infeasible();
      if (!has_free || (min_act >= lo - tol && max_act <= hi + tol)) {
        for (const auto& term : row.terms) in_dropped_row_[term.first] = true;
        continue;
      }
      lo = std::max(lo, min_act);
      hi = std::min(hi, max_act);
      if (lo > hi) lo = hi = 0.5 * (lo + hi);
      kept.push_back({k, lo, hi});
    }

    num_rows_ = kept.size();
    num_cols_ = num_struct + num_rows_;
    tableau_.assign(num_rows_ * num_cols_, 0.0);
    lo_.assign(num_cols_, 0.0);
    up_.assign(num_cols_, 0.0);
    cost_.assign(num_cols_, 0.0);
    x_.assign(num_cols_, 0.0);
    is_basic_.assign(num_cols_, false);
    at_upper_.assign(num_cols_, false);
    head_.assign(num_rows_, 0);
    const double sign = lp_.maximize ? -1.0 : 1.0;
    for (std::size_t c = 0; c < num_struct; ++c) {
      const std::size_t j = col_var_[c];
      lo_[c] = lp_.lower[j];
      up_[c] = lp_.upper[j];
      cost_[c] = sign * lp_.objective[j];
      x_[c] = lo_[c];
    }
    for (std::size_t i = 0; i < num_rows_; ++i) {
      kept_rows_.push_back(kept[i].index);
      const std::size_t logical = num_struct + i;
      lo_[logical] = kept[i].lower;
      up_[logical] = kept[i].upper;
      for (const auto& [id, coef] : lp_.rows[kept[i].index].terms) {
        if (var_col_[id] != kNone) at(i, var_col_[id]) -= coef;
      }
      at(i, logical) = 1.0;
      head_[i] = logical;
      is_basic_[logical] = true;
    }
    recompute_basics();
    loaded_ = true;
    return true;
  }

  void recompute_basics() {
    for (std::size_t i = 0; i < num_rows_; ++i) {
      const double* row = &tableau_[i * num_cols_];
      double value = 0.0;
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if (!is_basic_[j] && row[j] != 0.0) value -= row[j] * x_[j];
      }
      x_[head_[i]] = value;
    }
  }

  void move_nonbasic(std::size_t col, double target) {
    const double delta = target - x_[col];
    x_[col] = target;
    if (delta == 0.0) return;
    for (std::size_t i = 0; i < num_rows_; ++i) {
      const double t = at(i, col);
      if (t != 0.0) x_[head_[i]] -= t * delta;
    }
  }

  // Phase-1 cost of the basic variable in row i: -1 below its lower bound,
  // +1 above its upper bound.
  double infeasibility_cost(std::size_t i) const {
    const std::size_t b = head_[i];
    const double tol = options_.primal_tolerance * 0.1;
    if (x_[b] < lo_[b] - tol) return -1.0;
    if (x_[b] > up_[b] + tol) return 1.0;
    return 0.0;
  }

  Outcome iterate(std::size_t limit, LpSolution& solution) {
    const double ptol = options_.primal_tolerance * 0.1;
    const double dtol = options_.optimality_tolerance;
    std::vector<double> reduced(num_cols_);
    std::vector<double> row_cost(num_rows_);
    int degenerate_streak = 0;
    bool bland = false;
    for (std::size_t since_refresh = 0;; ++since_refresh) {
      if (solution.iterations >= limit) return Outcome::kIterationLimit;
      if (since_refresh == 100) {
        recompute_basics();
        since_refresh = 0;
      }

      bool phase_one = false;
      for (std::size_t i = 0; i < num_rows_; ++i) {
        row_cost[i] = infeasibility_cost(i);
        if (row_cost[i] != 0.0) phase_one = true;
      }
      if (!phase_one) {
        for (std::size_t i = 0; i < num_rows_; ++i) {
          row_cost[i] = cost_[head_[i]];
        }
      }
      for (std::size_t j = 0; j < num_cols_; ++j) {
        reduced[j] = phase_one ? 0.0 : cost_[j];
      }
      for (std::size_t i = 0; i < num_rows_; ++i) {
        const double c = row_cost[i];
        if (c == 0.0) continue;
        const double* row = &tableau_[i * num_cols_];
        for (std::size_t j = 0; j < num_cols_; ++j) reduced[j] -= c * row[j];
      }

      const std::size_t entering = price(reduced, dtol, bland);
      if (entering == kNone) {
        if (phase_one) {
          last_row_cost_ = row_cost;
          return Outcome::kInfeasible;
        }
        return Outcome::kOptimal;
      }
      ++solution.iterations;

      const double dir = reduced[entering] < 0.0 ? 1.0 : -1.0;
      const double flip = up_[entering] - lo_[entering];
      // Harris pass 1: largest step with bounds relaxed by ptol.
      double relaxed = flip;
      for (std::size_t i = 0; i < num_rows_; ++i) {
        const double alpha = -dir * at(i, entering);
        if (std::abs(alpha) <= options_.pivot_tolerance) continue;
        const double limit_i = step_limit(i, alpha, ptol);
        relaxed = std::min(relaxed, limit_i);
      }
      // Pass 2: among rows blocking within the relaxed step, take the
      // largest pivot (Bland: the lowest basic index).
      std::size_t leave = kNone;
      double step = flip;
      double best_alpha = 0.0;
      for (std::size_t i = 0; i < num_rows_; ++i) {
        const double alpha = -dir * at(i, entering);
        if (std::abs(alpha) <= options_.pivot_tolerance) continue;
        const double limit_i = step_limit(i, alpha, 0.0);
        if (limit_i > relaxed) continue;
        const bool better =
            bland ? (leave == kNone || limit_i < step ||
                     (limit_i == step && head_[i] < head_[leave]))
                  : std::abs(alpha) > best_alpha;
        if (better) {
          leave = i;
          best_alpha = std::abs(alpha);
          step = std::max(0.0, limit_i);
        }
      }

      if (leave == kNone || flip <= step) {
        // Bound flip, no basis change.
        move_nonbasic(entering, at_upper_[entering] ? lo_[entering]
                                                    : up_[entering]);
        at_upper_[entering] = !at_upper_[entering];
        degenerate_streak = 0;
        bland = false;
        continue;
      }

      if (step <= 1e-12) {
        if (++degenerate_streak >= options_.bland_after_degenerate) bland = true;
      } else {
        degenerate_streak = 0;
        bland = false;
      }

      const std::size_t leaving = head_[leave];
      const double alpha_leave = -dir * at(leave, entering);
      // The leaving variable exits at the bound it was moving toward: an
      // infeasible one at the bound it violated, a feasible one at the far
      // bound in its direction of travel.
      const bool to_upper = alpha_leave > 0.0
                                ? !(x_[leaving] < lo_[leaving] - ptol)
                                : x_[leaving] > up_[leaving] + ptol;
      for (std::size_t i = 0; i < num_rows_; ++i) {
        const double t = at(i, entering);
        if (t != 0.0) x_[head_[i]] -= t * dir * step;
      }
      x_[entering] += dir * step;
      x_[leaving] = to_upper ? up_[leaving] : lo_[leaving];
      at_upper_[leaving] = to_upper;
      is_basic_[leaving] = false;
      is_basic_[entering] = true;
      at_upper_[entering] = false;
      const double entering_value = x_[entering];
      pivot(leave, entering);
      x_[entering] = entering_value;
    }
  }

  // Step length at which the basic variable of row i reaches a blocking
  // bound when it moves at rate alpha; infinity if it never blocks.
  double step_limit(std::size_t i, double alpha, double slack) const {
    const std::size_t b = head_[i];
    const double x = x_[b];
    const double lo = lo_[b], up = up_[b];
    const double inf = std::numeric_limits<double>::infinity();
    const double tol = options_.primal_tolerance * 0.1;
    if (alpha > 0.0) {
      if (x < lo - tol) return (lo + slack - x) / alpha;
      if (x > up + tol) return inf;
      return (up + slack - x) / alpha;
    }
    if (x > up + tol) return (x - up + slack) / -alpha;
    if (x < lo - tol) return inf;
    return (x - lo + slack) / -alpha;
  }

  std::size_t price(const std::vector<double>& reduced, double dtol,
                    bool bland) const {
    auto attractive = [&](std::size_t j) {
      if (is_basic_[j] || lo_[j] == up_[j]) return 0.0;
      const double d = reduced[j];
      if (!at_upper_[j] && d < -dtol) return -d;
      if (at_upper_[j] && d > dtol) return d;
      return 0.0;
    };
    if (bland) {
      for (std::size_t j = 0; j < num_cols_; ++j) {
        if (attractive(j) > 0.0) return j;
      }
      return kNone;
    }
    std::array<std::pair<double, std::size_t>, kPricingCandidates> top{};
    std::size_t found = 0;
    for (std::size_t j = 0; j < num_cols_; ++j) {
      const double score = attractive(j);
      if (score <= 0.0) continue;
      if (found < kPricingCandidates) {
        top[found++] = {score, j};
      } else {
        auto weakest = std::min_element(top.begin(), top.end());
        if (score > weakest->first) *weakest = {score, j};
      }
    }
    std::size_t best = kNone;
    double best_ratio = 0.0;
    for (std::size_t k = 0; k < found; ++k) {
      const std::size_t j = top[k].second;
      double norm = 1.0;
      for (std::size_t i = 0; i < num_rows_; ++i) {
        const double t = at(i, j);
        norm += t * t;
      }
      const double ratio = top[k].first * top[k].first / norm;
      if (best == kNone || ratio > best_ratio ||
          (ratio == best_ratio && j < best)) {
        best = j;
        best_ratio = ratio;
      }
    }
    return best;
  }

  void pivot(std::size_t r, std::size_t q) {
    double* prow = &tableau_[r * num_cols_];
    const double inv = 1.0 / prow[q];
    pivot_nonzeros_.clear();
    for (std::size_t j = 0; j < num_cols_; ++j) {
      if (prow[j] == 0.0) continue;
      prow[j] *= inv;
      if (std::abs(prow[j]) < 1e-14) {
        prow[j] = 0.0;
      } else {
        pivot_nonzeros_.push_back(j);
      }
    }
    prow[q] = 1.0;
    for (std::size_t i = 0; i < num_rows_; ++i) {
      if (i == r) continue;
      double* row = &tableau_[i * num_cols_];
      const double factor = row[q];
      if (factor == 0.0) continue;
      for (std::size_t j : pivot_nonzeros_) {
        double v = row[j] - factor * prow[j];
        row[j] = std::abs(v) < 1e-14 ? 0.0 : v;
      }
      row[q] = 0.0;
    }
    head_[r] = q;
  }

  // Rebuilds the tableau for the current basis from the presolved rows by
  // Gaussian elimination, then recomputes the basic values.
  void reinvert() {
    const std::vector<std::size_t> wanted = head_;
    const std::size_t num_struct = col_var_.size();
    std::fill(tableau_.begin(), tableau_.end(), 0.0);
    for (std::size_t i = 0; i < num_rows_; ++i) {
      for (const auto& [id, coef] : lp_.rows[kept_rows_[i]].terms) {
        if (var_col_[id] != kNone) at(i, var_col_[id]) -= coef;
      }
      at(i, num_struct + i) = 1.0;
      head_[i] = num_struct + i;
    }
    std::vector<bool> wanted_flag(num_cols_, false);
    for (std::size_t c : wanted) wanted_flag[c] = true;
    std::fill(is_basic_.begin(), is_basic_.end(), false);
    for (std::size_t i = 0; i < num_rows_; ++i) is_basic_[head_[i]] = true;
    for (std::size_t c : wanted) {
      if (c >= num_struct) continue;
      std::size_t best_row = kNone;
      double best = 1e-9;
      for (std::size_t i = 0; i < num_rows_; ++i) {
        const std::size_t h = head_[i];
        if (h < num_struct || wanted_flag[h]) continue;
        if (std::abs(at(i, c)) > best) {
          best = std::abs(at(i, c));
          best_row = i;
        }
      }
      if (best_row == kNone) continue;
      const std::size_t out = head_[best_row];
      is_basic_[out] = false;
      is_basic_[c] = true;
      pivot(best_row, c);
      // A displaced logical rests at the bound nearest its old value.
      const bool upper = std::abs(x_[out] - up_[out]) < std::abs(x_[out] - lo_[out]);
      at_upper_[out] = upper;
      x_[out] = upper ? up_[out] : lo_[out];
    }
    for (std::size_t j = 0; j < num_cols_; ++j) {
      if (is_basic_[j]) continue;
      if (x_[j] != lo_[j] && x_[j] != up_[j]) {
        at_upper_[j] = std::abs(x_[j] - up_[j]) < std::abs(x_[j] - lo_[j]);
        x_[j] = at_upper_[j] ? up_[j] : lo_[j];
      }
    }
    recompute_basics();
  }

  std::vector<double> current_values() const {
    std::vector<double> values(lp_.num_variables());
    for (std::size_t j = 0; j < values.size(); ++j) {
      const std::size_t col = var_col_[j];
      values[j] = col == kNone
                      ? lp_.lower[j]
                      : std::clamp(x_[col], lp_.lower[j], lp_.upper[j]);
    }
    return values;
  }

  // y_k = c_B^T B^{-1} e_k for the phase-1 costs. The logical columns of
  // the tableau hold B^{-1}.
  std::vector<double> farkas_multipliers() const {
    std::vector<double> y(lp_.num_rows(), 0.0);
    const std::size_t num_struct = col_var_.size();
    for (std::size_t k = 0; k < num_rows_; ++k) {
      double value = 0.0;
      for (std::size_t i = 0; i < num_rows_; ++i) {
        value += last_row_cost_[i] * at(i, num_struct + k);
      }
      y[kept_rows_[k]] = value;
    }
    return y;
  }

  LinearProgram lp_;
  LpOptions options_;
  bool loaded_ = false;

  std::vector<std::size_t> var_col_;
  std::vector<bool> in_dropped_row_;
  std::vector<std::size_t> col_var_;
  std::vector<std::size_t> kept_rows_;
  std::size_t num_rows_ = 0;
  std::size_t num_cols_ = 0;
  std::vector<double> tableau_;
  std::vector<double> lo_, up_, cost_, x_;
  std::vector<bool> is_basic_, at_upper_;
  std::vector<std::size_t> head_;
  std::vector<std::size_t> pivot_nonzeros_;
  std::vector<double> last_row_cost_;
};

inline LpSolution solve_lp(const LinearProgram& lp,
                           const LpOptions& options = {}) {
  return LpSolver(lp, options).solve();
}

}  // namespace nashqcp

#endif  // NASHQCP_LP_H_
