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

// The Nash equilibrium feasibility program.
//
// For a game with payoffs in [0, 1] the program has, per pure strategy s of
// player i, a probability p, a pure-strategy utility u_s, a regret r and a
// support binary b, plus one best-utility variable u_i per player:
//
//   sum_s p_s = 1                                  (simplex)
//   u_s = sum_t payoff_i(s, t) * P(t)              (utility)
//   r_s = u_i - u_s                                (regret)
//   p_s + b_s <= 1                                 (support_prob)
//   r_s - U_i * b_s <= 0                           (support_regret)
//
// where t ranges over the opponents' joint pure strategies and P(t) is the
// probability of t. With two players P(t) is the opponent's p and the
// program is a linear MIP. With more players P(t) is a product variable
// over n-1 players, reified through a chain of bilinear equalities
//
//   P(s_a, s_b, ..., s_z) = p_{s_a} * P(s_b, ..., s_z)
//
// that peels off the lowest-indexed player. Product variables exist for
// every subset of 2..n-1 players and every joint strategy of the subset.
//
// U_i is the player's max minus min payoff. u_i >= u_s is implied by
// r >= 0 and is not emitted.

#ifndef NASHQCP_FORMULATION_H_
#define NASHQCP_FORMULATION_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nashqcp/errors.h"
#include "nashqcp/game.h"
#include "nashqcp/linear.h"

namespace nashqcp {

enum class VarKind : char {
  kProbMass,
  kBestUtility,
  kPureUtility,
  kRegret,
  kSupportBinary,
  kProductProb,
};

struct PureChoice {
  std::size_t player;
  std::size_t strategy;

  friend auto operator<=>(const PureChoice&, const PureChoice&) = default;
};

template <typename T>
struct VarDescriptor {
  VarKind kind;
  // Owning player and strategy. Unused strategy for kBestUtility; for
  // products these are the first member.
  std::size_t player = 0;
  std::size_t strategy = 0;
  // Products only: two or more members with distinct players, sorted.
  std::vector<PureChoice> members;
  T lower{0};
  T upper{1};
  bool binary = false;

  std::string name() const {
    auto choice = [](std::size_t i, std::size_t s) {
      return std::to_string(i) + ":" + std::to_string(s);
    };
    switch (kind) {
      case VarKind::kProbMass:
        return "p[" + choice(player, strategy) + "]";
      case VarKind::kBestUtility:
        return "u[" + std::to_string(player) + "]";
      case VarKind::kPureUtility:
        return "us[" + choice(player, strategy) + "]";
      case VarKind::kRegret:
        return "r[" + choice(player, strategy) + "]";
      case VarKind::kSupportBinary:
        return "b[" + choice(player, strategy) + "]";
      case VarKind::kProductProb: {
        std::string out = "p[";
        for (std::size_t k = 0; k < members.size(); ++k) {
          if (k > 0) out += ",";
          out += choice(members[k].player, members[k].strategy);
        }
        return out + "]";
      }
    }
    return "?";
  }
};

enum class ConstraintFamily : char {
  kSimplex,
  kUtility,
  kRegret,
  kSupportProb,
  kSupportRegret,
};

constexpr std::string_view family_name(ConstraintFamily family) {
  switch (family) {
    case ConstraintFamily::kSimplex:
      return "simplex";
    case ConstraintFamily::kUtility:
      return "utility";
    case ConstraintFamily::kRegret:
      return "regret";
    case ConstraintFamily::kSupportProb:
      return "support_prob";
    case ConstraintFamily::kSupportRegret:
      return "support_regret";
  }
  return "?";
}

template <typename T>
struct LinearConstraint {
  ConstraintFamily family;
  std::vector<std::pair<VarId, T>> terms;
  Sense sense;
  T rhs;
};

// product = left * right
struct BilinearConstraint {
  VarId product;
  VarId left;
  VarId right;
};

// Sum over k = 1..n-1 of m^k * C(n, k): the number of probability-family
// variables (single probabilities plus products) for n players with m
// strategies each.
inline std::uint64_t count_product_terms(std::uint64_t num_players,
                                         std::uint64_t num_strategies) {
  if (num_players < 2 || num_strategies < 1) {
    throw InputError("count_product_terms needs n >= 2 and m >= 1");
  }
  constexpr std::uint64_t kLimit =
      static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
  auto overflow = [&] {
    return std::overflow_error("count_product_terms(" +
                               std::to_string(num_players) + ", " +
                               std::to_string(num_strategies) +
                               ") exceeds 2^63");
  };
  std::uint64_t total = 0;
  std::uint64_t power = 1;     // m^k
  std::uint64_t binomial = 1;  // C(n, k)
  for (std::uint64_t k = 1; k < num_players; ++k) {
    if (__builtin_mul_overflow(power, num_strategies, &power)) throw overflow();
    // C(n, k) = C(n, k-1) * (n-k+1) / k, exact at every step.
    unsigned __int128 next =
        static_cast<unsigned __int128>(binomial) * (num_players - k + 1) / k;
    if (next > kLimit) throw overflow();
    binomial = static_cast<std::uint64_t>(next);
    std::uint64_t term;
    if (__builtin_mul_overflow(power, binomial, &term) ||
        __builtin_add_overflow(total, term, &total) || total > kLimit) {
      throw overflow();
    }
  }
  return total;
}

template <typename T>
class BasicFeasibilityProgram {
 public:
  using Scalar = T;

  std::size_t num_players() const { return counts_.size(); }
  const std::vector<std::size_t>& strategy_counts() const { return counts_; }
  std::size_t num_variables() const { return variables_.size(); }

  const std::vector<VarDescriptor<T>>& variables() const { return variables_; }
  const std::vector<LinearConstraint<T>>& linear() const { return linear_; }
  const std::vector<BilinearConstraint>& bilinear() const { return bilinear_; }
  const VarDescriptor<T>& variable(VarId id) const { return variables_[id]; }

  VarId prob(std::size_t player, std::size_t strategy) const {
    return prob_offset_[player] + strategy;
  }
  VarId best_utility(std::size_t player) const {
    return best_utility_offset_ + player;
  }
  VarId pure_utility(std::size_t player, std::size_t strategy) const {
    return pure_utility_offset_ + strategy_offset_[player] + strategy;
  }
  VarId regret(std::size_t player, std::size_t strategy) const {
    return regret_offset_ + strategy_offset_[player] + strategy;
  }
  VarId binary(std::size_t player, std::size_t strategy) const {
    return binary_offset_ + strategy_offset_[player] + strategy;
  }

  // Probability-family variable for a joint choice of 1..n-1 distinct
  // players, in any order.
  VarId product(std::span<const PureChoice> members) const {
    if (members.empty() || members.size() >= num_players()) {
      throw InputError("product over 1..n-1 players expected");
    }
    if (members.size() == 1) return prob(members[0].player, members[0].strategy);
    std::uint32_t mask = 0;
    for (const auto& c : members) mask |= 1u << c.player;
    if (static_cast<std::size_t>(std::popcount(mask)) != members.size()) {
      throw InputError("product members must have distinct players");
    }
    std::vector<std::size_t> by_player(num_players(), 0);
    for (const auto& c : members) by_player[c.player] = c.strategy;
    return product_for_mask(mask, by_player);
  }

  // `strategies` is indexed by player; only players in `mask` are read.
  VarId product_for_mask(std::uint32_t mask,
                         std::span<const std::size_t> strategies) const {
    if (std::popcount(mask) == 1) {
      const auto player = static_cast<std::size_t>(std::countr_zero(mask));
      return prob(player, strategies[player]);
    }
    std::size_t local = 0;
    for (std::size_t i = 0; i < num_players(); ++i) {
      if (mask & (1u << i)) local = local * counts_[i] + strategies[i];
    }
    return product_base_[mask] + local;
  }

  std::size_t num_prob_mass() const { return strategy_total_; }
  std::size_t num_product_vars() const {
    return variables_.size() - product_offset_;
  }
  std::size_t num_probability_family() const {
    return num_prob_mass() + num_product_vars();
  }

  // One line per variable and constraint:
  //   program <n> <m_1> ... <m_n>
  //   var <id> <name> <lower> <upper> <continuous|binary>
  //   lin <index> <family> <coef>*x<id> ... <sense> <rhs>
  //   bil <index> x<product> = x<left> * x<right>
  std::string dump() const {
    std::ostringstream out;
    out.precision(17);
    out << "program " << num_players();
    for (std::size_t m : counts_) out << ' ' << m;
    out << '\n';
    for (std::size_t j = 0; j < variables_.size(); ++j) {
      const auto& v = variables_[j];
      out << "var " << j << ' ' << v.name() << ' ' << v.lower << ' '
          << v.upper << ' ' << (v.binary ? "binary" : "continuous") << '\n';
    }
    for (std::size_t k = 0; k < linear_.size(); ++k) {
      const auto& row = linear_[k];
      out << "lin " << k << ' ' << family_name(row.family);
      for (const auto& [id, coef] : row.terms) {
        out << ' ' << coef << "*x" << id;
      }
      out << ' ' << sense_symbol(row.sense) << ' ' << row.rhs << '\n';
    }
    for (std::size_t k = 0; k < bilinear_.size(); ++k) {
      const auto& b = bilinear_[k];
      out << "bil " << k << " x" << b.product << " = x" << b.left << " * x"
          << b.right << '\n';
    }
    return out.str();
  }

 private:
  template <typename U>
  friend BasicFeasibilityProgram<U> build(const BasicGame<U>& game);

  VarId add_variable(VarDescriptor<T> descriptor) {
    variables_.push_back(std::move(descriptor));
    return variables_.size() - 1;
  }

  std::vector<std::size_t> counts_;
  std::vector<std::size_t> prob_offset_;
  std::vector<std::size_t> strategy_offset_;
  std::size_t strategy_total_ = 0;
  std::size_t best_utility_offset_ = 0;
  std::size_t pure_utility_offset_ = 0;
  std::size_t regret_offset_ = 0;
  std::size_t binary_offset_ = 0;
  std::size_t product_offset_ = 0;
  std::vector<std::size_t> product_base_;  // indexed by player mask
  std::vector<VarDescriptor<T>> variables_;
  std::vector<LinearConstraint<T>> linear_;
  std::vector<BilinearConstraint> bilinear_;
};

using FeasibilityProgram = BasicFeasibilityProgram<double>;

// Player subsets of size k in lexicographic order of their sorted members.
inline std::vector<std::uint32_t> subsets_of_size(std::size_t n,
                                                  std::size_t k) {
  std::vector<std::uint32_t> out;
  std::vector<std::size_t> members(k);
  for (std::size_t i = 0; i < k; ++i) members[i] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (std::size_t i : members) mask |= 1u << i;
    out.push_back(mask);
    std::size_t pos = k;
    while (pos > 0 && members[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++members[pos - 1];
    for (std::size_t i = pos; i < k; ++i) members[i] = members[i - 1] + 1;
  }
  return out;
}

// Builds the program for a game whose payoffs all lie in [0, 1] (see
// normalize_payoffs).
template <typename T>
BasicFeasibilityProgram<T> build(const BasicGame<T>& game) {
  const std::size_t n = game.num_players();
  if (n < 2) throw InputError("the program needs at least two players");
  if (n > 16) throw InputError("more than 16 players is not supported");
  for (std::size_t w = 0; w < n; ++w) {
    for (const T& v : game.payoffs(w)) {
      if (v < T(0) || v > T(1)) {
        throw PreconditionError(
            "payoffs must be normalized to [0, 1] before building");
      }
    }
  }

  BasicFeasibilityProgram<T> program;
  program.counts_ = game.strategy_counts();
  const auto& counts = program.counts_;
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    program.strategy_offset_.push_back(total);
    total += counts[i];
  }
  program.strategy_total_ = total;

  auto per_strategy = [&](VarKind kind, T upper, bool binary) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t s = 0; s < counts[i]; ++s) {
        VarDescriptor<T> v{kind, i, s, {}, T(0), upper, binary};
        program.add_variable(std::move(v));
      }
    }
  };

  program.prob_offset_ = program.strategy_offset_;
  per_strategy(VarKind::kProbMass, T(1), false);
  program.best_utility_offset_ = program.variables_.size();
  for (std::size_t i = 0; i < n; ++i) {
    program.add_variable({VarKind::kBestUtility, i, 0, {}, T(0), T(1), false});
  }
  program.pure_utility_offset_ = program.variables_.size();
  per_strategy(VarKind::kPureUtility, T(1), false);
  program.regret_offset_ = program.variables_.size();
  per_strategy(VarKind::kRegret, T(1), false);
  program.binary_offset_ = program.variables_.size();
  per_strategy(VarKind::kSupportBinary, T(1), true);

  program.product_offset_ = program.variables_.size();
  program.product_base_.assign(std::size_t{1} << n, 0);
  std::vector<std::size_t> strategies(n, 0);
  for (std::size_t k = 2; k < n; ++k) {
    for (std::uint32_t mask : subsets_of_size(n, k)) {
      program.product_base_[mask] = program.variables_.size();
      std::vector<std::size_t> players;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) players.push_back(i);
      }
      // Last member fastest, matching product_for_mask.
      std::vector<std::size_t> choice(players.size(), 0);
      while (true) {
        VarDescriptor<T> v{VarKind::kProductProb, players[0], choice[0],
                           {}, T(0), T(1), false};
        for (std::size_t q = 0; q < players.size(); ++q) {
          v.members.push_back({players[q], choice[q]});
        }
        program.add_variable(std::move(v));
        std::size_t q = players.size();
        while (q > 0) {
          if (++choice[q - 1] < counts[players[q - 1]]) break;
          choice[q - 1] = 0;
          --q;
        }
        if (q == 0) break;
      }
    }
  }

  // Bilinear chains: peel the lowest-indexed member.
  for (VarId id = program.product_offset_; id < program.variables_.size();
       ++id) {
    const auto& members = program.variables_[id].members;
    const VarId left = program.prob(members[0].player, members[0].strategy);
    const VarId right = program.product(
        std::span<const PureChoice>(members).subspan(1));
    program.bilinear_.push_back({id, left, right});
  }

  auto& rows = program.linear_;
  for (std::size_t i = 0; i < n; ++i) {
    LinearConstraint<T> row{ConstraintFamily::kSimplex, {}, Sense::kEqual,
                            T(1)};
    for (std::size_t s = 0; s < counts[i]; ++s) {
      row.terms.emplace_back(program.prob(i, s), T(1));
    }
    rows.push_back(std::move(row));
  }

  const std::uint32_t all = static_cast<std::uint32_t>((1u << n) - 1);
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t others = all & ~(1u << i);
    for (std::size_t s = 0; s < counts[i]; ++s) {
      LinearConstraint<T> row{ConstraintFamily::kUtility, {}, Sense::kEqual,
                              T(0)};
      row.terms.emplace_back(program.pure_utility(i, s), T(1));
      std::fill(strategies.begin(), strategies.end(), 0);
      strategies[i] = s;
      do {
        const T& value = game.payoff(i, strategies);
        if (value != T(0)) {
          row.terms.emplace_back(program.product_for_mask(others, strategies),
                                 T(-value));
        }
      } while (next_profile(strategies, counts, i));
      rows.push_back(std::move(row));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < counts[i]; ++s) {
      rows.push_back({ConstraintFamily::kRegret,
                      {{program.regret(i, s), T(1)},
                       {program.best_utility(i), T(-1)},
                       {program.pure_utility(i, s), T(1)}},
                      Sense::kEqual,
                      T(0)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < counts[i]; ++s) {
      rows.push_back({ConstraintFamily::kSupportProb,
                      {{program.prob(i, s), T(1)}, {program.binary(i, s), T(1)}},
                      Sense::kLessEqual,
                      T(1)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const T gap = max_utility_gap(game, i);
    for (std::size_t s = 0; s < counts[i]; ++s) {
      rows.push_back({ConstraintFamily::kSupportRegret,
                      {{program.regret(i, s), T(1)},
                       {program.binary(i, s), T(T(0) - gap)}},
                      Sense::kLessEqual,
                      T(0)});
    }
  }
  return program;
}

template <typename T>
struct ViolationReport {
  T simplex{0};
  T utility{0};
  T regret{0};
  T support_prob{0};
  T support_regret{0};
  T bilinear{0};
  T bounds{0};
  T integrality{0};

  T& family(ConstraintFamily f) {
    switch (f) {
      case ConstraintFamily::kSimplex:
        return simplex;
      case ConstraintFamily::kUtility:
        return utility;
      case ConstraintFamily::kRegret:
        return regret;
      case ConstraintFamily::kSupportProb:
        return support_prob;
      case ConstraintFamily::kSupportRegret:
        return support_regret;
    }
    return simplex;
  }

  T max() const {
    T out = simplex;
    for (const T* v : {&utility, &regret, &support_prob, &support_regret,
                       &bilinear, &bounds, &integrality}) {
      if (*v > out) out = *v;
    }
    return out;
  }
};

// Audits an assignment against every constraint family of the program.
template <typename T>
ViolationReport<T> check_candidate(const BasicFeasibilityProgram<T>& program,
                                   std::span<const T> assignment) {
  if (assignment.size() != program.num_variables()) {
    throw InputError("assignment has " + std::to_string(assignment.size()) +
                     " values, program has " +
                     std::to_string(program.num_variables()) + " variables");
  }
  ViolationReport<T> report;
  auto raise = [](T& slot, const T& value) {
    if (value > slot) slot = value;
  };
  for (const auto& row : program.linear()) {
    T activity(0);
    for (const auto& [id, coef] : row.terms) activity += coef * assignment[id];
    raise(report.family(row.family),
          row_violation(activity, row.sense, row.rhs));
  }
  for (const auto& b : program.bilinear()) {
    T gap = assignment[b.product] - assignment[b.left] * assignment[b.right];
    if (gap < T(0)) gap = -gap;
    raise(report.bilinear, gap);
  }
  for (std::size_t j = 0; j < program.num_variables(); ++j) {
    const auto& v = program.variable(j);
    const T& x = assignment[j];
    if (x < v.lower) raise(report.bounds, T(v.lower - x));
    if (x > v.upper) raise(report.bounds, T(x - v.upper));
    if (v.binary) {
      T to_zero = x < T(0) ? T(-x) : x;
      T to_one = x < T(1) ? T(T(1) - x) : T(x - T(1));
      raise(report.integrality, to_zero < to_one ? to_zero : to_one);
    }
  }
  return report;
}

template <typename T>
ViolationReport<T> check_candidate(const BasicFeasibilityProgram<T>& program,
                                   const std::vector<T>& assignment) {
  return check_candidate(program, std::span<const T>(assignment));
}

// The assignment a profile induces: products are true products, u_s are
// deviation values, u_i their max, r = u_i - u_s, and b = 1 exactly where
// r > 0. For an exact equilibrium this satisfies every constraint.
template <typename T>
std::vector<T> assignment_from_profile(
    const BasicFeasibilityProgram<T>& program, const BasicGame<T>& game,
    const BasicMixedProfile<T>& profile) {
  check_dimensions(game, profile);
  std::vector<T> x(program.num_variables(), T(0));
  const std::size_t n = program.num_players();
  for (std::size_t j = 0; j < program.num_variables(); ++j) {
    const auto& v = program.variable(j);
    if (v.kind == VarKind::kProbMass) {
      x[j] = profile[v.player][v.strategy];
    } else if (v.kind == VarKind::kProductProb) {
      T value(1);
      for (const auto& c : v.members) value *= profile[c.player][c.strategy];
      x[j] = value;
    }
  }
  const auto values = all_deviation_values(game, profile);
  for (std::size_t i = 0; i < n; ++i) {
    T best = values[i][0];
    for (const T& u : values[i]) {
      if (u > best) best = u;
    }
    x[program.best_utility(i)] = best;
    for (std::size_t s = 0; s < values[i].size(); ++s) {
      const T r = best - values[i][s];
      x[program.pure_utility(i, s)] = values[i][s];
      x[program.regret(i, s)] = r;
      x[program.binary(i, s)] = r > T(0) ? T(1) : T(0);
    }
  }
  return x;
}

// The ProbMass entries of an assignment, as is (no renormalization).
template <typename T>
BasicMixedProfile<T> extract_profile(const BasicFeasibilityProgram<T>& program,
                                     std::span<const T> assignment) {
  BasicMixedProfile<T> profile;
  for (std::size_t i = 0; i < program.num_players(); ++i) {
    std::vector<T> dist;
    for (std::size_t s = 0; s < program.strategy_counts()[i]; ++s) {
      dist.push_back(assignment[program.prob(i, s)]);
    }
    profile.distributions.push_back(std::move(dist));
  }
  return profile;
}

}  // namespace nashqcp

#endif  // NASHQCP_FORMULATION_H_
