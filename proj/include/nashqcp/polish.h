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

// Newton refinement of a mixed profile on a fixed support.
//
// On a support S the equilibrium conditions that hold with equality are
// indifference (every strategy in S_i earns the same value v_i) and unit
// mass. That is a square polynomial system in the support probabilities
// and the values; a good starting point converges quadratically. The
// result is only a candidate: strategies outside the support may still do
// better, so callers certify it with epsilon_of.

#ifndef NASHQCP_POLISH_H_
#define NASHQCP_POLISH_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "nashqcp/errors.h"
#include "nashqcp/game.h"

namespace nashqcp {

// Support as a flag per (player, strategy).
using Support = std::vector<std::vector<char>>;

// pair[(a_i + s) * total + a_j + t] is player i's expected payoff for s when
// player j plays t and everyone else follows the profile, where a_i is the
// offset of player i's strategies and total is their sum. Entries with
// j == i are zero.
inline std::vector<double> pairwise_utilities(const Game& game,
                                              const MixedProfile& profile) {
  const std::size_t n = game.num_players();
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    offset[i + 1] = offset[i] + game.num_strategies(i);
  }
  const std::size_t total = offset[n];
  std::vector<double> pair(total * total, 0.0);
  std::vector<std::size_t> pure(n, 0);
  std::size_t flat = 0;
  do {
    for (std::size_t i = 0; i < n; ++i) {
      const double pay = game.payoff(i, flat);
      if (pay == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        double weight = pay;
        for (std::size_t k = 0; k < n && weight != 0.0; ++k) {
          if (k != i && k != j) weight *= profile[k][pure[k]];
        }
        pair[(offset[i] + pure[i]) * total + offset[j] + pure[j]] += weight;
      }
    }
    ++flat;
  } while (next_profile(pure, game.strategy_counts(), n));
  return pair;
}

// Strategies whose probability exceeds `threshold`; a player with none
// keeps its most likely strategy.
inline Support support_above(const MixedProfile& profile, double threshold) {
  Support support;
  for (const auto& dist : profile.distributions) {
    std::vector<char> in(dist.size(), 0);
    bool any = false;
    for (std::size_t s = 0; s < dist.size(); ++s) {
      if (dist[s] > threshold) in[s] = any = true;
    }
    if (!any) {
      in[std::max_element(dist.begin(), dist.end()) - dist.begin()] = 1;
    }
    support.push_back(std::move(in));
  }
  return support;
}

// Solves the indifference system on `support` by damped Newton from
// `start` (restricted to the support and renormalized). Returns the profile
// if the system converges to a point with nonnegative probabilities.
inline std::optional<MixedProfile> solve_on_support(const Game& game,
                                                    const Support& support,
                                                    const MixedProfile& start,
                                                    int max_iterations = 40) {
  check_dimensions(game, start);
  const std::size_t n = game.num_players();
  if (support.size() != n) throw InputError("support has wrong player count");
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (support[i].size() != game.num_strategies(i)) {
      throw InputError("support has wrong strategy count");
    }
    offset[i + 1] = offset[i] + game.num_strategies(i);
  }
  const std::size_t total = offset[n];

  // Unknowns: one probability per support entry, then one value per player.
  struct Entry {
    std::size_t player, strategy;
  };
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < support[i].size(); ++s) {
      if (support[i][s]) entries.push_back({i, s});
    }
  }
  const std::size_t k = entries.size();
  const std::size_t dim = k + n;

  MixedProfile sigma = start;
  for (std::size_t i = 0; i < n; ++i) {
    double mass = 0.0;
    for (std::size_t s = 0; s < sigma[i].size(); ++s) {
      if (!support[i][s]) sigma[i][s] = 0.0;
      sigma[i][s] = std::max(sigma[i][s], 0.0);
      mass += sigma[i][s];
    }
    if (mass <= 0.0) return std::nullopt;
    for (double& p : sigma[i]) p /= mass;
  }
  std::vector<double> value(n);
  {
    const auto dev = all_deviation_values(game, sigma);
    for (std::size_t i = 0; i < n; ++i) {
      value[i] = -1e300;
      for (std::size_t s = 0; s < dev[i].size(); ++s) {
        if (support[i][s]) value[i] = std::max(value[i], dev[i][s]);
      }
    }
  }

  auto residual = [&](const MixedProfile& p, const std::vector<double>& v) {
    const auto dev = all_deviation_values(game, p);
    Eigen::VectorXd f(dim);
    for (std::size_t e = 0; e < k; ++e) {
      f[e] = dev[entries[e].player][entries[e].strategy] - v[entries[e].player];
    }
    for (std::size_t i = 0; i < n; ++i) {
      double mass = -1.0;
      for (double q : p[i]) mass += q;
      f[k + i] = mass;
    }
    return f;
  };

  Eigen::VectorXd f = residual(sigma, value);
  double norm = f.lpNorm<Eigen::Infinity>();
  for (int iter = 0; iter < max_iterations && norm > 1e-14; ++iter) {
    const auto pair = pairwise_utilities(game, sigma);
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t e = 0; e < k; ++e) {
      const std::size_t row = offset[entries[e].player] + entries[e].strategy;
      for (std::size_t c = 0; c < k; ++c) {
        if (entries[c].player == entries[e].player) continue;
        const std::size_t col = offset[entries[c].player] + entries[c].strategy;
        jac(e, c) = pair[row * total + col];
      }
      jac(e, k + entries[e].player) = -1.0;
    }
    for (std::size_t c = 0; c < k; ++c) jac(k + entries[c].player, c) = 1.0;

    Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
    if (!lu.isInvertible()) return std::nullopt;
    const Eigen::VectorXd step = lu.solve(-f);

    double t = 1.0;
    bool improved = false;
    while (t >= 1.0 / 1024) {
      MixedProfile trial = sigma;
      std::vector<double> trial_value = value;
      for (std::size_t e = 0; e < k; ++e) {
        trial[entries[e].player][entries[e].strategy] += t * step[e];
      }
      for (std::size_t i = 0; i < n; ++i) trial_value[i] += t * step[k + i];
      const Eigen::VectorXd trial_f = residual(trial, trial_value);
      const double trial_norm = trial_f.lpNorm<Eigen::Infinity>();
      if (trial_norm < norm) {
        sigma = std::move(trial);
        value = std::move(trial_value);
        f = trial_f;
        norm = trial_norm;
        improved = true;
        break;
      }
      t *= 0.5;
    }
    if (!improved) break;
  }
  if (!(norm <= 1e-10)) return std::nullopt;
  for (const auto& dist : sigma.distributions) {
    for (double p : dist) {
      if (p < -1e-9) return std::nullopt;
    }
  }
  if (!renormalize(sigma)) return std::nullopt;
  return sigma;
}

}  // namespace nashqcp

#endif  // NASHQCP_POLISH_H_
