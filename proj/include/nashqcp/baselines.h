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

// Reference algorithms: exhaustive k-uniform search, fictitious play and
// regret matching.
//
// k_uniform_search is complete over its grid and works in any exact scalar
// type, which makes it the test oracle for the solver. The two learners
// are the usual self-play dynamics; neither is guaranteed to converge with
// more than two players.

#ifndef NASHQCP_BASELINES_H_
#define NASHQCP_BASELINES_H_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <string_view>
#include <utility>
#include <vector>

#include "nashqcp/errors.h"
#include "nashqcp/game.h"

namespace nashqcp {

enum class KUniformStatus : char { kFound, kNotFound, kBudgetExceeded };

inline std::string_view status_name(KUniformStatus status) {
  switch (status) {
    case KUniformStatus::kFound:
      return "found";
    case KUniformStatus::kNotFound:
      return "not-found";
    case KUniformStatus::kBudgetExceeded:
      return "budget-exceeded";
  }
  return "?";
}

template <typename T>
struct KUniformResult {
  KUniformStatus status = KUniformStatus::kNotFound;
  std::size_t k = 0;
  // Per player, integer weights summing to k.
  std::vector<std::vector<std::size_t>> counts;
  BasicMixedProfile<T> profile;
  T epsilon{0};
  std::uint64_t profiles_examined = 0;
};

// Advances `c` to the next composition of sum(c) into c.size() parts in
// lexicographic order, starting from (0, ..., 0, k). Returns false after
// (k, 0, ..., 0).
inline bool next_composition(std::vector<std::size_t>& c) {
  const std::size_t m = c.size();
  // Rightmost nonzero part that has a part to its left.
  std::size_t pos = m;
  while (pos > 1 && c[pos - 1] == 0) --pos;
  if (pos <= 1) return false;
  --pos;
  const std::size_t rest = c[pos] - 1;
  c[pos] = 0;
  ++c[pos - 1];
  c[m - 1] += rest;
  return true;
}

// Searches the k-uniform profiles for k = 1..k_max and returns the first
// with epsilon_of <= epsilon_accept. Players nest with player 0 outermost;
// each player's compositions run in lexicographic order. `budget` caps
// the total number of joint profiles evaluated (0: no cap).
template <typename T>
KUniformResult<T> k_uniform_search(const BasicGame<T>& game,
                                   const T& epsilon_accept, std::size_t k_max,
                                   std::uint64_t budget = 0) {
  if (k_max < 1) throw InputError("k_max must be at least 1");
  const std::size_t n = game.num_players();
  KUniformResult<T> result;
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::vector<std::vector<std::size_t>> counts(n);
    for (std::size_t i = 0; i < n; ++i) {
      counts[i].assign(game.num_strategies(i), 0);
      counts[i].back() = k;
    }
    BasicMixedProfile<T> profile;
    profile.distributions.resize(n);
    auto set_player = [&](std::size_t i) {
      profile[i].resize(counts[i].size());
      for (std::size_t s = 0; s < counts[i].size(); ++s) {
        profile[i][s] = T(static_cast<long long>(counts[i][s])) /
                        T(static_cast<long long>(k));
      }
    };
    for (std::size_t i = 0; i < n; ++i) set_player(i);
    while (true) {
      if (budget > 0 && result.profiles_examined >= budget) {
        result.status = KUniformStatus::kBudgetExceeded;
        return result;
      }
      ++result.profiles_examined;
      const auto report = epsilon_of(game, profile);
      if (report.epsilon <= epsilon_accept) {
        result.status = KUniformStatus::kFound;
        result.k = k;
        result.counts = counts;
        result.profile = profile;
        result.epsilon = report.epsilon;
        return result;
      }
      // Odometer over players, the last player fastest.
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (next_composition(counts[i])) {
          set_player(i);
          break;
        }
        std::fill(counts[i].begin(), counts[i].end(), 0);
        counts[i].back() = k;
        set_player(i);
        if (i == 0) {
          i = n + 1;  // exhausted
          break;
        }
      }
      if (i == n + 1) break;
    }
  }
  result.status = KUniformStatus::kNotFound;
  return result;
}

struct LearningTrace {
  std::size_t iterations = 0;
  // (iteration t, epsilon of the average after t iterations).
  std::vector<std::pair<std::size_t, double>> epsilon_trace;
  MixedProfile average;
  // epsilon_of the final average.
  double final_epsilon = 0.0;
};

struct LearningOptions {
  std::size_t iterations = 10000;
  // Record every this many iterations (0: final value only).
  std::size_t trace_every = 0;
  // Called after every iteration t with the profile the learner moved:
  // the running average for fictitious play, the current iterate for
  // regret matching.
  std::function<void(std::size_t, const MixedProfile&)> observer;
};

namespace learning_internal {

inline double epsilon_from_values(const MixedProfile& profile,
                                  const std::vector<std::vector<double>>& v) {
  double eps = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    double current = 0.0, best = v[i][0];
    for (std::size_t s = 0; s < v[i].size(); ++s) {
      current += profile[i][s] * v[i][s];
      best = std::max(best, v[i][s]);
    }
    eps = std::max(eps, best - current);
  }
  return eps;
}

inline void record(LearningTrace& trace, const LearningOptions& options,
                   std::size_t t, double eps) {
  if (options.trace_every > 0 &&
      (t % options.trace_every == 0 || t == options.iterations)) {
    trace.epsilon_trace.emplace_back(t, eps);
  }
}

}  // namespace learning_internal

// Simultaneous fictitious play from a uniform prior: at iteration t every
// player best-responds (lowest index on ties) to the others' averages, and
// the averages move by (br_t - avg_{t-1}) / t.
inline LearningTrace fictitious_play(const Game& game,
                                     const LearningOptions& options) {
  if (options.iterations < 1) throw InputError("need at least one iteration");
  const std::size_t n = game.num_players();
  LearningTrace trace;
  trace.average = uniform_profile(game);
  auto& avg = trace.average;
  for (std::size_t t = 1; t <= options.iterations; ++t) {
    const auto values = all_deviation_values(game, avg);
    if (t > 1) {
      learning_internal::record(
          trace, options, t - 1,
          learning_internal::epsilon_from_values(avg, values));
    }
    const double step = 1.0 / static_cast<double>(t);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& v = values[i];
      const std::size_t br = std::max_element(v.begin(), v.end()) - v.begin();
      for (std::size_t s = 0; s < v.size(); ++s) {
        const double target = s == br ? 1.0 : 0.0;
        avg[i][s] += (target - avg[i][s]) * step;
      }
    }
    if (options.observer) options.observer(t, avg);
  }
  trace.iterations = options.iterations;
  trace.final_epsilon = epsilon_of(game, avg).epsilon;
  learning_internal::record(trace, options, options.iterations,
                            trace.final_epsilon);
  return trace;
}

// Regret matching on cumulative instantaneous regrets; the reported
// profile is the average of the iterates.
inline LearningTrace regret_matching(const Game& game,
                                     const LearningOptions& options) {
  if (options.iterations < 1) throw InputError("need at least one iteration");
  const std::size_t n = game.num_players();
  LearningTrace trace;
  MixedProfile current = uniform_profile(game);
  std::vector<std::vector<double>> regret(n), sum(n);
  for (std::size_t i = 0; i < n; ++i) {
    regret[i].assign(game.num_strategies(i), 0.0);
    sum[i].assign(game.num_strategies(i), 0.0);
  }
  trace.average = current;
  for (std::size_t t = 1; t <= options.iterations; ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      double positive = 0.0;
      for (double r : regret[i]) positive += std::max(r, 0.0);
      const double m = static_cast<double>(regret[i].size());
      for (std::size_t s = 0; s < regret[i].size(); ++s) {
        current[i][s] =
            positive > 0.0 ? std::max(regret[i][s], 0.0) / positive : 1.0 / m;
        sum[i][s] += current[i][s];
      }
    }
    if (options.observer) options.observer(t, current);
    const auto values = all_deviation_values(game, current);
    for (std::size_t i = 0; i < n; ++i) {
      double expected = 0.0;
      for (std::size_t s = 0; s < values[i].size(); ++s) {
        expected += current[i][s] * values[i][s];
      }
      for (std::size_t s = 0; s < values[i].size(); ++s) {
        regret[i][s] += values[i][s] - expected;
      }
    }
    const bool want_trace =
        options.trace_every > 0 &&
        (t % options.trace_every == 0 || t == options.iterations);
    if (want_trace || t == options.iterations) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t s = 0; s < sum[i].size(); ++s) {
          trace.average[i][s] = sum[i][s] / static_cast<double>(t);
        }
      }
      const double eps =
          t == options.iterations
              ? epsilon_of(game, trace.average).epsilon
              : learning_internal::epsilon_from_values(
                    trace.average, all_deviation_values(game, trace.average));
      learning_internal::record(trace, options, t, eps);
      if (t == options.iterations) trace.final_epsilon = eps;
    }
  }
  trace.iterations = options.iterations;
  return trace;
}

}  // namespace nashqcp

#endif  // NASHQCP_BASELINES_H_
