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

// Strategic-form games, mixed profiles and regret.
//
// Everything is templated on the payoff scalar so the same code evaluates
// games in double precision and in exact rational arithmetic
// (boost::multiprecision::cpp_rational works out of the box).
//
// Payoff tensors are stored flat with player 0's strategy varying fastest,
// the same outcome order as the NFG payoff list.

#ifndef NASHQCP_GAME_H_
#define NASHQCP_GAME_H_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "nashqcp/errors.h"
#include "nashqcp/random.h"

namespace nashqcp {

template <typename T>
class BasicGame {
 public:
  using Scalar = T;

  BasicGame() = default;

  // payoffs[w] is player w's tensor with prod(strategy_counts) entries.
  BasicGame(std::vector<std::size_t> strategy_counts,
            std::vector<std::vector<T>> payoffs)
      : strategy_counts_(std::move(strategy_counts)),
        payoffs_(std::move(payoffs)) {
    if (strategy_counts_.size() < 2) {
      throw InputError("a game needs at least two players");
    }
    strides_.resize(strategy_counts_.size());
    std::size_t total = 1;
    for (std::size_t i = 0; i < strategy_counts_.size(); ++i) {
      if (strategy_counts_[i] == 0) {
        throw InputError("player " + std::to_string(i) +
                         " has no strategies");
      }
      strides_[i] = total;
      total *= strategy_counts_[i];
    }
    num_profiles_ = total;
    if (payoffs_.size() != strategy_counts_.size()) {
      throw InputError("expected one payoff tensor per player");
    }
    for (std::size_t w = 0; w < payoffs_.size(); ++w) {
      if (payoffs_[w].size() != num_profiles_) {
        throw InputError("payoff tensor of player " + std::to_string(w) +
                         " has " + std::to_string(payoffs_[w].size()) +
                         " entries, expected " + std::to_string(num_profiles_));
      }
      if constexpr (std::is_floating_point_v<T>) {
        for (std::size_t k = 0; k < num_profiles_; ++k) {
          if (!std::isfinite(payoffs_[w][k])) {
            throw InputError("non-finite payoff for player " +
                             std::to_string(w) + " at outcome " +
                             std::to_string(k));
          }
        }
      }
    }
  }

  std::size_t num_players() const { return strategy_counts_.size(); }
  std::size_t num_strategies(std::size_t player) const {
    return strategy_counts_.at(player);
  }
  const std::vector<std::size_t>& strategy_counts() const {
    return strategy_counts_;
  }
  std::size_t num_profiles() const { return num_profiles_; }
  std::size_t stride(std::size_t player) const { return strides_[player]; }

  std::size_t flat_index(std::span<const std::size_t> pure) const {
    std::size_t index = 0;
    for (std::size_t i = 0; i < pure.size(); ++i) index += pure[i] * strides_[i];
    return index;
  }

  const T& payoff(std::size_t player, std::size_t flat) const {
    return payoffs_[player][flat];
  }
  const T& payoff(std::size_t player, std::span<const std::size_t> pure) const {
    return payoffs_[player][flat_index(pure)];
  }
  std::span<const T> payoffs(std::size_t player) const {
    return payoffs_.at(player);
  }

  template <typename U>
  BasicGame<U> cast() const {
    std::vector<std::vector<U>> converted(payoffs_.size());
    for (std::size_t w = 0; w < payoffs_.size(); ++w) {
      converted[w].reserve(num_profiles_);
      for (const T& value : payoffs_[w]) {
        converted[w].push_back(static_cast<U>(value));
      }
    }
    return BasicGame<U>(strategy_counts_, std::move(converted));
  }

  friend bool operator==(const BasicGame& a, const BasicGame& b) {
    return a.strategy_counts_ == b.strategy_counts_ && a.payoffs_ == b.payoffs_;
  }

 private:
  std::vector<std::size_t> strategy_counts_;
  std::vector<std::size_t> strides_;
  std::vector<std::vector<T>> payoffs_;
  std::size_t num_profiles_ = 0;
};

using Game = BasicGame<double>;

// Advances `pure` to the next outcome in storage order, skipping the
// coordinate `frozen` (pass num_players to skip none). Returns false after
// the last outcome.
inline bool next_profile(std::span<std::size_t> pure,
                         std::span<const std::size_t> counts,
                         std::size_t frozen) {
  for (std::size_t i = 0; i < pure.size(); ++i) {
    if (i == frozen) continue;
    if (++pure[i] < counts[i]) return true;
    pure[i] = 0;
  }
  return false;
}

template <typename T>
struct BasicMixedProfile {
  std::vector<std::vector<T>> distributions;

  std::size_t num_players() const { return distributions.size(); }
  const std::vector<T>& operator[](std::size_t player) const {
    return distributions[player];
  }
  std::vector<T>& operator[](std::size_t player) {
    return distributions[player];
  }

  template <typename U>
  BasicMixedProfile<U> cast() const {
    BasicMixedProfile<U> out;
    for (const auto& dist : distributions) {
      out.distributions.emplace_back(dist.begin(), dist.end());
    }
    return out;
  }

  friend bool operator==(const BasicMixedProfile&,
                         const BasicMixedProfile&) = default;
};

using MixedProfile = BasicMixedProfile<double>;

template <typename T>
BasicMixedProfile<T> uniform_profile(const BasicGame<T>& game) {
  BasicMixedProfile<T> profile;
  for (std::size_t count : game.strategy_counts()) {
    profile.distributions.emplace_back(count, T(1) / T(count));
  }
  return profile;
}

template <typename T>
BasicMixedProfile<T> pure_profile(const BasicGame<T>& game,
                                  std::span<const std::size_t> strategies) {
  if (strategies.size() != game.num_players()) {
    throw InputError("pure profile needs one strategy per player");
  }
  BasicMixedProfile<T> profile;
  for (std::size_t i = 0; i < strategies.size(); ++i) {
    if (strategies[i] >= game.num_strategies(i)) {
      throw InputError("strategy index out of range");
    }
    profile.distributions.emplace_back(game.num_strategies(i), T(0));
    profile.distributions.back()[strategies[i]] = T(1);
  }
  return profile;
}

// Dimension check used by every evaluation routine.
template <typename T>
void check_dimensions(const BasicGame<T>& game,
                      const BasicMixedProfile<T>& profile) {
  if (profile.num_players() != game.num_players()) {
    throw InputError("profile has " + std::to_string(profile.num_players()) +
                     " players, game has " +
                     std::to_string(game.num_players()));
  }
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    if (profile[i].size() != game.num_strategies(i)) {
      throw InputError("distribution of player " + std::to_string(i) +
                       " has length " + std::to_string(profile[i].size()) +
                       ", expected " + std::to_string(game.num_strategies(i)));
    }
  }
}

// Full validation: dimensions, nonnegativity and unit mass within tolerance.
template <typename T>
void validate_profile(const BasicGame<T>& game,
                      const BasicMixedProfile<T>& profile,
                      const T& tolerance) {
  check_dimensions(game, profile);
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    T sum(0);
    for (const T& p : profile[i]) {
      if (p < T(0)) throw InputError("negative probability");
      sum += p;
    }
    T gap = sum - T(1);
    if (gap < T(0)) gap = -gap;
    if (gap > tolerance) {
      throw InputError("distribution of player " + std::to_string(i) +
                       " does not sum to one");
    }
  }
}

// Clamps negative entries to zero and rescales each distribution to unit
// mass. Returns false if some distribution has no positive mass.
template <typename T>
bool renormalize(BasicMixedProfile<T>& profile) {
  for (auto& dist : profile.distributions) {
    T sum(0);
    for (T& p : dist) {
      if (p < T(0)) p = T(0);
      sum += p;
    }
    if (!(sum > T(0))) return false;
    for (T& p : dist) p /= sum;
  }
  return true;
}

template <typename T>
T expected_utility(const BasicGame<T>& game,
                   const BasicMixedProfile<T>& profile, std::size_t player) {
  check_dimensions(game, profile);
  if (player >= game.num_players()) throw InputError("player out of range");
  const std::size_t n = game.num_players();
  std::vector<std::size_t> pure(n, 0);
  T total(0);
  std::size_t flat = 0;
  do {
    T weight(1);
    for (std::size_t i = 0; i < n; ++i) weight *= profile[i][pure[i]];
    total += weight * game.payoff(player, flat);
    ++flat;
  } while (next_profile(pure, game.strategy_counts(), n));
  return total;
}

// Expected utility to `player` of each of its pure strategies while the
// others follow `profile`.
template <typename T>
std::vector<T> deviation_values(const BasicGame<T>& game,
                                const BasicMixedProfile<T>& profile,
                                std::size_t player) {
  check_dimensions(game, profile);
  if (player >= game.num_players()) throw InputError("player out of range");
  const std::size_t n = game.num_players();
  std::vector<T> values(game.num_strategies(player), T(0));
  std::vector<std::size_t> pure(n, 0);
  std::size_t flat = 0;
  do {
    T weight(1);
    for (std::size_t i = 0; i < n; ++i) {
      if (i != player) weight *= profile[i][pure[i]];
    }
    values[pure[player]] += weight * game.payoff(player, flat);
    ++flat;
  } while (next_profile(pure, game.strategy_counts(), n));
  return values;
}

namespace game_internal {

// all_deviation_values with `base[i]` subtracted from every payoff of
// player i before accumulating.
template <typename T>
std::vector<std::vector<T>> shifted_deviation_values(
    const BasicGame<T>& game, const BasicMixedProfile<T>& profile,
    const std::vector<T>& base) {
  check_dimensions(game, profile);
  const std::size_t n = game.num_players();
  std::vector<std::vector<T>> values(n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i].assign(game.num_strategies(i), T(0));
  }
  std::vector<std::size_t> pure(n, 0);
  std::vector<T> prefix(n + 1), suffix(n + 1);
  std::size_t flat = 0;
  do {
    prefix[0] = T(1);
    for (std::size_t i = 0; i < n; ++i) {
      prefix[i + 1] = prefix[i] * profile[i][pure[i]];
    }
    suffix[n] = T(1);
    for (std::size_t i = n; i-- > 0;) {
      suffix[i] = suffix[i + 1] * profile[i][pure[i]];
    }
    for (std::size_t i = 0; i < n; ++i) {
      values[i][pure[i]] +=
          prefix[i] * suffix[i + 1] * (game.payoff(i, flat) - base[i]);
    }
    ++flat;
  } while (next_profile(pure, game.strategy_counts(), n));
  return values;
}

}  // namespace game_internal

// deviation_values for every player in one sweep over the outcomes.
template <typename T>
std::vector<std::vector<T>> all_deviation_values(
    const BasicGame<T>& game, const BasicMixedProfile<T>& profile) {
  return game_internal::shifted_deviation_values(
      game, profile, std::vector<T>(game.num_players(), T(0)));
}

template <typename T>
T pure_deviation_value(const BasicGame<T>& game,
                       const BasicMixedProfile<T>& profile, std::size_t player,
                       std::size_t pure) {
  if (player >= game.num_players() || pure >= game.num_strategies(player)) {
    throw InputError("player or strategy index out of range");
  }
  return deviation_values(game, profile, player)[pure];
}

template <typename T>
struct BasicRegretReport {
  T epsilon{0};
  std::vector<T> per_player_regret;
  std::vector<std::size_t> best_responses;
};

using RegretReport = BasicRegretReport<double>;

// Largest gain any player can get from a unilateral deviation. A best
// response is always attained at a pure strategy, so only pure deviations
// are examined. Ties go to the lowest strategy index.
//
// Each player's payoffs are measured from that player's lowest payoff, so
// a large common offset costs no precision. Regrets of a profile on the
// simplex do not depend on the shift.
template <typename T>
BasicRegretReport<T> epsilon_of(const BasicGame<T>& game,
                                const BasicMixedProfile<T>& profile) {
  std::vector<T> base;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    const auto& tensor = game.payoffs(i);
    base.push_back(*std::min_element(tensor.begin(), tensor.end()));
  }
  const auto values = game_internal::shifted_deviation_values(game, profile, base);
  BasicRegretReport<T> report;
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    T current(0);
    std::size_t best = 0;
    for (std::size_t s = 0; s < values[i].size(); ++s) {
      current += profile[i][s] * values[i][s];
      if (values[i][s] > values[i][best]) best = s;
    }
    T regret = values[i][best] - current;
    if (regret < T(0)) regret = T(0);
    if (i == 0 || regret > report.epsilon) report.epsilon = regret;
    report.per_player_regret.push_back(regret);
    report.best_responses.push_back(best);
  }
  return report;
}

template <typename T>
struct NormalizedGame {
  BasicGame<T> game;
  // normalized = (original + offset) / scale
  T offset{0};
  T scale{1};
  // All payoffs were equal; `game` is all zeros and scale is 0, so that
  // epsilon_original = epsilon_normalized * scale still holds (both are 0).
  bool degenerate = false;
};

// Maps all payoffs to [0, 1] with one global affine transform.
template <typename T>
NormalizedGame<T> normalize_payoffs(const BasicGame<T>& game) {
  T low = game.payoff(0, 0);
  T high = low;
  for (std::size_t w = 0; w < game.num_players(); ++w) {
    for (const T& v : game.payoffs(w)) {
      if (v < low) low = v;
      if (v > high) high = v;
    }
  }
  NormalizedGame<T> result;
  std::vector<std::vector<T>> payoffs(game.num_players());
  if (!(high > low)) {
    for (auto& tensor : payoffs) tensor.assign(game.num_profiles(), T(0));
    result.game = BasicGame<T>(game.strategy_counts(), std::move(payoffs));
    result.offset = -low;
    result.scale = T(0);
    result.degenerate = true;
    return result;
  }
  const T scale = high - low;
  for (std::size_t w = 0; w < game.num_players(); ++w) {
    payoffs[w].reserve(game.num_profiles());
    for (const T& v : game.payoffs(w)) {
      T mapped = (v - low) / scale;
      // Guard the endpoints against rounding in floating point.
      if (mapped < T(0)) mapped = T(0);
      if (mapped > T(1)) mapped = T(1);
      payoffs[w].push_back(mapped);
    }
  }
  result.game = BasicGame<T>(game.strategy_counts(), std::move(payoffs));
  result.offset = -low;
  result.scale = scale;
  return result;
}

// Max minus min over the player's whole payoff tensor. Bounds every regret
// the player can have, which is what the big-M regret link needs.
template <typename T>
T max_utility_gap(const BasicGame<T>& game, std::size_t player) {
  if (player >= game.num_players()) throw InputError("player out of range");
  const auto values = game.payoffs(player);
  const auto [low, high] = std::minmax_element(values.begin(), values.end());
  return *high - *low;
}

// Payoffs i.i.d. uniform on [0, 1), drawn player by player in storage
// order from xoshiro256** seeded with `seed`.
inline Game random_game(std::vector<std::size_t> strategy_counts,
                        std::uint64_t seed) {
  if (strategy_counts.size() < 2) {
    throw InputError("a game needs at least two players");
  }
  std::size_t total = 1;
  for (std::size_t m : strategy_counts) {
    if (m == 0) throw InputError("every player needs a strategy");
    total *= m;
  }
  Xoshiro256StarStar rng(seed);
  std::vector<std::vector<double>> payoffs(strategy_counts.size());
  for (auto& tensor : payoffs) {
    tensor.resize(total);
    for (double& v : tensor) v = rng.uniform01();
  }
  return Game(std::move(strategy_counts), std::move(payoffs));
}

inline Game random_game(std::size_t num_players, std::size_t num_strategies,
                        std::uint64_t seed) {
  return random_game(std::vector<std::size_t>(num_players, num_strategies),
                     seed);
}

}  // namespace nashqcp

#endif  // NASHQCP_GAME_H_
