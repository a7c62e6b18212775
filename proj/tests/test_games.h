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

// Hand-built fixture games shared by the test binaries.

#ifndef NASHQCP_TESTS_TEST_GAMES_H_
#define NASHQCP_TESTS_TEST_GAMES_H_

#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nashqcp/game.h"
#include "nashqcp/random.h"

namespace nashqcp::testing_games {

// Row wins (+1) on a match, column wins on a mismatch.
inline Game matching_pennies() {
  return Game({2, 2}, {{1.0, -1.0, -1.0, 1.0}, {-1.0, 1.0, 1.0, -1.0}});
}

// Strategy 0 pays 1 and strategy 1 pays 0 for both players, whatever the
// opponent does.
inline Game dominant_two_player() {
  return Game({2, 2}, {{1.0, 0.0, 1.0, 0.0}, {1.0, 1.0, 0.0, 0.0}});
}

// Every player's strategy 0 strictly dominates; the rest of the payoff is
// noise smaller than the dominance margin.
inline Game dominant_three_player() {
  const std::vector<std::size_t> counts = {2, 2, 2};
  Xoshiro256StarStar rng(99);
  std::vector<std::vector<double>> payoffs(3, std::vector<double>(8));
  std::vector<std::size_t> pure(3, 0);
  std::size_t flat = 0;
  do {
    for (std::size_t w = 0; w < 3; ++w) {
      payoffs[w][flat] = (pure[w] == 0 ? 0.6 : 0.0) + 0.3 * rng.uniform01();
    }
    ++flat;
  } while (next_profile(pure, counts, 3));
  return Game(counts, payoffs);
}

// Payoffs drawn from {0, 1/levels, ..., 1} in exact arithmetic.
inline BasicGame<boost::multiprecision::cpp_rational> small_integer_game(
    const std::vector<std::size_t>& counts, int levels,
    Xoshiro256StarStar& rng) {
  using Rational = boost::multiprecision::cpp_rational;
  std::size_t total = 1;
  for (std::size_t m : counts) total *= m;
  std::vector<std::vector<Rational>> payoffs(counts.size());
  for (auto& tensor : payoffs) {
    for (std::size_t k = 0; k < total; ++k) {
      tensor.emplace_back(static_cast<int>(rng.below(levels + 1)), levels);
    }
  }
  return BasicGame<Rational>(counts, payoffs);
}

// Closed-form equilibria of a generic 2x2 game, as (row plays 0, column
// plays 0) probabilities: the pure equilibria plus the fully mixed one when
// both indifference points lie strictly inside (0, 1). Ties between payoffs
// make the game non-generic; callers skip those.
template <typename T>
std::vector<std::pair<T, T>> two_by_two_equilibria(const BasicGame<T>& g) {
  // a(r, c) and b(r, c) with the row index fastest in storage.
  auto a = [&](int r, int c) { return g.payoff(0, r + 2 * c); };
  auto b = [&](int r, int c) { return g.payoff(1, r + 2 * c); };
  std::vector<std::pair<T, T>> out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      if (a(r, c) >= a(1 - r, c) && b(r, c) >= b(r, 1 - c)) {
        out.emplace_back(T(r == 0 ? 1 : 0), T(c == 0 ? 1 : 0));
      }
    }
  }
  const T da = a(0, 0) - a(0, 1) - a(1, 0) + a(1, 1);
  const T db = b(0, 0) - b(1, 0) - b(0, 1) + b(1, 1);
  if (da != T(0) && db != T(0)) {
    const T q = (a(1, 1) - a(0, 1)) / da;  // column's weight on 0
    const T p = (b(1, 1) - b(1, 0)) / db;  // row's weight on 0
    if (p > T(0) && p < T(1) && q > T(0) && q < T(1)) out.emplace_back(p, q);
  }
  return out;
}

// True when no two payoffs a player compares are equal.
template <typename T>
bool generic_two_by_two(const BasicGame<T>& g) {
  auto a = [&](int r, int c) { return g.payoff(0, r + 2 * c); };
  auto b = [&](int r, int c) { return g.payoff(1, r + 2 * c); };
  for (int k = 0; k < 2; ++k) {
    if (a(0, k) == a(1, k) || b(k, 0) == b(k, 1)) return false;
  }
  return true;
}

}  // namespace nashqcp::testing_games

#endif  // NASHQCP_TESTS_TEST_GAMES_H_
