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

#include "nashqcp/game.h"

#include <cmath>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gtest/gtest.h"
#include "test_games.h"

namespace nashqcp {
namespace {

using Rational = boost::multiprecision::cpp_rational;

// Brute-force oracle for three players: explicit nested loops and explicit
// index arithmetic, sharing nothing with the odometer in game.h.
double brute_utility3(const Game& g, const MixedProfile& p, std::size_t w) {
  const std::size_t m0 = g.num_strategies(0), m1 = g.num_strategies(1);
  double total = 0.0;
  for (std::size_t a = 0; a < m0; ++a) {
    for (std::size_t b = 0; b < m1; ++b) {
      for (std::size_t c = 0; c < g.num_strategies(2); ++c) {
        const std::size_t flat = a + m0 * (b + m1 * c);
        total += p[0][a] * p[1][b] * p[2][c] * g.payoffs(w)[flat];
      }
    }
  }
  return total;
}

double brute_deviation3(const Game& g, const MixedProfile& p, std::size_t w,
                        std::size_t s) {
  MixedProfile q = p;
  q[w].assign(g.num_strategies(w), 0.0);
  q[w][s] = 1.0;
  return brute_utility3(g, q, w);
}

MixedProfile random_profile(const Game& g, Xoshiro256StarStar& rng) {
  MixedProfile p;
  for (std::size_t i = 0; i < g.num_players(); ++i) {
    std::vector<double> d(g.num_strategies(i));
    double sum = 0.0;
    for (double& v : d) sum += (v = rng.uniform01() + 1e-3);
    for (double& v : d) v /= sum;
    p.distributions.push_back(d);
  }
  return p;
}

// Multiples of 2^-20 summing to exactly 1 in floating point.
MixedProfile simplex_profile(const Game& g, Xoshiro256StarStar& rng) {
  MixedProfile p = random_profile(g, rng);
  for (auto& d : p.distributions) {
    double used = 0.0;
    for (std::size_t s = 0; s + 1 < d.size(); ++s) {
      d[s] = std::floor(d[s] * 1048576.0) / 1048576.0;
      used += d[s];
    }
    d.back() = 1.0 - used;
  }
  return p;
}

TEST(ExpectedUtility, ConstantGameReturnsConstant) {
  Game g({2, 3, 2}, std::vector<std::vector<double>>(
                        3, std::vector<double>(12, 0.625)));
  Xoshiro256StarStar rng(3);
  for (std::size_t w = 0; w < 3; ++w) {
    EXPECT_DOUBLE_EQ(expected_utility(g, random_profile(g, rng), w), 0.625);
  }
}

TEST(ExpectedUtility, MatchingPenniesUniformIsZero) {
  const Game g = testing_games::matching_pennies();
  const MixedProfile p = uniform_profile(g);
  EXPECT_DOUBLE_EQ(expected_utility(g, p, 0), 0.0);
  EXPECT_DOUBLE_EQ(expected_utility(g, p, 1), 0.0);
}

TEST(ExpectedUtility, MatchesBruteForceOnSeededThreePlayerGame) {
  const Game g = random_game(3, 2, 20260101);
  const MixedProfile p = uniform_profile(g);
  for (std::size_t w = 0; w < 3; ++w) {
    EXPECT_NEAR(expected_utility(g, p, w), brute_utility3(g, p, w), 1e-15);
  }
}

TEST(ExpectedUtility, RejectsDimensionMismatch) {
  const Game g = testing_games::matching_pennies();
  MixedProfile p{{{0.5, 0.5}, {1.0}}};
  EXPECT_THROW(expected_utility(g, p, 0), InputError);
  EXPECT_THROW(expected_utility(g, uniform_profile(g), 2), InputError);
}

TEST(PureDeviationValue, MatchingPenniesAgainstUniform) {
  const Game g = testing_games::matching_pennies();
  const MixedProfile p = uniform_profile(g);
  for (std::size_t w = 0; w < 2; ++w) {
    for (std::size_t s = 0; s < 2; ++s) {
      EXPECT_DOUBLE_EQ(pure_deviation_value(g, p, w, s), 0.0);
    }
  }
}

TEST(PureDeviationValue, DominantStrategyPaysOne) {
  const Game g = testing_games::dominant_two_player();
  Xoshiro256StarStar rng(9);
  for (int trial = 0; trial < 10; ++trial) {
    EXPECT_DOUBLE_EQ(pure_deviation_value(g, random_profile(g, rng), 0, 0),
                     1.0);
  }
}

TEST(PureDeviationValue, MatchesBruteForceOnRandomThreePlayerGame) {
  const Game g = random_game({2, 3, 4}, 77);
  Xoshiro256StarStar rng(1);
  const MixedProfile p = random_profile(g, rng);
  for (std::size_t w = 0; w < 3; ++w) {
    for (std::size_t s = 0; s < g.num_strategies(w); ++s) {
      EXPECT_NEAR(pure_deviation_value(g, p, w, s),
                  brute_deviation3(g, p, w, s), 1e-14);
    }
  }
  EXPECT_THROW(pure_deviation_value(g, p, 1, 3), InputError);
}

TEST(EpsilonOf, DominantStrategyEquilibriumHasZeroEpsilon) {
  const Game g = testing_games::dominant_three_player();
  const std::vector<std::size_t> pure = {0, 0, 0};
  const RegretReport report = epsilon_of(g, pure_profile(g, pure));
  EXPECT_EQ(report.epsilon, 0.0);
  EXPECT_EQ(report.best_responses, pure);
}

TEST(EpsilonOf, MatchingPenniesUniformIsEquilibrium) {
  const Game g = testing_games::matching_pennies();
  EXPECT_EQ(epsilon_of(g, uniform_profile(g)).epsilon, 0.0);
}

TEST(EpsilonOf, MatchingPenniesPureRowAgainstUniformColumn) {
  const Game g = testing_games::matching_pennies();
  MixedProfile p{{{1.0, 0.0}, {0.5, 0.5}}};
  const RegretReport report = epsilon_of(g, p);
  EXPECT_DOUBLE_EQ(report.epsilon, 1.0);
  EXPECT_DOUBLE_EQ(report.per_player_regret[0], 0.0);
  EXPECT_DOUBLE_EQ(report.per_player_regret[1], 1.0);
  EXPECT_EQ(report.best_responses[1], 1u);
}

TEST(EpsilonOf, ReportInvariants) {
  Xoshiro256StarStar rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Game g = random_game(2 + trial % 3, 1 + trial % 4, 1000 + trial);
    const RegretReport r = epsilon_of(g, random_profile(g, rng));
    double worst = 0.0;
    for (double v : r.per_player_regret) {
      EXPECT_GE(v, 0.0);
      worst = std::max(worst, v);
    }
    EXPECT_EQ(r.epsilon, worst);
  }
}

// Exact arithmetic: epsilon is zero exactly when no pure deviation gains.
TEST(EpsilonOf, ExactZeroIffNoImprovingPureDeviation) {
  Xoshiro256StarStar rng(11);
  int zeros = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const BasicGame<Rational> g = testing_games::small_integer_game(
        {2, 2, 2}, 3, rng);
    // k-uniform profiles with k = 2, so exact equilibria show up often.
    BasicMixedProfile<Rational> p;
    for (std::size_t i = 0; i < 3; ++i) {
      const auto c = static_cast<int>(rng.below(3));
      p.distributions.push_back({Rational(c, 2), Rational(2 - c, 2)});
    }
    bool improving = false;
    for (std::size_t w = 0; w < 3; ++w) {
      const Rational current = expected_utility(g, p, w);
      for (std::size_t s = 0; s < 2; ++s) {
        BasicMixedProfile<Rational> q = p;
        q[w] = {Rational(s == 0 ? 1 : 0), Rational(s == 1 ? 1 : 0)};
        if (expected_utility(g, q, w) > current) improving = true;
      }
    }
    const Rational eps = epsilon_of(g, p).epsilon;
    EXPECT_GE(eps, 0);
    EXPECT_EQ(eps == 0, !improving);
    zeros += eps == 0;
  }
  EXPECT_GT(zeros, 10);
}

TEST(EpsilonOf, AffineInvariance) {
  Xoshiro256StarStar rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Game g = random_game({2, 3, 2}, 500 + trial);
    const double a = 0.01 + 100.0 * rng.uniform01();
    const double b = -50.0 + 100.0 * rng.uniform01();
    std::vector<std::vector<double>> scaled(3);
    for (std::size_t w = 0; w < 3; ++w) {
      for (double v : g.payoffs(w)) scaled[w].push_back(a * v + b);
    }
    const Game h(g.strategy_counts(), scaled);
    const MixedProfile p = simplex_profile(g, rng);
    const double eg = epsilon_of(g, p).epsilon;
    const double eh = epsilon_of(h, p).epsilon;
    EXPECT_NEAR(eh, a * eg, 1e-12 * a * eg);
  }
}

TEST(EpsilonOf, LargeOffsetAgainstExactArithmetic) {
  Xoshiro256StarStar rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const Game g = random_game({3, 2, 2}, 700 + trial);
    const double a = 1e-3 * (1.0 + rng.uniform01());
    const double b = 50.0 + 50.0 * rng.uniform01();
    std::vector<std::vector<double>> shifted(3);
    std::vector<std::vector<Rational>> exact(3);
    for (std::size_t w = 0; w < 3; ++w) {
      for (double v : g.payoffs(w)) {
        shifted[w].push_back(a * v + b);
        exact[w].emplace_back(shifted[w].back());
      }
    }
    const MixedProfile p = simplex_profile(g, rng);
    BasicMixedProfile<Rational> q;
    for (const auto& d : p.distributions) {
      q.distributions.emplace_back(d.begin(), d.end());
    }
    const double got = epsilon_of(Game(g.strategy_counts(), shifted), p).epsilon;
    const Rational want =
        epsilon_of(BasicGame<Rational>(g.strategy_counts(), exact), q).epsilon;
    EXPECT_NEAR(got, static_cast<double>(want),
                1e-12 * static_cast<double>(want));
  }
}

TEST(ExpectedUtility, MatchesBruteForceOnRandomShapes) {
  Xoshiro256StarStar rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<std::size_t> counts = {1 + rng.below(4), 1 + rng.below(4),
                                       1 + rng.below(4)};
    const Game g = random_game(counts, 9000 + trial);
    const MixedProfile p = random_profile(g, rng);
    for (std::size_t w = 0; w < 3; ++w) {
      const double expected = brute_utility3(g, p, w);
      EXPECT_NEAR(expected_utility(g, p, w), expected, 1e-12 * expected);
    }
  }
}

TEST(NormalizePayoffs, AlreadyNormalizedIsIdentity) {
  Game g({2, 2}, {{0.0, 0.25, 0.5, 1.0}, {1.0, 0.75, 0.0, 0.5}});
  const auto n = normalize_payoffs(g);
  EXPECT_EQ(n.game, g);
  EXPECT_EQ(n.offset, 0.0);
  EXPECT_EQ(n.scale, 1.0);
  EXPECT_FALSE(n.degenerate);
}

TEST(NormalizePayoffs, ConstantGameIsDegenerate) {
  Game g({2, 2}, {{3.0, 3.0, 3.0, 3.0}, {3.0, 3.0, 3.0, 3.0}});
  const auto n = normalize_payoffs(g);
  EXPECT_TRUE(n.degenerate);
  for (std::size_t w = 0; w < 2; ++w) {
    for (double v : n.game.payoffs(w)) EXPECT_EQ(v, 0.0);
  }
}

TEST(NormalizePayoffs, MapsMinusTwoZeroTwo) {
  Game g({3, 1}, {{-2.0, 0.0, 2.0}, {0.0, 0.0, 0.0}});
  const auto n = normalize_payoffs(g);
  EXPECT_EQ(n.offset, 2.0);
  EXPECT_EQ(n.scale, 4.0);
  EXPECT_EQ(n.game.payoffs(0)[0], 0.0);
  EXPECT_EQ(n.game.payoffs(0)[1], 0.5);
  EXPECT_EQ(n.game.payoffs(0)[2], 1.0);
}

TEST(NormalizePayoffs, EpsilonRescalesBack) {
  Xoshiro256StarStar rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Game base = random_game({2, 2, 3}, 700 + trial);
    std::vector<std::vector<double>> wild(3);
    for (std::size_t w = 0; w < 3; ++w) {
      for (double v : base.payoffs(w)) wild[w].push_back(1e3 * v - 400.0);
    }
    const Game g(base.strategy_counts(), wild);
    const auto n = normalize_payoffs(g);
    const MixedProfile p = random_profile(g, rng);
    const double original = epsilon_of(g, p).epsilon;
    EXPECT_NEAR(epsilon_of(n.game, p).epsilon * n.scale, original,
                1e-10 * std::max(1.0, original));
  }
}

TEST(MaxUtilityGap, Examples) {
  Game unit({2, 2}, {{0.0, 0.2, 1.0, 0.5}, {0.0, 1.0, 0.0, 1.0}});
  EXPECT_EQ(max_utility_gap(unit, 0), 1.0);
  Game flat({2, 2}, {{0.4, 0.4, 0.4, 0.4}, {0.0, 1.0, 0.0, 1.0}});
  EXPECT_EQ(max_utility_gap(flat, 0), 0.0);
  Game wide({3, 1}, {{-2.0, 0.0, 2.0}, {0.0, 0.0, 0.0}});
  EXPECT_EQ(max_utility_gap(wide, 0), 4.0);
  EXPECT_THROW(max_utility_gap(wide, 2), InputError);
}

TEST(RandomGame, DeterministicForSeed) {
  EXPECT_EQ(random_game(3, 2, 7), random_game(3, 2, 7));
  EXPECT_FALSE(random_game(3, 2, 7) == random_game(3, 2, 8));
}

TEST(RandomGame, ShapeAndRange) {
  const Game g = random_game(3, 3, 12345);
  for (std::size_t w = 0; w < 3; ++w) {
    ASSERT_EQ(g.payoffs(w).size(), 27u);
    for (double v : g.payoffs(w)) {
      EXPECT_GE(v, 0.0);
      EXPECT_LE(v, 1.0);
    }
  }
}

TEST(RandomGame, MeanIsOneHalf) {
  const Game g = random_game({100, 100, 10}, 2024);
  double sum = 0.0;
  for (double v : g.payoffs(0)) sum += v;
  EXPECT_NEAR(sum / 1e5, 0.5, 0.01);
}

TEST(Game, RejectsBadInput) {
  EXPECT_THROW(Game({2}, {{0.0, 1.0}}), InputError);
  EXPECT_THROW(Game({2, 0}, {{}, {}}), InputError);
  EXPECT_THROW(Game({2, 2}, {{0, 0, 0, 0}, {0, 0, 0}}), InputError);
  EXPECT_THROW(Game({1, 2}, {{0.0, NAN}, {0.0, 0.0}}), InputError);
  EXPECT_THROW(Game({1, 2}, {{0.0, INFINITY}, {0.0, 0.0}}), InputError);
}

TEST(Renormalize, ClampsAndRescales) {
  MixedProfile p{{{0.5, -1e-7, 0.5000002}, {0.0, 0.0}}};
  EXPECT_FALSE(renormalize(p));
  MixedProfile q{{{0.5, -1e-7, 0.5000002}, {2.0, 2.0}}};
  ASSERT_TRUE(renormalize(q));
  EXPECT_EQ(q[0][1], 0.0);
  EXPECT_NEAR(q[0][0] + q[0][2], 1.0, 1e-15);
  EXPECT_EQ(q[1][0], 0.5);
}

TEST(Xoshiro, KnownFirstOutputs) {
  // Reference values from the authors' C implementation seeded through
  // SplitMix64(0).
  SplitMix64 sm(0);
  EXPECT_EQ(sm.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(sm.next(), 0x6E789E6AA1B965F4ULL);
}

}  // namespace
}  // namespace nashqcp
