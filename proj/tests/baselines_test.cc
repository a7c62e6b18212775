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

#include "nashqcp/baselines.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gtest/gtest.h"
#include "nashqcp/random.h"
#include "test_games.h"

namespace nashqcp {
namespace {

using Rational = boost::multiprecision::cpp_rational;

// All vectors of length m with entries summing to k, by brute force over
// {0..k}^m, in lexicographic order.
std::vector<std::vector<std::size_t>> all_compositions(std::size_t m,
                                                       std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> v(m, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t left) {
    if (i + 1 == m) {
      v[i] = left;
      out.push_back(v);
      return;
    }
    for (std::size_t x = 0; x <= left; ++x) {
      v[i] = x;
      rec(i + 1, left - x);
    }
  };
  rec(0, k);
  return out;
}

TEST(Compositions, LexicographicAndComplete) {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (std::size_t k = 1; k <= 5; ++k) {
      const auto expected = all_compositions(m, k);
      ASSERT_TRUE(std::is_sorted(expected.begin(), expected.end()));
      std::vector<std::vector<std::size_t>> got;
      std::vector<std::size_t> c(m, 0);
      c.back() = k;
      do {
        got.push_back(c);
      } while (next_composition(c));
      EXPECT_EQ(got, expected) << "m=" << m << " k=" << k;
    }
  }
}

TEST(KUniform, PureEquilibriumAtKOne) {
  const auto r = k_uniform_search(testing_games::dominant_three_player(),
                                  0.0, 3);
  ASSERT_EQ(r.status, KUniformStatus::kFound);
  EXPECT_EQ(r.k, 1u);
  EXPECT_EQ(r.epsilon, 0.0);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(r.profile[i][0], 1.0);
}

TEST(KUniform, MatchingPenniesNeedsKTwo) {
  const auto g = testing_games::matching_pennies().cast<Rational>();
  const auto r = k_uniform_search(g, Rational(0), 6);
  ASSERT_EQ(r.status, KUniformStatus::kFound);
  EXPECT_EQ(r.k, 2u);
  EXPECT_EQ(r.epsilon, 0);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(r.profile[i][0], Rational(1, 2));
    EXPECT_EQ(r.counts[i], (std::vector<std::size_t>{1, 1}));
  }
}

TEST(KUniform, RandomThreePlayerWithinTwenty) {
  const Game g = random_game(3, 2, 12345);
  const auto r = k_uniform_search(g, 0.05, 20);
  ASSERT_EQ(r.status, KUniformStatus::kFound);
  EXPECT_LE(r.k, 20u);
  EXPECT_DOUBLE_EQ(r.epsilon, epsilon_of(g, r.profile).epsilon);
  EXPECT_LE(r.epsilon, 0.05);
}

TEST(KUniform, FirstHitFollowsEnumerationOrder) {
  // Every profile is an equilibrium of a constant game, so the first one
  // enumerated wins: each player on its last strategy.
  const Game g({2, 3}, {std::vector<double>(6, 0.5), std::vector<double>(6, 0.5)});
  const auto r = k_uniform_search(g, 0.0, 4);
  ASSERT_EQ(r.status, KUniformStatus::kFound);
  EXPECT_EQ(r.profiles_examined, 1u);
  EXPECT_EQ(r.counts[0], (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(r.counts[1], (std::vector<std::size_t>{0, 0, 1}));
}

TEST(KUniform, BudgetAndArguments) {
  const auto g = testing_games::matching_pennies();
  const auto r = k_uniform_search(g, 0.0, 6, 3);
  EXPECT_EQ(r.status, KUniformStatus::kBudgetExceeded);
  EXPECT_EQ(r.profiles_examined, 3u);
  EXPECT_THROW(k_uniform_search(g, 0.0, 0), InputError);
  EXPECT_EQ(k_uniform_search(g, 0.0, 1).status, KUniformStatus::kNotFound);
}

// Generic rational 2x2 games: the closed-form equilibria have some common
// denominator d, and the exact search finds an equilibrium by k = d.
TEST(KUniform, ExactOnTwoByTwoWithinDenominator) {
  Xoshiro256StarStar rng(77);
  int checked = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto g = testing_games::small_integer_game({2, 2}, 6, rng);
    if (!testing_games::generic_two_by_two(g)) continue;
    const auto eqs = testing_games::two_by_two_equilibria(g);
    ASSERT_FALSE(eqs.empty());
    std::size_t d = 0;
    for (const auto& [p, q] : eqs) {
      const auto dp = static_cast<std::size_t>(denominator(p));
      const auto dq = static_cast<std::size_t>(denominator(q));
      const std::size_t l = std::lcm(dp, dq);
      if (d == 0 || l < d) d = l;
    }
    const auto r = k_uniform_search(g, Rational(0), d);
    ASSERT_EQ(r.status, KUniformStatus::kFound) << "trial " << trial;
    EXPECT_LE(r.k, d);
    EXPECT_EQ(r.epsilon, 0);
    const std::pair<Rational, Rational> found{r.profile[0][0], r.profile[1][0]};
    EXPECT_NE(std::find(eqs.begin(), eqs.end(), found), eqs.end());
    ++checked;
  }
  EXPECT_GT(checked, 20);
}

TEST(FictitiousPlay, DominanceConverges) {
  LearningOptions options;
  options.iterations = 10000;
  const auto trace =
      fictitious_play(testing_games::dominant_two_player(), options);
  EXPECT_LE(trace.final_epsilon, 1e-3);
  EXPECT_EQ(trace.iterations, 10000u);
}

TEST(FictitiousPlay, MatchingPenniesApproaches) {
  LearningOptions options;
  options.iterations = 10000;
  const auto trace = fictitious_play(testing_games::matching_pennies(), options);
  // Payoffs span [-1, 1].
  EXPECT_LE(trace.final_epsilon, 0.05 * 2);
  EXPECT_NEAR(trace.average[0][0], 0.5, 0.05);
}

// The averages obey avg_t - avg_{t-1} = (br_t - avg_{t-1}) / t, with br_t
// recomputed here from avg_{t-1}.
TEST(FictitiousPlay, UpdateRecurrence) {
  const Game g = random_game(3, 3, 5);
  MixedProfile previous = uniform_profile(g);
  int checked = 0;
  LearningOptions options;
  options.iterations = 200;
  options.observer = [&](std::size_t t, const MixedProfile& avg) {
    for (std::size_t i = 0; i < 3; ++i) {
      const auto v = deviation_values(g, previous, i);
      std::size_t br = 0;
      for (std::size_t s = 1; s < v.size(); ++s) {
        if (v[s] > v[br]) br = s;
      }
      for (std::size_t s = 0; s < 3; ++s) {
        const double expected =
            ((s == br ? 1.0 : 0.0) - previous[i][s]) / static_cast<double>(t);
        ASSERT_NEAR(avg[i][s] - previous[i][s], expected, 1e-12);
      }
    }
    previous = avg;
    ++checked;
  };
  fictitious_play(g, options);
  EXPECT_EQ(checked, 200);
}

TEST(Learners, TraceMatchesFromScratchEpsilon) {
  const Game g = random_game(3, 2, 8);
  for (auto learner : {&fictitious_play, &regret_matching}) {
    LearningOptions options;
    options.iterations = 60;
    options.trace_every = 7;
    const auto trace = learner(g, options);
    ASSERT_FALSE(trace.epsilon_trace.empty());
    EXPECT_EQ(trace.epsilon_trace.back().first, 60u);
    for (const auto& [t, eps] : trace.epsilon_trace) {
      EXPECT_TRUE(t % 7 == 0 || t == 60);
      LearningOptions shorter;
      shorter.iterations = t;
      const auto replay = learner(g, shorter);
      EXPECT_NEAR(eps, epsilon_of(g, replay.average).epsilon, 1e-10);
      EXPECT_GE(eps, 0.0);
    }
    EXPECT_NEAR(trace.final_epsilon, epsilon_of(g, trace.average).epsilon,
                1e-10);
  }
}

TEST(RegretMatching, IteratesAreDistributions) {
  const Game g = random_game(4, 3, 9);
  LearningOptions options;
  options.iterations = 500;
  options.observer = [&](std::size_t, const MixedProfile& current) {
    for (const auto& dist : current.distributions) {
      double sum = 0.0;
      for (double p : dist) {
        ASSERT_GE(p, 0.0);
        sum += p;
      }
      ASSERT_NEAR(sum, 1.0, 1e-12);
    }
  };
  const auto trace = regret_matching(g, options);
  EXPECT_NO_THROW(validate_profile(g, trace.average, 1e-12));
}

TEST(RegretMatching, DominanceConverges) {
  LearningOptions options;
  options.iterations = 10000;
  const auto trace =
      regret_matching(testing_games::dominant_two_player(), options);
  EXPECT_LE(trace.final_epsilon, 1e-3);
  EXPECT_GT(trace.average[0][0], 0.99);
}

TEST(RegretMatching, ConstantGameStaysUniform) {
  const Game g({2, 3, 2}, std::vector<std::vector<double>>(
                              3, std::vector<double>(12, 0.0)));
  LearningOptions options;
  options.iterations = 100;
  options.trace_every = 10;
  options.observer = [&](std::size_t, const MixedProfile& current) {
    EXPECT_EQ(current, uniform_profile(g));
  };
  const auto trace = regret_matching(g, options);
  for (const auto& [t, eps] : trace.epsilon_trace) EXPECT_EQ(eps, 0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    for (double p : trace.average[i]) {
      EXPECT_NEAR(p, 1.0 / static_cast<double>(trace.average[i].size()),
                  1e-15);
    }
  }
}

TEST(Learners, RejectZeroIterations) {
  LearningOptions options;
  options.iterations = 0;
  EXPECT_THROW(fictitious_play(testing_games::matching_pennies(), options),
               InputError);
  EXPECT_THROW(regret_matching(testing_games::matching_pennies(), options),
               InputError);
}

}  // namespace
}  // namespace nashqcp
