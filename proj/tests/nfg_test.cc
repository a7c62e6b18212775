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

#include "nashqcp/nfg.h"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "nashqcp/random.h"
#include "test_games.h"

namespace nashqcp {
namespace {

std::string read_fixture(const std::string& name) {
  std::ifstream in(std::string(NASHQCP_TEST_DATA) + "/" + name);
  EXPECT_TRUE(in.good()) << name;
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

TEST(ParseNfg, SmallestGame) {
  const NfgDocument doc = parse_nfg_document(read_fixture("one_by_one.nfg"));
  EXPECT_EQ(doc.title, "Smallest game");
  EXPECT_EQ(doc.player_names, (std::vector<std::string>{"A", "B"}));
  const Game expected({1, 1}, {{3.0}, {-2.0}});
  EXPECT_EQ(doc.game, expected);
}

TEST(ParseNfg, MatchingPenniesGolden) {
  EXPECT_EQ(parse_nfg(read_fixture("matching_pennies.nfg")),
            testing_games::matching_pennies());
}

TEST(ParseNfg, OutcomeForm) {
  const NfgDocument doc =
      parse_nfg_document(read_fixture("prisoners_dilemma_outcomes.nfg"));
  // Flat index is row + 2 * column; strategy 0 is Cooperate.
  const Game expected({2, 2}, {{3, 5, 0, 1}, {3, 0, 5, 1}});
  EXPECT_EQ(doc.game, expected);
}

TEST(ParseNfg, NullOutcomePaysZero) {
  const Game g = parse_nfg(
      "NFG 1 R \"\" { \"a\" \"b\" } { 2 1 }\n{ { \"\" 1 2 } }\n0 1\n");
  EXPECT_EQ(g, Game({2, 1}, {{0, 1}, {0, 2}}));
}

TEST(ParseNfg, NumberForms) {
  const Game g = parse_nfg(
      "NFG 1 R \"t\" { \"a\" \"b\" } { 2 1 }\n1/4 -3 +2.5e-1 .5\n");
  EXPECT_EQ(g, Game({2, 1}, {{0.25, 0.25}, {-3.0, 0.5}}));
}

TEST(ParseNfg, DominantFixture) {
  const Game g = parse_nfg(read_fixture("dominant_three_player.nfg"));
  ASSERT_EQ(g.strategy_counts(), (std::vector<std::size_t>{2, 2, 2}));
  std::vector<std::size_t> pure(3, 0);
  do {
    for (std::size_t w = 0; w < 3; ++w) {
      EXPECT_EQ(g.payoff(w, pure), pure[w] == 0 ? 1.0 : 0.0);
    }
  } while (next_profile(pure, g.strategy_counts(), 3));
}

struct BadInput {
  const char* text;
  std::size_t line;
  std::size_t column;
};

TEST(ParseNfg, ErrorsCarryPositions) {
  const BadInput cases[] = {
      {"NGF 1 R \"\" { \"a\" \"b\" } { 1 1 } 1 2", 1, 1},
      {"NFG 2 R \"\" { \"a\" \"b\" } { 1 1 } 1 2", 1, 5},
      {"NFG 1 D \"\" { \"a\" \"b\" } { 1 1 } 1 2", 1, 7},
      {"NFG 1 R \"\" { \"a\" } { 1 } 1", 1, 18},
      {"NFG 1 R \"\" { \"a\" \"b\" } { 1 }\n1 2", 1, 28},
      {"NFG 1 R \"\" { \"a\" \"b\" } { 1 1 }\n1", 2, 2},
      {"NFG 1 R \"\" { \"a\" \"b\" } { 1 1 }\n1 2 3", 2, 5},
      {"NFG 1 R \"\" { \"a\" \"b\" } { 1 1 }\n1 nan", 2, 3},
      {"NFG 1 R \"\" { \"a\" \"b\" } { 1 1 }\ninf 1", 2, 1},
      {"NFG 1 R \"\" { \"a\" \"b\" } { 1 1 }\n1 x2", 2, 3},
      {"NFG 1 R \"\" { \"a\" \"b\" } { 1 1 }\n1/0 2", 2, 1},
      {"NFG 1 R \"\" { \"a\" \"b\" } { 0 1 }", 1, 26},
      {"NFG 1 R \"unterminated", 1, 9},
      {"NFG 1 R \"\" { \"a\" \"b\" } { 1 1 }\n{ { \"\" 1 } }\n1", 2, 10},
      {"NFG 1 R \"\" { \"a\" \"b\" } { 1 1 }\n{ { \"\" 1 2 } }\n2", 3, 1},
  };
  for (const auto& c : cases) {
    try {
      parse_nfg(c.text);
      ADD_FAILURE() << "accepted: " << c.text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.line(), c.line) << c.text << "\n" << e.what();
      EXPECT_EQ(e.column(), c.column) << c.text << "\n" << e.what();
    }
  }
}

TEST(EmitNfg, GoldenText) {
  EXPECT_EQ(emit_nfg(Game({1, 1}, {{3.0}, {-2.0}}), "Smallest game"),
            "NFG 1 R \"Smallest game\" { \"Player 1\" \"Player 2\" } { 1 1 }"
            "\n\n3 -2\n");
  EXPECT_EQ(emit_nfg(testing_games::matching_pennies()),
            "NFG 1 R \"\" { \"Player 1\" \"Player 2\" } { 2 2 }\n\n"
            "1 -1\n-1 1\n-1 1\n1 -1\n");
  EXPECT_EQ(emit_nfg(Game({1, 1}, {{0.1}, {1.0 / 3.0}}), "say \"hi\""),
            "NFG 1 R \"say \\\"hi\\\"\" { \"Player 1\" \"Player 2\" } { 1 1 }"
            "\n\n0.10000000000000001 0.33333333333333331\n");
}

TEST(EmitNfg, RoundTripsGeneratedGames) {
  Xoshiro256StarStar rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::size_t> counts(2 + rng.below(3));
    for (auto& m : counts) m = 1 + rng.below(3);
    Game g = random_game(counts, derive_seed(9, trial));
    if (trial % 2) {
      // Spread magnitudes so the 17-digit printing is exercised.
      std::vector<std::vector<double>> wide(counts.size());
      for (std::size_t w = 0; w < counts.size(); ++w) {
        for (double v : g.payoffs(w)) {
          wide[w].push_back((v - 0.5) * std::pow(10.0, rng.below(40) - 20.0));
        }
      }
      g = Game(counts, wide);
    }
    const std::string text = emit_nfg(g, "t" + std::to_string(trial));
    const NfgDocument doc = parse_nfg_document(text);
    ASSERT_EQ(doc.game, g) << text;
    EXPECT_EQ(emit_nfg(doc.game, doc.title), text);
  }
}

TEST(Profile, ParseAndEmit) {
  const MixedProfile p =
      parse_profile(read_fixture("matching_pennies_equilibrium.txt"));
  ASSERT_EQ(p.num_players(), 2u);
  EXPECT_EQ(p[0], (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(p[1], (std::vector<double>{0.5, 0.5}));
  EXPECT_EQ(emit_profile(p), "0.5 0.5\n0.5 0.5\n");
  MixedProfile q;
  q.distributions = {{0.1, 0.9}, {1.0 / 3.0, 2.0 / 3.0, 0.0}};
  EXPECT_EQ(parse_profile(emit_profile(q)), q);
}

TEST(Profile, Errors) {
  EXPECT_THROW(parse_profile("\n# nothing\n"), ParseError);
  try {
    parse_profile("0.5 0.5\n0.2 -0.1\n");
    ADD_FAILURE();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 5u);
  }
}

}  // namespace
}  // namespace nashqcp
