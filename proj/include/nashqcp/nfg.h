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

// Reading and writing strategic-form games in the NFG text format, plus a
// plain text format for mixed profiles.
//
// An NFG file starts with
//
//   NFG 1 R "title" { "P1" "P2" } { 2 3 }
//
// optionally followed by a quoted comment. The strategy block may also list
// names, as in { { "a" "b" } { "x" "y" "z" } }. Two bodies are accepted:
//
//   * a payoff list: for every outcome, the payoffs of all players in
//     player order, with outcomes ordered so that player 1's strategy
//     changes fastest;
//   * an outcome list { { "name" u1 ... un } ... } followed by one 1-based
//     outcome index per pure profile in the same order (0 pays nothing).
//
// That order is the library's storage order, so a payoff list maps onto
// the payoff tensors without reshuffling. Numbers may be integers,
// decimals with an optional exponent, or fractions a/b.
//
// Profiles are one line per player with that player's probabilities;
// blank lines and lines starting with '#' are ignored.

#ifndef NASHQCP_NFG_H_
#define NASHQCP_NFG_H_

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "nashqcp/errors.h"
#include "nashqcp/game.h"

namespace nashqcp {

namespace nfg_internal {

struct Token {
  enum class Kind : char { kOpen, kClose, kString, kWord, kEnd };
  Kind kind = Kind::kEnd;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    Token token;
    token.line = line_;
    token.column = column_;
    if (pos_ >= text_.size()) return token;
    const char c = text_[pos_];
    if (c == '{' || c == '}') {
      token.kind = c == '{' ? Token::Kind::kOpen : Token::Kind::kClose;
      token.text = std::string(1, c);
      advance();
      return token;
    }
    if (c == '"') {
      token.kind = Token::Kind::kString;
      advance();
      while (true) {
        if (pos_ >= text_.size()) {
          throw ParseError("unterminated string", token.line, token.column);
        }
        char d = text_[pos_];
        advance();
        if (d == '"') break;
        if (d == '\\' && pos_ < text_.size()) {
          d = text_[pos_];
          advance();
        }
        token.text.push_back(d);
      }
      return token;
    }
    token.kind = Token::Kind::kWord;
    while (pos_ < text_.size() && !is_space(text_[pos_]) &&
           text_[pos_] != '{' && text_[pos_] != '}' && text_[pos_] != '"') {
      token.text.push_back(text_[pos_]);
      advance();
    }
    return token;
  }

 private:
  static bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == ',';
  }
  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) advance();
  }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

[[noreturn]] inline void fail(const std::string& message, const Token& at) {
  throw ParseError(message, at.line, at.column);
}

inline double parse_plain(std::string_view s, const Token& at) {
  double value = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size()) {
    fail("not a number: '" + at.text + "'", at);
  }
  return value;
}

// Integer, decimal or a/b; NaN and infinities are rejected.
inline double parse_number(const Token& at) {
  if (at.kind != Token::Kind::kWord) fail("expected a number", at);
  std::string_view s = at.text;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double value;
  const auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    value = parse_plain(s, at);
  } else {
    const double num = parse_plain(s.substr(0, slash), at);
    const double den = parse_plain(s.substr(slash + 1), at);
    if (den == 0.0) fail("zero denominator", at);
    value = num / den;
  }
  if (!std::isfinite(value)) fail("payoffs must be finite", at);
  return value;
}

inline std::size_t parse_count(const Token& at) {
  std::size_t value = 0;
  const char* first = at.text.data();
  const char* last = first + at.text.size();
  const auto [end, ec] = std::from_chars(first, last, value);
  if (at.kind != Token::Kind::kWord || ec != std::errc() || end != last) {
    fail("expected a nonnegative integer", at);
  }
  return value;
}

inline void expect(const Token& token, Token::Kind kind, const char* what) {
  if (token.kind != kind) {
    fail(std::string("expected ") + what +
             (token.kind == Token::Kind::kEnd ? ", found end of input"
                                              : ", found '" + token.text + "'"),
         token);
  }
}

}  // namespace nfg_internal

struct NfgDocument {
  Game game;
  std::string title;
  std::vector<std::string> player_names;
};

inline NfgDocument parse_nfg_document(std::string_view text) {
  using nfg_internal::expect;
  using nfg_internal::fail;
  using Kind = nfg_internal::Token::Kind;
  nfg_internal::Lexer lex(text);

  auto tok = lex.next();
  if (tok.kind != Kind::kWord || tok.text != "NFG") {
    fail("file must start with 'NFG'", tok);
  }
  tok = lex.next();
  if (tok.kind != Kind::kWord || tok.text != "1") {
    fail("unsupported NFG version", tok);
  }
  tok = lex.next();
  if (tok.kind != Kind::kWord || tok.text != "R") {
    fail("only the 'R' (real payoff) dialect is supported", tok);
  }
  NfgDocument doc;
  tok = lex.next();
  expect(tok, Kind::kString, "a quoted title");
  doc.title = tok.text;

  expect(lex.next(), Kind::kOpen, "'{' before the player list");
  for (tok = lex.next(); tok.kind == Kind::kString; tok = lex.next()) {
    doc.player_names.push_back(tok.text);
  }
  expect(tok, Kind::kClose, "'}' after the player list");
  const std::size_t n = doc.player_names.size();
  if (n < 2) fail("a game needs at least two players", tok);

  std::vector<std::size_t> counts;
  expect(lex.next(), Kind::kOpen, "'{' before the strategy counts");
  for (tok = lex.next(); tok.kind != Kind::kClose; tok = lex.next()) {
    if (tok.kind == Kind::kOpen) {
      std::size_t named = 0;
      for (tok = lex.next(); tok.kind == Kind::kString; tok = lex.next()) ++named;
      expect(tok, Kind::kClose, "'}' after strategy names");
      counts.push_back(named);
    } else {
      counts.push_back(nfg_internal::parse_count(tok));
    }
    if (counts.back() == 0) fail("every player needs a strategy", tok);
  }
  if (counts.size() != n) {
    fail("expected " + std::to_string(n) + " strategy counts, found " +
             std::to_string(counts.size()),
         tok);
  }
  std::size_t total = 1;
  for (std::size_t m : counts) total *= m;

  std::vector<std::vector<double>> payoffs(n, std::vector<double>(total));
  tok = lex.next();
  if (tok.kind == Kind::kString) tok = lex.next();  // comment
  if (tok.kind == Kind::kOpen) {
    // Outcome list, then one index per pure profile.
    std::vector<std::vector<double>> outcomes;
    for (tok = lex.next(); tok.kind == Kind::kOpen; tok = lex.next()) {
      tok = lex.next();
      if (tok.kind == Kind::kString) tok = lex.next();
      std::vector<double> outcome;
      for (; tok.kind == Kind::kWord; tok = lex.next()) {
        outcome.push_back(nfg_internal::parse_number(tok));
      }
      expect(tok, Kind::kClose, "'}' after an outcome");
      if (outcome.size() != n) {
        fail("outcome has " + std::to_string(outcome.size()) +
                 " payoffs, expected " + std::to_string(n),
             tok);
      }
      outcomes.push_back(std::move(outcome));
    }
    expect(tok, Kind::kClose, "'}' after the outcome list");
    for (std::size_t k = 0; k < total; ++k) {
      tok = lex.next();
      if (tok.kind == Kind::kEnd) {
        fail("expected " + std::to_string(total) + " outcome indices, found " +
                 std::to_string(k),
             tok);
      }
      const std::size_t index = nfg_internal::parse_count(tok);
      if (index > outcomes.size()) fail("outcome index out of range", tok);
      for (std::size_t w = 0; w < n; ++w) {
        payoffs[w][k] = index == 0 ? 0.0 : outcomes[index - 1][w];
      }
    }
    tok = lex.next();
  } else {
    for (std::size_t k = 0; k < total * n; ++k) {
      if (tok.kind == Kind::kEnd) {
        fail("expected " + std::to_string(total * n) + " payoffs, found " +
                 std::to_string(k),
             tok);
      }
      payoffs[k % n][k / n] = nfg_internal::parse_number(tok);
      tok = lex.next();
    }
  }
  if (tok.kind != Kind::kEnd) fail("unexpected trailing input", tok);
  doc.game = Game(std::move(counts), std::move(payoffs));
  return doc;
}

inline Game parse_nfg(std::string_view text) {
  return parse_nfg_document(text).game;
}

// Payoff-list form with 17 significant digits, which round-trips doubles.
inline std::string emit_nfg(const Game& game, std::string_view title = "") {
  auto quote = [](std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out.push_back('\\');
      out.push_back(c);
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "NFG 1 R " << quote(title) << " {";
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    out << " \"Player " << i + 1 << "\"";
  }
  out << " } {";
  for (std::size_t m : game.strategy_counts()) out << ' ' << m;
  out << " }\n\n";
  char buffer[32];
  for (std::size_t k = 0; k < game.num_profiles(); ++k) {
    for (std::size_t w = 0; w < game.num_players(); ++w) {
      std::snprintf(buffer, sizeof buffer, "%.17g", game.payoff(w, k));
      out << (w == 0 ? "" : " ") << buffer;
    }
    out << '\n';
  }
  return out.str();
}

inline MixedProfile parse_profile(std::string_view text) {
  MixedProfile profile;
  std::size_t line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    ++line_number;
    start = end + 1;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    std::vector<double> dist;
    nfg_internal::Lexer lex(line);
    for (auto tok = lex.next(); tok.kind != nfg_internal::Token::Kind::kEnd;
         tok = lex.next()) {
      tok.line = line_number;
      const double p = nfg_internal::parse_number(tok);
      if (p < 0.0) nfg_internal::fail("negative probability", tok);
      dist.push_back(p);
    }
    profile.distributions.push_back(std::move(dist));
  }
  if (profile.distributions.empty()) throw ParseError("empty profile", 1, 1);
  return profile;
}

inline std::string emit_profile(const MixedProfile& profile) {
  std::string out;
  char buffer[32];
  for (const auto& dist : profile.distributions) {
    for (std::size_t s = 0; s < dist.size(); ++s) {
      std::snprintf(buffer, sizeof buffer, "%.17g", dist[s]);
      if (s > 0) out.push_back(' ');
      out += buffer;
    }
    out.push_back('\n');
  }
  return out;
}

}  // namespace nashqcp

#endif  // NASHQCP_NFG_H_
