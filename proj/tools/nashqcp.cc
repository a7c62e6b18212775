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

// Command-line front end.
//
//   nashqcp solve  [GAME.nfg | --players N --actions M --seed S] [options]
//   nashqcp bench  --players N --actions M --count C --seed S --algo A
//                  --out records.csv [--config bench.toml]
//                  (config keys go under a [bench] section)
//   nashqcp verify GAME.nfg PROFILE.txt
//   nashqcp gen    --players N --actions M --count C --seed S --out DIR
//
// Exit codes: 0 on success, 1 when some game was not solved or failed,
// 2 on usage or input errors.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nashqcp/baselines.h"
#include "nashqcp/bench.h"
#include "nashqcp/bnb.h"
#include "nashqcp/game.h"
#include "nashqcp/nfg.h"
#include "nashqcp/random.h"

namespace {

constexpr int kOk = 0;
constexpr int kNotSolved = 1;
constexpr int kUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw nashqcp::InputError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw nashqcp::InputError("cannot write " + path);
}

struct Options {
  std::size_t players = 3;
  std::size_t actions = 2;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  double time_limit = 900.0;
  double feas_tol = 1e-4;
  double eps_accept = 1e-3;
  std::string algo = "miqcp";
  std::size_t jobs = 1;
  std::size_t iterations = 10000;
  std::size_t k_max = 20;
  bool no_normalize = false;
  std::string out;
  std::vector<std::string> files;
};

void add_random_source(CLI::App* cmd, Options& o) {
  cmd->add_option("--players", o.players, "Players in random games")
      ->check(CLI::Range(2, 16));
  cmd->add_option("--actions", o.actions, "Actions per player")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", o.seed, "Batch seed");
}

void add_algorithm_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--algo", o.algo, "miqcp, kuniform, fp or cfr")
      ->check(CLI::IsMember({"miqcp", "kuniform", "fp", "cfr"}));
  cmd->add_option("--time-limit", o.time_limit, "Seconds per game")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--feas-tol", o.feas_tol, "Bilinear residual tolerance")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--eps-accept", o.eps_accept,
                  "Accepted epsilon, normalized units")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--iterations", o.iterations, "Learner iterations (fp, cfr)")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--k-max", o.k_max, "Largest k (kuniform)")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--no-normalize", o.no_normalize,
                "Solve on the raw payoffs, which must lie in [0, 1]");
}

nashqcp::ExperimentSpec make_spec(const Options& o) {
  nashqcp::ExperimentSpec spec;
  spec.players = o.players;
  spec.actions = o.actions;
  spec.count = o.count;
  spec.seed = o.seed;
  spec.files = o.files;
  spec.algorithm = nashqcp::parse_algorithm(o.algo);
  spec.solver.time_limit = o.time_limit;
  spec.solver.feasibility_tolerance = o.feas_tol;
  spec.solver.epsilon_accept = o.eps_accept;
  spec.solver.normalize = !o.no_normalize;
  spec.solver.seed = o.seed;
  spec.iterations = o.iterations;
  spec.k_max = o.k_max;
  spec.solved_epsilon = o.eps_accept;
  spec.jobs = o.jobs;
  spec.output = o.out;
  return spec;
}

int run_solve(const Options& o) {
  nashqcp::ExperimentSpec spec = make_spec(o);
  spec.count = 1;
  nashqcp::Game game =
      o.files.empty()
          ? nashqcp::random_game(o.players, o.actions,
                                 nashqcp::derive_seed(o.seed, 0))
          : nashqcp::parse_nfg(read_file(o.files[0]));
  std::optional<nashqcp::MixedProfile> profile;
  std::string status;
  bool solved = false;
  const auto norm = nashqcp::normalize_payoffs(game);
  switch (spec.algorithm) {
    case nashqcp::Algorithm::kMiqcp: {
      spec.solver.workers = o.jobs;
      const auto r = nashqcp::solve(game, spec.solver);
      status = std::string(nashqcp::status_name(r.status));
      solved = r.status == nashqcp::BnbStatus::kSolved;
      profile = r.profile;
      std::printf("nodes %zu\nlp_solves %zu\nmax_depth %zu\nseconds %.6f\n",
                  r.stats.nodes, r.stats.lp_solves, r.stats.max_depth,
                  r.stats.wall_seconds);
      if (!r.diagnostics.empty()) {
        std::printf("diagnostics %s\n", r.diagnostics.c_str());
      }
      break;
    }
    case nashqcp::Algorithm::kKUniform: {
      const auto r = nashqcp::k_uniform_search(norm.game, o.eps_accept, o.k_max);
      status = std::string(nashqcp::status_name(r.status));
      if (r.status == nashqcp::KUniformStatus::kFound) {
        profile = r.profile;
        std::printf("k %zu\n", r.k);
      }
      break;
    }
    case nashqcp::Algorithm::kFictitiousPlay:
    case nashqcp::Algorithm::kRegretMatching: {
      nashqcp::LearningOptions options;
      options.iterations = o.iterations;
      const auto trace = spec.algorithm == nashqcp::Algorithm::kFictitiousPlay
                             ? nashqcp::fictitious_play(game, options)
                             : nashqcp::regret_matching(game, options);
      status = "done";
      profile = trace.average;
      break;
    }
  }
  std::printf("status %s\n", status.c_str());
  if (!profile) return kNotSolved;
  const double eps = nashqcp::epsilon_of(game, *profile).epsilon;
  const double normalized = norm.degenerate ? 0.0 : eps / norm.scale;
  if (spec.algorithm != nashqcp::Algorithm::kMiqcp) {
    solved = normalized <= o.eps_accept;
  }
  std::printf("epsilon %.17g\nnormalized_epsilon %.17g\nprofile\n%s", eps,
              normalized, nashqcp::emit_profile(*profile).c_str());
  if (!o.out.empty()) write_file(o.out, nashqcp::emit_profile(*profile));
  return solved ? kOk : kNotSolved;
}

int run_bench(const Options& o) {
  const nashqcp::ExperimentSpec spec = make_spec(o);
  const std::size_t total = spec.num_games();
  const auto result =
      nashqcp::run_experiment(spec, [&](const nashqcp::RunRecord& r) {
        char eps[32] = "-";
        if (r.normalized_epsilon) {
          std::snprintf(eps, sizeof eps, "%.3g", *r.normalized_epsilon);
        }
        std::fprintf(stderr, "[%zu/%zu] %s eps=%s %.3fs\n", r.index + 1,
                     total, r.status.c_str(), eps, r.seconds);
      });
  std::printf("%s", nashqcp::format_summary(result.summary).c_str());
  return result.summary.failures > 0 ? kNotSolved : kOk;
}

int run_verify(const std::string& game_path, const std::string& profile_path) {
  const nashqcp::Game game = nashqcp::parse_nfg(read_file(game_path));
  const nashqcp::MixedProfile profile =
      nashqcp::parse_profile(read_file(profile_path));
  nashqcp::validate_profile(game, profile, 1e-9);
  const auto report = nashqcp::epsilon_of(game, profile);
  const auto norm = nashqcp::normalize_payoffs(game);
  std::printf("epsilon %.17g\n", report.epsilon);
  std::printf("normalized_epsilon %.17g\n",
              norm.degenerate ? 0.0 : report.epsilon / norm.scale);
  for (std::size_t i = 0; i < game.num_players(); ++i) {
    std::printf("player %zu regret %.17g best_response %zu\n", i + 1,
                report.per_player_regret[i], report.best_responses[i] + 1);
  }
  return kOk;
}

int run_gen(const Options& o) {
  for (std::size_t i = 0; i < o.count; ++i) {
    const std::uint64_t seed = nashqcp::derive_seed(o.seed, i);
    const nashqcp::Game game = nashqcp::random_game(o.players, o.actions, seed);
    const std::string text = nashqcp::emit_nfg(
        game, "random " + std::to_string(o.players) + "x" +
                  std::to_string(o.actions) + " seed " + std::to_string(seed));
    if (o.out.empty()) {
      std::printf("%s", text.c_str());
    } else {
      std::filesystem::create_directories(o.out);
      char name[64];
      std::snprintf(name, sizeof name, "game_%04zu.nfg", i);
      write_file((std::filesystem::path(o.out) / name).string(), text);
    }
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nash equilibria of strategic-form games"};
  app.require_subcommand(1);
  Options o;

  CLI::App* solve = app.add_subcommand("solve", "Solve one game");
  solve->add_option("game", o.files, "NFG file (default: a random game)")
      ->expected(0, 1)
      ->check(CLI::ExistingFile);
  add_random_source(solve, o);
  add_algorithm_options(solve, o);
  solve->add_option("--jobs", o.jobs, "Search workers (miqcp)")
      ->check(CLI::PositiveNumber);
  solve->add_option("--out", o.out, "Write the profile here");

  CLI::App* bench = app.add_subcommand("bench", "Run a batch of games");
  // Config files are read by the top-level app; keys go in a [bench]
  // section, and fallthrough lets --config follow the subcommand name.
  app.set_config("--config", "", "TOML or INI file; keys under [bench]");
  bench->fallthrough();
  bench->add_option("--files", o.files, "NFG files instead of random games")
      ->check(CLI::ExistingFile);
  add_random_source(bench, o);
  bench->add_option("--count", o.count, "Random games")
      ->check(CLI::PositiveNumber);
  add_algorithm_options(bench, o);
  bench->add_option("--jobs", o.jobs, "Games run in parallel")
      ->check(CLI::PositiveNumber);
  bench->add_option("--out", o.out,
                    "Record CSV; timings go to <out>.timing.csv");

  std::string game_path, profile_path;
  CLI::App* verify = app.add_subcommand("verify", "Epsilon of a profile");
  verify->add_option("game", game_path, "NFG file")
      ->required()
      ->check(CLI::ExistingFile);
  verify->add_option("profile", profile_path, "One line per player")
      ->required()
      ->check(CLI::ExistingFile);

  CLI::App* gen = app.add_subcommand("gen", "Write random games as NFG");
  add_random_source(gen, o);
  gen->add_option("--count", o.count, "Games")->check(CLI::PositiveNumber);
  gen->add_option("--out", o.out, "Directory (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return run_solve(o);
    if (*bench) return run_bench(o);
    if (*verify) return run_verify(game_path, profile_path);
    if (*gen) return run_gen(o);
  } catch (const nashqcp::InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kNotSolved;
  }
  return kUsage;
}
