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

// Batch experiments: run one algorithm over a list of games and summarize.
//
// Games come either from random(n, m, count, seed), where game i uses
// derive_seed(seed, i), or from NFG files. Each finished game yields a
// RunRecord. Records are written in game order as soon as every earlier
// game has finished, so an interrupted batch leaves a valid prefix.
//
// Output is two CSV files. The record file holds everything that is a
// function of the inputs alone, which makes it byte-identical across
// repeated runs. Wall-clock times go to a sidecar, `<output>.timing.csv`.
// Every line of both files starts with the schema version.
//
// Summary conventions: a timed-out run counts at the time limit in the
// average and median; OverTime is the fraction of timed-out runs; a run is
// NotSolved when it failed, produced no profile, or its epsilon in
// normalized units exceeds solved_epsilon.

#ifndef NASHQCP_BENCH_H_
#define NASHQCP_BENCH_H_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "nashqcp/baselines.h"
#include "nashqcp/bnb.h"
#include "nashqcp/errors.h"
#include "nashqcp/game.h"
#include "nashqcp/nfg.h"
#include "nashqcp/random.h"

namespace nashqcp {

inline constexpr int kRecordSchemaVersion = 1;

enum class Algorithm : char { kMiqcp, kKUniform, kFictitiousPlay, kRegretMatching };

inline std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kMiqcp:
      return "miqcp";
    case Algorithm::kKUniform:
      return "kuniform";
    case Algorithm::kFictitiousPlay:
      return "fp";
    case Algorithm::kRegretMatching:
      return "cfr";
  }
  return "?";
}

inline Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kMiqcp, Algorithm::kKUniform,
                      Algorithm::kFictitiousPlay, Algorithm::kRegretMatching}) {
    if (algorithm_name(a) == name) return a;
  }
  throw InputError("unknown algorithm '" + std::string(name) +
                   "' (expected miqcp, kuniform, fp or cfr)");
}

struct ExperimentSpec {
  // Random source, used when `files` is empty.
  std::size_t players = 3;
  std::size_t actions = 2;
  std::size_t count = 1;
  std::uint64_t seed = 0;
  std::vector<std::string> files;

  Algorithm algorithm = Algorithm::kMiqcp;
  SolverConfig solver;
  std::size_t iterations = 10000;  // fp and cfr
  std::size_t k_max = 20;          // kuniform
  std::uint64_t k_budget = 10'000'000;
  double solved_epsilon = 1e-3;
  std::size_t jobs = 1;
  // Record file path; empty writes nothing.
  std::string output;

  std::size_t num_games() const { return files.empty() ? count : files.size(); }

  void validate() const {
    solver.validate();
    if (files.empty()) {
      if (count < 1) throw InputError("count must be at least 1");
      if (players < 2) throw InputError("need at least two players");
      if (actions < 1) throw InputError("need at least one action");
    }
    if (jobs < 1) throw InputError("jobs must be at least 1");
    if (iterations < 1) throw InputError("iterations must be at least 1");
    if (k_max < 1) throw InputError("k_max must be at least 1");
  }
};

struct RunRecord {
  std::size_t index = 0;
  std::string game;  // "random" or the file path
  std::uint64_t game_seed = 0;
  std::string algorithm;
  std::string status;
  // Epsilon of the produced profile, in the game's own units and after
  // normalization. Absent when no profile was produced.
  std::optional<double> epsilon;
  std::optional<double> normalized_epsilon;
  double payoff_scale = 1.0;
  std::size_t nodes = 0;
  std::size_t lp_solves = 0;
  std::size_t iterations = 0;
  std::size_t k = 0;
  std::string error;
  double seconds = 0.0;
  bool timed_out = false;
};

struct Summary {
  std::size_t games = 0;
  std::size_t solved = 0;
  std::size_t not_solved = 0;
  std::size_t timeouts = 0;
  std::size_t failures = 0;
  double over_time_percent = 0.0;
  double average_seconds = 0.0;
  double median_seconds = 0.0;
  // Means over the records that produced a profile.
  double mean_epsilon = 0.0;
  double mean_normalized_epsilon = 0.0;
};

inline Summary summarize(const std::vector<RunRecord>& records,
                         double time_limit, double solved_epsilon) {
  Summary s;
  s.games = records.size();
  if (records.empty()) return s;
  std::vector<double> times;
  double eps_sum = 0.0, norm_sum = 0.0;
  std::size_t with_profile = 0;
  for (const auto& r : records) {
    times.push_back(r.timed_out ? time_limit : r.seconds);
    if (r.timed_out) ++s.timeouts;
    if (!r.error.empty()) ++s.failures;
    if (r.epsilon) {
      ++with_profile;
      eps_sum += *r.epsilon;
      norm_sum += *r.normalized_epsilon;
    }
    const bool solved = r.error.empty() && r.normalized_epsilon &&
                        *r.normalized_epsilon <= solved_epsilon;
    ++(solved ? s.solved : s.not_solved);
  }
  double total = 0.0;
  for (double t : times) total += t;
  s.average_seconds = total / static_cast<double>(times.size());
  std::sort(times.begin(), times.end());
  const std::size_t mid = times.size() / 2;
  s.median_seconds = times.size() % 2 ? times[mid]
                                      : 0.5 * (times[mid - 1] + times[mid]);
  s.over_time_percent =
      100.0 * static_cast<double>(s.timeouts) / static_cast<double>(s.games);
  if (with_profile > 0) {
    s.mean_epsilon = eps_sum / static_cast<double>(with_profile);
    s.mean_normalized_epsilon = norm_sum / static_cast<double>(with_profile);
  }
  return s;
}

namespace bench_internal {

inline std::string format_double(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

// Quotes a CSV field when needed. Line breaks become spaces so that every
// record stays on one line.
inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(s);
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out.push_back('"');
    out.push_back(c == '\n' || c == '\r' ? ' ' : c);
  }
  return out + "\"";
}

inline std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        fields.back().push_back('"');
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back().push_back(c);
    }
  }
  return fields;
}

}  // namespace bench_internal

inline constexpr std::string_view kRecordHeader =
    "schema,index,game,seed,algorithm,status,epsilon,normalized_epsilon,"
    "payoff_scale,nodes,lp_solves,iterations,k,error";
inline constexpr std::string_view kTimingHeader =
    "schema,index,seconds,timed_out";

inline std::string record_line(const RunRecord& r) {
  using bench_internal::csv_field;
  using bench_internal::format_double;
  std::ostringstream out;
  out << kRecordSchemaVersion << ',' << r.index << ',' << csv_field(r.game)
      << ',' << r.game_seed << ',' << r.algorithm << ',' << r.status << ','
      << (r.epsilon ? format_double(*r.epsilon) : "") << ','
      << (r.normalized_epsilon ? format_double(*r.normalized_epsilon) : "")
      << ',' << format_double(r.payoff_scale) << ',' << r.nodes << ','
      << r.lp_solves << ',' << r.iterations << ',' << r.k << ','
      << csv_field(r.error);
  return out.str();
}

inline std::string timing_line(const RunRecord& r) {
  return std::to_string(kRecordSchemaVersion) + "," + std::to_string(r.index) +
         "," + bench_internal::format_double(r.seconds) + "," +
         (r.timed_out ? "1" : "0");
}

inline std::string timing_path(const std::string& output) {
  return output + ".timing.csv";
}

// Reads a record file and its timing sidecar back into records.
inline std::vector<RunRecord> read_records(std::istream& records,
                                           std::istream& timing) {
  auto number = [](const std::string& s) { return std::stod(s); };
  auto count = [](const std::string& s) {
    return static_cast<std::size_t>(std::stoull(s));
  };
  std::vector<RunRecord> out;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(records, line)) {
    ++line_number;
    if (line_number == 1) {
      if (line != kRecordHeader) throw ParseError("unexpected record header", 1, 1);
      continue;
    }
    const auto f = bench_internal::split_csv(line);
    if (f.size() != 14) throw ParseError("expected 14 fields", line_number, 1);
    if (f[0] != std::to_string(kRecordSchemaVersion)) {
      throw ParseError("unsupported schema version " + f[0], line_number, 1);
    }
    RunRecord r;
    r.index = count(f[1]);
    r.game = f[2];
    r.game_seed = std::stoull(f[3]);
    r.algorithm = f[4];
    r.status = f[5];
    if (!f[6].empty()) r.epsilon = number(f[6]);
    if (!f[7].empty()) r.normalized_epsilon = number(f[7]);
    r.payoff_scale = number(f[8]);
    r.nodes = count(f[9]);
    r.lp_solves = count(f[10]);
    r.iterations = count(f[11]);
    r.k = count(f[12]);
    r.error = f[13];
    out.push_back(std::move(r));
  }
  line_number = 0;
  std::size_t k = 0;
  while (std::getline(timing, line)) {
    ++line_number;
    if (line_number == 1) {
      if (line != kTimingHeader) throw ParseError("unexpected timing header", 1, 1);
      continue;
    }
    const auto f = bench_internal::split_csv(line);
    if (f.size() != 4 || k >= out.size() || count(f[1]) != out[k].index) {
      throw ParseError("timing file does not match the records", line_number, 1);
    }
    out[k].seconds = number(f[2]);
    out[k].timed_out = f[3] == "1";
    ++k;
  }
  if (k != out.size()) throw InputError("timing file is missing records");
  return out;
}

// Runs one game. Failures are caught and recorded, never thrown.
inline RunRecord run_one(const ExperimentSpec& spec, std::size_t index) {
  RunRecord r;
  r.index = index;
  r.algorithm = std::string(algorithm_name(spec.algorithm));
  const auto start = std::chrono::steady_clock::now();
  try {
    Game game;
    if (spec.files.empty()) {
      r.game = "random";
      r.game_seed = derive_seed(spec.seed, index);
      game = random_game(spec.players, spec.actions, r.game_seed);
    } else {
      r.game = spec.files[index];
      std::ifstream in(r.game);
      if (!in) throw InputError("cannot open " + r.game);
      std::ostringstream text;
      text << in.rdbuf();
      game = parse_nfg(text.str());
    }
    const NormalizedGame<double> norm = normalize_payoffs(game);
    r.payoff_scale = norm.scale;
    auto set_epsilon = [&](const MixedProfile& profile) {
      r.epsilon = epsilon_of(game, profile).epsilon;
      r.normalized_epsilon = norm.degenerate ? 0.0 : *r.epsilon / norm.scale;
    };
    switch (spec.algorithm) {
      case Algorithm::kMiqcp: {
        const BnbResult result = solve(game, spec.solver);
        r.status = std::string(status_name(result.status));
        r.timed_out = result.status == BnbStatus::kTimeout;
        r.nodes = result.stats.nodes;
        r.lp_solves = result.stats.lp_solves;
        r.payoff_scale = result.payoff_scale;
        if (result.profile) {
          r.epsilon = result.certified_epsilon;
          r.normalized_epsilon = result.normalized_epsilon;
        }
        if (result.status == BnbStatus::kNumericFailure) {
          r.error = result.diagnostics;
        }
        break;
      }
      case Algorithm::kKUniform: {
        const auto result = k_uniform_search(
            norm.game, spec.solver.epsilon_accept, spec.k_max, spec.k_budget);
        r.status = std::string(status_name(result.status));
        r.k = result.k;
        r.iterations = result.profiles_examined;
        if (result.status == KUniformStatus::kFound) set_epsilon(result.profile);
        break;
      }
      case Algorithm::kFictitiousPlay:
      case Algorithm::kRegretMatching: {
        LearningOptions options;
        options.iterations = spec.iterations;
        const LearningTrace trace =
            spec.algorithm == Algorithm::kFictitiousPlay
                ? fictitious_play(game, options)
                : regret_matching(game, options);
        r.status = "done";
        r.iterations = trace.iterations;
        set_epsilon(trace.average);
        break;
      }
    }
  } catch (const std::exception& e) {
    r.status = "error";
    r.error = e.what();
    r.epsilon.reset();
    r.normalized_epsilon.reset();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                            start)
                  .count();
  return r;
}

struct ExperimentResult {
  std::vector<RunRecord> records;
  Summary summary;
};

// Runs every game on `spec.jobs` threads. Records reach the streams in game
// order; `on_record` (optional) sees each one as it is written.
inline ExperimentResult run_experiment(
    const ExperimentSpec& spec, std::ostream* records, std::ostream* timing,
    const std::function<void(const RunRecord&)>& on_record = {}) {
  spec.validate();
  const std::size_t total = spec.num_games();
  std::vector<std::optional<RunRecord>> done(total);
  std::size_t written = 0;
  std::mutex mutex;
  std::atomic<std::size_t> next{0};
  if (records) *records << kRecordHeader << '\n' << std::flush;
  if (timing) *timing << kTimingHeader << '\n' << std::flush;

  auto worker = [&] {
    while (true) {
      const std::size_t index = next.fetch_add(1);
      if (index >= total) return;
      RunRecord r = run_one(spec, index);
      std::lock_guard<std::mutex> lock(mutex);
      done[index] = std::move(r);
      while (written < total && done[written]) {
        const RunRecord& w = *done[written];
        if (records) *records << record_line(w) << '\n' << std::flush;
        if (timing) *timing << timing_line(w) << '\n' << std::flush;
        if (on_record) on_record(w);
        ++written;
      }
    }
  };
  const std::size_t threads = std::min(spec.jobs, total);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  ExperimentResult result;
  for (auto& r : done) result.records.push_back(std::move(*r));
  result.summary =
      summarize(result.records, spec.solver.time_limit, spec.solved_epsilon);
  return result;
}

// As above, writing to spec.output and its timing sidecar when set.
inline ExperimentResult run_experiment(
    const ExperimentSpec& spec,
    const std::function<void(const RunRecord&)>& on_record = {}) {
  if (spec.output.empty()) return run_experiment(spec, nullptr, nullptr, on_record);
  std::ofstream records(spec.output);
  std::ofstream timing(timing_path(spec.output));
  if (!records || !timing) throw InputError("cannot write " + spec.output);
  return run_experiment(spec, &records, &timing, on_record);
}

// One human-readable line per summary field.
inline std::string format_summary(const Summary& s) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer,
                "games %zu\nsolved %zu\nnot_solved %zu\nfailures %zu\n"
                "over_time_percent %.2f\navg_time_s %.6f\nmedian_time_s %.6f\n"
                "mean_epsilon %.8g\nmean_normalized_epsilon %.8g\n",
                s.games, s.solved, s.not_solved, s.failures,
                s.over_time_percent, s.average_seconds, s.median_seconds,
                s.mean_epsilon, s.mean_normalized_epsilon);
  return buffer;
}

}  // namespace nashqcp

#endif  // NASHQCP_BENCH_H_
