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

// Spatial branch-and-bound for the equilibrium feasibility program.
//
// Each node carries a box for every variable. Its relaxation replaces each
// bilinear equality by the McCormick envelope over the current boxes and
// relaxes the support binaries to [0, 1]. The LP point is then either
// branched on (a fractional binary, or a bilinear residual above the
// tolerance) or handed to certification, which accepts it only if the
// renormalized profile is an epsilon_accept-equilibrium of the normalized
// game. Because an equilibrium always exists, running out of nodes means
// the tolerances were too coarse, and is reported as a numeric failure.
//
// Three cheap primal heuristics run alongside the search: a screen of the
// pure profiles at the root, certification of every node's LP point, and
// Newton refinement on supports read off LP points (see polish.h).
//
// Example:
//
//   nashqcp::SolverConfig config;
//   config.time_limit = 60;
//   nashqcp::BnbResult result = nashqcp::solve(game, config);
//   if (result.status == nashqcp::BnbStatus::kSolved) use(*result.profile);

#ifndef NASHQCP_BNB_H_
#define NASHQCP_BNB_H_

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "nashqcp/errors.h"
#include "nashqcp/formulation.h"
#include "nashqcp/game.h"
#include "nashqcp/lp.h"
#include "nashqcp/polish.h"
#include "nashqcp/random.h"

namespace nashqcp {

struct SolverConfig {
  // Largest bilinear residual |w - x*y| a leaf may keep.
  double feasibility_tolerance = 1e-4;
  // Certification threshold on epsilon in normalized payoff units. It is a
  // separate knob from the residual tolerance: small residuals usually,
  // but not provably, mean a small epsilon.
  double epsilon_accept = 1e-3;
  double time_limit = 900.0;  // seconds
  std::size_t node_limit = 0;  // 0: unlimited
  // Carried into bench records. The search itself makes no random choices,
  // so results do not depend on it.
  std::uint64_t seed = 0;
  std::size_t workers = 1;
  // Rescale payoffs to [0, 1] before building the program. Without it the
  // game must already lie in [0, 1].
  bool normalize = true;

  void validate() const {
    if (!(feasibility_tolerance > 0.0) || !(epsilon_accept >= 0.0)) {
      throw InputError("tolerances must be positive");
    }
    if (!(time_limit > 0.0)) throw InputError("time limit must be positive");
    if (workers == 0) throw InputError("need at least one worker");
  }
};

enum class BnbStatus : char { kSolved, kTimeout, kNodeLimit, kNumericFailure };

inline std::string_view status_name(BnbStatus status) {
  switch (status) {
    case BnbStatus::kSolved:
      return "solved";
    case BnbStatus::kTimeout:
      return "timeout";
    case BnbStatus::kNodeLimit:
      return "node-limit";
    case BnbStatus::kNumericFailure:
      return "numeric-failure";
  }
  return "?";
}

struct BnbStats {
  std::size_t nodes = 0;
  std::size_t lp_solves = 0;
  std::size_t max_depth = 0;
  std::size_t lp_failures = 0;
  std::size_t binary_branches = 0;
  std::size_t spatial_branches = 0;
  double wall_seconds = 0.0;
};

struct BnbResult {
  BnbStatus status = BnbStatus::kNumericFailure;
  // The equilibrium when solved; otherwise the best profile seen, if any.
  std::optional<MixedProfile> profile;
  // epsilon_of the profile in the caller's payoff units.
  double certified_epsilon = std::numeric_limits<double>::infinity();
  // The same in normalized units (certified_epsilon / payoff_scale).
  double normalized_epsilon = std::numeric_limits<double>::infinity();
  double payoff_scale = 1.0;
  BnbStats stats;
  std::string diagnostics;
};

struct Node {
  std::vector<double> lower;
  std::vector<double> upper;
  std::size_t depth = 0;
  std::size_t id = 0;
  std::size_t parent = 0;
  // Worst bilinear residual at the parent's LP point.
  double parent_residual = 0.0;
  // Residual threshold below which a leaf goes to certification; halved on
  // every rejected certification.
  double local_tolerance = 1e-4;

  std::size_t fixed_binaries(const FeasibilityProgram& program) const {
    std::size_t count = 0;
    for (std::size_t i = 0; i < program.num_players(); ++i) {
      for (std::size_t s = 0; s < program.strategy_counts()[i]; ++s) {
        const VarId b = program.binary(i, s);
        if (lower[b] == upper[b]) ++count;
      }
    }
    return count;
  }
};

inline Node root_node(const FeasibilityProgram& program, double tolerance) {
  Node node;
  for (const auto& v : program.variables()) {
    node.lower.push_back(v.lower);
    node.upper.push_back(v.upper);
  }
  node.local_tolerance = tolerance;
  return node;
}

// Tightens the node's boxes with the exact implications of the program:
// support links in both directions, the simplex rows, and products of
// member boxes. Returns false if some box becomes empty.
inline bool propagate(const FeasibilityProgram& program, Node& node) {
  auto& lo = node.lower;
  auto& up = node.upper;
  constexpr double kSlack = 1e-12;
  for (int pass = 0; pass < 20; ++pass) {
    bool changed = false;
    auto cap = [&](VarId v, double value) {
      if (value < up[v] - kSlack) {
        up[v] = value;
        changed = true;
      }
    };
    auto floor = [&](VarId v, double value) {
      if (value > lo[v] + kSlack) {
        lo[v] = value;
        changed = true;
      }
    };
    for (std::size_t i = 0; i < program.num_players(); ++i) {
      const std::size_t m = program.strategy_counts()[i];
      for (std::size_t s = 0; s < m; ++s) {
        const VarId b = program.binary(i, s);
        const VarId p = program.prob(i, s);
        const VarId r = program.regret(i, s);
        if (lo[b] > 0.0) floor(b, 1.0);
        if (up[b] < 1.0) cap(b, 0.0);
        if (lo[b] >= 1.0) cap(p, 0.0);
        if (up[b] <= 0.0) cap(r, 0.0);
        if (lo[p] > 0.0) cap(b, 0.0);
        if (lo[r] > 0.0) floor(b, 1.0);
      }
      double sum_lo = 0.0, sum_up = 0.0;
      for (std::size_t s = 0; s < m; ++s) {
        sum_lo += lo[program.prob(i, s)];
        sum_up += up[program.prob(i, s)];
      }
      for (std::size_t s = 0; s < m; ++s) {
        const VarId p = program.prob(i, s);
        cap(p, 1.0 - (sum_lo - lo[p]));
        floor(p, 1.0 - (sum_up - up[p]));
      }
    }
    for (const auto& bil : program.bilinear()) {
      cap(bil.product, up[bil.left] * up[bil.right]);
      floor(bil.product, lo[bil.left] * lo[bil.right]);
      if (up[bil.right] > 0.0) floor(bil.left, lo[bil.product] / up[bil.right]);
      if (up[bil.left] > 0.0) floor(bil.right, lo[bil.product] / up[bil.left]);
      if (lo[bil.right] > 0.0) cap(bil.left, up[bil.product] / lo[bil.right]);
      if (lo[bil.left] > 0.0) cap(bil.right, up[bil.product] / lo[bil.left]);
    }
    for (std::size_t v = 0; v < lo.size(); ++v) {
      if (lo[v] > up[v] + 1e-9) return false;
      if (lo[v] > up[v]) lo[v] = up[v] = 0.5 * (lo[v] + up[v]);
    }
    if (!changed) break;
  }
  return true;
}

enum class RelaxationObjective : char {
  kFeasibility,
  // Minimize the sum of regrets; only changes which feasible point the LP
  // returns, steering it toward low-regret vertices.
  kMinRegret,
};

struct RelaxationOptions {
  RelaxationObjective objective = RelaxationObjective::kMinRegret;
  // Leave out the envelopes of products no other constraint reads (see
  // unread_products) and fix those variables at their lower bound. The
  // projection onto every other variable is unchanged.
  bool drop_unread_products = false;
};

// Flags products that appear in no linear row and feed no longer chain.
// Peeling the lowest player makes these exactly the products that contain
// player 0 and have fewer than n - 1 members.
inline std::vector<char> unread_products(const FeasibilityProgram& program) {
  std::vector<char> read(program.num_variables(), 0);
  for (const auto& row : program.linear()) {
    for (const auto& term : row.terms) read[term.first] = 1;
  }
  for (const auto& bil : program.bilinear()) read[bil.right] = 1;
  std::vector<char> unread(program.num_variables(), 0);
  for (const auto& bil : program.bilinear()) unread[bil.product] = !read[bil.product];
  return unread;
}

inline LinearProgram node_relaxation(const FeasibilityProgram& program,
                                     const Node& node,
                                     const RelaxationOptions& options = {}) {
  std::vector<char> unread;
  if (options.drop_unread_products) unread = unread_products(program);
  LinearProgram lp;
  for (std::size_t v = 0; v < program.num_variables(); ++v) {
    const bool regret = program.variable(v).kind == VarKind::kRegret;
    const double cost =
        regret && options.objective == RelaxationObjective::kMinRegret ? 1.0
                                                                       : 0.0;
    if (!unread.empty() && unread[v]) {
      lp.add_variable(node.lower[v], node.lower[v], cost);
    } else {
      lp.add_variable(node.lower[v], node.upper[v], cost);
    }
  }
  for (const auto& row : program.linear()) {
    lp.add_row({row.terms, row.sense, row.rhs});
  }
  for (const auto& bil : program.bilinear()) {
    if (!unread.empty() && unread[bil.product]) continue;
    const Interval xb{node.lower[bil.left], node.upper[bil.left]};
    const Interval yb{node.lower[bil.right], node.upper[bil.right]};
    for (auto& row : mccormick_rows(bil.product, bil.left, bil.right, xb, yb)) {
      lp.add_row(std::move(row));
    }
  }
  return lp;
}

struct BranchDecision {
  enum class Kind : char { kBinary, kSpatial, kCandidate };
  Kind kind = Kind::kCandidate;
  VarId variable = 0;
  double split = 0.0;
  // Worst bilinear residual at the LP point.
  double residual = 0.0;
};

inline double max_bilinear_residual(const FeasibilityProgram& program,
                                    const std::vector<double>& x) {
  double worst = 0.0;
  for (const auto& bil : program.bilinear()) {
    worst = std::max(worst, std::abs(x[bil.product] - x[bil.left] * x[bil.right]));
  }
  return worst;
}

// Split point for `var`: the LP value kept 10% of the width away from each
// end of the box.
inline double clamped_split(const Node& node, VarId var, double value) {
  const double lo = node.lower[var], up = node.upper[var];
  const double margin = 0.1 * (up - lo);
  return std::clamp(value, lo + margin, up - margin);
}

inline BranchDecision select_branch(const std::vector<double>& x,
                                    const FeasibilityProgram& program,
                                    const Node& node, double tolerance) {
  BranchDecision decision;
  decision.residual = max_bilinear_residual(program, x);
  double best_gap = -1.0;
  for (std::size_t i = 0; i < program.num_players(); ++i) {
    for (std::size_t s = 0; s < program.strategy_counts()[i]; ++s) {
      const VarId b = program.binary(i, s);
      const double v = x[b];
      if (v <= tolerance || v >= 1.0 - tolerance) continue;
      const double gap = std::min(v, 1.0 - v);
      if (gap > best_gap) {
        best_gap = gap;
        decision.kind = BranchDecision::Kind::kBinary;
        decision.variable = b;
        decision.split = v;
      }
    }
  }
  if (decision.kind == BranchDecision::Kind::kBinary) return decision;

  if (decision.residual <= tolerance) return decision;
  const BilinearConstraint* worst = nullptr;
  double worst_residual = -1.0;
  for (const auto& bil : program.bilinear()) {
    const double res = std::abs(x[bil.product] - x[bil.left] * x[bil.right]);
    if (res > worst_residual) {
      worst_residual = res;
      worst = &bil;
    }
  }
  const double wx = node.upper[worst->left] - node.lower[worst->left];
  const double wy = node.upper[worst->right] - node.lower[worst->right];
  VarId var = wy > wx ? worst->right : worst->left;
  // A product's box follows from its members' boxes, so splitting it
  // directly tightens nothing else; split its widest member instead.
  if (program.variable(var).kind == VarKind::kProductProb) {
    double widest = -1.0;
    for (const auto& c : program.variable(var).members) {
      const VarId p = program.prob(c.player, c.strategy);
      if (node.upper[p] - node.lower[p] > widest) {
        widest = node.upper[p] - node.lower[p];
        var = p;
      }
    }
  }
  decision.kind = BranchDecision::Kind::kSpatial;
  decision.variable = var;
  decision.split = clamped_split(node, var, x[var]);
  return decision;
}

// Children in creation order. Binary: b = 0, then b = 1. Spatial: the lower
// part of the box, then the upper.
inline std::array<Node, 2> branch(const Node& node,
                                  const BranchDecision& decision) {
  std::array<Node, 2> children = {node, node};
  const VarId v = decision.variable;
  if (decision.kind == BranchDecision::Kind::kBinary) {
    children[0].lower[v] = children[0].upper[v] = 0.0;
    children[1].lower[v] = children[1].upper[v] = 1.0;
  } else {
    children[0].upper[v] = decision.split;
    children[1].lower[v] = decision.split;
  }
  for (auto& child : children) {
    child.depth = node.depth + 1;
    child.parent = node.id;
    child.parent_residual = decision.residual;
  }
  return children;
}

struct Certification {
  bool accepted = false;
  std::optional<MixedProfile> profile;
  RegretReport report;
};

// Reads the ProbMass entries, renormalizes them, and accepts iff
// epsilon_of on `game` is at most epsilon_accept.
inline Certification certify_candidate(const Game& game,
                                       const FeasibilityProgram& program,
                                       const std::vector<double>& assignment,
                                       double epsilon_accept) {
  Certification out;
  MixedProfile profile =
      extract_profile(program, std::span<const double>(assignment));
  if (!renormalize(profile)) return out;
  out.report = epsilon_of(game, profile);
  out.accepted = out.report.epsilon <= epsilon_accept;
  out.profile = std::move(profile);
  return out;
}

namespace bnb_internal {

// Clears binaries the LP point leaves fractional when an integral value
// is consistent with it: 0 if the regret is negligible, otherwise 1 if the
// probability is.
inline void snap_binaries(const FeasibilityProgram& program, const Node& node,
                          std::vector<double>& x, double tolerance) {
  for (std::size_t i = 0; i < program.num_players(); ++i) {
    for (std::size_t s = 0; s < program.strategy_counts()[i]; ++s) {
      const VarId b = program.binary(i, s);
      if (node.lower[b] == node.upper[b]) continue;
      if (x[program.regret(i, s)] <= tolerance) {
        x[b] = 0.0;
      } else if (x[program.prob(i, s)] <= tolerance) {
        x[b] = 1.0;
      }
    }
  }
}

struct NodeOrder {
  // Higher priority first: more fixed binaries, then smaller parent
  // residual, then the newest node.
  struct Key {
    std::size_t fixed;
    double residual;
    std::size_t id;
  };
  static bool less(const Key& a, const Key& b) {
    if (a.fixed != b.fixed) return a.fixed < b.fixed;
    if (a.residual != b.residual) return a.residual > b.residual;
    return a.id < b.id;
  }
};

struct QueuedNode {
  NodeOrder::Key key;
  Node node;
  friend bool operator<(const QueuedNode& a, const QueuedNode& b) {
    return NodeOrder::less(a.key, b.key);
  }
};

class Search {
 public:
  Search(const Game& game, const FeasibilityProgram& program,
         const SolverConfig& config)
      : game_(game),
        program_(program),
        config_(config),
        start_(std::chrono::steady_clock::now()),
        unread_(unread_products(program)) {}

  // Returns true if an exact pure equilibrium was found.
  bool screen_pure_profiles() {
    std::vector<std::size_t> pure(game_.num_players(), 0);
    do {
      const MixedProfile p = pure_profile(game_, pure);
      const RegretReport report = epsilon_of(game_, p);
      if (report.epsilon == 0.0) {
        offer(p, report.epsilon, /*accept=*/true);
        return true;
      }
    } while (next_profile(pure, game_.strategy_counts(), game_.num_players()));
    return false;
  }

  void run(Node root) {
    push(std::move(root));
    if (config_.workers == 1) {
      work();
      return;
    }
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < config_.workers; ++w) {
      threads.emplace_back([this] { work(); });
    }
    for (auto& t : threads) t.join();
  }

  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

  BnbResult result() {
    BnbResult out;
    out.stats = stats_;
    out.stats.wall_seconds = elapsed();
    if (solved_) {
      out.status = BnbStatus::kSolved;
    } else if (timed_out_) {
      out.status = BnbStatus::kTimeout;
    } else if (node_limited_) {
      out.status = BnbStatus::kNodeLimit;
    } else {
      out.status = BnbStatus::kNumericFailure;
      out.diagnostics = "search tree exhausted without a certified point (" +
                        std::to_string(stats_.lp_failures) +
                        " LP failures)";
    }
    if (best_) {
      out.profile = *best_;
      out.normalized_epsilon = best_epsilon_;
    }
    return out;
  }

 private:
  void push(Node node) {
    NodeOrder::Key key{node.fixed_binaries(program_), node.parent_residual,
                       next_id_};
    node.id = next_id_++;
    queue_.push({key, std::move(node)});
  }

  // Records a profile; `accept` marks it as the answer.
  void offer(const MixedProfile& profile, double epsilon, bool accept) {
    if (!best_ || epsilon < best_epsilon_) {
      best_ = profile;
      best_epsilon_ = epsilon;
    }
    if (accept) solved_ = true;
  }

  // Newton refinement on the supports of `profile` at a few thresholds.
  // Returns the best refined profile if it beats `epsilon`.
  std::optional<std::pair<MixedProfile, double>> refine(
      const MixedProfile& profile, double epsilon) {
    std::optional<std::pair<MixedProfile, double>> best;
    for (double threshold : {1e-9, 1e-6, 1e-4, 1e-3, 1e-2, 5e-2}) {
      const Support support = support_above(profile, threshold);
      if (!try_support(support)) continue;
      const auto polished = solve_on_support(game_, support, profile);
      if (!polished) continue;
      const double eps = epsilon_of(game_, *polished).epsilon;
      if (eps < epsilon && (!best || eps < best->second)) {
        best.emplace(*polished, eps);
      }
    }
    return best;
  }

  // Each support is tried once per search, except through refine of an
  // already accepted profile, which always runs.
  bool try_support(const Support& support) {
    if (polishing_accepted_) return true;
    return tried_.insert(support).second;
  }

  void accept_with_polish(const MixedProfile& profile, double epsilon) {
    polishing_accepted_ = true;
    const auto polished = refine(profile, epsilon);
    polishing_accepted_ = false;
    if (polished) {
      offer(polished->first, polished->second, true);
    } else {
      offer(profile, epsilon, true);
    }
  }

  LpSolution solve_relaxation(const Node& node) {
    RelaxationOptions relax;
    relax.drop_unread_products = true;
    const LinearProgram lp = node_relaxation(program_, node, relax);
    LpOptions options;
    LpSolution sol = solve_lp(lp, options);
    ++stats_.lp_solves;
    if (sol.status == LpStatus::kNumericFailure ||
        sol.status == LpStatus::kIterationLimit) {
      options.pivot_tolerance = 1e-8;
      options.iteration_limit = 200 * (lp.num_rows() + lp.num_variables());
      sol = solve_lp(lp, options);
      ++stats_.lp_solves;
    }
    return sol;
  }

  void work() {
    std::unique_lock<std::mutex> lock(mutex_, std::defer_lock);
    const bool threaded = config_.workers > 1;
    while (true) {
      if (threaded) lock.lock();
      if (threaded) {
        cv_.wait(lock, [&] { return stop_ || !queue_.empty() || active_ == 0; });
      }
      if (stop_ || queue_.empty()) {
        if (threaded) {
          stop_ = true;
          cv_.notify_all();
        }
        return;
      }
      if (elapsed() >= config_.time_limit) {
        timed_out_ = stop_ = true;
        if (threaded) cv_.notify_all();
        return;
      }
      if (config_.node_limit > 0 && stats_.nodes >= config_.node_limit) {
        node_limited_ = stop_ = true;
        if (threaded) cv_.notify_all();
        return;
      }
      Node node = queue_.top().node;
      queue_.pop();
      ++stats_.nodes;
      stats_.max_depth = std::max(stats_.max_depth, node.depth);
      ++active_;
      if (threaded) lock.unlock();

      expand(std::move(node), lock, threaded);

      if (threaded) {
        lock.lock();
        --active_;
        cv_.notify_all();
        lock.unlock();
      } else {
        --active_;
      }
    }
  }

  void expand(Node node, std::unique_lock<std::mutex>& lock, bool threaded) {
    const LpSolution sol = solve_relaxation(node);
    auto guard = [&] {
      if (threaded) lock.lock();
    };
    auto release = [&] {
      if (threaded) lock.unlock();
    };
    if (sol.status == LpStatus::kInfeasible) return;
    if (sol.status != LpStatus::kOptimal) {
      guard();
      ++stats_.lp_failures;
      release();
      return;
    }
    std::vector<double> x = sol.values;
    for (const auto& bil : program_.bilinear()) {
      if (unread_[bil.product]) x[bil.product] = x[bil.left] * x[bil.right];
    }
    const double tol = config_.feasibility_tolerance;
    snap_binaries(program_, node, x, tol);

    // Heuristics: the LP point itself, then Newton on its supports.
    const Certification cert =
        certify_candidate(game_, program_, x, config_.epsilon_accept);
    guard();
    if (stop_) {
      release();
      return;
    }
    if (cert.profile) {
      if (cert.accepted) {
        accept_with_polish(*cert.profile, cert.report.epsilon);
        stop_ = true;
        release();
        return;
      }
      offer(*cert.profile, cert.report.epsilon, false);
      if (const auto polished = refine(*cert.profile, cert.report.epsilon)) {
        if (polished->second <= config_.epsilon_accept) {
          accept_with_polish(polished->first, polished->second);
          stop_ = true;
          release();
          return;
        }
        offer(polished->first, polished->second, false);
      }
    }
    release();

    BranchDecision decision = select_branch(x, program_, node, node.local_tolerance);
    // A rejected candidate keeps branching with a halved local tolerance;
    // once residuals vanish, split the widest probability box.
    while (decision.kind == BranchDecision::Kind::kCandidate) {
      node.local_tolerance *= 0.5;
      if (decision.residual > 1e-12 && node.local_tolerance > 1e-12) {
        decision = select_branch(x, program_, node, node.local_tolerance);
        continue;
      }
      VarId widest = program_.prob(0, 0);
      for (std::size_t i = 0; i < program_.num_players(); ++i) {
        for (std::size_t s = 0; s < program_.strategy_counts()[i]; ++s) {
          const VarId p = program_.prob(i, s);
          if (node.upper[p] - node.lower[p] >
              node.upper[widest] - node.lower[widest]) {
            widest = p;
          }
        }
      }
      if (node.upper[widest] - node.lower[widest] <= 1e-12) {
        guard();
        ++stats_.lp_failures;
        release();
        return;
      }
      decision.kind = BranchDecision::Kind::kSpatial;
      decision.variable = widest;
      decision.split = clamped_split(node, widest, x[widest]);
    }

    auto children = branch(node, decision);
    guard();
    if (decision.kind == BranchDecision::Kind::kBinary) {
      ++stats_.binary_branches;
    } else {
      ++stats_.spatial_branches;
    }
    for (auto& child : children) {
      if (propagate(program_, child)) push(std::move(child));
    }
    if (threaded) cv_.notify_all();
    release();
  }

  const Game& game_;
  const FeasibilityProgram& program_;
  const SolverConfig& config_;
  std::chrono::steady_clock::time_point start_;
  const std::vector<char> unread_;

  std::mutex mutex_;
  std::condition_variable cv_;
  std::priority_queue<QueuedNode> queue_;
  std::size_t next_id_ = 0;
  std::size_t active_ = 0;
  bool stop_ = false;
  bool solved_ = false;
  bool timed_out_ = false;
  bool node_limited_ = false;
  bool polishing_accepted_ = false;
  BnbStats stats_;
  std::optional<MixedProfile> best_;
  double best_epsilon_ = std::numeric_limits<double>::infinity();
  std::set<Support> tried_;
};

}  // namespace bnb_internal

inline BnbResult solve(const Game& game, const SolverConfig& config = {}) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  NormalizedGame<double> norm;
  if (config.normalize) {
    norm = normalize_payoffs(game);
  } else {
    norm.game = game;
  }
  BnbResult result;
  if (norm.degenerate) {
    result.status = BnbStatus::kSolved;
    result.profile = uniform_profile(game);
    result.certified_epsilon = 0.0;
    result.normalized_epsilon = 0.0;
    result.payoff_scale = 0.0;
    return result;
  }
  const FeasibilityProgram program = build(norm.game);
  bnb_internal::Search search(norm.game, program, config);
  if (!search.screen_pure_profiles()) {
    Node root = root_node(program, config.feasibility_tolerance);
    if (propagate(program, root)) search.run(std::move(root));
  }
  result = search.result();
  result.payoff_scale = norm.scale;
  if (result.profile) {
    result.certified_epsilon = epsilon_of(game, *result.profile).epsilon;
  }
  result.stats.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return result;
}

}  // namespace nashqcp

#endif  // NASHQCP_BNB_H_
