#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "efgsolve/core/game.hpp"
#include "efgsolve/core/game_tree.hpp"
#include "efgsolve/core/random.hpp"
#include "efgsolve/core/strategy.hpp"
#include "efgsolve/eval/cfr.hpp"
#include "efgsolve/mccfr/outcome_sampling.hpp"

namespace efg {

// Opponent model and the confidence placed in it.
struct RestrictionSpec {
  BehaviorStrategy sigma_fix;
  double p = 0.0;
  Restriction::Mode mode = Restriction::Mode::kRootCoin;

  // Throws ParameterError unless p lies in [0, 1].
  void validate() const;
};

// The model laid out on the tree. Throws IncompleteModelError naming the first
// infoset of `restricted` without an entry, GameMismatchError for foreign keys.
TabularPolicy fixed_policy(const GameTree& tree, const BehaviorStrategy& sigma_fix,
                           Player restricted);

// Root chance node with outcome 0 (probability p) leading to a copy of the
// game where the restricted player's decisions are chance nodes following
// sigma_fix, and outcome 1 (probability 1 - p) leading to the game itself.
// Keys ignore the coin, so the unrestricted player cannot tell the copies apart.
GamePtr transform_rnr_game(GamePtr game, const RestrictionSpec& spec, Player restricted);

// One sampled episode and update with the restriction applied.
void mcrnr_iteration(RegretTables& tables, const Restriction& restriction, double epsilon,
                     UniformSource& rng, SampleRecord& scratch);

// Seeded sampled RNR run for one restricted player.
class McrnrSolver {
 public:
  McrnrSolver(const GameTree& tree, const RestrictionSpec& spec, Player restricted,
              MccfrConfig config);
  McrnrSolver(const McrnrSolver&) = delete;
  McrnrSolver& operator=(const McrnrSolver&) = delete;

  void run(std::int64_t iterations);

  Player restricted() const { return restriction_.player; }
  const RegretTables& tables() const { return tables_; }
  TabularPolicy average_policy() const { return average_strategy(tables_); }
  BehaviorStrategy unrestricted_average() const;

 private:
  MccfrConfig config_;
  TabularPolicy fixed_;
  Restriction restriction_;
  RegretTables tables_;
  SeededStream rng_;
  SampleRecord scratch_;
};

// Single sampled run whose restricted player alternates every iteration,
// starting with player one. Both players' averages come from the shared tables.
class AlternatingMcrnrSolver {
 public:
  AlternatingMcrnrSolver(const GameTree& tree, const StrategyProfile& sigma_fix, double p,
                         Restriction::Mode mode, MccfrConfig config);
  AlternatingMcrnrSolver(const AlternatingMcrnrSolver&) = delete;
  AlternatingMcrnrSolver& operator=(const AlternatingMcrnrSolver&) = delete;

  void run(std::int64_t iterations);

  const RegretTables& tables() const { return tables_; }
  StrategyProfile sigma_star() const { return average_strategy(tables_).to_profile(); }

 private:
  MccfrConfig config_;
  TabularPolicy fixed_;
  std::array<Restriction, 2> restrictions_;
  RegretTables tables_;
  SeededStream rng_;
  SampleRecord scratch_;
};

// CFR on the transformed game, the non-sampling baseline.
class ExactRnrSolver {
 public:
  ExactRnrSolver(GamePtr game, const RestrictionSpec& spec, Player restricted);

  void run(std::int64_t iterations);

  Player restricted() const { return restricted_; }
  const GameTree& transformed_tree() const { return *tree_; }
  std::int64_t iteration() const { return state_->iteration; }
  std::uint64_t nodes_visited() const { return state_->nodes_visited; }
  BehaviorStrategy unrestricted_average() const;

 private:
  Player restricted_;
  std::unique_ptr<GameTree> tree_;
  std::unique_ptr<CfrState> state_;
};

BehaviorStrategy solve_rnr_exact(GamePtr game, const RestrictionSpec& spec, Player restricted,
                                 std::int64_t iterations);

// sigma* from a run restricting player two (which yields sigma_1*) and one
// restricting player one (which yields sigma_2*).
StrategyProfile assemble_rnr_profile(const BehaviorStrategy& from_restricted_two,
                                     const BehaviorStrategy& from_restricted_one);

std::vector<double> default_p_values();

struct TradeoffOptions {
  std::vector<double> p_values = default_p_values();
  std::int64_t iterations = 1'000'000;  // per run
  double epsilon = 0.6;
  std::uint64_t seed = 0;
  Restriction::Mode mode = Restriction::Mode::kRootCoin;
};

struct TradeoffPoint {
  double p = 0.0;
  double exploitation = 0.0;    // summed gain over the baseline against sigma_fix
  double exploitability = 0.0;  // b_1(sigma_2*) + b_2(sigma_1*)
  std::uint64_t nodes_visited = 0;
  StrategyProfile sigma_star;
};

struct TradeoffResult {
  std::vector<TradeoffPoint> points;
  // Equilibrium baseline: the p = 0 runs with the same seeds and budget.
  StrategyProfile baseline;
};

// For each p, two runs (restricted player one with sigma_fix[1], restricted
// player two with sigma_fix[2]) seeded derive_seed(seed, 1) and
// derive_seed(seed, 2), so every point shares its streams with the baseline.
TradeoffResult tradeoff_sweep(const GameTree& tree, const StrategyProfile& sigma_fix,
                              const TradeoffOptions& options);

// sum_i u_i(sigma*_i, fix_-i) - u_i(baseline_i, fix_-i).
double exploitation_gain(const GameTree& tree, const StrategyProfile& sigma_star,
                         const StrategyProfile& baseline, const StrategyProfile& sigma_fix);

struct CompareOptions {
  std::int64_t exact_iterations = 1000;
  std::int64_t sampled_iterations = 1'000'000;
  int checkpoints = 20;
  double epsilon = 0.6;
  std::uint64_t seed = 0;
  Restriction::Mode sampled_mode = Restriction::Mode::kRootCoin;
};

struct CheckpointRow {
  std::int64_t iteration = 0;
  double exploitability = 0.0;  // of the assembled profile
  std::uint64_t nodes_visited = 0;
  double elapsed_ms = 0.0;      // solver time only
  StrategyProfile profile;
};

struct CompareResult {
  std::vector<CheckpointRow> exact;
  std::vector<CheckpointRow> sampled;
};

// Exact and sampled RNR pairs with checkpoints at iterations j * T / k.
CompareResult convergence_compare(GamePtr game, const StrategyProfile& sigma_fix, double p,
                                  const CompareOptions& options);

struct PreparedModel {
  StrategyProfile profile;
  std::int64_t iterations = 0;
  double exploitability = 0.0;
};

// MCCFR average strategy, checked every `check_every` iterations, returned as
// soon as its exploitability is at most `threshold`. Throws Error when
// `max_iterations` pass without reaching it.
PreparedModel prepare_fixed_strategy(const GameTree& tree, double threshold, std::uint64_t seed,
                                     double epsilon = 0.6, std::int64_t check_every = 1000,
                                     std::int64_t max_iterations = 100'000'000);

}  // namespace efg
