#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "efgsolve/core/game_tree.hpp"
#include "efgsolve/core/random.hpp"

namespace efg {

struct MccfrConfig {
  double epsilon = 0.6;  // exploration floor, in (0, 1]
  std::uint64_t seed = 0;
  std::int64_t iterations = 0;

  // Throws ParameterError when epsilon is outside (0, 1] or iterations < 0.
  void validate() const;
};

// Per-infoset accumulators of outcome-sampling MCCFR, on a tree's flat slots.
struct RegretTables {
  explicit RegretTables(const GameTree& tree);

  const GameTree* tree;
  std::vector<double> regret;
  std::vector<double> strategy_sum;
  std::vector<std::int64_t> last_update;  // c_I
  std::vector<double> last_reach;         // owner's reach at the last update
  std::int64_t iteration = 0;
  std::uint64_t nodes_visited = 0;

  // Regret matching on r_I, written into `out`.
  void current_strategy(std::int32_t infoset, std::span<double> out) const;
};

// Optional restriction of one player, used by the restricted-Nash variants.
//
// kRootCoin: before each episode a coin picks the restricted subgame with
// probability p; there the restricted player's nodes behave like chance
// nodes that follow `fixed`, and they are neither explored nor updated.
// kPerInfoset: at every node of the restricted player the strategy is the
// mixture p * fixed + (1 - p) * learned, used for sampling, tails and
// averaging alike.
struct Restriction {
  enum class Mode { kRootCoin, kPerInfoset };

  Player player = Player::kOne;
  Mode mode = Mode::kRootCoin;
  double p = 0.0;
  const TabularPolicy* fixed = nullptr;  // must cover every infoset of `player`
};

struct EpisodeStep {
  std::int32_t node = 0;
  std::int32_t infoset = -1;  // -1 at chance
  Player actor = Player::kChance;
  ActionId action = 0;
  bool learner = false;       // a decision whose tables are updated
  double sample_prob = 1.0;   // probability the sampler picked `action`
  double policy_prob = 1.0;   // probability of `action` under sigma (or chance)
  // Reach of this node under sigma, split as player one, player two, chance.
  std::array<double, 3> reach{1.0, 1.0, 1.0};
  std::int32_t policy_offset = 0;  // into SampleRecord::policy
};

// One sampled terminal history and everything the update needs.
struct SampleRecord {
  std::int32_t terminal = -1;
  double utility = 0.0;      // player one
  double sample_prob = 1.0;  // q(z), the product of every step's sample_prob
  std::vector<EpisodeStep> steps;
  std::vector<double> policy;  // sigma at each decision step, concatenated
  // tail[k] = pi^sigma(h_k, z), the product of policy_prob over steps k..end.
  std::vector<double> tail;

  void clear();
  std::span<const double> policy_at(const EpisodeStep& step, std::int32_t num_actions) const {
    return {policy.data() + step.policy_offset, static_cast<std::size_t>(num_actions)};
  }
};

// Walks root to terminal. Decisions are sampled from
// epsilon / |A| + (1 - epsilon) * sigma(I); chance from its distribution.
void sample_episode(const RegretTables& tables, double epsilon, UniformSource& rng,
                    SampleRecord& out, const Restriction* restriction = nullptr);

// The record the sampler would produce if it reached `terminal`, with
// sample_prob = q(z). Used to take exact expectations over all terminals.
SampleRecord record_for_terminal(const RegretTables& tables, double epsilon,
                                 std::int32_t terminal);

// Sampled counterfactual regret of action a at the record's step for
// `infoset`. Throws ParameterError when the infoset is not on the path.
double sampled_regret(const SampleRecord& record, std::int32_t infoset, ActionId a);

// Backward walk over the record at iteration t = tables.iteration: regret
// and optimistic average updates at every learner step, then c_I <- t.
void apply_updates(RegretTables& tables, const SampleRecord& record);

// t <- t + 1, one episode, one update. `scratch` is reused between calls.
void mccfr_iteration(RegretTables& tables, double epsilon, UniformSource& rng,
                     SampleRecord& scratch, const Restriction* restriction = nullptr);

// Normalized s_I after catching every infoset up to the current iteration
// with its last reach and current strategy; all-zero rows become uniform.
TabularPolicy average_strategy(const RegretTables& tables);

// Seeded run owning its tables and stream.
class MccfrSolver {
 public:
  MccfrSolver(const GameTree& tree, MccfrConfig config);

  void run(std::int64_t iterations);
  void set_restriction(const Restriction* restriction) { restriction_ = restriction; }

  const RegretTables& tables() const { return tables_; }
  TabularPolicy average_policy() const { return average_strategy(tables_); }
  const MccfrConfig& config() const { return config_; }

 private:
  MccfrConfig config_;
  RegretTables tables_;
  SeededStream rng_;
  SampleRecord scratch_;
  const Restriction* restriction_ = nullptr;
};

}  // namespace efg
