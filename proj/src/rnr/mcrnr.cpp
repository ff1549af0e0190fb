#include "efgsolve/core/errors.hpp"
#include "efgsolve/rnr/rnr.hpp"

namespace efg {

void mcrnr_iteration(RegretTables& tables, const Restriction& restriction, double epsilon,
                     UniformSource& rng, SampleRecord& scratch) {
  if (!restriction.fixed) throw ParameterError("restriction without a fixed strategy");
  mccfr_iteration(tables, epsilon, rng, scratch, &restriction);
}

McrnrSolver::McrnrSolver(const GameTree& tree, const RestrictionSpec& spec, Player restricted,
                         MccfrConfig config)
    : config_(config),
      fixed_(fixed_policy(tree, spec.sigma_fix, restricted)),
      tables_(tree),
      rng_(config.seed) {
  config_.validate();
  spec.validate();
  restriction_.player = restricted;
  restriction_.mode = spec.mode;
  restriction_.p = spec.p;
  restriction_.fixed = &fixed_;
}

void McrnrSolver::run(std::int64_t iterations) {
  for (std::int64_t k = 0; k < iterations; ++k) {
    mcrnr_iteration(tables_, restriction_, config_.epsilon, rng_, scratch_);
  }
}

BehaviorStrategy McrnrSolver::unrestricted_average() const {
  return average_policy().to_strategy(opponent(restriction_.player));
}

AlternatingMcrnrSolver::AlternatingMcrnrSolver(const GameTree& tree,
                                               const StrategyProfile& sigma_fix, double p,
                                               Restriction::Mode mode, MccfrConfig config)
    : config_(config), fixed_(tree), tables_(tree), rng_(config.seed) {
  config_.validate();
  RestrictionSpec{BehaviorStrategy{}, p, mode}.validate();
  for (Player player : kPlayers) {
    fixed_.assign_player(fixed_policy(tree, sigma_fix[player], player), player);
    auto& r = restrictions_[index_of(player)];
    r.player = player;
    r.mode = mode;
    r.p = p;
    r.fixed = &fixed_;
  }
}

void AlternatingMcrnrSolver::run(std::int64_t iterations) {
  for (std::int64_t k = 0; k < iterations; ++k) {
    const auto& r = restrictions_[tables_.iteration % 2];
    mcrnr_iteration(tables_, r, config_.epsilon, rng_, scratch_);
  }
}

ExactRnrSolver::ExactRnrSolver(GamePtr game, const RestrictionSpec& spec, Player restricted)
    : restricted_(restricted) {
  if (!game) throw ParameterError("null game");
  {
    // Coverage is checked on the original game, before any tree is doubled.
    const GameTree base(game);
    fixed_policy(base, spec.sigma_fix, restricted);
  }
  tree_ = std::make_unique<GameTree>(transform_rnr_game(std::move(game), spec, restricted));
  state_ = std::make_unique<CfrState>(*tree_);
}

void ExactRnrSolver::run(std::int64_t iterations) {
  for (std::int64_t k = 0; k < iterations; ++k) cfr_iteration(*state_);
}

BehaviorStrategy ExactRnrSolver::unrestricted_average() const {
  return state_->average_policy().to_strategy(opponent(restricted_));
}

BehaviorStrategy solve_rnr_exact(GamePtr game, const RestrictionSpec& spec, Player restricted,
                                 std::int64_t iterations) {
  ExactRnrSolver solver(std::move(game), spec, restricted);
  solver.run(iterations);
  return solver.unrestricted_average();
}

StrategyProfile assemble_rnr_profile(const BehaviorStrategy& from_restricted_two,
                                     const BehaviorStrategy& from_restricted_one) {
  return combine(from_restricted_two, from_restricted_one);
}

}  // namespace efg
