#include <chrono>
#include <optional>
#include <string>

#include "efgsolve/core/errors.hpp"
#include "efgsolve/core/probability.hpp"
#include "efgsolve/eval/best_response.hpp"
#include "efgsolve/rnr/rnr.hpp"

namespace efg {

namespace {

constexpr std::uint64_t kRestrictOneStream = 1;
constexpr std::uint64_t kRestrictTwoStream = 2;

struct PairResult {
  StrategyProfile sigma_star;
  std::uint64_t nodes_visited = 0;
};

PairResult run_pair(const GameTree& tree, const StrategyProfile& sigma_fix, double p,
                    const TradeoffOptions& options) {
  MccfrConfig config{options.epsilon, 0, options.iterations};
  config.seed = derive_seed(options.seed, kRestrictOneStream);
  McrnrSolver restrict_one(tree, {sigma_fix[Player::kOne], p, options.mode}, Player::kOne, config);
  restrict_one.run(options.iterations);
  config.seed = derive_seed(options.seed, kRestrictTwoStream);
  McrnrSolver restrict_two(tree, {sigma_fix[Player::kTwo], p, options.mode}, Player::kTwo, config);
  restrict_two.run(options.iterations);
  return {assemble_rnr_profile(restrict_two.unrestricted_average(),
                               restrict_one.unrestricted_average()),
          restrict_one.tables().nodes_visited + restrict_two.tables().nodes_visited};
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

}  // namespace

std::vector<double> default_p_values() { return {0.0, 0.5, 0.7, 0.8, 0.9, 0.93, 0.97, 1.0}; }

double exploitation_gain(const GameTree& tree, const StrategyProfile& sigma_star,
                         const StrategyProfile& baseline, const StrategyProfile& sigma_fix) {
  double gain = 0.0;
  for (Player i : kPlayers) {
    const Player o = opponent(i);
    StrategyProfile counter;
    counter[o] = sigma_fix[o];
    StrategyProfile reference = counter;
    counter[i] = sigma_star[i];
    reference[i] = baseline[i];
    gain += expected_value(tree, TabularPolicy::from_profile(tree, counter), i) -
            expected_value(tree, TabularPolicy::from_profile(tree, reference), i);
  }
  return gain;
}

TradeoffResult tradeoff_sweep(const GameTree& tree, const StrategyProfile& sigma_fix,
                              const TradeoffOptions& options) {
  for (Player player : kPlayers) fixed_policy(tree, sigma_fix[player], player);
  for (double p : options.p_values) RestrictionSpec{{}, p, options.mode}.validate();

  std::optional<PairResult> baseline;
  for (double p : options.p_values) {
    if (p == 0.0) baseline = run_pair(tree, sigma_fix, 0.0, options);
  }
  if (!baseline) baseline = run_pair(tree, sigma_fix, 0.0, options);

  TradeoffResult result;
  result.baseline = baseline->sigma_star;
  for (double p : options.p_values) {
    PairResult pair = p == 0.0 ? *baseline : run_pair(tree, sigma_fix, p, options);
    TradeoffPoint point;
    point.p = p;
    point.exploitation = exploitation_gain(tree, pair.sigma_star, result.baseline, sigma_fix);
    point.exploitability = exploitability(TabularPolicy::from_profile(tree, pair.sigma_star));
    point.nodes_visited = pair.nodes_visited;
    point.sigma_star = std::move(pair.sigma_star);
    result.points.push_back(std::move(point));
  }
  return result;
}

CompareResult convergence_compare(GamePtr game, const StrategyProfile& sigma_fix, double p,
                                  const CompareOptions& options) {
  if (options.checkpoints <= 0) throw ParameterError("checkpoints must be positive");
  if (options.exact_iterations < 0 || options.sampled_iterations < 0) {
    throw ParameterError("iterations must be non-negative");
  }
  const GameTree tree(game);
  const int k = options.checkpoints;
  CompareResult result;

  auto checkpoint = [&](std::int64_t iteration, const StrategyProfile& profile,
                        std::uint64_t nodes, double ms) {
    CheckpointRow row;
    row.iteration = iteration;
    row.exploitability = exploitability(TabularPolicy::from_profile(tree, profile));
    row.nodes_visited = nodes;
    row.elapsed_ms = ms;
    row.profile = profile;
    return row;
  };

  const RestrictionSpec fix_one{sigma_fix[Player::kOne], p, Restriction::Mode::kRootCoin};
  const RestrictionSpec fix_two{sigma_fix[Player::kTwo], p, Restriction::Mode::kRootCoin};
  ExactRnrSolver exact_one(game, fix_one, Player::kOne);
  ExactRnrSolver exact_two(game, fix_two, Player::kTwo);

  MccfrConfig config{options.epsilon, 0, options.sampled_iterations};
  config.seed = derive_seed(options.seed, kRestrictOneStream);
  McrnrSolver sampled_one(tree, {sigma_fix[Player::kOne], p, options.sampled_mode}, Player::kOne,
                          config);
  config.seed = derive_seed(options.seed, kRestrictTwoStream);
  McrnrSolver sampled_two(tree, {sigma_fix[Player::kTwo], p, options.sampled_mode}, Player::kTwo,
                          config);

  double exact_ms = 0.0;
  double sampled_ms = 0.0;
  for (int j = 1; j <= k; ++j) {
    const std::int64_t exact_target = options.exact_iterations * j / k;
    auto start = std::chrono::steady_clock::now();
    exact_one.run(exact_target - exact_one.iteration());
    exact_two.run(exact_target - exact_two.iteration());
    exact_ms += elapsed_ms(start);
    result.exact.push_back(checkpoint(
        exact_target,
        assemble_rnr_profile(exact_two.unrestricted_average(), exact_one.unrestricted_average()),
        exact_one.nodes_visited() + exact_two.nodes_visited(), exact_ms));

    const std::int64_t sampled_target = options.sampled_iterations * j / k;
    start = std::chrono::steady_clock::now();
    sampled_one.run(sampled_target - sampled_one.tables().iteration);
    sampled_two.run(sampled_target - sampled_two.tables().iteration);
    sampled_ms += elapsed_ms(start);
    result.sampled.push_back(checkpoint(
        sampled_target,
        assemble_rnr_profile(sampled_two.unrestricted_average(),
                             sampled_one.unrestricted_average()),
        sampled_one.tables().nodes_visited + sampled_two.tables().nodes_visited, sampled_ms));
  }
  return result;
}

PreparedModel prepare_fixed_strategy(const GameTree& tree, double threshold, std::uint64_t seed,
                                     double epsilon, std::int64_t check_every,
                                     std::int64_t max_iterations) {
  if (check_every <= 0) throw ParameterError("check interval must be positive");
  MccfrSolver solver(tree, {epsilon, seed, max_iterations});
  while (solver.tables().iteration < max_iterations) {
    solver.run(std::min(check_every, max_iterations - solver.tables().iteration));
    const auto policy = solver.average_policy();
    const double e = exploitability(policy);
    if (e <= threshold) return {policy.to_profile(), solver.tables().iteration, e};
  }
  throw Error("MCCFR did not reach exploitability " + std::to_string(threshold) + " within " +
              std::to_string(max_iterations) + " iterations");
}

}  // namespace efg
