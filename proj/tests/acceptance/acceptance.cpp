// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is 0 only when all of them pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "efgsolve/core/probability.hpp"
#include "efgsolve/core/regret_matching.hpp"
#include "efgsolve/core/strategy_io.hpp"
#include "efgsolve/eval/best_response.hpp"
#include "efgsolve/eval/cfr.hpp"
#include "efgsolve/eval/kuhn_metrics.hpp"
#include "efgsolve/games/games.hpp"
#include "efgsolve/games/kuhn.hpp"
#include "efgsolve/mccfr/outcome_sampling.hpp"
#include "efgsolve/mcts/uct.hpp"
#include "efgsolve/rnr/rnr.hpp"
#include "test_support.hpp"

namespace efg {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

constexpr double kGammas[] = {0.0, 0.5, 1.0};

Outcome payoff_gate() {
  auto game = make_kuhn();
  double worst = 0.0;
  for (double gamma : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
    const auto ne = kuhn_equilibrium_profile(gamma);
    for (Player p : kPlayers) {
      const double gain = best_response(game, ne[opponent(p)], p).value - expected_value(*game, ne, p);
      worst = std::max(worst, gain);
    }
  }
  return {worst <= 1e-9, fmt("largest unilateral gain over the family %.3g", worst)};
}

Outcome kuhn_value() {
  const auto start = Clock::now();
  auto game = make_kuhn();
  double value_error = 0.0;
  double worst_exploitability = 0.0;
  for (double gamma : kGammas) {
    const auto ne = kuhn_equilibrium_profile(gamma);
    value_error = std::max(value_error, std::abs(expected_value(*game, ne, Player::kOne) + 1.0 / 18.0));
    worst_exploitability = std::max(worst_exploitability, exploitability(game, ne));
  }
  const double elapsed = seconds_since(start);
  return {value_error <= 1e-9 && worst_exploitability <= 1e-9 && elapsed < 1.0,
          fmt("|u1 + 1/18| %.3g, exploitability %.3g, %.3f s", value_error, worst_exploitability,
              elapsed)};
}

Outcome worked_example() {
  const auto start = Clock::now();
  const GameTree tree(make_kuhn());
  RegretTables tables(tree);
  ScriptedStream rng({0.95, 0.75, 0.25});  // K|Q, bet, pass
  SampleRecord record;
  mccfr_iteration(tables, 0.6, rng, record);
  const auto i1 = *tree.find_infoset(kuhn_key(Player::kOne, kKing, {}));
  const auto i2 = *tree.find_infoset(kuhn_key(Player::kTwo, kQueen, {kBet}));
  auto slots = [&](const std::vector<double>& v, std::int32_t id) {
    const auto o = tree.infoset(id).offset;
    return std::vector<double>{v[o], v[o + 1]};
  };
  std::vector<double> sigma(2);
  tables.current_strategy(i2, sigma);
  const bool ok = tree.history(record.terminal) == History({5, kBet, kPass}) &&
                  slots(tables.regret, i2) == std::vector<double>{-1.0, 1.0} &&
                  slots(tables.strategy_sum, i2) == std::vector<double>{0.5, 0.5} &&
                  slots(tables.regret, i1) == std::vector<double>{-1.0, 1.0} &&
                  tables.last_update[i1] == 1 && tables.last_update[i2] == 1 &&
                  sigma == std::vector<double>{0.0, 1.0};
  const double elapsed = seconds_since(start);
  return {ok && elapsed < 1.0, fmt("r_I2 (%g, %g), s_I2 (%g, %g), r_I1 (%g, %g), sigma_I2 (%g, %g)",
                                   tables.regret[tree.infoset(i2).offset],
                                   tables.regret[tree.infoset(i2).offset + 1],
                                   tables.strategy_sum[tree.infoset(i2).offset],
                                   tables.strategy_sum[tree.infoset(i2).offset + 1],
                                   tables.regret[tree.infoset(i1).offset],
                                   tables.regret[tree.infoset(i1).offset + 1], sigma[0], sigma[1])};
}

Outcome unbiasedness() {
  const auto start = Clock::now();
  const GameTree tree(make_kuhn());
  const RegretTables tables(tree);
  const auto exact = counterfactual_regrets(TabularPolicy(tree));
  std::vector<double> expectation(tree.num_infoset_actions(), 0.0);
  for (auto z : tree.terminals()) {
    const auto record = record_for_terminal(tables, 0.6, z);
    for (const auto& step : record.steps) {
      if (step.infoset < 0) continue;
      const auto& info = tree.infoset(step.infoset);
      for (std::int32_t a = 0; a < info.num_actions; ++a) {
        expectation[info.offset + a] +=
            record.sample_prob * sampled_regret(record, step.infoset, static_cast<ActionId>(a));
      }
    }
  }
  double worst = 0.0;
  for (std::size_t k = 0; k < exact.size(); ++k) worst = std::max(worst, std::abs(expectation[k] - exact[k]));
  const double elapsed = seconds_since(start);
  return {tree.terminals().size() == 30 && worst <= 1e-12 && elapsed < 1.0,
          fmt("%zu terminals, max deviation %.3g, %.3f s", tree.terminals().size(), worst, elapsed)};
}

struct MccfrKuhnRun {
  double exploitability = 0.0;
  double dominated = 0.0;
  double eta = 0.0;
  double xi = 0.0;
  double seconds = 0.0;
};

std::vector<MccfrKuhnRun> g_mccfr_runs;

Outcome mccfr_convergence() {
  const GameTree tree(make_kuhn());
  int good = 0;
  double slowest = 0.0;
  std::string worst;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const auto start = Clock::now();
    MccfrSolver solver(tree, {0.6, seed, 1'000'000});
    solver.run(1'000'000);
    MccfrKuhnRun run;
    run.seconds = seconds_since(start);
    const auto policy = solver.average_policy();
    const auto profile = policy.to_profile();
    run.exploitability = exploitability(policy);
    run.dominated = dominated_error(profile);
    const auto params = kuhn_parameters(profile);
    run.eta = params.eta;
    run.xi = params.xi;
    slowest = std::max(slowest, run.seconds);
    const bool ok = run.exploitability <= 0.02 && run.dominated <= 0.02 &&
                    std::abs(run.eta - 1.0 / 3.0) <= 0.05 && std::abs(run.xi - 1.0 / 3.0) <= 0.05;
    if (ok) ++good;
    worst += fmt(" s%llu:%.4f", static_cast<unsigned long long>(seed), run.exploitability);
    g_mccfr_runs.push_back(run);
  }
  return {good >= 9 && slowest < 60.0,
          fmt("%d/10 seeds within bounds, slowest %.2f s; exploitability", good, slowest) + worst};
}

Outcome mcts_characterization() {
  const GameTree tree(make_kuhn());
  MctsSolver solver(tree, {2.0, 1, 1'000'000});
  solver.run(10'000);
  const double early = dominated_error(solver.visit_policy().to_profile());
  solver.run(990'000);
  const auto policy = solver.visit_policy();
  const double late = dominated_error(policy.to_profile());
  const double e = exploitability(policy);
  const double mccfr = g_mccfr_runs.empty() ? 0.0 : g_mccfr_runs.front().exploitability;
  return {!g_mccfr_runs.empty() && e > mccfr && late < early,
          fmt("MCTS exploitability %.4f vs MCCFR %.4f; dom_e %.4f at 1e4, %.4f at 1e6", e, mccfr,
              early, late)};
}

bool same_tables(const RegretTables& a, const RegretTables& b) {
  return a.regret == b.regret && a.strategy_sum == b.strategy_sum &&
         a.last_update == b.last_update && a.last_reach == b.last_reach &&
         a.nodes_visited == b.nodes_visited;
}

Outcome mcrnr_reduction() {
  const GameTree tree(make_kuhn());
  const auto fix = TabularPolicy(tree).to_profile();
  int identical = 0;
  for (auto mode : {Restriction::Mode::kRootCoin, Restriction::Mode::kPerInfoset}) {
    for (Player r : kPlayers) {
      MccfrSolver plain(tree, {0.6, 42, 1000});
      McrnrSolver restricted(tree, {fix[r], 0.0, mode}, r, {0.6, 42, 1000});
      plain.run(1000);
      restricted.run(1000);
      if (same_tables(plain.tables(), restricted.tables())) ++identical;
    }
  }
  return {identical == 4, fmt("%d/4 (mode, restricted player) pairs bit-identical", identical)};
}

Outcome best_response_endpoint() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (const char* name : {"ocp:8", "goof:4", "bluff:3"}) {
    const GameTree tree(make_game(name));
    MccfrSolver model_run(tree, {0.6, 1, 1'000'000});
    model_run.run(1'000'000);
    const auto fix = model_run.average_policy().to_profile();
    const double scale = tree.game().payoff_scale();
    double worst = 0.0;
    for (Player r : kPlayers) {
      const Player learner = opponent(r);
      McrnrSolver solver(tree, {fix[r], 1.0}, r, {0.6, 2, 1'000'000});
      solver.run(1'000'000);
      StrategyProfile played = fix;
      played[learner] = solver.unrestricted_average();
      const double value = expected_value(tree, TabularPolicy::from_profile(tree, played), learner);
      const double oracle = best_response(tree.game_ptr(), fix[r], learner).value;
      worst = std::max(worst, (oracle - value) / scale);
    }
    ok = ok && worst <= 0.02;
    detail += fmt(" %s %.4f;", name, worst);
  }
  const double elapsed = seconds_since(start);
  return {ok && elapsed < 300.0,
          "largest gap to b_i(fix) as a fraction of payoff scale:" + detail + fmt(" %.1f s", elapsed)};
}

Outcome tradeoff_frontier() {
  const GameTree tree(make_game("bluff:3"));
  const auto model = prepare_fixed_strategy(tree, 0.1, 1);
  TradeoffOptions options;
  options.iterations = 1'000'000;
  options.seed = 1;
  const auto points = tradeoff_sweep(tree, model.profile, options).points;
  const auto& lo = points.front();
  const auto& hi = points.back();
  bool ok = hi.exploitation - lo.exploitation > 0.01 && hi.exploitability - lo.exploitability > 0.01;
  std::string detail;
  for (const auto& pt : points) {
    const bool inside =
        pt.exploitation >= std::min(lo.exploitation, hi.exploitation) - 0.01 &&
        pt.exploitation <= std::max(lo.exploitation, hi.exploitation) + 0.01 &&
        pt.exploitability >= std::min(lo.exploitability, hi.exploitability) - 0.01 &&
        pt.exploitability <= std::max(lo.exploitability, hi.exploitability) + 0.01;
    ok = ok && inside;
    detail += fmt(" p=%g:(%.4f, %.4f)", pt.p, pt.exploitation, pt.exploitability);
  }
  return {ok, fmt("model exploitability %.4f; (exploitation, exploitability)", model.exploitability) +
                  detail};
}

Outcome sampling_speedup() {
  auto game = make_game("bluff:3");
  const GameTree tree(game);
  const auto model = prepare_fixed_strategy(tree, 0.1, 1);
  CompareOptions options;
  options.exact_iterations = 2000;
  options.sampled_iterations = 1'000'000;
  options.checkpoints = 20;
  options.seed = 1;
  const auto result = convergence_compare(game, model.profile, 0.5, options);
  const double target = 1.1 * result.sampled.back().exploitability;
  auto first_at_or_below = [&](const std::vector<CheckpointRow>& rows) {
    for (const auto& row : rows) {
      if (row.exploitability <= target) return row.nodes_visited;
    }
    return std::numeric_limits<std::uint64_t>::max();
  };
  const auto sampled_nodes = first_at_or_below(result.sampled);
  const auto exact_nodes = first_at_or_below(result.exact);
  return {sampled_nodes < exact_nodes,
          fmt("target eps %.4f: MCRNR at %llu nodes, exact RNR at %llu nodes (final %.4f vs %.4f)",
              target, static_cast<unsigned long long>(sampled_nodes),
              static_cast<unsigned long long>(exact_nodes), result.sampled.back().exploitability,
              result.exact.back().exploitability)};
}

Outcome property_suites() {
  constexpr int kTrials = testing::kPropertyTrials;
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const GamePtr games[] = {make_kuhn(), make_bluff(2), make_goofspiel(3), make_pam(2, 2, 3),
                           make_ocp(4)};
  int failures[6] = {0, 0, 0, 0, 0, 0};

  auto random_terminal = [&](const Game& game) {
    History h;
    while (!game.is_terminal(h)) {
      h.push(static_cast<ActionId>(rng() % game.num_actions(h)));
    }
    return h;
  };

  for (int trial = 0; trial < kTrials; ++trial) {
    const auto& game = games[trial % 5];
    const auto profile = testing::random_profile(*game, rng);
    const auto z = random_terminal(*game);
    const auto h = z.prefix(rng() % (z.size() + 1));

    // Reach decomposition: the factors multiply to the action-by-action
    // product, and pi(h) pi(h, z) = pi(z).
    double direct = 1.0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      direct *= testing::action_probability(*game, profile, h.prefix(i), h[i]);
    }
    const double reach_h = reach_probability(*game, profile, h).total();
    const double reach_z = reach_probability(*game, profile, z).total();
    if (std::abs(reach_h - direct) > 1e-12 ||
        std::abs(reach_h * tail_probability(*game, profile, h, z) - reach_z) > 1e-12) {
      ++failures[0];
    }

    // Zero-sum conservation.
    if (game->utility(z, Player::kOne) + game->utility(z, Player::kTwo) != 0.0) ++failures[1];

    // Regret matching: proportional to positive parts, uniform otherwise.
    std::vector<double> regrets(1 + rng() % 6);
    for (double& r : regrets) r = unit(rng) < 0.4 ? -unit(rng) : (unit(rng) < 0.2 ? 0.0 : unit(rng));
    std::vector<double> sigma(regrets.size());
    regret_matching(regrets, sigma);
    double positive = 0.0;
    for (double r : regrets) positive += std::max(r, 0.0);
    for (std::size_t a = 0; a < regrets.size(); ++a) {
      const double expect = positive > 0.0 ? std::max(regrets[a], 0.0) / positive
                                           : 1.0 / static_cast<double>(regrets.size());
      if (std::abs(sigma[a] - expect) > 1e-15) {
        ++failures[2];
        break;
      }
    }

    // UCT count conservation.
    {
      const GameTree tree(game);
      UctTables tables(tree);
      SeededStream stream(rng());
      const int iterations = 1 + static_cast<int>(rng() % 200);
      std::vector<RewardEvent> trace;
      for (int k = 0; k < iterations; ++k) mcts_iteration(tables, 2.0, stream, &trace);
      std::int64_t total = 0;
      bool ok = static_cast<std::int64_t>(trace.size()) ==
                std::accumulate(tables.visits.begin(), tables.visits.end(), std::int64_t{0});
      for (const auto& info : tree.infosets()) {
        std::int64_t sum = 0;
        for (std::int32_t a = 0; a < info.num_actions; ++a) sum += tables.visits[info.offset + a];
        ok = ok && sum == tables.parent_visits[&info - tree.infosets().data()];
        total += sum;
      }
      if (!ok || total == 0) ++failures[3];
    }

    // Strategy file round trip.
    const auto text = format_strategy(profile);
    if (!(parse_strategy(text) == profile) || format_strategy(parse_strategy(text)) != text) {
      ++failures[4];
    }

    // Seed determinism.
    {
      const GameTree tree(game);
      const auto seed = rng();
      MccfrSolver a(tree, {0.6, seed, 0});
      MccfrSolver b(tree, {0.6, seed, 0});
      a.run(300);
      b.run(300);
      MctsSolver c(tree, {2.0, seed, 0});
      MctsSolver d(tree, {2.0, seed, 0});
      c.run(300);
      d.run(300);
      if (!same_tables(a.tables(), b.tables()) || c.tables().visits != d.tables().visits ||
          c.tables().value != d.tables().value) {
        ++failures[5];
      }
    }
  }
  int total = 0;
  for (int f : failures) total += f;
  return {total == 0,
          fmt("%d trials each; failures: reach %d, zero-sum %d, regret matching %d, UCT counts %d, "
              "round trip %d, determinism %d",
              kTrials, failures[0], failures[1], failures[2], failures[3], failures[4], failures[5])};
}

}  // namespace
}  // namespace efg

int main() {
  using efg::Outcome;
  // The payoff-convention gate runs first; the rest follow in order.
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {2, efg::payoff_gate},
      {1, efg::kuhn_value},
      {3, efg::worked_example},
      {4, efg::unbiasedness},
      {5, efg::mccfr_convergence},
      {6, efg::mcts_characterization},
      {7, efg::mcrnr_reduction},
      {8, efg::best_response_endpoint},
      {9, efg::tradeoff_frontier},
      {10, efg::sampling_speedup},
      {11, efg::property_suites},
  };
  int failed = 0;
  for (const auto& [number, run] : criteria) {
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    if (!outcome.pass) ++failed;
    std::printf("%s criterion %d: %s\n", outcome.pass ? "PASS" : "FAIL", number,
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
