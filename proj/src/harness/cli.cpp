#include "efgsolve/harness/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <memory>
#include <optional>
#include <thread>

#include "efgsolve/core/errors.hpp"
#include "efgsolve/core/probability.hpp"
#include "efgsolve/core/strategy_io.hpp"
#include "efgsolve/eval/best_response.hpp"
#include "efgsolve/eval/cfr.hpp"
#include "efgsolve/eval/kuhn_metrics.hpp"
#include "efgsolve/games/games.hpp"
#include "efgsolve/harness/run_record.hpp"
#include "efgsolve/mccfr/outcome_sampling.hpp"
#include "efgsolve/mcts/uct.hpp"
#include "efgsolve/rnr/rnr.hpp"

namespace efg {

namespace {

namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kModelStream = 99;

struct CommonOptions {
  std::string game;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> seeds;
  int parallel_seeds = 1;
  double epsilon = 0.6;
  double p = 0.0;
  std::string mode = "root-coin";
  std::string fix;
  double fix_threshold = 0.0;
  std::string out_dir;
  bool no_timing = false;

  std::vector<std::uint64_t> seed_list() const { return seeds.empty() ? std::vector{seed} : seeds; }
  Restriction::Mode restriction_mode() const {
    return mode == "per-infoset" ? Restriction::Mode::kPerInfoset : Restriction::Mode::kRootCoin;
  }
};

struct SolveOptions : CommonOptions {
  std::string algo = "mccfr";
  std::int64_t iters = 0;
  std::int64_t eval_every = 0;
  double exploration = 2.0;
  std::string restricted = "both";
  double target_exploitability = -1.0;
  std::string csv;
  std::string strategy_out;
};

struct EvalOptions {
  std::string game;
  std::string strategy;
  std::string p1;
  std::string p2;
  std::vector<std::string> metrics;
};

struct SweepOptions : CommonOptions {
  std::vector<double> p_values = default_p_values();
  std::int64_t iters = 100'000;
  std::string csv;
};

struct CompareOptionsCli : CommonOptions {
  std::int64_t exact_iters = 1000;
  std::int64_t iters = 1'000'000;
  int checkpoints = 20;
  std::string exact_csv;
  std::string sampled_csv;
};

fs::path output_dir(const CommonOptions& options) {
  fs::path dir = options.out_dir;
  if (dir.empty()) {
    const char* env = std::getenv(kOutDirVariable);
    dir = env && *env ? fs::path(env) : fs::path(".");
  }
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

std::string file_stem(std::string text) {
  for (char& c : text) {
    if (c == ':') c = '-';
  }
  return text;
}

// Runs `work(k)` for k in [0, n) on up to `threads` threads; the first
// exception in index order is rethrown after every worker has finished.
void for_each_seed(std::size_t n, int threads, const std::function<void(std::size_t)>& work) {
  if (threads < 1) throw ParameterError("--parallel-seeds must be at least 1");
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next++) < n;) {
      try {
        work(k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(threads), n);
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < count; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void check_profile(const GameTree& tree, const StrategyProfile& profile) {
  for (Player player : kPlayers) check_strategy_matches(tree, profile[player], player);
}

StrategyProfile load_model(const CommonOptions& options, const GameTree& tree, std::uint64_t seed) {
  if (!options.fix.empty()) {
    auto profile = read_strategy_file(options.fix);
    check_profile(tree, profile);
    return profile;
  }
  if (options.fix_threshold > 0.0) {
    return prepare_fixed_strategy(tree, options.fix_threshold, derive_seed(seed, kModelStream),
                                  options.epsilon)
        .profile;
  }
  if (options.p == 0.0) return TabularPolicy(tree).to_profile();
  throw ParameterError("p > 0 needs a fixed strategy: pass --fix or --fix-threshold");
}

// One solver behind a uniform interface for checkpointed runs.
class Runner {
 public:
  virtual ~Runner() = default;
  virtual void step(std::int64_t iterations) = 0;
  virtual TabularPolicy policy() const = 0;
  virtual std::uint64_t nodes_visited() const = 0;
};

class CfrRunner final : public Runner {
 public:
  explicit CfrRunner(const GameTree& tree) : state_(tree) {}
  void step(std::int64_t n) override {
    for (std::int64_t k = 0; k < n; ++k) cfr_iteration(state_);
  }
  TabularPolicy policy() const override { return state_.average_policy(); }
  std::uint64_t nodes_visited() const override { return state_.nodes_visited; }

 private:
  CfrState state_;
};

class MccfrRunner final : public Runner {
 public:
  MccfrRunner(const GameTree& tree, MccfrConfig config) : solver_(tree, config) {}
  void step(std::int64_t n) override { solver_.run(n); }
  TabularPolicy policy() const override { return solver_.average_policy(); }
  std::uint64_t nodes_visited() const override { return solver_.tables().nodes_visited; }

 private:
  MccfrSolver solver_;
};

class MctsRunner final : public Runner {
 public:
  MctsRunner(const GameTree& tree, MctsConfig config) : solver_(tree, config) {}
  void step(std::int64_t n) override { solver_.run(n); }
  TabularPolicy policy() const override { return solver_.visit_policy(); }
  std::uint64_t nodes_visited() const override { return solver_.tables().nodes_visited; }

 private:
  MctsSolver solver_;
};

// Exact or sampled RNR for one or both restricted players. With one
// restricted player the evaluated profile pairs the learned side with the model.
class RnrRunner final : public Runner {
 public:
  RnrRunner(const GameTree& tree, const SolveOptions& options, StrategyProfile model,
            std::uint64_t seed)
      : tree_(tree), model_(std::move(model)) {
    std::vector<Player> restricted;
    if (options.restricted != "2") restricted.push_back(Player::kOne);
    if (options.restricted != "1") restricted.push_back(Player::kTwo);
    const auto mode = options.restriction_mode();
    for (Player r : restricted) {
      const RestrictionSpec spec{model_[r], options.p, mode};
      if (options.algo == "rnr") {
        if (mode != Restriction::Mode::kRootCoin) {
          throw ParameterError("rnr supports root-coin mode only");
        }
        exact_.push_back(std::make_unique<ExactRnrSolver>(tree.game_ptr(), spec, r));
      } else {
        const MccfrConfig config{options.epsilon, derive_seed(seed, index_of(r) + 1), 0};
        sampled_.push_back(std::make_unique<McrnrSolver>(tree, spec, r, config));
      }
    }
  }

  void step(std::int64_t n) override {
    for (auto& s : exact_) s->run(n);
    for (auto& s : sampled_) s->run(n);
  }

  TabularPolicy policy() const override {
    StrategyProfile profile = model_;
    for (const auto& s : exact_) profile[opponent(s->restricted())] = s->unrestricted_average();
    for (const auto& s : sampled_) profile[opponent(s->restricted())] = s->unrestricted_average();
    return TabularPolicy::from_profile(tree_, profile);
  }

  std::uint64_t nodes_visited() const override {
    std::uint64_t total = 0;
    for (const auto& s : exact_) total += s->nodes_visited();
    for (const auto& s : sampled_) total += s->tables().nodes_visited;
    return total;
  }

 private:
  const GameTree& tree_;
  StrategyProfile model_;
  std::vector<std::unique_ptr<ExactRnrSolver>> exact_;
  std::vector<std::unique_ptr<McrnrSolver>> sampled_;
};

std::unique_ptr<Runner> make_runner(const GameTree& tree, const SolveOptions& options,
                                    std::uint64_t seed) {
  if (options.algo == "cfr") return std::make_unique<CfrRunner>(tree);
  if (options.algo == "mccfr") {
    return std::make_unique<MccfrRunner>(tree, MccfrConfig{options.epsilon, seed, options.iters});
  }
  if (options.algo == "mcts") {
    return std::make_unique<MctsRunner>(tree,
                                        MctsConfig{options.exploration, seed, options.iters});
  }
  return std::make_unique<RnrRunner>(tree, options, load_model(options, tree, seed), seed);
}

void solve_one(const GameTree& tree, const SolveOptions& options, std::uint64_t seed,
               const fs::path& csv_path, const fs::path& strategy_path) {
  auto runner = make_runner(tree, options, seed);
  RunRecord record{seed, tree.game().name(), options.algo, {}};
  double elapsed = 0.0;
  for (std::int64_t t = 0; t < options.iters;) {
    const std::int64_t next =
        options.eval_every > 0 ? std::min(options.iters, t + options.eval_every) : options.iters;
    const auto start = Clock::now();
    runner->step(next - t);
    elapsed += std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    t = next;
    const auto policy = runner->policy();
    const auto metrics = profile_metrics(tree, policy);
    for (const auto& [name, value] : metrics) {
      record.add(t, name, value, options.no_timing ? 0.0 : elapsed, runner->nodes_visited());
    }
    if (options.target_exploitability >= 0.0 && metrics.front().second <= options.target_exploitability) {
      break;
    }
  }
  write_run_csv(csv_path, {record});
  write_strategy_file(strategy_path, runner->policy().to_profile());
}

void validate_common(const CommonOptions& options) {
  RestrictionSpec{{}, options.p, options.restriction_mode()}.validate();
  MccfrConfig{options.epsilon, 0, 0}.validate();
  if (options.fix_threshold < 0.0) throw ParameterError("--fix-threshold must be positive");
}

int cmd_solve(const SolveOptions& options, std::ostream& out) {
  validate_common(options);
  if (options.iters < 0) throw ParameterError("--iters must be non-negative");
  if (options.eval_every < 0) throw ParameterError("--eval-every must be non-negative");
  const GameTree tree(make_game(options.game));
  const auto seeds = options.seed_list();
  if (seeds.size() > 1 && (!options.csv.empty() || !options.strategy_out.empty())) {
    throw ParameterError("--csv and --strategy-out take a single seed");
  }
  const auto dir = output_dir(options);
  std::vector<std::pair<fs::path, fs::path>> paths;
  for (auto seed : seeds) {
    const auto stem = options.algo + "_" + file_stem(tree.game().name()) + "_seed" +
                      std::to_string(seed);
    paths.emplace_back(options.csv.empty() ? dir / (stem + ".csv") : fs::path(options.csv),
                       options.strategy_out.empty() ? dir / (stem + ".strategy")
                                                    : fs::path(options.strategy_out));
  }
  for_each_seed(seeds.size(), options.parallel_seeds, [&](std::size_t k) {
    solve_one(tree, options, seeds[k], paths[k].first, paths[k].second);
  });
  for (const auto& [csv, strategy] : paths) out << "wrote " << csv.string() << " and " << strategy.string() << '\n';
  return kExitOk;
}

int cmd_eval(const EvalOptions& options, std::ostream& out) {
  const GameTree tree(make_game(options.game));
  StrategyProfile profile;
  if (!options.strategy.empty()) {
    profile = read_strategy_file(options.strategy);
  } else {
    if (options.p1.empty() || options.p2.empty()) {
      throw ParameterError("eval needs --strategy or both --p1 and --p2");
    }
    profile[Player::kOne] = read_strategy_file(options.p1)[Player::kOne];
    profile[Player::kTwo] = read_strategy_file(options.p2)[Player::kTwo];
  }
  try {
    check_profile(tree, profile);
  } catch (const GameMismatchError& e) {
    throw ValidationError(std::string("strategy does not match ") + options.game + ": " + e.what());
  }
  const bool kuhn = is_kuhn_like(parse_game_params(options.game));
  std::vector<std::string> metrics = options.metrics;
  if (metrics.empty()) {
    metrics = {"exploitability", "ev_p1", "ev_p2"};
    if (kuhn) metrics.insert(metrics.end(), {"sqre", "dom_e"});
  }
  const auto policy = TabularPolicy::from_profile(tree, profile);
  std::vector<double> values;
  for (const auto& m : metrics) {
    if (m == "exploitability") {
      values.push_back(exploitability(policy));
    } else if (m == "ev_p1" || m == "ev_p2") {
      values.push_back(expected_value(tree, policy, m == "ev_p1" ? Player::kOne : Player::kTwo));
    } else if (m == "sqre" || m == "dom_e") {
      if (!kuhn) throw ParameterError("metric " + m + " is defined on Kuhn poker only");
      values.push_back(m == "sqre" ? kuhn_squared_error(profile) : dominated_error(profile));
    } else {
      throw ParameterError("unknown metric '" + m + "'");
    }
  }
  for (std::size_t k = 0; k < metrics.size(); ++k) {
    out << metrics[k] << ": " << format_number(values[k]) << '\n';
  }
  out << "game";
  for (const auto& m : metrics) out << ',' << m;
  out << '\n' << tree.game().name();
  for (double v : values) out << ',' << format_number(v);
  out << '\n';
  return kExitOk;
}

int cmd_sweep(const SweepOptions& options, std::ostream& out) {
  validate_common(options);
  if (options.iters < 0) throw ParameterError("--iters must be non-negative");
  if (options.p_values.empty()) throw ParameterError("--p-values is empty");
  const GameTree tree(make_game(options.game));
  const auto seeds = options.seed_list();
  std::vector<std::vector<SweepRow>> per_seed(seeds.size());
  for_each_seed(seeds.size(), options.parallel_seeds, [&](std::size_t k) {
    CommonOptions model_options = options;
    model_options.p = *std::max_element(options.p_values.begin(), options.p_values.end());
    const auto model = load_model(model_options, tree, seeds[k]);
    TradeoffOptions sweep;
    sweep.p_values = options.p_values;
    sweep.iterations = options.iters;
    sweep.epsilon = options.epsilon;
    sweep.seed = seeds[k];
    sweep.mode = options.restriction_mode();
    for (auto& point : tradeoff_sweep(tree, model, sweep).points) {
      per_seed[k].push_back({std::move(point), seeds[k]});
    }
  });
  std::vector<SweepRow> rows;
  for (auto& r : per_seed) rows.insert(rows.end(), r.begin(), r.end());

  const fs::path path = options.csv.empty()
                            ? output_dir(options) / ("sweep_" + file_stem(tree.game().name()) + ".csv")
                            : fs::path(options.csv);
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path.string() + " for writing");
  const std::string algo =
      options.restriction_mode() == Restriction::Mode::kRootCoin ? "mcrnr" : "mcrnr-mix";
  write_sweep_csv(file, rows, tree.game().name(), algo);
  if (!file) throw IoError("failed writing " + path.string());
  out << "wrote " << path.string() << '\n';
  return kExitOk;
}

int cmd_compare(const CompareOptionsCli& options, std::ostream& out) {
  validate_common(options);
  auto game = make_game(options.game);
  const GameTree tree(game);
  const auto model = load_model(options, tree, options.seed);
  CompareOptions compare;
  compare.exact_iterations = options.exact_iters;
  compare.sampled_iterations = options.iters;
  compare.checkpoints = options.checkpoints;
  compare.epsilon = options.epsilon;
  compare.seed = options.seed;
  compare.sampled_mode = options.restriction_mode();
  const auto result = convergence_compare(game, model, options.p, compare);

  auto to_record = [&](const std::vector<CheckpointRow>& rows, const std::string& algo) {
    RunRecord record{options.seed, game->name(), algo, {}};
    for (const auto& row : rows) {
      record.add(row.iteration, "exploitability", row.exploitability,
                 options.no_timing ? 0.0 : row.elapsed_ms, row.nodes_visited);
    }
    return record;
  };
  const auto stem = "compare_" + file_stem(game->name());
  fs::path exact_path = options.exact_csv;
  fs::path sampled_path = options.sampled_csv;
  if (exact_path.empty() || sampled_path.empty()) {
    const auto dir = output_dir(options);
    if (exact_path.empty()) exact_path = dir / (stem + "_rnr.csv");
    if (sampled_path.empty()) sampled_path = dir / (stem + "_mcrnr.csv");
  }
  write_run_csv(exact_path, {to_record(result.exact, "rnr")});
  write_run_csv(sampled_path, {to_record(result.sampled, "mcrnr")});
  out << "wrote " << exact_path.string() << " and " << sampled_path.string() << '\n';
  return kExitOk;
}

void add_common(CLI::App& cmd, CommonOptions& o, bool restriction) {
  cmd.add_option("--game", o.game, "game string, e.g. kuhn, ocp:8, goof:4, bluff:3, pam:3x3x4")
      ->required();
  cmd.add_option("--seed", o.seed, "random seed");
  cmd.add_option("--seeds", o.seeds, "comma-separated seeds, one run each")->delimiter(',');
  cmd.add_option("--parallel-seeds", o.parallel_seeds, "seeded runs executed concurrently");
  cmd.add_option("--epsilon", o.epsilon, "MCCFR exploration");
  cmd.add_option("--out-dir", o.out_dir, std::string("output directory (default $") +
                                             kOutDirVariable + " or .)");
  cmd.add_flag("--no-timing", o.no_timing, "write elapsed_ms as 0 so reruns are byte-identical");
  if (!restriction) return;
  cmd.add_option("--p", o.p, "confidence in the fixed strategy");
  cmd.add_option("--mode", o.mode, "restriction mode")
      ->check(CLI::IsMember({"root-coin", "per-infoset"}));
  cmd.add_option("--fix", o.fix, "strategy file with the fixed model for both players");
  cmd.add_option("--fix-threshold", o.fix_threshold,
                 "without --fix: train the model with MCCFR until its exploitability is this low");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equilibrium solvers for two-player extensive-form games", "efgsolve"};
  app.require_subcommand(1);

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "run a solver and write metrics and strategy");
  add_common(*solve_cmd, solve, true);
  solve_cmd->add_option("--algo", solve.algo)
      ->check(CLI::IsMember({"cfr", "mccfr", "mcts", "rnr", "mcrnr"}));
  solve_cmd->add_option("--iters", solve.iters, "iterations per run");
  solve_cmd->add_option("--eval-every", solve.eval_every, "checkpoint interval (0: final only)");
  solve_cmd->add_option("--C", solve.exploration, "UCT exploration constant");
  solve_cmd->add_option("--restricted", solve.restricted, "restricted player(s) for rnr/mcrnr")
      ->check(CLI::IsMember({"1", "2", "both"}));
  solve_cmd->add_option("--target-exploitability", solve.target_exploitability,
                        "stop at the first checkpoint at or below this value");
  solve_cmd->add_option("--csv", solve.csv, "metric CSV path");
  solve_cmd->add_option("--strategy-out", solve.strategy_out, "strategy file path");

  EvalOptions eval;
  auto* eval_cmd = app.add_subcommand("eval", "evaluate strategy files");
  eval_cmd->add_option("--game", eval.game)->required();
  eval_cmd->add_option("--strategy", eval.strategy, "strategy file for both players");
  eval_cmd->add_option("--p1", eval.p1, "strategy file for player one");
  eval_cmd->add_option("--p2", eval.p2, "strategy file for player two");
  eval_cmd->add_option("--metrics", eval.metrics, "exploitability, ev_p1, ev_p2, sqre, dom_e")
      ->delimiter(',');

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "exploitation/exploitability trade-off over p");
  add_common(*sweep_cmd, sweep, true);
  sweep_cmd->add_option("--p-values", sweep.p_values, "comma-separated confidences")
      ->delimiter(',');
  sweep_cmd->add_option("--iters", sweep.iters, "iterations per run");
  sweep_cmd->add_option("--csv", sweep.csv, "output CSV path");

  CompareOptionsCli compare;
  auto* compare_cmd = app.add_subcommand("compare", "exact versus sampled RNR convergence");
  add_common(*compare_cmd, compare, true);
  compare_cmd->add_option("--exact-iters", compare.exact_iters, "exact RNR iterations");
  compare_cmd->add_option("--iters", compare.iters, "sampled RNR iterations");
  compare_cmd->add_option("--checkpoints", compare.checkpoints, "checkpoints per run");
  compare_cmd->add_option("--exact-csv", compare.exact_csv, "exact RNR CSV path");
  compare_cmd->add_option("--sampled-csv", compare.sampled_csv, "sampled RNR CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitArgument;
  }

  try {
    if (*solve_cmd) return cmd_solve(solve, out);
    if (*eval_cmd) return cmd_eval(eval, out);
    if (*sweep_cmd) return cmd_sweep(sweep, out);
    return cmd_compare(compare, out);
  } catch (const ParameterError& e) {
    err << "argument error: " << e.what() << '\n';
    return kExitArgument;
  } catch (const SizeError& e) {
    err << "argument error: " << e.what() << '\n';
    return kExitArgument;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const Error& e) {
    err << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace efg
