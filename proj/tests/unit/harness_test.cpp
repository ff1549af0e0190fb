#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include "efgsolve/core/errors.hpp"
#include "efgsolve/core/strategy_io.hpp"
#include "efgsolve/games/games.hpp"
#include "efgsolve/games/kuhn.hpp"
#include "efgsolve/harness/cli.hpp"
#include "efgsolve/harness/run_record.hpp"
#include "test_support.hpp"

namespace efg {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "efgsolve");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(slurp(path));
  for (std::string line; std::getline(in, line);) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    for (std::string f; std::getline(ss, f, ',');) fields.push_back(f);
    rows.push_back(std::move(fields));
  }
  return rows;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("efgsolve_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }

  std::string path(const std::string& name) const { return (dir / name).string(); }

  fs::path dir;
};

TEST_F(CliTest, ArgumentErrors) {
  EXPECT_EQ(cli({}).code, kExitArgument);
  EXPECT_EQ(cli({"solve"}).code, kExitArgument);
  EXPECT_EQ(cli({"solve", "--game", "chess", "--out-dir", path("")}).code, kExitArgument);
  EXPECT_EQ(cli({"solve", "--game", "kuhn", "--algo", "magic"}).code, kExitArgument);
  EXPECT_EQ(cli({"solve", "--game", "kuhn", "--epsilon", "0", "--out-dir", path("")}).code,
            kExitArgument);
  EXPECT_EQ(cli({"solve", "--game", "kuhn", "--algo", "mcrnr", "--p", "0.5", "--out-dir",
                 path("")})
                .code,
            kExitArgument);
  EXPECT_EQ(cli({"solve", "--game", "kuhn", "--algo", "mcrnr", "--p", "1.5", "--out-dir",
                 path("")})
                .code,
            kExitArgument);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);
}

TEST_F(CliTest, IoErrors) {
  EXPECT_EQ(cli({"eval", "--game", "kuhn", "--strategy", path("missing")}).code, kExitIo);
  std::ofstream(path("file")) << "x";
  EXPECT_EQ(cli({"solve", "--game", "kuhn", "--iters", "10", "--out-dir", path("file/sub")}).code,
            kExitIo);
}

TEST_F(CliTest, SolveWritesCheckpointsAndStrategy) {
  const auto r = cli({"solve", "--game", "kuhn", "--algo", "mccfr", "--iters", "10000", "--seed",
                      "7", "--eval-every", "1000", "--out-dir", path("")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = read_csv(dir / "mccfr_kuhn_seed7.csv");
  ASSERT_EQ(rows.size(), 1 + 10 * 4u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"iteration", "metric", "value", "elapsed_ms",
                                               "nodes_visited", "seed", "game", "algo"}));
  std::map<std::string, long> last;
  for (std::size_t k = 1; k < rows.size(); ++k) {
    ASSERT_EQ(rows[k].size(), rows[0].size());
    const long it = std::stol(rows[k][0]);
    EXPECT_GT(it, last[rows[k][1]]);
    last[rows[k][1]] = it;
    EXPECT_EQ(rows[k][5], "7");
  }
  EXPECT_EQ(last.size(), 4u);
  const auto profile = read_strategy_file(dir / "mccfr_kuhn_seed7.strategy");
  EXPECT_EQ(profile[Player::kOne].size() + profile[Player::kTwo].size(), 12u);
}

TEST_F(CliTest, ZeroIterationsGiveEmptySeriesAndUniformStrategy) {
  ASSERT_EQ(cli({"solve", "--game", "kuhn", "--algo", "mcts", "--iters", "0", "--out-dir", path("")}).code,
            kExitOk);
  EXPECT_EQ(slurp(dir / "mcts_kuhn_seed0.csv"), std::string(kRunCsvHeader) + "\n");
  const auto profile = read_strategy_file(dir / "mcts_kuhn_seed0.strategy");
  for (Player p : kPlayers) {
    EXPECT_EQ(profile[p].size(), 6u);
    for (const auto& [key, probs] : profile[p].table()) {
      EXPECT_EQ(probs, (std::vector<double>{0.5, 0.5}));
    }
  }
}

TEST_F(CliTest, RerunsAreByteIdentical) {
  const std::vector<std::vector<std::string>> commands = {
      {"solve", "--game", "bluff:2", "--algo", "mccfr", "--iters", "3000", "--eval-every", "1000"},
      {"solve", "--game", "kuhn", "--algo", "mcts", "--iters", "3000", "--eval-every", "1500"},
      {"solve", "--game", "kuhn", "--algo", "cfr", "--iters", "50", "--eval-every", "10"},
      {"solve", "--game", "kuhn", "--algo", "mcrnr", "--p", "0.5", "--fix-threshold", "0.2",
       "--iters", "2000", "--eval-every", "1000"},
      {"sweep", "--game", "kuhn", "--fix-threshold", "0.2", "--iters", "2000", "--p-values",
       "0,0.5,1"},
      {"compare", "--game", "kuhn", "--p", "0.5", "--fix-threshold", "0.2", "--exact-iters", "20",
       "--iters", "2000", "--checkpoints", "2"},
  };
  for (const auto& base : commands) {
    std::map<std::string, std::string> first;
    for (const char* sub : {"a", "b"}) {
      auto args = base;
      args.insert(args.end(), {"--no-timing", "--seed", "3", "--out-dir", path(sub)});
      const auto r = cli(args);
      ASSERT_EQ(r.code, kExitOk) << base[0] << ' ' << r.err;
      for (const auto& entry : fs::directory_iterator(dir / sub)) {
        const auto name = entry.path().filename().string();
        const auto body = slurp(entry.path());
        if (sub[0] == 'a') {
          first[name] = body;
        } else {
          EXPECT_EQ(body, first[name]) << name;
        }
      }
    }
    EXPECT_FALSE(first.empty());
    fs::remove_all(dir / "a");
    fs::remove_all(dir / "b");
  }
}

TEST_F(CliTest, ParallelSeedsMatchSequentialRuns) {
  const std::vector<std::string> base = {"solve", "--game", "kuhn", "--iters", "2000",
                                         "--seeds", "1,2,3", "--no-timing"};
  auto sequential = base;
  sequential.insert(sequential.end(), {"--out-dir", path("seq")});
  auto parallel = base;
  parallel.insert(parallel.end(), {"--out-dir", path("par"), "--parallel-seeds", "3"});
  ASSERT_EQ(cli(sequential).code, kExitOk);
  ASSERT_EQ(cli(parallel).code, kExitOk);
  for (int seed = 1; seed <= 3; ++seed) {
    const auto name = "mccfr_kuhn_seed" + std::to_string(seed) + ".csv";
    EXPECT_EQ(slurp(dir / "seq" / name), slurp(dir / "par" / name));
  }
}

TEST_F(CliTest, OutputDirectoryFromEnvironment) {
  ::setenv(kOutDirVariable, path("env").c_str(), 1);
  const auto r = cli({"solve", "--game", "kuhn", "--iters", "10"});
  ::unsetenv(kOutDirVariable);
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(fs::exists(dir / "env" / "mccfr_kuhn_seed0.csv"));
}

TEST_F(CliTest, EvalAnalyticAndUniformKuhn) {
  write_strategy_file(path("ne.txt"), kuhn_equilibrium_profile(0.5));
  auto r = cli({"eval", "--game", "kuhn", "--strategy", path("ne.txt"), "--metrics",
                "exploitability"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string human, header, row;
  std::getline(lines, human);
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header, "game,exploitability");
  EXPECT_NEAR(std::stod(row.substr(row.find(',') + 1)), 0.0, 1e-9);

  write_strategy_file(path("uniform.txt"), StrategyProfile{});
  r = cli({"eval", "--game", "kuhn", "--p1", path("uniform.txt"), "--p2", path("uniform.txt"),
           "--metrics", "dom_e"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("dom_e: 3.5"), std::string::npos);

  EXPECT_EQ(cli({"eval", "--game", "bluff:2", "--strategy", path("ne.txt"), "--metrics", "sqre"}).code,
            kExitValidation);
  EXPECT_EQ(cli({"eval", "--game", "kuhn", "--strategy", path("ne.txt"), "--metrics", "bogus"}).code,
            kExitArgument);
}

TEST_F(CliTest, EvalMismatchNamesFirstOffendingKey) {
  const auto profile = kuhn_equilibrium_profile(0.5);
  write_strategy_file(path("kuhn.txt"), profile);
  const auto r = cli({"eval", "--game", "goof:3", "--strategy", path("kuhn.txt")});
  EXPECT_EQ(r.code, kExitValidation);
  const auto& first = profile[Player::kOne].table().begin()->first;
  EXPECT_NE(r.err.find(first.hex()), std::string::npos) << r.err;
}

TEST_F(CliTest, IncompleteModelIsValidationError) {
  StrategyProfile partial;
  partial[Player::kOne].set(kuhn_key(Player::kOne, kKing, {}), {0.0, 1.0});
  write_strategy_file(path("partial.txt"), partial);
  const auto r = cli({"solve", "--game", "kuhn", "--algo", "mcrnr", "--p", "0.5", "--fix",
                      path("partial.txt"), "--iters", "10", "--out-dir", path("")});
  EXPECT_EQ(r.code, kExitValidation);
  EXPECT_NE(r.err.find("no entry"), std::string::npos) << r.err;
}

TEST_F(CliTest, SweepDefaultsAndZeroPoint) {
  auto r = cli({"sweep", "--game", "kuhn", "--fix-threshold", "0.2", "--iters", "1000", "--out-dir",
                path("")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  auto rows = read_csv(dir / "sweep_kuhn.csv");
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"p", "seed", "exploitation", "exploitability",
                                               "nodes_visited", "game", "algo"}));
  const std::vector<std::string> expect_p = {"0", "0.5", "0.7", "0.8", "0.9", "0.93", "0.97", "1"};
  for (std::size_t k = 1; k < rows.size(); ++k) {
    ASSERT_EQ(rows[k].size(), 7u);
    EXPECT_EQ(rows[k][0], expect_p[k - 1]);
  }
  EXPECT_EQ(rows[1][2], "0");

  r = cli({"sweep", "--game", "kuhn", "--p-values", "0", "--iters", "1000", "--csv",
           path("zero.csv")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  rows = read_csv(path("zero.csv"));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[1][2], "0");
}

TEST_F(CliTest, CompareRowCountMatchesCheckpoints) {
  const auto r = cli({"compare", "--game", "kuhn", "--p", "0", "--exact-iters", "30", "--iters",
                      "3000", "--checkpoints", "3", "--out-dir", path("")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  for (const char* name : {"compare_kuhn_rnr.csv", "compare_kuhn_mcrnr.csv"}) {
    const auto rows = read_csv(dir / name);
    ASSERT_EQ(rows.size(), 4u);
    for (const auto& row : rows) EXPECT_EQ(row.size(), 8u);
  }
}

TEST(RunRecordTest, IterationsMustIncreasePerMetric) {
  RunRecord record;
  record.add(1, "exploitability", 0.5, 0, 10);
  record.add(1, "ev_p1", 0.1, 0, 10);
  record.add(2, "exploitability", 0.4, 0, 20);
  EXPECT_THROW(record.add(2, "exploitability", 0.3, 0, 30), ParameterError);
  EXPECT_THROW(record.add(0, "ev_p1", 0.3, 0, 30), ParameterError);
}

TEST(RunRecordTest, NumbersRoundTripProperty) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> unit(-1e3, 1e3);
  for (int trial = 0; trial < testing::kPropertyTrials; ++trial) {
    const double x = trial % 10 == 0 ? unit(rng) * 1e-300 : unit(rng);
    EXPECT_EQ(std::stod(format_number(x)), x);
  }
  EXPECT_EQ(format_number(0.5), "0.5");
  EXPECT_EQ(format_number(0.0), "0");
}

}  // namespace
}  // namespace efg
