#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "efgsolve/core/game_tree.hpp"
#include "efgsolve/rnr/rnr.hpp"

namespace efg {

struct MetricRow {
  std::int64_t iteration = 0;
  std::string metric;
  double value = 0.0;
  double elapsed_ms = 0.0;
  std::uint64_t nodes_visited = 0;
};

// Metric series of one seeded run.
struct RunRecord {
  std::uint64_t seed = 0;
  std::string game;
  std::string algo;
  std::vector<MetricRow> rows;

  // Throws ParameterError when `iteration` does not increase within the
  // series of `metric`.
  void add(std::int64_t iteration, const std::string& metric, double value, double elapsed_ms,
           std::uint64_t nodes_visited);
};

inline constexpr const char* kRunCsvHeader =
    "iteration,metric,value,elapsed_ms,nodes_visited,seed,game,algo";
inline constexpr const char* kSweepCsvHeader =
    "p,seed,exploitation,exploitability,nodes_visited,game,algo";

// Shortest decimal form that reads back to the same double.
std::string format_number(double value);

void write_run_csv(std::ostream& out, const std::vector<RunRecord>& runs);
void write_run_csv(const std::filesystem::path& path, const std::vector<RunRecord>& runs);

struct SweepRow {
  TradeoffPoint point;
  std::uint64_t seed = 0;
};

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, const std::string& game,
                     const std::string& algo);

// Metrics of a profile: exploitability and ev_p1 everywhere, plus sqre and
// dom_e on Kuhn.
std::vector<std::pair<std::string, double>> profile_metrics(const GameTree& tree,
                                                            const TabularPolicy& policy);

}  // namespace efg
