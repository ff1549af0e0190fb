#include "efgsolve/harness/run_record.hpp"

#include <charconv>
#include <fstream>
#include <map>

#include "efgsolve/core/errors.hpp"
#include "efgsolve/core/probability.hpp"
#include "efgsolve/eval/best_response.hpp"
#include "efgsolve/eval/kuhn_metrics.hpp"
#include "efgsolve/games/games.hpp"

namespace efg {

void RunRecord::add(std::int64_t iteration, const std::string& metric, double value,
                    double elapsed_ms, std::uint64_t nodes_visited) {
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (it->metric != metric) continue;
    if (iteration <= it->iteration) {
      throw ParameterError("iteration " + std::to_string(iteration) + " of metric " + metric +
                           " does not follow " + std::to_string(it->iteration));
    }
    break;
  }
  rows.push_back({iteration, metric, value, elapsed_ms, nodes_visited});
}

std::string format_number(double value) {
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, result.ptr);
}

void write_run_csv(std::ostream& out, const std::vector<RunRecord>& runs) {
  out << kRunCsvHeader << '\n';
  for (const auto& run : runs) {
    for (const auto& row : run.rows) {
      out << row.iteration << ',' << row.metric << ',' << format_number(row.value) << ','
          << format_number(row.elapsed_ms) << ',' << row.nodes_visited << ',' << run.seed << ','
          << run.game << ',' << run.algo << '\n';
    }
  }
}

void write_run_csv(const std::filesystem::path& path, const std::vector<RunRecord>& runs) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_run_csv(out, runs);
  if (!out) throw IoError("failed writing " + path.string());
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, const std::string& game,
                     const std::string& algo) {
  out << kSweepCsvHeader << '\n';
  for (const auto& row : rows) {
    out << format_number(row.point.p) << ',' << row.seed << ','
        << format_number(row.point.exploitation) << ',' << format_number(row.point.exploitability)
        << ',' << row.point.nodes_visited << ',' << game << ',' << algo << '\n';
  }
}

std::vector<std::pair<std::string, double>> profile_metrics(const GameTree& tree,
                                                            const TabularPolicy& policy) {
  std::vector<std::pair<std::string, double>> out;
  out.emplace_back("exploitability", exploitability(policy));
  if (is_kuhn_like(parse_game_params(tree.game().name()))) {
    const auto profile = policy.to_profile();
    out.emplace_back("sqre", kuhn_squared_error(profile));
    out.emplace_back("dom_e", dominated_error(profile));
  }
  out.emplace_back("ev_p1", expected_value(tree, policy, Player::kOne));
  return out;
}

}  // namespace efg
