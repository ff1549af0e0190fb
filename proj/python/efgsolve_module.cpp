#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "efgsolve/core/errors.hpp"
#include "efgsolve/core/probability.hpp"
#include "efgsolve/core/strategy_io.hpp"
#include "efgsolve/eval/best_response.hpp"
#include "efgsolve/eval/cfr.hpp"
#include "efgsolve/games/games.hpp"
#include "efgsolve/games/kuhn.hpp"
#include "efgsolve/harness/cli.hpp"
#include "efgsolve/mccfr/outcome_sampling.hpp"
#include "efgsolve/mcts/uct.hpp"

namespace py = pybind11;

namespace {

py::dict game_info(const std::string& name) {
  const efg::GameTree tree(efg::make_game(name));
  py::dict out;
  out["name"] = tree.game().name();
  out["nodes"] = tree.size();
  out["infosets"] = tree.infosets().size();
  out["terminals"] = tree.terminals().size();
  out["payoff_scale"] = tree.game().payoff_scale();
  return out;
}

std::string solve(const std::string& game, const std::string& algo, std::int64_t iterations,
                  std::uint64_t seed, double epsilon, double exploration) {
  const efg::GameTree tree(efg::make_game(game));
  if (algo == "cfr") {
    efg::CfrState state(tree);
    for (std::int64_t t = 0; t < iterations; ++t) efg::cfr_iteration(state);
    return efg::format_strategy(state.average_policy().to_profile());
  }
  if (algo == "mccfr") {
    efg::MccfrSolver solver(tree, {epsilon, seed, iterations});
    solver.run(iterations);
    return efg::format_strategy(solver.average_policy().to_profile());
  }
  if (algo == "mcts") {
    efg::MctsSolver solver(tree, {exploration, seed, iterations});
    solver.run(iterations);
    return efg::format_strategy(solver.visit_policy().to_profile());
  }
  throw efg::ParameterError("unknown algorithm '" + algo + "' (expected cfr, mccfr or mcts)");
}

double exploitability(const std::string& game, const std::string& strategy) {
  return efg::exploitability(efg::make_game(game), efg::parse_strategy(strategy));
}

double expected_value(const std::string& game, const std::string& strategy, int player) {
  return efg::expected_value(*efg::make_game(game), efg::parse_strategy(strategy),
                             efg::player_from_number(player));
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::vector<const char*> argv{"efgsolve"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  int code = 0;
  {
    py::gil_scoped_release release;
    code = efg::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  }
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(efgsolve, m) {
  m.doc() = "Equilibrium solvers for two-player extensive-form games";
  py::register_exception<efg::Error>(m, "Error");

  m.def("game_info", &game_info, py::arg("game"));
  m.def("solve", &solve, py::arg("game"), py::arg("algo") = "mccfr", py::arg("iterations"),
        py::arg("seed") = 0, py::arg("epsilon") = 0.6, py::arg("exploration") = 2.0,
        py::call_guard<py::gil_scoped_release>());
  m.def("exploitability", &exploitability, py::arg("game"), py::arg("strategy"));
  m.def("expected_value", &expected_value, py::arg("game"), py::arg("strategy"),
        py::arg("player") = 1);
  m.def("kuhn_equilibrium", [](double gamma) {
    return efg::format_strategy(efg::kuhn_equilibrium_profile(gamma));
  }, py::arg("gamma"));
  m.def("run_cli", &run_cli, py::arg("args"));
}
