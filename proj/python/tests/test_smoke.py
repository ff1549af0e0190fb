import math

import pytest

import efgsolve


def test_game_info():
    info = efgsolve.game_info("kuhn")
    assert info["terminals"] == 30
    assert info["infosets"] == 12
    assert info["payoff_scale"] == 2


def test_kuhn_equilibrium_value():
    strategy = efgsolve.kuhn_equilibrium(0.5)
    assert efgsolve.exploitability("kuhn", strategy) < 1e-9
    assert math.isclose(efgsolve.expected_value("kuhn", strategy), -1 / 18, abs_tol=1e-9)


def test_mccfr_reduces_exploitability():
    uniform = efgsolve.solve("kuhn", "mccfr", iterations=0)
    trained = efgsolve.solve("kuhn", "mccfr", iterations=200_000, seed=3)
    assert efgsolve.exploitability("kuhn", trained) < efgsolve.exploitability("kuhn", uniform)
    assert efgsolve.solve("kuhn", "mccfr", iterations=1000, seed=3) == efgsolve.solve(
        "kuhn", "mccfr", iterations=1000, seed=3
    )


def test_errors_are_raised():
    with pytest.raises(efgsolve.Error):
        efgsolve.game_info("chess")
    with pytest.raises(efgsolve.Error):
        efgsolve.solve("kuhn", "magic", iterations=1)


def test_run_cli(tmp_path):
    code, out, err = efgsolve.run_cli(
        ["solve", "--game", "kuhn", "--iters", "100", "--out-dir", str(tmp_path)]
    )
    assert code == 0, err
    assert (tmp_path / "mccfr_kuhn_seed0.csv").exists()
    code, _, _ = efgsolve.run_cli(["solve", "--game", "chess"])
    assert code == 2
