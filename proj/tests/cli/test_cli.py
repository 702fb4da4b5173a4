"""Black-box tests of the qentropy CLI.

The binary path arrives in the QENTROPY_CLI environment variable (set by
ctest). Every invocation strips QENTROPY_PRECISION from the environment unless
a test injects it on purpose, so results do not depend on the outer shell.
"""

import math
import os
import re
import subprocess

import pytest

CLI = os.environ["QENTROPY_CLI"]


def run_cli(*args, env_extra=None):
    env = {k: v for k, v in os.environ.items() if k != "QENTROPY_PRECISION"}
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [CLI, *args], capture_output=True, text=True, env=env, timeout=300
    )


def parse_csv(text):
    lines = text.strip("\n").split("\n")
    return [line.split(",") for line in lines]


def rows_by_first_column(text):
    rows = parse_csv(text)
    return rows[0], {row[0]: row[1:] for row in rows[1:]}


# ---------------------------------------------------------------------------
# constants


def test_constants_header_and_values():
    result = run_cli("constants")
    assert result.returncode == 0
    header, rows = rows_by_first_column(result.stdout)
    assert header == ["name", "value", "unit"]
    assert rows["boltzmann_constant"] == ["1.380649e-23", "J/K"]
    assert rows["elementary_charge"] == ["1.60217663e-19", "C"]
    value, unit = rows["electric_conductance_quantum"]
    assert unit == "S"
    assert math.isclose(float(value), 7.7480917298636506e-05, rel_tol=1e-8)
    value, unit = rows["entropy_conductance_quantum"]
    assert unit == "J/(K^2 s)"
    assert math.isclose(float(value), 9.4643115163866399e-13, rel_tol=1e-8)


def test_constants_deterministic():
    first = run_cli("constants")
    second = run_cli("constants")
    assert first.stdout == second.stdout
    assert first.stdout.endswith("\n")


def test_out_flag_writes_file(tmp_path):
    target = tmp_path / "constants.csv"
    result = run_cli("constants", "--out", str(target))
    assert result.returncode == 0
    assert result.stdout == ""
    assert target.read_text() == run_cli("constants").stdout


def test_out_flag_unwritable_path(tmp_path):
    target = tmp_path / "missing" / "nested" / "constants.csv"
    result = run_cli("constants", "--out", str(target))
    assert result.returncode == 1
    assert "error" in result.stderr


def test_precision_env_and_flag():
    default = run_cli("constants")
    wide_env = run_cli("constants", env_extra={"QENTROPY_PRECISION": "15"})
    assert default.stdout != wide_env.stdout
    _, rows = rows_by_first_column(wide_env.stdout)
    assert rows["electric_conductance_quantum"][0] == "7.74809172986365e-05"
    # The flag wins over the environment variable.
    narrow_flag = run_cli(
        "constants", "--precision", "3", env_extra={"QENTROPY_PRECISION": "15"}
    )
    _, rows = rows_by_first_column(narrow_flag.stdout)
    assert rows["electric_conductance_quantum"][0] == "7.75e-05"


def test_precision_flag_range_checked():
    assert run_cli("constants", "--precision", "0").returncode == 2
    assert run_cli("constants", "--precision", "18").returncode == 2


# ---------------------------------------------------------------------------
# staircase


def test_staircase_quantized_and_monotone():
    result = run_cli(
        "staircase",
        "--wmin", "10e-9", "--wmax", "201e-9", "--steps", "50",
        "--lambda-f", "40e-9", "--precision", "17",
    )
    assert result.returncode == 0
    rows = parse_csv(result.stdout)
    assert rows[0] == ["w_m", "G_S"]
    assert len(rows) == 51
    g0 = 2.0 * 1.602176634e-19**2 / 6.62607015e-34
    values = [float(row[1]) for row in rows[1:]]
    steps = [v / g0 for v in values]
    assert all(abs(s - round(s)) < 1e-9 for s in steps)
    assert all(b - a > -1e-30 for a, b in zip(steps, steps[1:]))
    assert round(steps[0]) == 0 and round(steps[-1]) == 10


def test_staircase_spinless_flag():
    args = ["--wmin", "99e-9", "--wmax", "101e-9", "--steps", "2",
            "--lambda-f", "40e-9", "--precision", "17"]
    spinful = run_cli("staircase", *args)
    spinless = run_cli("staircase", *args, "--spinless")
    g_full = float(parse_csv(spinful.stdout)[1][1])
    g_half = float(parse_csv(spinless.stdout)[1][1])
    assert g_half > 0.0
    assert g_full == 2.0 * g_half


def test_staircase_rejects_bad_range():
    result = run_cli("staircase", "--wmin", "2e-7", "--wmax", "1e-7",
                     "--steps", "10", "--lambda-f", "40e-9")
    assert result.returncode == 2
    assert "error" in result.stderr


# ---------------------------------------------------------------------------
# solve-heat


def test_solve_heat_temperature_decay():
    result = run_cli(
        "solve-heat",
        "--length", "1", "--d", "1e-4", "--t0", "300",
        "--mode", "1:5", "--t-end", "100", "--nt", "3", "--nx", "5",
        "--precision", "17",
    )
    assert result.returncode == 0
    rows = parse_csv(result.stdout)
    assert rows[0] == ["t_s", "x_m", "T_K"]
    assert len(rows) == 1 + 3 * 5
    # x = 0 column: T = 300 + 5 exp(-D k^2 t).
    k = 2.0 * math.pi
    at_x0 = {float(r[0]): float(r[2]) for r in rows[1:] if float(r[1]) == 0.0}
    for t, temp in at_x0.items():
        assert math.isclose(temp, 300.0 + 5.0 * math.exp(-1e-4 * k * k * t),
                            rel_tol=1e-12)
    assert at_x0[0.0] > at_x0[50.0] > at_x0[100.0]


def test_solve_heat_potential_output():
    result = run_cli(
        "solve-heat",
        "--length", "1", "--d", "1e-4", "--mode", "1:5", "--mode", "2:1",
        "--t-end", "10", "--nt", "2", "--potential", "--precision", "17",
    )
    assert result.returncode == 0
    rows = parse_csv(result.stdout)
    assert rows[0] == ["t_s", "k_per_m", "a", "b"]
    assert len(rows) == 1 + 2 * 2
    assert all(float(r[3]) == 0.0 for r in rows[1:])
    # a(0) = amp / (2 D k^2) for the n = 1 mode.
    k1 = 2.0 * math.pi
    a0 = float(rows[1][2])
    assert math.isclose(a0, 5.0 / (2.0 * 1e-4 * k1 * k1), rel_tol=1e-12)


def test_solve_heat_gauge_branch_grows():
    result = run_cli(
        "solve-heat",
        "--length", "1", "--d", "1e-4", "--mode", "1:5",
        "--t-end", "10", "--nt", "2", "--potential", "--gauge", "1e-3",
        "--precision", "17",
    )
    rows = parse_csv(result.stdout)
    b_start, b_end = float(rows[1][3]), float(rows[2][3])
    assert b_start == 1e-3
    assert b_end > b_start


def test_solve_heat_gauge_overflow_is_range_error():
    result = run_cli(
        "solve-heat",
        "--length", "1", "--d", "1", "--mode", "1:1",
        "--t-end", "100", "--nt", "2", "--potential", "--gauge", "1",
    )
    assert result.returncode == 1
    assert "error" in result.stderr


def test_solve_heat_rejects_bad_mode_syntax():
    result = run_cli("solve-heat", "--length", "1", "--d", "1e-4",
                     "--mode", "first:5", "--t-end", "1")
    assert result.returncode == 2
    assert "error" in result.stderr


# ---------------------------------------------------------------------------
# action-check


def test_action_check_minimum_at_zero():
    result = run_cli(
        "action-check",
        "--length", "1", "--d", "1", "--mode", "1:0.7", "--mode", "2:-0.3",
        "--samples", "401", "--precision", "17",
    )
    assert result.returncode == 0
    rows = parse_csv(result.stdout)
    assert rows[0] == ["epsilon", "action"]
    assert len(rows) == 12
    scan = [(float(r[0]), float(r[1])) for r in rows[1:]]
    eps_values = [eps for eps, _ in scan]
    assert eps_values[0] == -1.0 and eps_values[-1] == 1.0
    best_eps = min(scan, key=lambda pair: pair[1])[0]
    assert best_eps == 0.0
    # Parabola symmetry around the minimum.
    actions = dict(scan)
    assert math.isclose(actions[-1.0], actions[1.0], rel_tol=1e-9)


# ---------------------------------------------------------------------------
# pendry / packet


def test_pendry_bound_is_twice_the_quantum():
    result = run_cli("pendry", "--temp", "1", "--precision", "17")
    assert result.returncode == 0
    _, rows = rows_by_first_column(result.stdout)
    entropy_rate = float(rows["pendry_max_entropy_rate"][0])
    quantum = float(rows["thermal_conductance_quantum"][0])
    assert entropy_rate == 2.0 * quantum
    assert math.isclose(float(rows["pendry_max_heat_rate"][0]),
                        1.892862303277328e-12, rel_tol=1e-10)
    assert rows["pendry_max_heat_rate"][1] == "W"


def test_packet_rows_and_balance():
    result = run_cli("packet", "--nu", "1e9", "--temp", "1", "--precision", "17")
    assert result.returncode == 0
    _, rows = rows_by_first_column(result.stdout)
    assert math.isclose(float(rows["packet_energy"][0]), 6.62607015e-25, rel_tol=1e-12)
    assert math.isclose(float(rows["entropy_production"][0]),
                        2.1798897038122276e-15, rel_tol=1e-10)
    balance = float(rows["balance_dS_dt"][0])
    expected = -float(rows["entropy_current"][0]) + float(rows["entropy_production"][0])
    assert balance == expected


# ---------------------------------------------------------------------------
# transfer / spin


def test_transfer_equal_temperatures_zero_net():
    result = run_cli("transfer", "--t1", "1", "--t2", "1", "--nu", "1e9")
    assert result.returncode == 0
    header, rows = rows_by_first_column(result.stdout)
    assert header == ["quantity", "value_W_per_K"]
    assert set(rows) == {
        "emitter_rate", "absorber_rate", "emitter_current", "absorber_current",
        "emitter_production", "absorber_production", "net_rate",
    }
    assert float(rows["net_rate"][0]) == 0.0


def test_transfer_hot_to_cold_oracle():
    result = run_cli("transfer", "--t1", "2", "--t2", "1", "--nu", "1e9",
                     "--precision", "17")
    _, rows = rows_by_first_column(result.stdout)
    assert math.isclose(float(rows["net_rate"][0]), 1.0899448519061138e-15,
                        rel_tol=1e-10)
    assert float(rows["emitter_current"][0]) == -float(rows["absorber_current"][0])
    assert float(rows["emitter_production"][0]) < 0.0
    assert float(rows["absorber_production"][0]) > 0.0


def test_transfer_rejects_nonpositive_temperature():
    result = run_cli("transfer", "--t1=-1", "--t2", "1", "--nu", "1e9")
    assert result.returncode == 2
    assert "error" in result.stderr


def test_spin_report():
    result = run_cli("spin", "--gamma", "2.675e8", "--b0", "1",
                     "--temp", "300", "--precision", "17")
    assert result.returncode == 0
    _, rows = rows_by_first_column(result.stdout)
    assert math.isclose(float(rows["larmor_frequency"][0]), 42573947.277082002,
                        rel_tol=1e-12)
    assert rows["larmor_frequency"][1] == "Hz"
    assert rows["Sigma"][0] == rows["Sigma_spin_form"][0]
    i_s = float(rows["I_S"][0])
    i_s_spin = float(rows["I_S_spin_form"][0])
    assert math.isclose(i_s, i_s_spin, rel_tol=1e-12)
    assert math.isclose(float(rows["zeeman_splitting"][0]), 2.8209796122034683e-26,
                        rel_tol=1e-12)


# ---------------------------------------------------------------------------
# verify


def test_verify_reports_every_criterion():
    result = run_cli("verify")
    lines = result.stdout.strip("\n").split("\n")
    assert len(lines) == 12
    pattern = re.compile(r"^(PASS|FAIL)\s+\d+\s+\S.*: ")
    assert all(pattern.match(line) for line in lines)
    any_fail = any(line.startswith("FAIL") for line in lines)
    assert result.returncode == (1 if any_fail else 0)


# ---------------------------------------------------------------------------
# argument handling


def test_unknown_subcommand():
    result = run_cli("does-not-exist")
    assert result.returncode == 2


def test_missing_required_flag():
    result = run_cli("pendry")
    assert result.returncode == 2


def test_help_lists_subcommands():
    result = run_cli("--help")
    assert result.returncode == 0
    for name in ("constants", "staircase", "solve-heat", "action-check",
                 "pendry", "packet", "transfer", "spin", "verify"):
        assert name in result.stdout


@pytest.mark.parametrize("sub,flags", [
    ("staircase", ["--wmin", "--wmax", "--lambda-f", "(m)"]),
    ("solve-heat", ["--length", "--d", "--mode", "--t-end", "(s)"]),
    ("transfer", ["--t1", "--t2", "--nu", "(K)", "(Hz)"]),
    ("spin", ["--gamma", "--b0", "--temp", "(T)"]),
])
def test_subcommand_help_mentions_flags(sub, flags):
    result = run_cli(sub, "--help")
    assert result.returncode == 0
    for flag in flags:
        assert flag in result.stdout
    assert "--out" in result.stdout
    assert "--precision" in result.stdout
