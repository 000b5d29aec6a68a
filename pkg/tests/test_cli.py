import json

import pytest
from click.testing import CliRunner

from src.cli import cli
from src.config import Settings
from src.managers.command_manager import CommandManager


@pytest.fixture
def runner():
    return CliRunner()


def test_traj_11(runner):
    result = runner.invoke(cli, ["traj", "11"])
    assert result.exit_code == 0
    assert result.stdout == "11, 17, 26, 13, 20, 10, 5, 8, 4, 2, 1\n"


def test_traj_csv(runner):
    result = runner.invoke(cli, ["--format", "csv", "traj", "11"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "k,term"
    assert lines[1] == "0,11"
    assert len(lines) == 12


def test_traj_cap_exit_code(runner):
    result = runner.invoke(cli, ["traj", "27", "--cap", "5"])
    assert result.exit_code == 2


def test_decompose_27(runner):
    result = runner.invoke(cli, ["decompose", "27"])
    assert result.exit_code == 0
    lines = result.stdout.splitlines()
    assert lines[0] == "C(27): 10 subsequences, complete"
    assert "(111, 167, 251, 377, 566)  [entered at 167]" in lines
    assert "(175, 263, 395, 593, 890, 445, 668, 334)  [stopping]" in lines
    assert sum("stopping" in line for line in lines) == 3
    assert sum("entered at" in line for line in lines) == 3
    assert any("entered at 911" in line for line in lines)


def test_subseq(runner):
    result = runner.invoke(cli, ["subseq", "19"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[:2] == ["C^3_A(19)", "(19, 29, 44, 22)"]


def test_subseq_domain_error(runner):
    result = runner.invoke(cli, ["subseq", "12"])
    assert result.exit_code == 1
    assert "error:" in result.stderr


def test_list_h(runner):
    result = runner.invoke(cli, ["list", "--kind", "h", "--max", "45"])
    assert result.exit_code == 0
    assert result.stdout.splitlines()[0] == "9, 14, 7"
    assert len(result.stdout.splitlines()) == 4


def test_enum_length_text(runner):
    result = runner.invoke(cli, ["enum-length", "--kind", "t", "--len", "4"])
    assert result.exit_code == 0
    assert result.stdout == "t=4\n55, 67, 111, 183, 195, 235, 363, 367\n(mod 384)\n"


def test_enum_length_brute_matches(runner):
    result = runner.invoke(cli, ["enum-length", "--kind", "h", "--len", "6", "--brute"])
    assert result.exit_code == 0
    assert result.stdout.startswith("h=6\n129, 333, 405, 561, 645\n(mod 768)")


def test_enum_length_guard(runner):
    result = runner.invoke(cli, ["enum-length", "--kind", "t", "--len", "30", "--brute"])
    assert result.exit_code == 2


def test_bad_choice_is_domain_error(runner):
    result = runner.invoke(cli, ["enum-length", "--kind", "x", "--len", "3"])
    assert result.exit_code == 1


def test_scientific_notation_rejected(runner):
    result = runner.invoke(cli, ["traj", "1e5"])
    assert result.exit_code == 1


def test_sigma(runner):
    result = runner.invoke(cli, ["sigma", "27"])
    assert result.stdout.strip() == "sigma(27)=59"
    result = runner.invoke(cli, ["sigma", "1"])
    assert result.exit_code == 1


def test_tau_big_integer(runner):
    result = runner.invoke(cli, ["tau", "2602714556700227743"])
    assert result.exit_code == 0
    assert "sigma=1005 tau=140" in result.stdout


def test_enum_sigma_text(runner):
    result = runner.invoke(cli, ["enum-sigma", "--n", "4"])
    assert result.stdout == "n=4, sigma=7, z(n)=3\n7, 15, 59\n(mod 128)\n"


def test_enum_sigma_json_round_trip(runner):
    result = runner.invoke(cli, ["--format", "json", "enum-sigma", "--n", "4"])
    assert json.loads(result.stdout)["classes"] == [7, 15, 59]
    manager = CommandManager(Settings())
    assert manager.parse_json("enum_sigma", result.stdout) == manager.run("enum_sigma", n=4)


def test_enum_tau_json_round_trip(runner):
    result = runner.invoke(cli, ["--format", "json", "enum-tau", "--n", "6"])
    manager = CommandManager(Settings())
    assert manager.parse_json("enum_tau", result.stdout) == manager.run("enum_tau", n=6)


def test_enum_tau_filter(runner):
    result = runner.invoke(cli, ["enum-tau", "--n", "6", "--tau", "3"])
    assert result.exit_code == 0
    assert result.stdout.startswith("n=6, sigma=10, A_3(n)=2\n")


def test_table(runner):
    result = runner.invoke(cli, ["table", "--nmax", "6"])
    assert result.exit_code == 0
    rows = {line.split()[0]: line.split()[1:] for line in result.stdout.splitlines()}
    assert rows["n"] == ["2", "3", "4", "5", "6"]
    assert rows["tau=1"] == ["2", "4", "4", "8", "8"]
    assert rows["z(n)"] == ["1", "2", "3", "7", "12"]


def test_verify_commands(runner):
    result = runner.invoke(cli, ["verify", "c3", "--n", "2", "--to", "8"])
    assert result.exit_code == 0
    assert "MISMATCH" not in result.stdout
    result = runner.invoke(cli, ["verify", "c4", "--n", "2", "--to", "8"])
    assert result.exit_code == 0
    result = runner.invoke(cli, ["verify", "fib", "--kind", "h", "--max", "8"])
    assert result.exit_code == 0
    assert len(result.stdout.splitlines()) == 7


def test_limits(runner):
    result = runner.invoke(cli, ["limits", "t5", "--G", "11"])
    assert result.stdout.startswith("G=11: 2048/1353 ≈ 1.51367")
    result = runner.invoke(cli, ["limits", "t6", "--G", "4", "--G-to", "6"])
    assert result.exit_code == 0
    assert len(result.stdout.splitlines()) == 3


def test_limits_t6_missing_z(runner):
    result = runner.invoke(cli, ["limits", "t6", "--G", "20"])
    assert result.exit_code == 1


def test_limits_t6_computed_z(runner):
    bundled = runner.invoke(cli, ["limits", "t6", "--G", "4", "--G-to", "9"])
    computed = runner.invoke(cli, ["limits", "t6", "--G", "4", "--G-to", "9", "--computed-z"])
    assert computed.exit_code == 0
    assert computed.stdout == bundled.stdout


def test_profile_plain_and_ansi(runner):
    plain = runner.invoke(cli, ["profile", "27"])
    rows = plain.stdout.splitlines()
    assert len(rows) == 10
    assert [i for i, row in enumerate(rows, start=1) if row.startswith("* ")] == [5, 9, 10]
    ansi = runner.invoke(cli, ["profile", "27", "--ansi"])
    assert "\x1b[31m" in ansi.stdout


def test_eval_and_commands(runner):
    result = runner.invoke(cli, ["eval", "h_classes"])
    assert result.exit_code == 0
    assert "0 mismatched" in result.stdout
    assert runner.invoke(cli, ["eval", "no_such_fixture"]).exit_code == 1
    listing = runner.invoke(cli, ["commands"]).stdout
    assert listing.startswith("traj: ")


def test_output_is_deterministic(runner):
    first = runner.invoke(cli, ["--threads", "2", "enum-length", "--kind", "t", "--len", "6", "--brute"])
    second = runner.invoke(cli, ["enum-length", "--kind", "t", "--len", "6", "--brute"])
    assert first.stdout == second.stdout
