"""CLI surface: subcommands, flags, formats, exit codes."""

import json

import pytest
from click.testing import CliRunner

from latcount.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def _invoke(runner, *args, env=None):
    return runner.invoke(main, list(args), env=env, catch_exceptions=False)


def test_exact_cylinder(runner, tmp_path):
    result = _invoke(runner, "exact", "--family", "cylinder", "-m", "4", "-n", "2",
                     "--cache-dir", str(tmp_path))
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "167"


def test_exact_complete_point(runner):
    result = _invoke(runner, "exact", "--family", "complete", "-m", "1", "-n", "10", "--no-cache")
    assert result.exit_code == 0
    assert result.output.splitlines()[0] == "55"


def test_exact_star_equals_cycle_alias(runner):
    a = _invoke(runner, "exact", "--family", "cycle", "-m", "5", "-n", "3", "--no-cache")
    b = _invoke(runner, "exact", "--family", "cylinder", "-m", "5", "-n", "3", "--no-cache")
    assert a.output.splitlines()[0] == b.output.splitlines()[0] == "11836"


def test_exact_from_edge_list_oracle_matches_profile_dp(runner, tmp_path):
    graph_file = tmp_path / "g.edges"
    graph_file.write_text("2\n0 1\n")
    oracle = _invoke(runner, "exact", "--graph", str(graph_file), "-n", "3",
                     "--engine", "oracle", "--no-cache")
    dp = _invoke(runner, "exact", "--graph", str(graph_file), "-n", "3",
                 "--engine", "profile-dp", "--no-cache")
    assert oracle.output.splitlines()[0] == dp.output.splitlines()[0]


def test_exact_needs_exactly_one_source(runner, tmp_path):
    graph_file = tmp_path / "g.edges"
    graph_file.write_text("2\n0 1\n")
    both = runner.invoke(main, ["exact", "--family", "path", "-m", "3",
                                "--graph", str(graph_file), "-n", "2"])
    assert both.exit_code != 0
    neither = runner.invoke(main, ["exact", "-n", "2"])
    assert neither.exit_code != 0


def test_exact_rejects_inapplicable_engine(runner):
    result = runner.invoke(main, ["exact", "--family", "path", "-m", "3", "-n", "2",
                                  "--engine", "recurrence", "--no-cache"])
    assert result.exit_code != 0


def test_bound_with_n(runner):
    result = _invoke(runner, "bound", "--family", "cycle", "-m", "4", "-n", "1")
    assert result.exit_code == 0
    assert "N_L(C4 x P_1) = 13" in result.output
    assert "lambda = 10.531818" in result.output
    assert "c_limit = 1.801465" in result.output


def test_bound_without_n_prints_spectrum_only(runner):
    result = _invoke(runner, "bound", "--family", "path", "-m", "3")
    assert result.exit_code == 0
    assert "N_L" not in result.output
    assert "lambda = 4.652391" in result.output


def test_table_csv_reference_row(runner):
    result = _invoke(runner, "table", "--family", "cylinder", "-m", "5",
                     "--n-max", "6", "--format", "csv", "--no-cache")
    assert result.exit_code == 0
    lines = result.output.splitlines()
    assert lines[0] == "n,count,c,bound,c_bound"
    row6 = lines[6].split(",")
    assert row6[2] == "1.8681" and row6[4] == "1.8165"


def test_table_json_schema(runner):
    result = _invoke(runner, "table", "--family", "path", "-m", "3",
                     "--n-max", "2", "--format", "json", "--no-cache")
    payload = json.loads(result.output)
    assert payload["base"] == "P3"
    assert payload["rows"][1]["count"] == "40"


def test_table_byte_stable_across_runs(runner, tmp_path):
    args = ("table", "--family", "star", "-m", "4", "--n-max", "4",
            "--format", "csv", "--cache-dir", str(tmp_path))
    first = _invoke(runner, *args)
    second = _invoke(runner, *args)  # warm cache must not change bytes
    assert first.output == second.output


def test_spectral_star(runner):
    result = _invoke(runner, "spectral", "--family", "star", "-m", "4")
    assert result.exit_code == 0
    assert "lambda = 8.98433" in result.output
    assert "converged = True" in result.output


def test_validate_quick_passes(runner):
    result = _invoke(runner, "validate", "--scope", "quick")
    assert result.exit_code == 0
    assert "[pass] count_c4(2) == oracle(C4 x P2)" in result.output
    assert "[FAIL]" not in result.output


def test_cache_dir_env_var(runner, tmp_path, monkeypatch):
    monkeypatch.setenv("LATCOUNT_CACHE_DIR", str(tmp_path))
    result = _invoke(runner, "exact", "--family", "cycle", "-m", "4", "-n", "4")
    assert result.exit_code == 0
    assert list(tmp_path.glob("*.json"))  # terms landed in the override dir
