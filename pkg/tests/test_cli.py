import json
import os

import pytest

from dibrush.cli import main
from dibrush.graphs import parse, serialize, transitive_tournament


def write_graph(tmp_path, g, name="g.txt"):
    path = tmp_path / name
    path.write_text(serialize(g))
    return str(path)


def test_gen_tt(capsys):
    assert main(["gen", "--family", "tt", "--n", "5"]) == 0
    out = capsys.readouterr().out
    g = parse(out)
    assert g.n == 5 and g.arc_count == 10


def test_gen_rotational_ok_and_invalid(tmp_path, capsys):
    assert main(["gen", "--family", "rotational", "--n", "7", "--symbols", "1,2,3"]) == 0
    assert parse(capsys.readouterr().out).arc_count == 21
    assert main(["gen", "--family", "rotational", "--n", "6", "--symbols", "1,2"]) == 1
    assert "InvalidFamilySpec" in capsys.readouterr().err


def test_gen_seed_env(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("DIBRUSH_SEED", "7")
    assert main(["gen", "--family", "dag", "--n", "6"]) == 0
    with_env = capsys.readouterr().out
    monkeypatch.delenv("DIBRUSH_SEED")
    assert main(["gen", "--family", "dag", "--n", "6", "--seed", "7"]) == 0
    assert capsys.readouterr().out == with_env


def test_usage_error_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--family", "nonsense", "--n", "3"])
    assert exc.value.code == 2


def test_solve_value_and_too_large(tmp_path, capsys):
    path = write_graph(tmp_path, transitive_tournament(4))
    assert main(["solve", path]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["value"] == 4
    assert data["witness"]["initial"]
    big = write_graph(tmp_path, transitive_tournament(10), "big.txt")
    assert main(["solve", big]) == 1
    assert "--bounds-only" in capsys.readouterr().err
    assert main(["solve", big, "--bounds-only"]) == 0
    assert json.loads(capsys.readouterr().out)["lower"] == 25


def test_strategy_auto_and_not_applicable(tmp_path, capsys):
    path = write_graph(tmp_path, transitive_tournament(6))
    assert main(["strategy", path, "--method", "tt"]) == 0
    plan = json.loads(capsys.readouterr().out)
    assert sum(plan["initial"]) == 9
    from dibrush.graphs import Digraph

    cyc = write_graph(tmp_path, Digraph(3, ((0, 1), (1, 2), (2, 0))), "cyc.txt")
    assert main(["strategy", cyc, "--method", "dag-recursive"]) == 1
    assert "MethodNotApplicable" in capsys.readouterr().err


def test_strategy_roundtrip_through_simulate(tmp_path, capsys):
    path = write_graph(tmp_path, transitive_tournament(5))
    assert main(["strategy", path, "--method", "auto"]) == 0
    plan_path = tmp_path / "plan.json"
    plan_path.write_text(capsys.readouterr().out)
    trace_path = tmp_path / "trace.json"
    assert (
        main(
            [
                "simulate",
                path,
                "--plan",
                str(plan_path),
                "--trace",
                str(trace_path),
            ]
        )
        == 0
    )
    trace = json.loads(trace_path.read_text())
    assert trace["total"] == 6
    assert len(trace["steps"]) == 6


def test_simulate_insufficient_brushes(tmp_path, capsys):
    path = write_graph(tmp_path, transitive_tournament(3))
    plan_path = tmp_path / "bad.json"
    plan_path.write_text(json.dumps({"initial": [0, 0, 0], "order": [0, 1, 2]}))
    assert main(["simulate", path, "--plan", str(plan_path)]) == 1
    assert "InsufficientBrushes" in capsys.readouterr().err


def test_simulate_dot_and_fig_dirs(tmp_path, capsys):
    path = write_graph(tmp_path, transitive_tournament(3))
    plan_path = tmp_path / "plan.json"
    plan_path.write_text(json.dumps({"initial": [2, 0, 0], "order": [0, 1, 2]}))
    dots = tmp_path / "dots"
    figs = tmp_path / "figs"
    assert (
        main(
            [
                "simulate",
                path,
                "--plan",
                str(plan_path),
                "--dot-dir",
                str(dots),
                "--fig-dir",
                str(figs),
            ]
        )
        == 0
    )
    assert sorted(os.listdir(dots)) == [f"step_{t:03d}.dot" for t in range(4)]
    assert sorted(os.listdir(figs)) == [f"step_{t:03d}.png" for t in range(4)]


def test_bounds_command(tmp_path, capsys):
    path = write_graph(tmp_path, transitive_tournament(4))
    assert main(["bounds", path]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["lower"], data["upper"]) == (4, 6)
    assert data["cut_bound"] == 4


def test_verify_suite_exit_codes(tmp_path, capsys):
    assert main(["verify", "--suite", "oracle", "--max-n", "4"]) == 0
    out = capsys.readouterr().out
    assert "checks passed" in out
    assert main(["verify", "--suite", "theorems", "--max-n", "20"]) == 1


def test_verify_report_dir(tmp_path, capsys):
    report = tmp_path / "report"
    assert (
        main(
            [
                "verify",
                "--suite",
                "transpose",
                "--max-n",
                "5",
                "--report-dir",
                str(report),
            ]
        )
        == 0
    )
    assert (report / "rows.csv").exists()
    assert (report / "summary.png").exists()


def test_conjecture_command(capsys):
    assert main(["conjecture", "--n", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["holds"] and data["bound"] == 1
