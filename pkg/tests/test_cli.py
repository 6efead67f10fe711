import json
import subprocess
import sys

import pytest

from conftest import PENTAGON_5_2, PENTAGON_TEXT
from frachyp.cli import run_cli
from frachyp.hypergraph import parse_hypergraph


@pytest.fixture
def files(tmp_path):
    hg = tmp_path / "pentagon.hg"
    hg.write_text(PENTAGON_TEXT)
    col = tmp_path / "fig1.col"
    col.write_text("5 2 5\n" + "".join(" ".join(map(str, sorted(s))) + "\n" for s in PENTAGON_5_2))
    return tmp_path, hg, col


def test_verify_figure_coloring(files, capsys):
    _, hg, col = files
    assert run_cli(["verify", "--hypergraph", str(hg), "--coloring", str(col)]) == 0
    assert capsys.readouterr().out.strip() == "proper"


def test_verify_improper(files, capsys):
    tmp, hg, _ = files
    bad = tmp / "bad.col"
    bad.write_text("3 2 5\n0 1\n0 1\n0 2\n1 2\n0 1\n")
    assert run_cli(["verify", "--hypergraph", str(hg), "--coloring", str(bad)]) == 1
    assert capsys.readouterr().out.startswith("not proper")


def test_verify_panchromatic(files, capsys):
    tmp, hg, _ = files
    pc = tmp / "p.col"
    pc.write_text("2 5\n0\n1\n0\n1\n0\n")
    assert run_cli(["verify", "--hypergraph", str(hg), "--coloring", str(pc), "--panchromatic"]) == 1
    pc.write_text("3 5\n0\n1\n0\n1\n2\n")
    assert run_cli(["verify", "--hypergraph", str(hg), "--coloring", str(pc), "--panchromatic"]) == 1
    capsys.readouterr()


def test_exact_odd_cycle(files, capsys):
    _, hg, _ = files
    assert run_cli(["exact", "--hypergraph", str(hg), "--a", "2", "--b", "1"]) == 1
    assert "not colorable" in capsys.readouterr().out
    assert run_cli(["exact", "--hypergraph", str(hg), "--a", "5", "--b", "2"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "colorable" and out[1] == "5 2 5"


def test_unknown_flag_and_usage_errors(files, capsys):
    _, hg, _ = files
    assert run_cli(["exact", "--hypergraph", str(hg), "--bogus", "1"]) == 2
    assert "--bogus" in capsys.readouterr().err
    assert run_cli(["frobnicate"]) == 2
    assert run_cli(["exact", "--hypergraph", str(hg), "--a", "2"]) == 2
    assert "--b" in capsys.readouterr().err
    assert run_cli(["exact", "--hypergraph", "/nonexistent.hg", "--a", "2", "--b", "1"]) == 2
    assert run_cli([]) == 2


def test_parse_error_is_usage_error(tmp_path, capsys):
    bad = tmp_path / "bad.hg"
    bad.write_text("3 3 1\n0 1\n")
    assert run_cli(["chif", "--hypergraph", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_budget_env_var(files, monkeypatch, capsys):
    _, hg, _ = files
    monkeypatch.setenv("FRACHYP_BUDGET", "100")
    assert run_cli(["exact", "--hypergraph", str(hg), "--a", "5", "--b", "2"]) == 1
    assert "budget" in capsys.readouterr().err


def test_chif(files, capsys):
    _, hg, _ = files
    assert run_cli(["chif", "--hypergraph", str(hg), "--a", "5"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["chi_f"] == out["dual"] == out["ab_search"] == "5/2"
    assert out["certificates_ok"]


def test_gen_round_trip(tmp_path, capsys):
    out = tmp_path / "g.hg"
    assert run_cli(["gen", "--v", "12", "--n", "3", "--m", "7", "--seed", "4", "--out", str(out)]) == 0
    H = parse_hypergraph(out.read_text())
    assert (H.vertex_count, H.uniformity, H.edge_count) == (12, 3, 7)
    assert run_cli(["gen", "--kind", "complete", "--v", "4", "--n", "3"]) == 0
    assert capsys.readouterr().out.splitlines()[0] == "4 3 4"


def test_gen_cycle_is_canonical(capsys):
    assert run_cli(["gen", "--kind", "cycle", "--v", "5"]) == 0
    assert capsys.readouterr().out == "5 2 5\n0 1\n0 4\n1 2\n2 3\n3 4\n"


def test_solve_both_methods(tmp_path, capsys):
    hg = tmp_path / "h.hg"
    run_cli(["gen", "--v", "30", "--n", "3", "--m", "79", "--seed", "2", "--out", str(hg)])
    col = tmp_path / "out.col"
    assert run_cli(["solve", "--hypergraph", str(hg), "--a", "9", "--b", "1", "--method", "alon",
                    "--coloring-out", str(col)]) == 0
    captured = capsys.readouterr()
    assert json.loads(captured.out)["status"] == "proper"
    assert "warning:" in captured.err
    assert run_cli(["verify", "--hypergraph", str(hg), "--coloring", str(col)]) == 0
    capsys.readouterr()
    hg2 = tmp_path / "h2.hg"
    run_cli(["gen", "--v", "60", "--n", "8", "--m", "40", "--seed", "2", "--out", str(hg2)])
    code = run_cli(["solve", "--hypergraph", str(hg2), "--a", "5", "--b", "2", "--seed", "3"])
    res = json.loads(capsys.readouterr().out)
    assert code == (0 if res["status"] == "proper" else 1)
    assert res["method"] == "theorem1"


def test_construct(tmp_path, capsys):
    hg = tmp_path / "c.hg"
    assert run_cli(["construct", "--n", "2", "--a", "3", "--b", "2", "--v", "6", "--shrink",
                    "--hypergraph-out", str(hg)]) == 0
    cert = json.loads(capsys.readouterr().out)
    assert cert["certified"] and cert["p"] == "3/5" and cert["m"] == 29
    assert run_cli(["exact", "--hypergraph", str(hg), "--a", "3", "--b", "2"]) == 1
    assert run_cli(["construct", "--n", "2", "--a", "2", "--b", "1", "--v", "4", "--m", "0"]) == 1


def test_bounds(capsys, tmp_path):
    assert run_cli(["bounds", "--which", "eq1", "--n", "10", "--r", "2"]) == 0
    reports = json.loads(capsys.readouterr().out)
    assert [r["name"] for r in reports] == ["eq1_lower", "eq1_upper"]
    assert abs(reports[0]["value"] - 1066.9) < 0.1
    out = tmp_path / "b.csv"
    assert run_cli(["bounds", "--which", "thm1", "--n", "10", "--a", "4", "--b", "2", "--format", "csv",
                    "--out", str(out)]) == 0
    assert out.read_text().startswith("name,params,log_value")
    assert run_cli(["bounds", "--which", "eq5", "--n", "10", "--a", "3", "--b", "2"]) == 2
    assert run_cli(["bounds", "--which", "bogus", "--n", "10"]) == 2


def test_experiment(tmp_path, capsys):
    out = tmp_path / "exp"
    assert run_cli(["experiment", "--grid", "6,5,2,1.0", "8,5,2,0.5", "--v", "30", "--trials", "5",
                    "--out", str(out), "--format", "csv"]) == 0
    assert (out / "grid.csv").read_text().count("\n") == 3
    assert run_cli(["experiment", "--n", "6", "--a", "5", "--b", "2", "--multiplier", "1", "2", "--v", "30",
                    "--trials", "3"]) == 0
    summary = json.loads(capsys.readouterr().out)
    assert [c["multiplier"] for c in summary["cells"]] == [1.0, 2.0]
    assert run_cli(["experiment", "--grid", "6,5,2", "--v", "30"]) == 2


def test_console_entry_point(files):
    _, hg, col = files
    proc = subprocess.run([sys.executable, "-m", "frachyp.cli", "verify", "--hypergraph", str(hg),
                           "--coloring", str(col)], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "proper"
