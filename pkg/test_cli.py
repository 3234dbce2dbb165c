"""Tests for the command line."""
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import numpy as np
import pandas as pd
import pytest

from app.cli import EXIT_OK, EXIT_RUNTIME, EXIT_USAGE, main
from app.utils.graph_io import read_graph_file


@pytest.fixture
def triangle_file(tmp_path):
    path = tmp_path / "k3.txt"
    path.write_text("3 3\n1 2\n2 3\n1 3\n")
    return path


def test_generate_er(tmp_path, capsys):
    out = tmp_path / "er.txt"
    assert main(["generate", "er", "--n", "100", "--p", "0.06", "--seed", "7", "--output", str(out)]) == EXIT_OK
    g = read_graph_file(out)
    assert g.n == 100
    assert abs(g.num_edges - 297) <= 4 * 16.7
    assert f"file={out}" in capsys.readouterr().out


def test_generate_hypercube_and_cubic(tmp_path):
    assert main(["generate", "hypercube", "--d", "3", "--output", str(tmp_path / "q3.txt")]) == EXIT_OK
    assert read_graph_file(tmp_path / "q3.txt").num_edges == 12
    assert main(["generate", "cubic", "--n", "8", "--seed", "1", "--output", str(tmp_path / "c8.txt")]) == EXIT_OK
    assert np.all(read_graph_file(tmp_path / "c8.txt").degrees() == 3)


def test_generate_default_location(tmp_path, monkeypatch):
    from app import config

    monkeypatch.setattr(config, "OUTPUT_DIR", tmp_path / "out")
    assert main(["generate", "hypercube", "--d", "2"]) == EXIT_OK
    assert (tmp_path / "out" / "hypercube-d2.txt").exists()


def test_generate_bad_parameters():
    assert main(["generate", "cubic", "--n", "7"]) == EXIT_USAGE


def test_solve_hypercube(tmp_path, capsys):
    out = tmp_path / "result.json"
    code = main([
        "solve", "--generator", "hypercube", "--d", "3",
        "--coupling", "g2-fourier:10", "--restarts", "10", "--output", str(out),
    ])
    assert code == EXIT_OK
    result = json.loads(out.read_text())
    assert result["best"]["cut"] == 12
    assert result["config"]["coupling"] == "g2-fourier:10"
    assert result["config"]["mu"] == 0.0
    assert "best cut=12" in capsys.readouterr().out


def test_solve_triangle_prints_json(triangle_file, capsys):
    assert main(["solve", "--graph", str(triangle_file), "--coupling", "cos", "--mu", "0", "--restarts", "10"]) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert result["best"]["cut"] == 2


def test_solve_output_is_reproducible(triangle_file, tmp_path):
    texts = []
    for name in ("a.json", "b.json"):
        out = tmp_path / name
        assert main(["solve", "--graph", str(triangle_file), "--restarts", "3", "--seed", "4", "--output", str(out)]) == EXIT_OK
        result = json.loads(out.read_text())
        result["config"].pop("output")
        result.pop("created_at")
        result.pop("config_hash")
        texts.append(json.dumps(result, sort_keys=True))
    assert texts[0] == texts[1]


def test_solve_trajectory_csv(triangle_file, tmp_path):
    csv = tmp_path / "traj.csv"
    args = ["solve", "--graph", str(triangle_file), "--restarts", "2", "--record-every", "3"]
    assert main(args + ["--trajectory-csv", str(csv), "--output", str(tmp_path / "r.json")]) == EXIT_OK
    frame = pd.read_csv(csv)
    assert frame.columns[0] == "t"
    assert (tmp_path / "traj.json").exists()


@pytest.mark.parametrize(
    "args",
    [
        ["solve", "--graph", "does-not-exist.txt"],
        ["solve", "--generator", "hypercube", "--d", "2", "--coupling", "sin"],
        ["solve", "--generator", "hypercube", "--d", "2", "--mu", "-1"],
        ["solve"],
    ],
)
def test_solve_usage_errors(args):
    assert main(args) == EXIT_USAGE


def test_solve_all_restarts_fail(triangle_file):
    # a huge gain under tight tolerances needs steps below the floor
    args = ["solve", "--graph", str(triangle_file), "--restarts", "2", "--k", "1e14", "--rtol", "1e-12", "--atol", "1e-14"]
    assert main(args) == EXIT_RUNTIME


def test_oracle(triangle_file, capsys):
    assert main(["oracle", "--graph", str(triangle_file)]) == EXIT_OK
    result = json.loads(capsys.readouterr().out)
    assert result["value"] == 2
    assert result["unique"] is False

    assert main(["oracle", "--generator", "hypercube", "--d", "3"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["value"] == 12


def test_oracle_refuses_large_graph():
    assert main(["oracle", "--generator", "er", "--n", "40", "--p", "0.1", "--graph-seed", "1"]) == EXIT_USAGE


def test_ratio(capsys):
    assert main(["ratio", "--coupling", "cos"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["approximation_ratio"] == pytest.approx(0.8786, abs=1e-3)

    assert main(["ratio", "--coupling", "g2"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["approximation_ratio"] == pytest.approx(1.0, abs=1e-9)

    assert main(["ratio", "--coupling", "cos", "--lo", "3.14159", "--hi", "3.14159"]) == EXIT_OK
    assert json.loads(capsys.readouterr().out)["interval_ratio"] == pytest.approx(1.0, abs=1e-5)


def test_ratio_unknown_coupling():
    assert main(["ratio", "--coupling", "tanh"]) == EXIT_USAGE


def test_bench(tmp_path, capsys):
    out = tmp_path / "bench.csv"
    code = main([
        "bench", "--er-count", "2", "--n", "10", "--p", "0.3",
        "--couplings", "cos", "--mus", "0", "1", "--restarts", "2", "--output", str(out),
    ])
    assert code == EXIT_OK
    frame = pd.read_csv(out)
    assert len(frame) == 4
    assert set(frame["mu"]) == {0.0, 1.0}
    assert frame["config_hash"].nunique() == 4
    assert capsys.readouterr().out.startswith("instance,coupling,mu")


def test_bench_needs_instances():
    assert main(["bench"]) == EXIT_USAGE
