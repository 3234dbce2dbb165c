"""Basic tests to verify the application setup."""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from app import config


def test_imports():
    """Domain models and controllers import cleanly."""
    from app.models import (
        Graph,
        IsingModel,
        CouplingFunction,
        Trajectory,
        Certificate,
        RunConfig,
        SolveResult,
    )
    from app.controllers import (
        coupling_controller,
        dynamics_controller,
        graph_controller,
        ising_controller,
        rounding_controller,
        solve_controller,
        bench_controller,
    )
    assert Graph(n=1).num_edges == 0


def test_output_dir(tmp_path, monkeypatch):
    """Output directory is created on demand."""
    target = tmp_path / "out" / "maxcut"
    monkeypatch.setattr(config, "OUTPUT_DIR", target)
    assert config.init_output_dir() == target
    assert target.is_dir()


def test_defaults():
    assert config.RTOL == 1e-3
    assert config.ATOL == 1e-6
    assert config.GRAD_TOL == 1e-6
    assert config.T_MAX == 1e4
    assert config.RATIO_GRID_POINTS >= 10_000
