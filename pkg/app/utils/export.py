"""JSON and CSV artifact writers."""
import json
import logging
from pathlib import Path
from typing import Any, Iterable, Optional

import pandas as pd
from pydantic import BaseModel

from app.models import BenchRow, Trajectory

logger = logging.getLogger(__name__)


def _prepare(path: Path) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    return path


def write_json(model: BaseModel, path: Path) -> Path:
    path = _prepare(path)
    path.write_text(model.model_dump_json(indent=2) + "\n", encoding="utf-8")
    logger.info(f"Wrote {path}")
    return path


def trajectory_frame(trajectory: Trajectory) -> pd.DataFrame:
    """One row per recorded time: t, theta_0..theta_{n-1}, energy_exact, energy_smooth."""
    n = trajectory.states[0].shape[0]
    df = pd.DataFrame(
        [state.tolist() for state in trajectory.states],
        columns=[f"theta_{i}" for i in range(n)],
    )
    df.insert(0, "t", trajectory.times)
    rows = len(trajectory.times)
    df["energy_exact"] = trajectory.energies or [float("nan")] * rows
    df["energy_smooth"] = trajectory.energies_smooth or df["energy_exact"]
    return df


def write_trajectory_csv(trajectory: Trajectory, path: Path, metadata: Optional[dict[str, Any]] = None) -> Path:
    """Write the trajectory CSV and, with metadata, a JSON sidecar next to it."""
    path = _prepare(path)
    trajectory_frame(trajectory).to_csv(path, index=False)
    if metadata is not None:
        sidecar = path.with_suffix(".json")
        sidecar.write_text(json.dumps(metadata, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    logger.info(f"Wrote trajectory with {len(trajectory.times)} rows to {path}")
    return path


def bench_frame(rows: Iterable[BenchRow]) -> pd.DataFrame:
    return pd.DataFrame([row.model_dump() for row in rows], columns=list(BenchRow.model_fields))


def write_bench_csv(rows: Iterable[BenchRow], path: Optional[Path] = None) -> str:
    """Render the bench table as CSV text, writing it to path when given."""
    text = bench_frame(rows).to_csv(index=False)
    if path is not None:
        path = _prepare(path)
        path.write_text(text, encoding="utf-8")
        logger.info(f"Wrote bench table to {path}")
    return text
