"""
Files exchanged with the command line: the JSON run configuration, the
trajectory CSV, and JSON summaries and reports.

Trajectory CSV: header row, columns in TRAJECTORY_COLUMNS order, comma
separated, every value written with 9 significant digits, "\n" line ends.
Output is a pure function of the trajectory, so equal plans give
byte-identical files.
"""

import csv
import logging
import math
import os
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ValidationError

from traytransport.core.exceptions import ConfigError, TrajectoryFormatError
from traytransport.models.limits import MotionLimits
from traytransport.models.physical import ObjectParams
from traytransport.models.run_config import LimitsBlock, ObjectBlock, RunConfig
from traytransport.models.trajectory import TRAJECTORY_COLUMNS, PhaseMarks, PlanRequest, SweepRow, Trajectory
from traytransport.services.physics_service import make_cylinder

# Setup logging
logger = logging.getLogger(__name__)

# Relative tolerance on the spacing of loaded sample times
_UNIFORM_TOL = 1e-6


def format_value(value: float) -> str:
    return f"{value:.9g}"


def load_run_config(path: str) -> RunConfig:
    """
    Read and validate a JSON run configuration.

    Raises:
        ConfigError: If the file is missing, is not JSON or violates the schema
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            raw = f.read()
    except OSError as e:
        raise ConfigError(f"Cannot read config {path}: {e.strerror}") from e

    try:
        config = RunConfig.model_validate_json(raw)
    except ValidationError as e:
        problems = "; ".join(
            f"{'.'.join(str(part) for part in err['loc']) or '<root>'}: {err['msg']}" for err in e.errors()
        )
        raise ConfigError(f"Invalid config {path}: {problems}") from e

    logger.debug(f"Loaded config from {path}")
    return config


def object_from_block(block: ObjectBlock) -> ObjectParams:
    return make_cylinder(block.mass_kg, block.radius_m, block.height_m)


def limits_from_block(block: LimitsBlock) -> MotionLimits:
    return MotionLimits(**block.model_dump())


def request_from_config(config: RunConfig, sample_dt: Optional[float] = None) -> PlanRequest:
    """
    Planning request described by a run configuration.

    Raises:
        ConfigError: If the configuration has no target
    """
    if config.target is None:
        raise ConfigError("Config has no target block")
    try:
        distance, theta, psi = config.target.resolve()
    except ValueError as e:
        raise ConfigError(str(e)) from e
    dt = sample_dt if sample_dt is not None else config.sample_dt_s
    if not math.isfinite(dt) or dt <= 0:
        raise ConfigError(f"Sampling period must be a positive finite number, got {dt}")
    return PlanRequest(
        target_distance=distance,
        theta=theta,
        psi=psi,
        object=object_from_block(config.object),
        limits=limits_from_block(config.limits),
        sample_dt=dt,
    )


def _ensure_parent(path: str) -> None:
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)


def write_trajectory_csv(trajectory: Trajectory, path: str) -> None:
    _ensure_parent(path)
    columns = [trajectory.column(name) for name in TRAJECTORY_COLUMNS]
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(TRAJECTORY_COLUMNS)
        for row in zip(*columns):
            writer.writerow([format_value(float(value)) for value in row])
    logger.info(f"Wrote {trajectory.n_samples} samples to {path}")


def read_trajectory_csv(path: str, request: PlanRequest) -> Trajectory:
    """
    Load a trajectory CSV for auditing.

    The request supplies what the file does not carry (object, limits,
    target); sample_dt is taken from the file. Phase marks are recovered from
    the columns.

    Raises:
        TrajectoryFormatError: If the header, values or sample spacing are wrong
    """
    try:
        with open(path, "r", encoding="utf-8", newline="") as f:
            rows = list(csv.reader(f))
    except OSError as e:
        raise TrajectoryFormatError(f"Cannot read trajectory {path}: {e.strerror}") from e

    if not rows or tuple(rows[0]) != TRAJECTORY_COLUMNS:
        raise TrajectoryFormatError(f"Trajectory header must be {','.join(TRAJECTORY_COLUMNS)}")
    body = [row for row in rows[1:] if row]
    if len(body) < 2:
        raise TrajectoryFormatError("Trajectory needs at least two samples")

    try:
        data = np.array(body, dtype=float)
    except ValueError as e:
        raise TrajectoryFormatError(f"Non-numeric or ragged trajectory data: {e}") from e
    if data.ndim != 2 or data.shape[1] != len(TRAJECTORY_COLUMNS) or not np.all(np.isfinite(data)):
        raise TrajectoryFormatError("Every trajectory row needs 12 finite values")

    columns = {name: np.ascontiguousarray(data[:, i]) for i, name in enumerate(TRAJECTORY_COLUMNS)}
    steps = np.diff(columns["t"])
    dt = float(np.mean(steps))
    if dt <= 0 or np.max(np.abs(steps - dt)) > _UNIFORM_TOL * max(dt, 1.0):
        raise TrajectoryFormatError("Trajectory samples must be uniform in time")

    for column in columns.values():
        column.setflags(write=False)

    loaded_request = request.model_copy(update={"sample_dt": dt})
    phi_rm_acc = max(float(np.max(columns["pitch"])), 0.0)
    phi_rm_dec = max(-float(np.min(columns["pitch"])), 0.0)
    return Trajectory(
        request=loaded_request,
        kind="loaded",
        marks=recover_marks(columns),
        phi_rm_acc=phi_rm_acc,
        phi_rm_dec=phi_rm_dec,
        **columns,
    )


def recover_marks(columns: dict) -> PhaseMarks:
    """Phase boundaries of a sampled trajectory."""
    t, a, v, pitch = columns["t"], columns["a"], columns["v"], columns["pitch"]
    cruise = np.flatnonzero((a == 0) & (v > 0))
    if cruise.size:
        i_acc, i_dec = int(cruise[0]), int(cruise[-1])
    else:
        i_acc = i_dec = int(np.argmax(v))
    t_a = float(t[int(np.argmax(pitch[: i_acc + 1]))])
    last_braking_tilt = i_dec + int(np.flatnonzero(pitch[i_dec:] == np.min(pitch[i_dec:]))[-1])
    t_total = float(t[-1])
    return PhaseMarks(
        t_a=t_a,
        t_acc=float(t[i_acc]),
        t_cruise_end=float(t[i_dec]),
        t_b=t_total - float(t[last_braking_tilt]),
        t_total=t_total,
    )


def write_model_json(model: BaseModel, path: str) -> None:
    """Pretty-printed JSON document of a pydantic model."""
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8", newline="") as f:
        f.write(model.model_dump_json(indent=2))
        f.write("\n")


def sweep_rows(rows: List[SweepRow]) -> List[List[str]]:
    table = [["x", "y", "t_rot", "t_norot", "improvement", "note"]]
    for row in rows:
        values = [row.x, row.y, row.t_rot, row.t_norot, row.improvement]
        table.append(["" if value is None else format_value(value) for value in values] + [row.note or ""])
    return table


def write_sweep_csv(rows: List[SweepRow], path: str) -> None:
    _ensure_parent(path)
    with open(path, "w", encoding="utf-8", newline="") as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerows(sweep_rows(rows))
    logger.info(f"Wrote {len(rows)} sweep rows to {path}")

