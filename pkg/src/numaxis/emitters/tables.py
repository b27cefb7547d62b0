"""CSV emission of embedding curves and geodesic trajectories (pandas).

Curve files have the header `x,y,region,branch`, one row per sample, branch
written as `+` or `-`. Decimals carry 12 significant digits.
"""

from __future__ import annotations

import logging
import os
from pathlib import Path

import pandas as pd

from numaxis.embedding import EmbeddingCurve, RegionId
from numaxis.emitters.paths import validate_output_path
from numaxis.errors import ArgumentError, OutputError
from numaxis.geodesic import Trajectory

logger = logging.getLogger(__name__)

SIGNIFICANT_DIGITS = 12
FLOAT_FORMAT = f"%.{SIGNIFICANT_DIGITS}g"
CURVE_COLUMNS = ("x", "y", "region", "branch")
TRAJECTORY_COLUMNS = ("tau", "t", "x", "ux", "eps")

_BRANCH_SYMBOL = {1: "+", -1: "-"}
_SYMBOL_BRANCH = {"+": 1, "-": -1}


def curves_frame(curves: list[EmbeddingCurve]) -> pd.DataFrame:
    """Stack curves into one long table, one row per sample."""
    frames = [
        pd.DataFrame({"x": curve.xs, "y": curve.ys, "region": curve.region.value, "branch": _BRANCH_SYMBOL[curve.branch]})
        for curve in curves
    ]
    if not frames:
        return pd.DataFrame(columns=list(CURVE_COLUMNS))
    return pd.concat(frames, ignore_index=True)[list(CURVE_COLUMNS)]


def _write(frame: pd.DataFrame, path: Path) -> None:
    try:
        frame.to_csv(path, index=False, float_format=FLOAT_FORMAT)
    except OSError as exc:
        msg = f"cannot write {path}: {exc}"
        raise OutputError(msg) from exc


def write_curves_csv(curves: list[EmbeddingCurve], path: str | os.PathLike[str]) -> Path:
    """Write curves as a CurveFile.

    Raises:
        ArgumentError: If `curves` is empty or the path is not a `.csv` file.
        OutputError: If the file cannot be written.
    """
    if not curves:
        msg = "no curves to write"
        raise ArgumentError(msg)
    target = validate_output_path(path, allowed_suffixes=[".csv"])
    frame = curves_frame(curves)
    _write(frame, target)
    logger.debug("wrote %d curves (%d rows) to %s", len(curves), len(frame), target)
    return target


def read_curves_csv(path: str | os.PathLike[str], xc: float = 1.0) -> list[EmbeddingCurve]:
    """Read a CurveFile back into curves, grouped by (region, branch) in file order.

    The file does not record x_c, so the caller supplies it.

    Raises:
        ArgumentError: If the header or a region/branch label is not recognised.
    """
    frame = pd.read_csv(path, keep_default_na=False)
    if tuple(frame.columns) != CURVE_COLUMNS:
        msg = f"{path}: expected header {','.join(CURVE_COLUMNS)}, got {','.join(map(str, frame.columns))}"
        raise ArgumentError(msg)
    frame = frame.astype({"x": float, "y": float, "region": str, "branch": str})

    curves = []
    for (region, branch), group in frame.groupby(["region", "branch"], sort=False):
        if region not in RegionId._value2member_map_ or branch not in _SYMBOL_BRANCH:
            msg = f"{path}: unknown region/branch label {region!r}/{branch!r}"
            raise ArgumentError(msg)
        samples = tuple(zip(group["x"].tolist(), group["y"].tolist()))
        curves.append(EmbeddingCurve(region=RegionId(region), branch=_SYMBOL_BRANCH[branch], samples=samples, xc=xc))
    return curves


def trajectory_frame(trajectory: Trajectory) -> pd.DataFrame:
    return pd.DataFrame(trajectory.as_arrays())[list(TRAJECTORY_COLUMNS)]


def write_trajectory_csv(trajectory: Trajectory, path: str | os.PathLike[str]) -> Path:
    """Write a trajectory as `tau,t,x,ux,eps` rows.

    Raises:
        ArgumentError: If the path is not a `.csv` file.
        OutputError: If the file cannot be written.
    """
    target = validate_output_path(path, allowed_suffixes=[".csv"])
    _write(trajectory_frame(trajectory), target)
    logger.debug("wrote %d trajectory samples to %s", len(trajectory.samples), target)
    return target
