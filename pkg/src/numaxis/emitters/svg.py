"""Standalone SVG rendering of embedding curves and geodesic trajectories.

Region line styles follow the embedding figure: I solid, II dash-dot,
III dashed. Every branch is drawn as its own line whose SVG group id is
`branch-<region><sign>` (e.g. `branch-II-`), and gets a Roman numeral label
at its outer end. Trajectories are drawn in the (x, t) plane with the horizon
marked.
"""

from __future__ import annotations

import logging
import os
from collections.abc import Sequence
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.lines import Line2D  # noqa: E402

from numaxis.embedding import EmbeddingCurve, RegionId  # noqa: E402
from numaxis.emitters.paths import validate_output_path  # noqa: E402
from numaxis.errors import ArgumentError, OutputError  # noqa: E402
from numaxis.geodesic import Trajectory  # noqa: E402

logger = logging.getLogger(__name__)

REGION_LINESTYLES = {RegionId.I: "-", RegionId.II: "-.", RegionId.III: "--"}
REGION_COLORS = {RegionId.I: "#1f4e79", RegionId.II: "#7a1f1f", RegionId.III: "#2e6b30"}
TRAJECTORY_COLOR = "#444444"
FIGURE_SIZE = (7.0, 5.0)
SVG_HASH_SALT = "numaxis"


def branch_gid(curve: EmbeddingCurve) -> str:
    return f"branch-{curve.region.value}{'+' if curve.branch > 0 else '-'}"


def _draw_curve(ax: plt.Axes, curve: EmbeddingCurve) -> None:
    xs, ys = curve.xs, curve.ys
    (line,) = ax.plot(xs, ys, linestyle=REGION_LINESTYLES[curve.region], color=REGION_COLORS[curve.region], linewidth=1.4)
    line.set_gid(branch_gid(curve))
    # label the end farthest from the anchor
    end = -1 if abs(ys[-1]) >= abs(ys[0]) else 0
    ax.annotate(
        curve.region.value,
        (xs[end], ys[end]),
        textcoords="offset points",
        xytext=(4, 4 if curve.branch > 0 else -12),
        fontsize=9,
        color=REGION_COLORS[curve.region],
    )


def _draw_trajectory(ax: plt.Axes, trajectory: Trajectory, index: int) -> None:
    arrays = trajectory.as_arrays()
    (line,) = ax.plot(arrays["x"], arrays["t"], color=TRAJECTORY_COLOR, linewidth=1.2)
    line.set_gid(f"trajectory-{index}")
    ax.axvline(trajectory.params.horizon, color=TRAJECTORY_COLOR, linestyle=":", linewidth=0.8)


def _legend_handles(curves: Sequence[EmbeddingCurve], trajectories: Sequence[Trajectory]) -> list[Line2D]:
    handles = []
    for region in RegionId:
        if any(c.region is region for c in curves):
            handles.append(
                Line2D([], [], linestyle=REGION_LINESTYLES[region], color=REGION_COLORS[region], label=f"{region.value}: {region.info.signature.value}")
            )
    if trajectories:
        handles.append(Line2D([], [], color=TRAJECTORY_COLOR, label="geodesic t(x)"))
        handles.append(Line2D([], [], color=TRAJECTORY_COLOR, linestyle=":", label="horizon x = -x_c"))
    return handles


def emit_svg(items: Sequence[EmbeddingCurve | Trajectory], path: str | os.PathLike[str]) -> Path:
    """Render curves and/or trajectories into a standalone SVG file.

    Args:
        items: Embedding curves, trajectories, or a mix of both.
        path: Target `.svg` file; its directory must exist.

    Returns:
        The path written.

    Raises:
        ArgumentError: If `items` is empty or the path is not an `.svg` file.
        OutputError: If the file cannot be written.
    """
    if not items:
        msg = "nothing to draw: the curve list is empty"
        raise ArgumentError(msg)
    target = validate_output_path(path, allowed_suffixes=[".svg"])

    curves = [item for item in items if isinstance(item, EmbeddingCurve)]
    trajectories = [item for item in items if isinstance(item, Trajectory)]
    if len(curves) + len(trajectories) != len(items):
        msg = "emit_svg accepts EmbeddingCurve and Trajectory items only"
        raise ArgumentError(msg)

    with plt.rc_context({"svg.hashsalt": SVG_HASH_SALT, "svg.fonttype": "none"}):
        fig, ax = plt.subplots(figsize=FIGURE_SIZE)
        try:
            ax.axhline(0.0, color="black", linewidth=0.6)
            ax.axvline(0.0, color="black", linewidth=0.6)
            for curve in curves:
                _draw_curve(ax, curve)
            for index, trajectory in enumerate(trajectories):
                _draw_trajectory(ax, trajectory, index)
            ax.set_xlabel("x")
            ax.set_ylabel("t" if trajectories and not curves else "y")
            ax.legend(handles=_legend_handles(curves, trajectories), loc="best", fontsize=8)
            fig.tight_layout()
            fig.savefig(target, format="svg", metadata={"Date": None})
        except OSError as exc:
            msg = f"cannot write {target}: {exc}"
            raise OutputError(msg) from exc
        finally:
            plt.close(fig)

    logger.debug("wrote %d curves and %d trajectories to %s", len(curves), len(trajectories), target)
    return target
