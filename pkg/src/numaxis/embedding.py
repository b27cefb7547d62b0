"""Isometric embedding of the spatial line element dx^2 / (1 + x/x_c) into a plane.

A curve y(x) in a plane with line element dl^2 = s_x dx^2 + s_y dy^2
reproduces the metric when

    s_x + s_y (dy/dx)^2 = 1 / (1 + z),    z = x / x_c.

Three regions admit real solutions, each with its own plane signature:

    I    z < -1       dl^2 = dx^2 - dy^2   y = ±x_c (arccosh sqrt(-z) + sqrt(z (1+z)))
    II   z > -1       dl^2 = dy^2 - dx^2   y = ±x_c (arcsinh sqrt(1+z) + sqrt((1+z)(2+z)))
    III  -1 < z < 0   dl^2 = dx^2 + dy^2   y = ±x_c (arcsin sqrt(-z) - sqrt(-z (1+z)))

Branches I and II start from y = 0 at the horizon z = -1, branch III from
y = 0 at z = 0. Only the indefinite planes cover the whole axis; the
Euclidean plane takes the segment (-x_c, 0) and nothing else.
"""

from __future__ import annotations

import logging
import math
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import integrate

from numaxis.errors import ArgumentError, BoundaryError, ConvergenceError, RegionError, SignatureError

logger = logging.getLogger(__name__)

DEFAULT_DIFF_STEP = 1e-6
ORACLE_AGREEMENT_TOL = 1e-6
QUADRATURE_TOL = 1e-12
FIGURE1_X_LIMIT = 5.0
DEFAULT_FIGURE1_MARGIN = 0.01
DEFAULT_FIGURE1_SAMPLES = 200


class PlaneSignature(str, Enum):
    """Line element of the target plane."""

    EUCLIDEAN = "dx2+dy2"
    PSEUDO_X_MINUS_Y = "dx2-dy2"
    PSEUDO_Y_MINUS_X = "dy2-dx2"

    @property
    def signs(self) -> tuple[int, int]:
        """(s_x, s_y) in dl^2 = s_x dx^2 + s_y dy^2."""
        return {
            PlaneSignature.EUCLIDEAN: (1, 1),
            PlaneSignature.PSEUDO_X_MINUS_Y: (1, -1),
            PlaneSignature.PSEUDO_Y_MINUS_X: (-1, 1),
        }[self]


class RegionId(str, Enum):
    I = "I"  # noqa: E741
    II = "II"
    III = "III"

    @property
    def info(self) -> RegionInfo:
        return REGIONS[self]


class RegionInfo(BaseModel):
    """Signature, open z-interval and anchor (where y = 0) of one region."""

    model_config = ConfigDict(frozen=True)

    region: RegionId
    signature: PlaneSignature
    z_low: float
    z_high: float
    anchor: float

    def contains(self, z: float) -> bool:
        return self.z_low < z < self.z_high


REGIONS: dict[RegionId, RegionInfo] = {
    RegionId.I: RegionInfo(region=RegionId.I, signature=PlaneSignature.PSEUDO_X_MINUS_Y, z_low=-math.inf, z_high=-1.0, anchor=-1.0),
    RegionId.II: RegionInfo(region=RegionId.II, signature=PlaneSignature.PSEUDO_Y_MINUS_X, z_low=-1.0, z_high=math.inf, anchor=-1.0),
    RegionId.III: RegionInfo(region=RegionId.III, signature=PlaneSignature.EUCLIDEAN, z_low=-1.0, z_high=0.0, anchor=0.0),
}


class EmbeddingCurve(BaseModel):
    """A sampled branch y(x) of one region."""

    model_config = ConfigDict(frozen=True)

    region: RegionId
    branch: int
    """+1 or -1, the sign in front of the closed form."""
    samples: tuple[tuple[float, float], ...]
    """(x, y) pairs in increasing x."""
    xc: float = Field(gt=0.0, allow_inf_nan=False)

    @model_validator(mode="after")
    def _check_samples(self) -> EmbeddingCurve:
        if self.branch not in (1, -1):
            msg = f"branch must be +1 or -1, got {self.branch}"
            raise ValueError(msg)
        info = self.region.info
        for x, y in self.samples:
            if not info.contains(x / self.xc):
                msg = f"sample x = {x} lies outside region {self.region.value}"
                raise ValueError(msg)
            if self.branch * y < 0:
                msg = f"sample y = {y} has the wrong sign for branch {self.branch:+d}"
                raise ValueError(msg)
        return self

    @property
    def signature(self) -> PlaneSignature:
        return self.region.info.signature

    @property
    def xs(self) -> np.ndarray:
        return np.array([x for x, _ in self.samples])

    @property
    def ys(self) -> np.ndarray:
        return np.array([y for _, y in self.samples])

    def points(self) -> np.ndarray:
        return np.array(self.samples, dtype=float).reshape(-1, 2)

    def mirrored(self) -> EmbeddingCurve:
        return EmbeddingCurve(region=self.region, branch=-self.branch, samples=tuple((x, -y) for x, y in self.samples), xc=self.xc)


def _check_branch(branch: int) -> None:
    if branch not in (1, -1):
        msg = f"branch must be +1 or -1, got {branch!r}"
        raise ArgumentError(msg)


def _check_xc(xc: float) -> None:
    if not (math.isfinite(xc) and xc > 0.0):
        msg = f"x_c must be a positive finite number, got {xc!r}"
        raise ArgumentError(msg)


def _require_inside(z: float, region: RegionId) -> None:
    info = region.info
    if not info.contains(z):
        msg = f"z = {z:g} is outside region {region.value} ({info.z_low:g} < z < {info.z_high:g})"
        raise RegionError(msg)


def _slope_squared(z: float, q: float, signature: PlaneSignature) -> float:
    """(dy/dx)^2 = (1 - s_x (1+z)) / (s_y (1+z)), with q = 1 + z passed separately."""
    sx, sy = signature.signs
    return ((1 - sx) - sx * z) / (sy * q)


def rhs_squared(z: float, region: RegionId) -> float:
    """(dy/dx)^2 solved from the embedding equation under the region's signature.

    I: z/(1+z); II: (2+z)/(1+z); III: -z/(1+z).

    A negative value means the signature admits no real curve at that z and is
    reported as `SignatureError` (e.g. the Euclidean plane for any z > 0);
    otherwise a z outside the region's interval is a `RegionError`.
    """
    q = 1.0 + z
    if q == 0.0:
        msg = f"z = {z:g} is the horizon; (dy/dx)^2 is unbounded there"
        raise RegionError(msg)
    value = _slope_squared(z, q, region.info.signature)
    if value < 0.0:
        msg = f"no real embedding at z = {z:g} in a {region.info.signature.value} plane: (dy/dx)^2 = {value:g} < 0"
        raise SignatureError(msg)
    _require_inside(z, region)
    return value


def _profile(z: np.ndarray, region: RegionId) -> np.ndarray:
    """Unsigned closed form for x_c = 1, vectorised over z."""
    if region is RegionId.I:
        v = -z
        return np.arccosh(np.sqrt(v)) + np.sqrt(v * (v - 1.0))
    if region is RegionId.II:
        q = 1.0 + z
        return np.arcsinh(np.sqrt(q)) + np.sqrt(q * (1.0 + q))
    v = -z
    return np.arcsin(np.sqrt(v)) - np.sqrt(v * (1.0 - v))


def closed_form_y(z: float, region: RegionId, branch: int, xc: float) -> float:
    """y at z = x/x_c on the given branch of a region.

    Raises:
        RegionError: If z is not strictly inside the region's interval.
        ArgumentError: For a branch other than +1/-1 or a non-positive x_c.
    """
    _require_inside(z, region)
    _check_branch(branch)
    _check_xc(xc)
    g = float(_profile(np.asarray(z, dtype=float), region))
    return branch * (xc * g)


def derivative_residual(z: float, region: RegionId, *, xc: float = 1.0, step: float = DEFAULT_DIFF_STEP) -> float:
    """(dy/dx)^2 by central differences of the closed form, minus `rhs_squared`.

    The step is taken in z and scaled by x_c; the realised step (after
    rounding of z +/- step) is used as the divisor.
    """
    z_plus, z_minus = z + step, z - step
    _require_inside(z_plus, region)
    _require_inside(z_minus, region)
    dy = closed_form_y(z_plus, region, 1, xc) - closed_form_y(z_minus, region, 1, xc)
    dx = xc * (z_plus - z_minus)
    return (dy / dx) ** 2 - rhs_squared(z, region)


def _shift_to_u(z: float) -> float:
    """u = sqrt(|1 + z|), the variable that removes the horizon singularity."""
    return math.sqrt(abs(1.0 + z))


def _du_integrand(u: float, region: RegionId, xc: float) -> float:
    """dy/du = x_c sqrt((dy/dx)^2) |dz/du| with z = -1 -/+ u^2."""
    q = -u * u if region is RegionId.I else u * u
    z = q - 1.0
    slope2 = _slope_squared(z, q, region.info.signature)
    return xc * math.sqrt(max(slope2, 0.0)) * 2.0 * u


def integrate_embedding(
    region: RegionId,
    z_from: float,
    z_to: float,
    n_samples: int,
    xc: float,
    *,
    branch: int = 1,
    verify: bool = True,
) -> EmbeddingCurve:
    """Integrate dy/dz = x_c sqrt((dy/dx)^2) from the region's anchor by adaptive quadrature.

    Works in u = sqrt(|1+z|), where the integrand is smooth at the horizon,
    and accumulates segment integrals between consecutive sample points.

    Args:
        region: Region to integrate in.
        z_from: First sample, strictly inside the region.
        z_to: Last sample, strictly inside the region and greater than z_from.
        n_samples: Number of uniform z samples (>= 2).
        xc: Characteristic length.
        branch: +1 or -1.
        verify: Compare every sample with `closed_form_y` and raise if any
            differs by more than 1e-6.

    Raises:
        RegionError: If the span leaves the region.
        ArgumentError: For a bad sample count, ordering, branch or x_c.
        ConvergenceError: If verification fails.
    """
    _require_inside(z_from, region)
    _require_inside(z_to, region)
    _check_branch(branch)
    _check_xc(xc)
    if n_samples < 2:
        msg = f"n_samples must be at least 2, got {n_samples}"
        raise ArgumentError(msg)
    if not z_from < z_to:
        msg = f"need z_from < z_to, got {z_from} and {z_to}"
        raise ArgumentError(msg)

    zs = np.linspace(z_from, z_to, n_samples)
    us = np.array([_shift_to_u(z) for z in zs])
    anchor_u = _shift_to_u(region.info.anchor)

    # walk outwards from the anchor so each segment integral is added once
    order = np.argsort(np.abs(us - anchor_u))
    ys = np.empty(n_samples)
    u_prev, y_prev = anchor_u, 0.0
    for idx in order:
        u = float(us[idx])
        segment, _ = integrate.quad(_du_integrand, min(u_prev, u), max(u_prev, u), args=(region, xc), epsabs=QUADRATURE_TOL, epsrel=QUADRATURE_TOL, limit=200)
        y_prev += segment
        u_prev = u
        ys[idx] = y_prev

    samples = tuple((float(xc * z), float(branch * y)) for z, y in zip(zs, ys))
    curve = EmbeddingCurve(region=region, branch=branch, samples=samples, xc=xc)

    if verify:
        exact = branch * xc * _profile(zs, region)
        deviation = float(np.max(np.abs(branch * ys - exact)))
        logger.debug("embedding oracle %s on [%g, %g]: max deviation %.3g", region.value, z_from, z_to, deviation)
        if deviation > ORACLE_AGREEMENT_TOL:
            msg = f"region {region.value}: quadrature deviates from the closed form by {deviation:.3g}"
            raise ConvergenceError(msg)
    return curve


def admissible_regions(z: float) -> frozenset[RegionId]:
    """Regions whose interval contains z; II and III overlap on (-1, 0).

    Raises:
        BoundaryError: At z = -1 or z = 0.
    """
    if z in (-1.0, 0.0):
        msg = f"z = {z:g} is a region boundary"
        raise BoundaryError(msg)
    return frozenset(r for r, info in REGIONS.items() if info.contains(z))


def region_curve(region: RegionId, x_from: float, x_to: float, n: int, xc: float, branch: int = 1) -> EmbeddingCurve:
    """Closed-form samples of one branch on [x_from, x_to] (uniform in x)."""
    _check_branch(branch)
    _check_xc(xc)
    zs = np.linspace(x_from, x_to, n) / xc
    for z in (zs[0], zs[-1]):
        _require_inside(float(z), region)
    ys = branch * (xc * _profile(zs, region))
    return EmbeddingCurve(region=region, branch=branch, samples=tuple((float(xc * z), float(y)) for z, y in zip(zs, ys)), xc=xc)


def figure1_curves(
    xc: float = 1.0,
    margin: float = DEFAULT_FIGURE1_MARGIN,
    n: int = DEFAULT_FIGURE1_SAMPLES,
) -> list[EmbeddingCurve]:
    """Both branches of all three regions, as drawn in the embedding figure.

    Each region is sampled on its interval shrunk by margin*x_c at finite
    ends; the unbounded ends of I and II are clipped at -5 x_c and +5 x_c.

    Returns:
        Six curves in the order I+, I-, II+, II-, III+, III-.

    Raises:
        ArgumentError: If margin is not in (0, 0.1), n < 2 or x_c <= 0.
    """
    _check_xc(xc)
    if not 0.0 < margin < 0.1:
        msg = f"margin must lie in (0, 0.1), got {margin}"
        raise ArgumentError(msg)
    if n < 2:
        msg = f"need at least 2 samples per branch, got {n}"
        raise ArgumentError(msg)

    spans = {
        RegionId.I: (-FIGURE1_X_LIMIT * xc, -xc - margin * xc),
        RegionId.II: (-xc + margin * xc, FIGURE1_X_LIMIT * xc),
        RegionId.III: (-xc + margin * xc, -margin * xc),
    }
    curves = []
    for region, (x_from, x_to) in spans.items():
        upper = region_curve(region, x_from, x_to, n, xc)
        curves.extend([upper, upper.mirrored()])
    return curves


def induced_line_element_ratio(curve: EmbeddingCurve) -> np.ndarray:
    """Per-segment ratio of the plane's dl^2 to the metric's dx^2/f.

    Evaluated on consecutive samples with f at the segment midpoint; the
    ratios tend to 1 as the sampling is refined.
    """
    pts = curve.points()
    dx = np.diff(pts[:, 0])
    dy = np.diff(pts[:, 1])
    sx, sy = curve.signature.signs
    mid = 0.5 * (pts[1:, 0] + pts[:-1, 0])
    f = 1.0 + mid / curve.xc
    return (sx * dx**2 + sy * dy**2) * f / dx**2
