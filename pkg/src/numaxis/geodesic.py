"""Timelike radial geodesics of the numeric-axis metric.

A particle is described by its position x, velocity ux = dx/dtau, coordinate
time t and the conserved energy eps = f dt/dtau. Because f is linear in x the
proper acceleration is constant,

    dux/dtau = -c^2 / (2 x_c),

so x(tau) is an exact parabola and the horizon x = -x_c is reached after a
finite proper time while t grows without bound.

The module also carries the constant-acceleration reading of the partial sums
of 1 + 2 + 3 + ...: s(n) = v0 n + a n^2 / 2 with v0 = 1/2, a = 1.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from enum import Enum
from fractions import Fraction

import numpy as np
from pydantic import BaseModel, ConfigDict, model_validator

from numaxis.errors import ArgumentError, HorizonError
from numaxis.metric import MetricParams, conformal_factor, horizon_message
from numaxis.series import SeriesSpec, partial_sum

logger = logging.getLogger(__name__)

HORIZON_F_THRESHOLD = 1e-9
HORIZON_APPROACH_RATIO = 0.25
MIN_STEP_FRACTION = 2.0**-60
MAX_STEPS = 10_000_000

KINEMATIC_V0 = Fraction(1, 2)
KINEMATIC_ACCELERATION = Fraction(1)


class GeodesicState(BaseModel):
    """One point of a timelike trajectory."""

    model_config = ConfigDict(frozen=True)

    tau: float
    """Proper time."""
    t: float
    """Coordinate time."""
    x: float
    """Position on the axis."""
    ux: float
    """dx/dtau."""
    eps: float
    """Conserved energy f dt/dtau."""


class Termination(str, Enum):
    TAU_EXHAUSTED = "tau-exhausted"
    HORIZON_REACHED = "horizon-reached"
    DIVERGED = "diverged"


class Trajectory(BaseModel):
    """Samples of one geodesic, in increasing proper time, and why it stopped."""

    model_config = ConfigDict(frozen=True)

    samples: tuple[GeodesicState, ...]
    termination: Termination
    params: MetricParams

    @model_validator(mode="after")
    def _tau_increasing(self) -> Trajectory:
        if not self.samples:
            msg = "a trajectory holds at least its initial state"
            raise ValueError(msg)
        for prev, cur in zip(self.samples, self.samples[1:]):
            if not cur.tau > prev.tau:
                msg = f"proper time must increase strictly, got {prev.tau} then {cur.tau}"
                raise ValueError(msg)
        return self

    @property
    def final(self) -> GeodesicState:
        return self.samples[-1]

    def as_arrays(self) -> dict[str, np.ndarray]:
        """Column arrays tau, t, x, ux, eps."""
        return {name: np.array([getattr(s, name) for s in self.samples]) for name in ("tau", "t", "x", "ux", "eps")}


def init_state(x0: float, ux0: float, p: MetricParams) -> GeodesicState:
    """Initial state at tau = t = 0 with eps fixed by the normalisation.

    eps = sqrt(f (c^2 + ux0^2 / f)) / c, so that c^2 eps^2 = c^2 f + ux0^2.

    Raises:
        HorizonError: If x0 is on or behind the horizon.
    """
    f0 = conformal_factor(x0, p)
    if f0 <= 0.0:
        raise HorizonError(horizon_message(x0, p, what="start"))
    eps = math.sqrt(f0 * (p.c**2 + ux0**2 / f0)) / p.c
    return GeodesicState(tau=0.0, t=0.0, x=x0, ux=ux0, eps=eps)


def energy_from_state(state: GeodesicState, p: MetricParams) -> float:
    """Recompute eps from (x, ux) alone: sqrt(f + ux^2 / c^2)."""
    return math.sqrt(conformal_factor(state.x, p) + state.ux**2 / p.c**2)


def normalization_residual(state: GeodesicState, p: MetricParams) -> float:
    """f-weighted normalisation defect eps^2 - ux^2/c^2 - f.

    This is (c^2 f (dt/dtau)^2 - ux^2/f - c^2) * f / c^2 with dt/dtau = eps/f,
    which stays finite as f -> 0.
    """
    return state.eps**2 - state.ux**2 / p.c**2 - conformal_factor(state.x, p)


def proper_acceleration(p: MetricParams) -> float:
    return -(p.c**2) / (2.0 * p.x_c)


def parabola_x(s0: GeodesicState, tau: float, p: MetricParams) -> float:
    """Exact x(tau) = x0 + ux0 (tau - tau0) - c^2/(4 x_c) (tau - tau0)^2."""
    dtau = tau - s0.tau
    return s0.x + s0.ux * dtau + 0.5 * proper_acceleration(p) * dtau**2


def _root_times(s0: GeodesicState, p: MetricParams) -> tuple[float, float]:
    """Proper-time offsets (future, past) at which f(tau) = 0 along the parabola."""
    a = p.c**2 / (4.0 * p.x_c**2)
    b = s0.ux / p.x_c
    root = p.c * s0.eps / p.x_c
    return (b + root) / (2.0 * a), (b - root) / (2.0 * a)


def horizon_proper_time(s0: GeodesicState, p: MetricParams) -> float:
    """Proper time at which the trajectory through s0 reaches x = -x_c."""
    future, _ = _root_times(s0, p)
    return s0.tau + future


def coordinate_time_exact(s0: GeodesicState, tau: float, p: MetricParams) -> float:
    """Closed-form t(tau) = t0 + (x_c/c) ln[(tau - tau_b) tau_h / ((tau_h - tau)(-tau_b))].

    tau_h > 0 and tau_b < 0 are the horizon crossings of the parabola relative
    to s0; the expression diverges as tau -> tau_h.
    """
    future, past = _root_times(s0, p)
    dtau = tau - s0.tau
    if not past < dtau < future:
        msg = f"tau = {tau} is outside the exterior segment ({s0.tau + past}, {s0.tau + future})"
        raise HorizonError(msg)
    return s0.t + (p.x_c / p.c) * math.log((dtau - past) * future / ((future - dtau) * (-past)))


def _rk4_step(rhs: Callable[[np.ndarray], np.ndarray | None], y: np.ndarray, h: float) -> np.ndarray | None:
    k1 = rhs(y)
    k2 = rhs(y + 0.5 * h * k1) if k1 is not None else None
    k3 = rhs(y + 0.5 * h * k2) if k2 is not None else None
    k4 = rhs(y + h * k3) if k3 is not None else None
    if k4 is None:
        return None
    return y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)


def integrate(s0: GeodesicState, tau_max: float, dtau: float, p: MetricParams) -> Trajectory:
    """Advance a state with a fixed-step classical Runge-Kutta scheme.

    Integrates dx/dtau = ux, dux/dtau = -c^2/(2 x_c), dt/dtau = eps/f. The x
    equation is quadratic in tau, so the scheme reproduces the parabola up to
    rounding. Near the horizon a step that would cut f by more than a factor
    of four (or cross f = 0) is halved, so the approach is geometric and t is
    still resolved when the run stops at f < 1e-9.

    Args:
        s0: Initial state (exterior).
        tau_max: Proper-time span to cover.
        dtau: Step, at most tau_max / 10.
        p: Metric parameters.

    Returns:
        The sampled trajectory with its termination reason.

    Raises:
        ArgumentError: If tau_max or dtau are not positive or dtau > tau_max/10.
        HorizonError: If s0 is not in the exterior.
    """
    if not (tau_max > 0.0 and dtau > 0.0):
        msg = f"tau_max and dtau must be positive, got tau_max={tau_max}, dtau={dtau}"
        raise ArgumentError(msg)
    if dtau > tau_max / 10.0:
        msg = f"dtau = {dtau} exceeds tau_max/10 = {tau_max / 10.0}"
        raise ArgumentError(msg)
    if conformal_factor(s0.x, p) <= 0.0:
        raise HorizonError(horizon_message(s0.x, p, what="start"))

    accel = proper_acceleration(p)
    eps = s0.eps

    def rhs(y: np.ndarray) -> np.ndarray | None:
        f = conformal_factor(y[0], p)
        if not f > 0.0:
            return None
        return np.array([y[1], accel, eps / f])

    y = np.array([s0.x, s0.ux, s0.t])
    tau = s0.tau
    tau_end = s0.tau + tau_max
    h = dtau
    samples = [s0]
    termination = Termination.TAU_EXHAUSTED

    for _ in range(MAX_STEPS):
        remaining = tau_end - tau
        if remaining <= 1e-12 * tau_max:
            break
        step = min(h, remaining)
        y_new = _rk4_step(rhs, y, step)
        f_cur = conformal_factor(y[0], p)
        f_new = conformal_factor(y_new[0], p) if y_new is not None else -1.0
        if y_new is None or not np.all(np.isfinite(y_new)) or f_new < HORIZON_APPROACH_RATIO * f_cur:
            h = 0.5 * step
            if h < MIN_STEP_FRACTION * dtau:
                termination = Termination.DIVERGED
                logger.debug("step underflow at tau=%.17g, f=%.3g", tau, f_cur)
                break
            continue
        tau += step
        y = y_new
        samples.append(GeodesicState(tau=tau, t=float(y[2]), x=float(y[0]), ux=float(y[1]), eps=eps))
        if f_new < HORIZON_F_THRESHOLD:
            termination = Termination.HORIZON_REACHED
            break
    else:
        termination = Termination.DIVERGED
        logger.warning("step budget of %d exhausted at tau=%.17g before tau_max; trajectory cut short", MAX_STEPS, tau)

    logger.debug("geodesic stopped (%s) after %d samples at tau=%.6g, t=%.6g", termination.value, len(samples), tau, y[2])
    return Trajectory(samples=tuple(samples), termination=termination, params=p)


def partial_sum_kinematics(n: int) -> Fraction:
    """Distance s(n) = v0 n + a n^2 / 2 covered at constant acceleration, v0 = 1/2, a = 1.

    Equals the partial sum 1 + 2 + ... + n exactly.
    """
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        msg = f"n must be a positive integer, got {n!r}"
        raise ArgumentError(msg)
    return KINEMATIC_V0 * n + KINEMATIC_ACCELERATION * n * n / 2


def kinematic_constants() -> tuple[Fraction, Fraction]:
    """(v0, a) solved exactly from s(1) and s(2) of the naturals' partial sums."""
    naturals = SeriesSpec.naturals()
    s1 = Fraction(partial_sum(naturals, 1))
    s2 = Fraction(partial_sum(naturals, 2))
    a = s2 - 2 * s1
    return s1 - a / 2, a
