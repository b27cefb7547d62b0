"""The numeric-axis metric ds^2 = f c^2 dt^2 - f^-1 dx^2 with f = 1 + x/x_c.

The horizon x = -x_c, where f vanishes, is reported through `HorizonError`
and never as NaN. The 2-D metric is flat (it is Rindler space in disguise);
curvature is not computed here.
"""

from __future__ import annotations

import logging
import math
from enum import Enum

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator
from scipy import integrate

from numaxis.errors import ArgumentError, ConvergenceError, HorizonError

logger = logging.getLogger(__name__)

LENGTH_AGREEMENT_TOL = 1e-10
QUADRATURE_ABS_TOL = 1e-12


class MetricParams(BaseModel):
    """The pair (x_c, c) that defines the metric; defaults are unit desk values."""

    model_config = ConfigDict(frozen=True)

    x_c: float = Field(default=1.0, gt=0.0, allow_inf_nan=False)
    """Characteristic length; the horizon sits at x = -x_c."""
    c: float = Field(default=1.0, gt=0.0, allow_inf_nan=False)
    """Speed constant."""

    @property
    def horizon(self) -> float:
        return -self.x_c

    def flat_limit(self, x: float, *, rtol: float = 1e-12) -> bool:
        """True when |x| << x_c, so that f(x) = 1 within rtol and the line element is Minkowski's."""
        return abs(x / self.x_c) <= rtol


class IntervalClass(str, Enum):
    TIMELIKE = "timelike"
    NULL = "null"
    SPACELIKE = "spacelike"


class Interval(BaseModel):
    """A signed squared interval under the (+, -) signature."""

    model_config = ConfigDict(frozen=True)

    ds2: float
    classification: IntervalClass

    @model_validator(mode="after")
    def _sign_matches(self) -> Interval:
        if self.classification is not _classify_interval(self.ds2):
            msg = f"ds2 = {self.ds2} is not {self.classification.value}"
            raise ValueError(msg)
        return self


class HorizonSide(str, Enum):
    EXTERIOR = "exterior"
    HORIZON = "horizon"
    INTERIOR = "interior"


class HorizonClass(BaseModel):
    """Which side of the horizon a point lies on, decided by the sign of f."""

    model_config = ConfigDict(frozen=True)

    side: HorizonSide
    x: float
    f: float


def _classify_interval(ds2: float) -> IntervalClass:
    if ds2 > 0:
        return IntervalClass.TIMELIKE
    if ds2 < 0:
        return IntervalClass.SPACELIKE
    return IntervalClass.NULL


def horizon_message(x: float, p: MetricParams, what: str = "point") -> str:
    """Error text naming the horizon location -x_c."""
    return f"{what} x = {x:g} is not in the exterior region; the horizon is at x = -x_c = {p.horizon:g}"


def conformal_factor(x: float | np.ndarray, p: MetricParams) -> float | np.ndarray:
    """f(x) = 1 + x/x_c; zero on the horizon, negative behind it."""
    return 1.0 + x / p.x_c


def line_element_coefficients(x: float, p: MetricParams) -> tuple[float, float]:
    """(g_tt, g_xx) = (f c^2, -1/f) at x.

    Raises:
        HorizonError: At x = -x_c, where g_xx is undefined.
    """
    f = conformal_factor(x, p)
    if f == 0.0:
        raise HorizonError(horizon_message(x, p))
    return f * p.c**2, -1.0 / f


def interval_squared(dt: float, dx: float, x: float, p: MetricParams) -> Interval:
    """ds^2 = f c^2 dt^2 - f^-1 dx^2 for coordinate displacements (dt, dx) at x.

    Raises:
        HorizonError: At x = -x_c.
    """
    g_tt, g_xx = line_element_coefficients(x, p)
    ds2 = g_tt * dt**2 + g_xx * dx**2
    return Interval(ds2=ds2, classification=_classify_interval(ds2))


def classify(x: float, p: MetricParams) -> HorizonClass:
    """Place x relative to the horizon by the sign of f(x)."""
    f = conformal_factor(x, p)
    if f > 0:
        side = HorizonSide.EXTERIOR
    elif f < 0:
        side = HorizonSide.INTERIOR
    else:
        side = HorizonSide.HORIZON
    return HorizonClass(side=side, x=x, f=f)


def _check_segment(x1: float, x2: float, p: MetricParams) -> None:
    if x1 > x2:
        msg = f"proper length needs x1 <= x2, got x1={x1}, x2={x2}"
        raise ArgumentError(msg)
    for x in (x1, x2):
        if conformal_factor(x, p) <= 0.0:
            raise HorizonError(horizon_message(x, p, what="endpoint"))


def proper_length_quadrature(x1: float, x2: float, p: MetricParams) -> float:
    """Integral of f^(-1/2) dx from x1 to x2 by adaptive Gauss-Kronrod quadrature.

    Integrates in w = sqrt(f), where x = x_c (w^2 - 1), so the square-root
    singularity at the horizon drops out of the integrand.
    """
    _check_segment(x1, x2, p)
    w1 = math.sqrt(conformal_factor(x1, p))
    w2 = math.sqrt(conformal_factor(x2, p))

    def integrand(w: float) -> float:
        x = p.x_c * (w * w - 1.0)
        return conformal_factor(x, p) ** -0.5 * 2.0 * p.x_c * w

    value, abserr = integrate.quad(integrand, w1, w2, epsabs=QUADRATURE_ABS_TOL, epsrel=0.0, limit=200)
    logger.debug("proper length quadrature on [%g, %g]: %.16g (+/- %.2g)", x1, x2, value, abserr)
    return value


def proper_length(x1: float, x2: float, p: MetricParams, *, verify: bool = True) -> float:
    """Proper spatial length between two exterior points (dt = 0).

    Returns the closed form 2 x_c (sqrt(f(x2)) - sqrt(f(x1))). With `verify`
    the adaptive quadrature is evaluated as well and must agree to 1e-10.

    Raises:
        ArgumentError: If x1 > x2.
        HorizonError: If an endpoint is at or behind the horizon.
        ConvergenceError: If closed form and quadrature disagree.
    """
    _check_segment(x1, x2, p)
    closed = 2.0 * p.x_c * (math.sqrt(conformal_factor(x2, p)) - math.sqrt(conformal_factor(x1, p)))
    if verify:
        quad = proper_length_quadrature(x1, x2, p)
        if abs(quad - closed) > LENGTH_AGREEMENT_TOL:
            msg = f"proper length on [{x1}, {x2}]: closed form {closed!r} vs quadrature {quad!r}"
            raise ConvergenceError(msg)
    return closed
