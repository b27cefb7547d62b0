"""Series descriptions, exact partial sums, and summation methods.

Every series is indexed from n = 1. Partial sums are exact (Python integers
or `Fraction`); the summation methods work in floating point and report what
they assigned through a `SummationResult`.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from enum import Enum
from fractions import Fraction
from typing import Any

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from numaxis.errors import ArgumentError, SeriesRangeError
from numaxis.zeta import MAX_BERNOULLI_ORDER, bernoulli_numbers, zeta_continued

logger = logging.getLogger(__name__)

# size cap on exact partial sums; Fraction gcd cost grows quadratically past it
MAX_EXACT_BITS = 1 << 18
MAX_ZETA_POWER = 10
CESARO_MIN_TERMS = 10
CESARO_WINDOW_FRACTION = 0.1
ABEL_MIN_POINTS = 5
ABEL_TERM_CUTOFF = 1e-18
ABEL_MAX_TERMS = 50_000_000
ABEL_CHUNK = 1 << 18
DEFAULT_ABEL_GRID = (0.9, 0.99, 0.999, 0.9999, 0.99999)
DEFAULT_N_MAX = 100_000
DEFAULT_TOL = 1e-6


class SeriesKind(str, Enum):
    ONES = "ones"
    NATURALS = "naturals"
    POWER_OF_N = "power"
    GRANDI = "grandi"
    GEOMETRIC = "geometric"


class SummationMethod(str, Enum):
    PARTIAL_SUM_LIMIT = "partial"
    CESARO = "cesaro"
    ABEL = "abel"
    ZETA_REGULARIZED = "zeta-reg"


class SeriesSpec(BaseModel):
    """Symbolic description of one of the built-in series families.

    Use the constructors (`ones()`, `naturals()`, `power_of_n(k)`, `grandi()`,
    `geometric(r)`) or `parse("geometric:0.5")` rather than filling fields by hand.
    """

    model_config = ConfigDict(frozen=True)

    kind: SeriesKind
    power: int | None = Field(default=None, ge=0)
    """Exponent k of `POWER_OF_N` (terms n^k)."""
    ratio: float | None = None
    """Ratio r of `GEOMETRIC` (terms r^n)."""

    @model_validator(mode="after")
    def _check_parameters(self) -> SeriesSpec:
        if self.kind is SeriesKind.POWER_OF_N and self.power is None:
            msg = "power series need an exponent k >= 0"
            raise ValueError(msg)
        if self.kind is SeriesKind.GEOMETRIC and (self.ratio is None or not math.isfinite(self.ratio)):
            msg = "geometric series need a finite ratio r"
            raise ValueError(msg)
        if self.kind is not SeriesKind.POWER_OF_N and self.power is not None:
            msg = f"{self.kind.value} series take no exponent"
            raise ValueError(msg)
        if self.kind is not SeriesKind.GEOMETRIC and self.ratio is not None:
            msg = f"{self.kind.value} series take no ratio"
            raise ValueError(msg)
        return self

    @classmethod
    def ones(cls) -> SeriesSpec:
        return cls(kind=SeriesKind.ONES)

    @classmethod
    def naturals(cls) -> SeriesSpec:
        return cls(kind=SeriesKind.NATURALS)

    @classmethod
    def power_of_n(cls, k: int) -> SeriesSpec:
        return cls(kind=SeriesKind.POWER_OF_N, power=k)

    @classmethod
    def grandi(cls) -> SeriesSpec:
        return cls(kind=SeriesKind.GRANDI)

    @classmethod
    def geometric(cls, r: float) -> SeriesSpec:
        return cls(kind=SeriesKind.GEOMETRIC, ratio=r)

    @classmethod
    def parse(cls, text: str) -> SeriesSpec:
        """Parse the CLI notation `ones|naturals|grandi|geometric:<r>|power:<k>`."""
        name, _, param = text.strip().lower().partition(":")
        try:
            if name == "ones" and not param:
                return cls.ones()
            if name == "naturals" and not param:
                return cls.naturals()
            if name == "grandi" and not param:
                return cls.grandi()
            if name == "geometric" and param:
                return cls.geometric(float(param))
            if name == "power" and param:
                return cls.power_of_n(int(param))
        except ValueError as exc:
            msg = f"invalid series {text!r}: {exc}"
            raise ArgumentError(msg) from exc
        msg = f"unknown series {text!r}; expected ones, naturals, grandi, geometric:<r> or power:<k>"
        raise ArgumentError(msg)

    @property
    def label(self) -> str:
        if self.kind is SeriesKind.POWER_OF_N:
            return f"power:{self.power}"
        if self.kind is SeriesKind.GEOMETRIC:
            return f"geometric:{self.ratio:g}"
        return self.kind.value

    @property
    def exponent(self) -> int | None:
        """k when the series is sum n^k (Ones, Naturals, PowerOfN), else None."""
        if self.kind is SeriesKind.ONES:
            return 0
        if self.kind is SeriesKind.NATURALS:
            return 1
        if self.kind is SeriesKind.POWER_OF_N:
            return self.power
        return None

    def term(self, n: int) -> int | Fraction:
        """Exact n-th term, n >= 1."""
        _check_index(n)
        k = self.exponent
        if k is not None:
            return n**k
        if self.kind is SeriesKind.GRANDI:
            return 1 if n % 2 else -1
        return Fraction(self.ratio) ** n

    def float_terms(self, n: np.ndarray) -> np.ndarray:
        """Floating-point terms for an array of indices."""
        n = np.asarray(n, dtype=float)
        k = self.exponent
        with np.errstate(over="ignore"):
            if k is not None:
                return np.power(n, k)
            if self.kind is SeriesKind.GRANDI:
                return np.where(np.mod(n, 2.0) == 1.0, 1.0, -1.0)
            return np.power(self.ratio, n)

    def terms(self, n_max: int) -> np.ndarray:
        """Floating-point terms for n = 1 .. n_max."""
        return self.float_terms(np.arange(1, n_max + 1, dtype=float))


class SummationResult(BaseModel):
    """Outcome of a summation method; `value` is present only when assigned."""

    model_config = ConfigDict(frozen=True)

    value: float | None = None
    method: SummationMethod
    assigned: bool
    diagnostics: dict[str, Any] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _value_iff_assigned(self) -> SummationResult:
        if self.assigned and self.value is None:
            msg = "an assigned result must carry a value"
            raise ValueError(msg)
        if not self.assigned and self.value is not None:
            msg = "an unassigned result must not carry a value"
            raise ValueError(msg)
        return self


def _check_index(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        msg = f"series index must be a positive integer, got {n!r}"
        raise ArgumentError(msg)


def _exact_bits(spec: SeriesSpec, n: int) -> int:
    """Upper estimate of the bit length of the exact partial sum."""
    k = spec.exponent
    if k is not None:
        return (k + 1) * n.bit_length() + 1
    if spec.kind is SeriesKind.GEOMETRIC:
        r = Fraction(spec.ratio)
        return (n + 1) * max(r.numerator.bit_length(), r.denominator.bit_length(), 1)
    return 1


def _power_sum(n: int, k: int) -> int:
    """sum_{m=1}^{n} m^k by Faulhaber's formula (B_1 = -1/2 convention)."""
    order = max(1, math.ceil(k / 2))
    if order > MAX_BERNOULLI_ORDER:
        return sum(m**k for m in range(1, n + 1))
    table = bernoulli_numbers(order)
    # sum_{m=0}^{n-1} m^k
    lower = sum((math.comb(k + 1, j) * table[j] * n ** (k + 1 - j) for j in range(k + 1)), Fraction(0)) / (k + 1)
    total = lower - 0**k + n**k
    if total.denominator != 1:
        msg = f"Faulhaber sum for k={k}, n={n} is not an integer"
        raise ArithmeticError(msg)
    return total.numerator


def partial_sum(spec: SeriesSpec, n: int) -> int | Fraction:
    """Exact sum of the first n terms.

    Integer families return `int`; geometric series return a `Fraction`
    built from the binary value of the ratio. Results are capped at
    `MAX_EXACT_BITS` bits (about n = 4700 for ratio 0.1).

    Raises:
        ArgumentError: If n is not a positive integer.
        SeriesRangeError: If the exact result would need more than
            `MAX_EXACT_BITS` bits.
    """
    _check_index(n)
    bits = _exact_bits(spec, n)
    if bits > MAX_EXACT_BITS:
        msg = f"exact partial sum of {spec.label} up to n={n} needs ~{bits} bits (limit {MAX_EXACT_BITS})"
        raise SeriesRangeError(msg)

    if spec.kind is SeriesKind.ONES:
        return n
    if spec.kind is SeriesKind.NATURALS:
        return n * (n + 1) // 2
    if spec.kind is SeriesKind.POWER_OF_N:
        return _power_sum(n, spec.power)
    if spec.kind is SeriesKind.GRANDI:
        return n % 2
    r = Fraction(spec.ratio)
    if r == 1:
        return Fraction(n)
    return r * (1 - r**n) / (1 - r)


def _trailing_count(n_max: int) -> int:
    return max(2, math.ceil(n_max * CESARO_WINDOW_FRACTION))


def partial_sum_limit(spec: SeriesSpec, n_max: int = DEFAULT_N_MAX, tol: float = DEFAULT_TOL) -> SummationResult:
    """Ordinary limit of the partial sums, assigned if they settle within `tol`."""
    if n_max < CESARO_MIN_TERMS or tol <= 0:
        msg = f"need n_max >= {CESARO_MIN_TERMS} and tol > 0, got n_max={n_max}, tol={tol}"
        raise ArgumentError(msg)
    with np.errstate(over="ignore", invalid="ignore"):
        sums = np.cumsum(spec.terms(n_max))
    tail = sums[-_trailing_count(n_max) :]
    spread = float(np.max(tail) - np.min(tail)) if np.all(np.isfinite(tail)) else math.inf
    diagnostics = {"n_max": n_max, "tol": tol, "spread": spread}
    if spread < tol:
        return SummationResult(value=float(sums[-1]), method=SummationMethod.PARTIAL_SUM_LIMIT, assigned=True, diagnostics=diagnostics)
    return SummationResult(method=SummationMethod.PARTIAL_SUM_LIMIT, assigned=False, diagnostics=diagnostics)


def cesaro_sum(spec: SeriesSpec, n_max: int = DEFAULT_N_MAX, tol: float = DEFAULT_TOL) -> SummationResult:
    """Cesaro (C,1) summation.

    Arithmetic means of the partial sums are taken over an even-length window
    of W ~ n_max/10 consecutive partial sums ending at n (delayed means, which
    converge to the Cesaro limit whenever it exists). The result is assigned
    when those means vary by less than `tol` over the trailing 10% of the
    range; an even W cancels period-two oscillation exactly.

    Args:
        spec: Series to sum.
        n_max: Number of terms used, at least 10.
        tol: Stabilisation tolerance (max minus min of the trailing means).
    """
    if n_max < CESARO_MIN_TERMS or tol <= 0:
        msg = f"Cesaro summation needs n_max >= {CESARO_MIN_TERMS} and tol > 0, got n_max={n_max}, tol={tol}"
        raise ArgumentError(msg)

    window = max(2, 2 * int(n_max * CESARO_WINDOW_FRACTION / 2))
    with np.errstate(over="ignore", invalid="ignore"):
        sums = np.cumsum(spec.terms(n_max))
        prefix = np.concatenate(([0.0], np.cumsum(sums)))
        ends = np.arange(n_max - window, n_max + 1)
        means = (prefix[ends] - prefix[ends - window]) / window
    cesaro_mean = float(prefix[-1] / n_max)

    finite = bool(np.all(np.isfinite(means)))
    spread = float(np.max(means) - np.min(means)) if finite else math.inf
    diagnostics = {"n_max": n_max, "tol": tol, "window": window, "spread": spread, "mean_at_n_max": cesaro_mean}
    logger.debug("cesaro %s: window=%d spread=%.3g", spec.label, window, spread)
    if spread < tol:
        return SummationResult(value=float(means[-1]), method=SummationMethod.CESARO, assigned=True, diagnostics=diagnostics)
    return SummationResult(method=SummationMethod.CESARO, assigned=False, diagnostics=diagnostics)


def _eulerian_row(k: int) -> list[int]:
    """Eulerian numbers A(k, m), m = 0 .. k-1."""
    return [sum((-1) ** j * math.comb(k + 1, j) * (m + 1 - j) ** k for j in range(m + 1)) for m in range(k)]


def _abel_closed_form(spec: SeriesSpec, x: float) -> float:
    """sum_{n>=1} term(n) x^n in closed form."""
    k = spec.exponent
    if k == 0:
        return x / (1.0 - x)
    if k is not None:
        # polylogarithm of negative order: x A_k(x) / (1 - x)^(k+1)
        eulerian = sum(a * x**m for m, a in enumerate(_eulerian_row(k)))
        return x * eulerian / (1.0 - x) ** (k + 1)
    if spec.kind is SeriesKind.GRANDI:
        return x / (1.0 + x)
    rx = spec.ratio * x
    if abs(rx) >= 1.0:
        return math.inf
    return rx / (1.0 - rx)


def _abel_truncated(spec: SeriesSpec, x: float) -> float:
    """sum_{n>=1} term(n) x^n summed until |term x^n| < ABEL_TERM_CUTOFF."""
    if spec.kind is SeriesKind.GEOMETRIC and abs(spec.ratio * x) >= 1.0:
        return math.inf
    total = 0.0
    start = 1
    while start <= ABEL_MAX_TERMS:
        n = np.arange(start, start + ABEL_CHUNK, dtype=float)
        with np.errstate(over="ignore", under="ignore"):
            contrib = spec.float_terms(n) * np.power(x, n)
        total += math.fsum(contrib)
        tail = np.abs(contrib[-ABEL_CHUNK // 16 :])
        if np.all(tail < ABEL_TERM_CUTOFF) and tail[-1] <= tail[0]:
            return total
        start += ABEL_CHUNK
    logger.warning("Abel series for %s at x=%s did not reach the cutoff in %d terms", spec.label, x, ABEL_MAX_TERMS)
    return math.nan


def _abel_boundary_value(spec: SeriesSpec) -> float | None:
    """Value at x = 1 of a closed form that stays continuous there, else None."""
    if spec.kind is SeriesKind.GRANDI:
        return 0.5
    if spec.kind is SeriesKind.GEOMETRIC and -1.0 <= spec.ratio < 1.0:
        return spec.ratio / (1.0 - spec.ratio)
    return None


def _extrapolate_to_one(grid: np.ndarray, values: np.ndarray) -> float:
    """Quadratic interpolation in h = 1 - x through the last three points, at h = 0."""
    h = 1.0 - grid[-3:]
    v = values[-3:]
    result = 0.0
    for i in range(3):
        weight = 1.0
        for j in range(3):
            if j != i:
                weight *= h[j] / (h[j] - h[i])
        result += weight * v[i]
    return result


def abel_sum(
    spec: SeriesSpec,
    x_grid: Sequence[float] = DEFAULT_ABEL_GRID,
    *,
    closed_form: bool = True,
    tol: float = DEFAULT_TOL,
) -> SummationResult:
    """Abel summation: evaluate sum term(n) x^n along a grid and take x -> 1-.

    When the closed form is continuous at x = 1 (Grandi, geometric with
    -1 <= r < 1) its value there is the limit. Otherwise the grid values are
    extrapolated quadratically in 1 - x, and the result is assigned only when
    the extrapolants through the last three and the three before the last
    point agree within `tol`. The result is left unassigned when any grid
    value is non-finite or the increments between successive grid values stop
    contracting.

    Args:
        spec: Series to sum.
        x_grid: At least five strictly ascending points in (0, 1).
        closed_form: Use the closed form of the power series (default) or the
            truncated sum.
        tol: Agreement required between the two extrapolants.

    Raises:
        ArgumentError: If the grid is too short, out of (0, 1) or not
            ascending, or tol is not positive.
    """
    grid = np.asarray(list(x_grid), dtype=float)
    if grid.ndim != 1 or grid.size < ABEL_MIN_POINTS:
        msg = f"Abel summation needs at least {ABEL_MIN_POINTS} grid points, got {grid.size}"
        raise ArgumentError(msg)
    if not (np.all(grid > 0.0) and np.all(grid < 1.0)):
        msg = "Abel grid points must lie strictly inside (0, 1)"
        raise ArgumentError(msg)
    if np.any(np.diff(grid) <= 0.0):
        msg = "Abel grid must be strictly ascending"
        raise ArgumentError(msg)
    if not tol > 0.0:
        msg = f"Abel tolerance must be positive, got {tol}"
        raise ArgumentError(msg)

    evaluate = _abel_closed_form if closed_form else _abel_truncated
    values = np.array([evaluate(spec, float(x)) for x in grid])
    diagnostics: dict[str, Any] = {
        "grid": grid.tolist(),
        "values": values.tolist(),
        "evaluation": "closed-form" if closed_form else "truncated",
        "tol": tol,
    }

    if not np.all(np.isfinite(values)):
        diagnostics["reason"] = "power series diverges on the grid"
        return SummationResult(method=SummationMethod.ABEL, assigned=False, diagnostics=diagnostics)
    boundary = _abel_boundary_value(spec) if closed_form else None
    if boundary is not None:
        diagnostics["limit"] = "closed form at x = 1"
        return SummationResult(value=boundary, method=SummationMethod.ABEL, assigned=True, diagnostics=diagnostics)
    steps = np.abs(np.diff(values))
    if not steps[-1] < steps[-2]:
        diagnostics["reason"] = "grid values do not contract towards x = 1"
        return SummationResult(method=SummationMethod.ABEL, assigned=False, diagnostics=diagnostics)

    value = _extrapolate_to_one(grid, values)
    check = _extrapolate_to_one(grid[:-1], values[:-1])
    diagnostics["extrapolation_shift"] = value - float(values[-1])
    diagnostics["extrapolation_spread"] = abs(value - check)
    if not abs(value - check) <= tol:
        diagnostics["reason"] = "extrapolation to x = 1 is not stable on this grid"
        logger.debug("abel %s: extrapolants %.17g and %.17g disagree", spec.label, value, check)
        return SummationResult(method=SummationMethod.ABEL, assigned=False, diagnostics=diagnostics)
    return SummationResult(value=value, method=SummationMethod.ABEL, assigned=True, diagnostics=diagnostics)


def zeta_regularized_sum(k: int) -> SummationResult:
    """Assign sum n^k the value zeta(-k) of the Euler-Maclaurin continuation.

    This is a dispatch: the value is exactly `zeta_continued(-k).real`.
    """
    if isinstance(k, bool) or not isinstance(k, int) or not 0 <= k <= MAX_ZETA_POWER:
        msg = f"zeta regularisation is provided for integer k in [0, {MAX_ZETA_POWER}], got {k!r}"
        raise ArgumentError(msg)
    result = zeta_continued(-k)
    return SummationResult(
        value=result.real,
        method=SummationMethod.ZETA_REGULARIZED,
        assigned=True,
        diagnostics={"s": -k, "zeta_method": result.method.value, "est_error": result.est_error, "N": result.terms, "M": result.order},
    )


def assign(spec: SeriesSpec, method: SummationMethod | str, **options: Any) -> SummationResult:
    """Run one summation method on a series.

    `partial` here means the ordinary limit of partial sums; exact finite
    partial sums come from `partial_sum`.

    Raises:
        ArgumentError: For zeta regularisation of a series outside the
            sum n^k family.
    """
    method = SummationMethod(method)
    if method is SummationMethod.CESARO:
        return cesaro_sum(spec, **options)
    if method is SummationMethod.ABEL:
        return abel_sum(spec, **options)
    if method is SummationMethod.ZETA_REGULARIZED:
        k = spec.exponent
        if k is None:
            msg = f"zeta regularisation applies to sums of n^k only, not {spec.label}"
            raise ArgumentError(msg)
        return zeta_regularized_sum(k)
    return partial_sum_limit(spec, **options)
