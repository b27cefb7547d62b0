"""Riemann zeta function: Euler-Maclaurin continuation and independent cross-checks.

Three evaluation routes are provided:

* `zeta_continued` - truncated Dirichlet sum plus integral tail and
  Bernoulli-number corrections. Valid for Re(s) > 1 - 2M, which is how the
  divergent sums 1 + 1 + ... and 1 + 2 + 3 + ... receive their values.
* `zeta_reflected` - the reflection identity
  zeta(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1-s) zeta(1-s), with zeta(1-s)
  taken from Borwein's accelerated alternating series. It never touches the
  Bernoulli table, so it is an independent oracle for Re(s) < 0.
* `zeta_direct` - plain summation with a trapezoidal tail, Re(s) > 1 only.

Bernoulli numbers use the B_1 = -1/2 convention throughout.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Callable
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Any

import mpmath
import numpy as np
from pydantic import BaseModel, ConfigDict, field_validator, model_validator
from scipy import special

from numaxis.errors import ArgumentError, PoleError

logger = logging.getLogger(__name__)

DEFAULT_EM_TERMS = 20
DEFAULT_EM_ORDER = 10
MAX_BERNOULLI_ORDER = 30
DEFAULT_DIRECT_TERMS = 1_000_000
BORWEIN_MANTISSA_BITS = 53
EM_GUARD_DIGITS = 20


class ZetaMethod(str, Enum):
    """How a zeta value was obtained."""

    DIRECT_SUM = "direct"
    EULER_MACLAURIN = "em"
    FUNCTIONAL_EQUATION = "reflect"


class ZetaArgument(BaseModel):
    """A complex argument s = u + iv."""

    model_config = ConfigDict(frozen=True)

    u: float
    """Real part."""

    v: float = 0.0
    """Imaginary part."""

    @field_validator("u", "v")
    @classmethod
    def _finite(cls, value: float) -> float:
        if not math.isfinite(value):
            msg = f"zeta argument components must be finite, got {value}"
            raise ValueError(msg)
        return value

    @classmethod
    def coerce(cls, s: ZetaArgument | complex | float | int) -> ZetaArgument:
        """Build an argument from a plain number, passing instances through."""
        if isinstance(s, ZetaArgument):
            return s
        z = complex(s)
        return cls(u=z.real, v=z.imag)

    @property
    def s(self) -> complex:
        return complex(self.u, self.v)

    @property
    def is_pole(self) -> bool:
        return self.u == 1.0 and self.v == 0.0

    @property
    def is_real_integer(self) -> bool:
        return self.v == 0.0 and self.u.is_integer()


class BernoulliTable(BaseModel):
    """Exact Bernoulli numbers B_0 ... B_{2M}."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    values: tuple[Fraction, ...]

    @model_validator(mode="after")
    def _check_known_values(self) -> BernoulliTable:
        vals = self.values
        if len(vals) < 3 or len(vals) % 2 == 0:
            msg = f"a Bernoulli table holds B_0..B_2M, got {len(vals)} values"
            raise ValueError(msg)
        if vals[0] != 1 or vals[1] != Fraction(-1, 2) or vals[2] != Fraction(1, 6):
            msg = "Bernoulli table must start with B_0 = 1, B_1 = -1/2, B_2 = 1/6"
            raise ValueError(msg)
        if any(vals[m] != 0 for m in range(3, len(vals), 2)):
            msg = "odd Bernoulli numbers beyond B_1 must vanish"
            raise ValueError(msg)
        return self

    @property
    def order(self) -> int:
        """The M for which the table holds B_0 .. B_{2M}."""
        return (len(self.values) - 1) // 2

    def __getitem__(self, m: int) -> Fraction:
        return self.values[m]

    def __len__(self) -> int:
        return len(self.values)

    def recurrence_residual(self, m: int) -> Fraction:
        """Sum_{j=0}^{m} C(m+1, j) B_j, which is zero for every m >= 1."""
        return sum((math.comb(m + 1, j) * self.values[j] for j in range(m + 1)), Fraction(0))


class ZetaResult(BaseModel):
    """A zeta value together with how it was computed and an error estimate."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    value: complex
    method: ZetaMethod
    est_error: float
    argument: ZetaArgument
    terms: int | None = None
    """N for Euler-Maclaurin and direct summation, Borwein degree for reflection."""
    order: int | None = None
    """Euler-Maclaurin correction order M."""

    @field_validator("est_error")
    @classmethod
    def _finite_error(cls, value: float) -> float:
        if not math.isfinite(value) or value < 0:
            msg = f"est_error must be finite and non-negative, got {value}"
            raise ValueError(msg)
        return value

    @property
    def real(self) -> float:
        return self.value.real


@lru_cache(maxsize=None)
def bernoulli_numbers(M: int) -> BernoulliTable:  # noqa: N803
    """Exact Bernoulli numbers B_0 .. B_{2M} from the defining recurrence.

    B_m = -1/(m+1) * sum_{j<m} C(m+1, j) B_j, which fixes B_1 = -1/2.

    Args:
        M: Half the highest index wanted, 1 <= M <= 30.

    Returns:
        A cached, read-only table shared between callers.

    Raises:
        ArgumentError: If M is out of range.
    """
    if isinstance(M, bool) or not isinstance(M, int) or not 1 <= M <= MAX_BERNOULLI_ORDER:
        msg = f"Bernoulli order M must be an integer in [1, {MAX_BERNOULLI_ORDER}], got {M!r}"
        raise ArgumentError(msg)
    values: list[Fraction] = [Fraction(1)]
    for m in range(1, 2 * M + 1):
        acc = sum((math.comb(m + 1, j) * values[j] for j in range(m)), Fraction(0))
        values.append(-acc / (m + 1))
    return BernoulliTable(values=tuple(values))


def required_order(u: float) -> int:
    """Smallest Euler-Maclaurin order M whose validity strip Re(s) > 1 - 2M contains u."""
    return max(1, math.floor((1.0 - u) / 2.0) + 1)


def _mp_number(q: int | Fraction) -> Any:
    return mpmath.mpf(q.numerator) / q.denominator


def _working_digits(u: float, N: int) -> int:  # noqa: N803
    """Decimal digits that keep the N^(1-s) cancellation out of a double result."""
    return EM_GUARD_DIGITS + max(0, math.ceil((1.0 - u) * math.log10(N)))


def _euler_maclaurin_terms(s: Any, N: int, M: int, table: BernoulliTable, number: Callable[[Any], Any]) -> tuple[Any, Any]:  # noqa: N803
    """Evaluate the order-M formula and the first omitted correction.

    `number` lifts integers and Fractions into the arithmetic in use: `Fraction`
    for integer s <= 0, mpmath at raised precision otherwise.
    """
    base = number(N)
    head = sum((number(n) ** (-s) for n in range(1, N)), number(0))
    total = head + base ** (1 - s) / (s - 1) + base ** (-s) / 2

    rising = s
    correction = None
    for k in range(1, M + 2):
        if k > 1:
            rising = rising * (s + 2 * k - 3) * (s + 2 * k - 2)
        coeff = number(table[2 * k] / math.factorial(2 * k))
        correction = coeff * rising * base ** (-s - 2 * k + 1)
        if k <= M:
            total += correction
    return total, correction


def zeta_continued(
    s: ZetaArgument | complex | float,
    N: int = DEFAULT_EM_TERMS,  # noqa: N803
    M: int = DEFAULT_EM_ORDER,  # noqa: N803
) -> ZetaResult:
    """Analytic continuation of zeta(s) by Euler-Maclaurin summation.

    value = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
            + sum_{k=1}^{M} B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1)

    Integer arguments s <= 0 are evaluated in exact rationals and rounded
    once, so zeta(-k) is reproduced without cancellation loss. Every other
    argument goes through mpmath with the working precision raised by the
    log10 N^(1-Re s) digits that the head sum and the tail term cancel.

    Args:
        s: The argument, any complex number except 1.
        N: Number of directly summed terms (N >= 2).
        M: Number of Bernoulli corrections (1 <= M < 30).

    Returns:
        A `ZetaResult` whose `est_error` is the magnitude of the first omitted
        correction.

    Raises:
        PoleError: At s = 1.
        ArgumentError: If N or M is out of range, or Re(s) <= 1 - 2M.
    """
    arg = ZetaArgument.coerce(s)
    if N < 2:
        msg = f"Euler-Maclaurin needs N >= 2, got {N}"
        raise ArgumentError(msg)
    if not 1 <= M < MAX_BERNOULLI_ORDER:
        msg = f"Euler-Maclaurin order M must be in [1, {MAX_BERNOULLI_ORDER - 1}], got {M}"
        raise ArgumentError(msg)
    if arg.is_pole:
        msg = "zeta has a simple pole at s = 1"
        raise PoleError(msg)
    if arg.u <= 1 - 2 * M:
        needed = required_order(arg.u)
        msg = f"Re(s) = {arg.u} is outside the validity strip Re(s) > {1 - 2 * M} of order M = {M}; use M >= {needed}"
        raise ArgumentError(msg)

    table = bernoulli_numbers(M + 1)
    if arg.is_real_integer and arg.u <= 0:
        total, omitted = _euler_maclaurin_terms(int(arg.u), N, M, table, Fraction)
        value = complex(float(total), 0.0)
        est_error = float(abs(omitted))
    else:
        with mpmath.workdps(_working_digits(arg.u, N)):
            total, omitted = _euler_maclaurin_terms(mpmath.mpc(arg.u, arg.v), N, M, table, _mp_number)
            value = complex(total)
            est_error = float(abs(omitted))
        if arg.v == 0.0:
            value = complex(value.real, 0.0)
    logger.debug("zeta_continued(%s) N=%d M=%d -> %s (err %.3g)", arg.s, N, M, value, est_error)
    return ZetaResult(value=value, method=ZetaMethod.EULER_MACLAURIN, est_error=est_error, argument=arg, terms=N, order=M)


@lru_cache(maxsize=32)
def _borwein_coefficients(n: int) -> tuple[int, ...]:
    """Partial sums d_0..d_n of Borwein's eta-acceleration weights (exact integers)."""
    ds = [1] * (n + 1)
    d = 1
    acc = 1
    for i in range(1, n + 1):
        d = d * 4 * (n + i - 1) * (n - i + 1)
        d //= (2 * i) * (2 * i - 1)
        acc += d
        ds[i] = acc
    return tuple(ds)


def _borwein_degree(imag: float) -> int:
    return math.ceil((BORWEIN_MANTISSA_BITS + 2.28 * abs(imag)) / 2.54) + 5


def _zeta_borwein(s: complex) -> tuple[complex, float, int]:
    """zeta(s) = eta(s) / (1 - 2^(1-s)) with Borwein's accelerated eta series."""
    n = _borwein_degree(s.imag)
    d = _borwein_coefficients(n)
    dn = d[n]
    k = np.arange(n, dtype=float)
    signs = np.where(np.arange(n) % 2 == 0, 1.0, -1.0)
    weights = np.array([float(d[j] - dn) for j in range(n)])
    eta = -np.sum(signs * weights * (k + 1.0) ** (-s)) / float(dn)
    denom = 1.0 - 2.0 ** (1.0 - s)
    bound = 3.0 * (1.0 + 2.0 * abs(s.imag)) * math.exp(abs(s.imag) * math.pi / 2.0) / (3.0 + math.sqrt(8.0)) ** n
    return complex(eta / denom), bound / abs(denom), n


def zeta_reflected(s: ZetaArgument | complex | float) -> ZetaResult:
    """zeta(s) through the reflection identity only, for Re(s) < 0.

    zeta(1-s) is then evaluated where its Dirichlet series converges
    absolutely (Re(1-s) > 1), by the alternating-series route.

    Raises:
        ArgumentError: If Re(s) >= 0.
    """
    arg = ZetaArgument.coerce(s)
    if arg.u >= 0:
        msg = f"the reflection cross-check needs Re(s) < 0, got Re(s) = {arg.u}"
        raise ArgumentError(msg)
    z = arg.s
    zeta_mirror, mirror_err, degree = _zeta_borwein(1.0 - z)
    gamma = complex(special.gamma(1.0 - z)) if arg.v else complex(float(special.gamma(1.0 - arg.u)))
    prefactor = 2.0**z * np.pi ** (z - 1.0) * np.sin(np.pi * z / 2.0) * gamma
    value = complex(prefactor * zeta_mirror)
    if arg.v == 0.0:
        value = complex(value.real, 0.0)
    est_error = float(abs(prefactor) * mirror_err + 4.0 * np.finfo(float).eps * abs(value))
    logger.debug("zeta_reflected(%s) -> %s (Borwein degree %d)", z, value, degree)
    return ZetaResult(value=value, method=ZetaMethod.FUNCTIONAL_EQUATION, est_error=est_error, argument=arg, terms=degree)


def zeta_direct(s: ZetaArgument | complex | float, n_terms: int = DEFAULT_DIRECT_TERMS) -> ZetaResult:
    """Direct summation of the Dirichlet series with a trapezoidal tail, Re(s) > 1.

    sum_{n<=N} n^-s + N^(1-s)/(s-1) - N^-s/2; `est_error` is the size of the
    next Euler-Maclaurin term |s| N^(-Re(s)-1) / 12.
    """
    arg = ZetaArgument.coerce(s)
    if arg.u <= 1.0:
        msg = f"direct summation converges only for Re(s) > 1, got Re(s) = {arg.u}"
        raise ArgumentError(msg)
    if n_terms < 1:
        msg = f"n_terms must be positive, got {n_terms}"
        raise ArgumentError(msg)
    z = arg.s
    n = np.arange(1, n_terms + 1, dtype=float)
    if arg.v == 0.0:
        head = complex(math.fsum(n ** (-arg.u)))
    else:
        head = complex(np.sum(n ** (-z)))
    big_n = float(n_terms)
    value = head + big_n ** (1.0 - z) / (z - 1.0) - big_n ** (-z) / 2.0
    if arg.v == 0.0:
        value = complex(value.real, 0.0)
    est_error = abs(z) * big_n ** (-arg.u - 1.0) / 12.0
    return ZetaResult(value=value, method=ZetaMethod.DIRECT_SUM, est_error=est_error, argument=arg, terms=n_terms)


def zeta(s: ZetaArgument | complex | float, method: ZetaMethod | str = ZetaMethod.EULER_MACLAURIN, **options: int) -> ZetaResult:
    """Evaluate zeta(s) by the named method (`em`, `reflect` or `direct`)."""
    method = ZetaMethod(method)
    if method is ZetaMethod.EULER_MACLAURIN:
        return zeta_continued(s, **options)
    if method is ZetaMethod.FUNCTIONAL_EQUATION:
        return zeta_reflected(s)
    return zeta_direct(s, **options)
