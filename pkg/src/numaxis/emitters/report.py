"""JSON emission of scalar results on stdout."""

from __future__ import annotations

import json
import math
import sys
from collections.abc import Mapping, Sequence
from enum import Enum
from fractions import Fraction
from typing import Any, TextIO

from numaxis.emitters.tables import SIGNIFICANT_DIGITS


def round_significant(value: float, digits: int = SIGNIFICANT_DIGITS) -> float | None:
    """Round to `digits` significant digits; non-finite values become None."""
    if not math.isfinite(value):
        return None
    return float(f"{value:.{digits}g}")


def to_jsonable(value: Any) -> Any:
    """Convert results into JSON-ready values.

    Integers stay exact, floats are rounded to 12 significant digits, a
    `Fraction` becomes its float value, enums their value, and mappings and
    sequences are converted recursively.
    """
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, Enum):
        return value.value
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else round_significant(float(value))
    if isinstance(value, float):
        return round_significant(value)
    if isinstance(value, complex):
        return {"real": round_significant(value.real), "imag": round_significant(value.imag)}
    if isinstance(value, Mapping):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, Sequence):
        return [to_jsonable(v) for v in value]
    if hasattr(value, "tolist"):
        return to_jsonable(value.tolist())
    return str(value)


def emit_json(payload: Mapping[str, Any], stream: TextIO | None = None) -> str:
    """Write `payload` as one JSON line and return the text."""
    text = json.dumps(to_jsonable(payload), allow_nan=False)
    print(text, file=stream or sys.stdout)
    return text
