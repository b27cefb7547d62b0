"""Shared fixtures for the numaxis test suite."""

import os
import sys

import pytest

sys.path.insert(0, os.path.join(os.path.dirname(__file__), "..", "src"))

from numaxis.metric import MetricParams  # noqa: E402


@pytest.fixture
def unit_metric() -> MetricParams:
    """x_c = 1, c = 1."""
    return MetricParams()


@pytest.fixture
def wide_metric() -> MetricParams:
    return MetricParams(x_c=2.5, c=3.0)
