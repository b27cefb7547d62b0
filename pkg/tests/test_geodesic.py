"""Tests for radial geodesics and the kinematic reading of the partial sums."""

import logging
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from numaxis import geodesic
from numaxis.errors import ArgumentError, HorizonError
from numaxis.geodesic import (
    GeodesicState,
    Termination,
    Trajectory,
    coordinate_time_exact,
    energy_from_state,
    horizon_proper_time,
    init_state,
    integrate,
    kinematic_constants,
    normalization_residual,
    parabola_x,
    partial_sum_kinematics,
    proper_acceleration,
)
from numaxis.metric import MetricParams
from numaxis.series import SeriesSpec, partial_sum


@pytest.fixture(scope="module")
def infall() -> Trajectory:
    """Release from rest at x = 0 with x_c = 1, dtau = 1e-4, run into the horizon."""
    p = MetricParams()
    return integrate(init_state(0.0, 0.0, p), 3.0, 1e-4, p)


class TestInitState:
    def test_rest_at_origin(self, unit_metric):
        s0 = init_state(0.0, 0.0, unit_metric)
        assert s0.eps == pytest.approx(1.0)
        assert s0.tau == 0.0 and s0.t == 0.0

    @pytest.mark.parametrize(("x0", "ux0"), [(1.0, 0.0), (0.0, 1.0)])
    def test_energy_examples(self, unit_metric, x0, ux0):
        assert init_state(x0, ux0, unit_metric).eps == pytest.approx(math.sqrt(2.0))

    def test_energy_normalisation(self, wide_metric):
        s0 = init_state(1.0, 0.7, wide_metric)
        assert abs(normalization_residual(s0, wide_metric)) < 1e-12
        assert energy_from_state(s0, wide_metric) == pytest.approx(s0.eps)

    @pytest.mark.parametrize("x0", [-1.0, -1.5])
    def test_rejects_horizon_and_interior(self, unit_metric, x0):
        with pytest.raises(HorizonError, match="-x_c = -1"):
            init_state(x0, 0.0, unit_metric)


class TestInfall:
    def test_reaches_horizon(self, infall):
        assert infall.termination is Termination.HORIZON_REACHED
        assert infall.final.tau == pytest.approx(2.0, abs=1e-4)

    def test_coordinate_time_diverges(self, infall):
        assert infall.final.t > 20.0

    def test_normalisation_and_energy_drift(self, infall):
        p = infall.params
        eps0 = infall.samples[0].eps
        for state in infall.samples:
            assert abs(normalization_residual(state, p)) < 1e-9
            assert abs(energy_from_state(state, p) - eps0) < 1e-10

    def test_position_is_parabola(self, infall):
        arrays = infall.as_arrays()
        assert np.max(np.abs(arrays["x"] + arrays["tau"] ** 2 / 4.0)) < 1e-10

    def test_coordinate_time_at_unit_proper_time(self, infall):
        arrays = infall.as_arrays()
        idx = int(np.argmin(np.abs(arrays["tau"] - 1.0)))
        assert arrays["tau"][idx] == pytest.approx(1.0, abs=1e-9)
        assert abs(arrays["t"][idx] - math.log(3.0)) < 1e-6

    def test_matches_closed_form_coordinate_time(self, infall):
        s0 = infall.samples[0]
        p = infall.params
        for state in (s for s in infall.samples[::2000] if s.tau < 1.9):
            assert state.t == pytest.approx(coordinate_time_exact(s0, state.tau, p), abs=1e-6)

    def test_proper_time_increases(self, infall):
        taus = infall.as_arrays()["tau"]
        assert np.all(np.diff(taus) > 0)


class TestClosedForms:
    def test_horizon_proper_time(self, unit_metric):
        s0 = init_state(0.0, 0.0, unit_metric)
        assert horizon_proper_time(s0, unit_metric) == pytest.approx(2.0)
        assert proper_acceleration(unit_metric) == -0.5

    def test_coordinate_time_exact_at_one(self, unit_metric):
        s0 = init_state(0.0, 0.0, unit_metric)
        assert coordinate_time_exact(s0, 1.0, unit_metric) == pytest.approx(math.log(3.0), abs=1e-14)
        with pytest.raises(HorizonError):
            coordinate_time_exact(s0, 2.0, unit_metric)

    @settings(max_examples=25, deadline=None)
    @given(x0=st.floats(min_value=-0.5, max_value=3.0), ux0=st.floats(min_value=-1.0, max_value=1.0))
    def test_integrator_follows_parabola(self, x0, ux0):
        p = MetricParams(x_c=2.0, c=1.5)
        s0 = init_state(x0, ux0, p)
        trajectory = integrate(s0, 0.5, 0.01, p)
        assert trajectory.termination is Termination.TAU_EXHAUSTED
        final = trajectory.final
        assert final.tau == pytest.approx(0.5)
        assert final.x == pytest.approx(parabola_x(s0, final.tau, p), abs=1e-10)
        assert final.t == pytest.approx(coordinate_time_exact(s0, final.tau, p), abs=1e-8)


def test_flat_limit_is_nearly_static():
    p = MetricParams(x_c=1e6)
    trajectory = integrate(init_state(0.0, 0.0, p), 1.0, 0.01, p)
    assert np.max(np.abs(trajectory.as_arrays()["x"])) < 3e-7


class TestIntegrateArguments:
    def test_step_bound(self, unit_metric):
        s0 = init_state(0.0, 0.0, unit_metric)
        with pytest.raises(ArgumentError):
            integrate(s0, 1.0, 0.2, unit_metric)
        with pytest.raises(ArgumentError):
            integrate(s0, 0.0, 0.01, unit_metric)

    def test_interior_start(self, unit_metric):
        state = GeodesicState(tau=0.0, t=0.0, x=-2.0, ux=0.0, eps=1.0)
        with pytest.raises(HorizonError):
            integrate(state, 1.0, 0.01, unit_metric)

    def test_step_budget_exhaustion_is_reported(self, unit_metric, monkeypatch, caplog):
        monkeypatch.setattr(geodesic, "MAX_STEPS", 5)
        s0 = init_state(0.0, 0.0, unit_metric)
        with caplog.at_level(logging.WARNING, logger="numaxis.geodesic"):
            trajectory = integrate(s0, 1.0, 0.01, unit_metric)
        assert trajectory.termination is Termination.DIVERGED
        assert len(trajectory.samples) == 6
        assert "step budget of 5 exhausted" in caplog.text

    def test_horizon_run_logs_no_budget_warning(self, unit_metric, caplog):
        with caplog.at_level(logging.WARNING, logger="numaxis.geodesic"):
            trajectory = integrate(init_state(0.0, 0.0, unit_metric), 3.0, 1e-2, unit_metric)
        assert trajectory.termination is Termination.HORIZON_REACHED
        assert "step budget" not in caplog.text

    def test_trajectory_requires_increasing_tau(self, unit_metric):
        s = GeodesicState(tau=0.0, t=0.0, x=0.0, ux=0.0, eps=1.0)
        with pytest.raises(ValueError):
            Trajectory(samples=(s, s), termination=Termination.TAU_EXHAUSTED, params=unit_metric)


class TestKinematics:
    @pytest.mark.parametrize("n", [1, 10, 10**3, 10**6])
    def test_matches_naturals(self, n):
        assert partial_sum_kinematics(n) == partial_sum(SeriesSpec.naturals(), n)

    def test_constants(self):
        assert kinematic_constants() == (Fraction(1, 2), Fraction(1))

    def test_rejects_zero(self):
        with pytest.raises(ArgumentError):
            partial_sum_kinematics(0)
