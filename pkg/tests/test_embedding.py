"""Tests for the plane embeddings of the numeric-axis metric."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from pydantic import ValidationError

from numaxis.embedding import (
    REGIONS,
    EmbeddingCurve,
    PlaneSignature,
    RegionId,
    admissible_regions,
    closed_form_y,
    derivative_residual,
    figure1_curves,
    induced_line_element_ratio,
    integrate_embedding,
    region_curve,
    rhs_squared,
)
from numaxis.errors import ArgumentError, BoundaryError, RegionError, SignatureError

# interior sampling ranges kept away from the horizon, where the slope is unbounded
RESIDUAL_RANGES = {RegionId.I: (-3.0, -1.1), RegionId.II: (-0.9, 1.0), RegionId.III: (-0.9, -0.1)}


class TestRegions:
    def test_table(self):
        assert REGIONS[RegionId.I].signature is PlaneSignature.PSEUDO_X_MINUS_Y
        assert REGIONS[RegionId.II].signature is PlaneSignature.PSEUDO_Y_MINUS_X
        assert REGIONS[RegionId.III].signature is PlaneSignature.EUCLIDEAN
        assert REGIONS[RegionId.III].anchor == 0.0

    @pytest.mark.parametrize(
        ("z", "expected"),
        [
            (-2.0, {RegionId.I}),
            (-0.5, {RegionId.II, RegionId.III}),
            (3.0, {RegionId.II}),
        ],
    )
    def test_admissible_regions(self, z, expected):
        assert admissible_regions(z) == expected

    @pytest.mark.parametrize("z", [-1.0, 0.0])
    def test_boundaries(self, z):
        with pytest.raises(BoundaryError):
            admissible_regions(z)


class TestRhsSquared:
    @pytest.mark.parametrize(
        ("z", "region", "expected"),
        [
            (-2.0, RegionId.I, 2.0),
            (0.0, RegionId.II, 2.0),
            (-0.5, RegionId.III, 1.0),
            (1.0, RegionId.II, 1.5),
        ],
    )
    def test_examples(self, z, region, expected):
        assert rhs_squared(z, region) == pytest.approx(expected)

    def test_euclidean_fails_beyond_origin(self):
        with pytest.raises(SignatureError):
            rhs_squared(0.5, RegionId.III)

    def test_euclidean_impossible_for_random_positive_z(self):
        rng = np.random.default_rng(20240601)
        for z in rng.uniform(1e-9, 1e3, size=100):
            with pytest.raises(SignatureError):
                rhs_squared(float(z), RegionId.III)

    def test_region_errors(self):
        with pytest.raises(RegionError):
            rhs_squared(-1.0, RegionId.II)
        with pytest.raises(RegionError):
            rhs_squared(0.5, RegionId.I)
        with pytest.raises(RegionError):
            rhs_squared(-3.0, RegionId.II)


class TestClosedForm:
    def test_examples(self):
        assert closed_form_y(0.0, RegionId.II, 1, 1.0) == pytest.approx(math.asinh(1.0) + math.sqrt(2.0), abs=1e-12)
        assert closed_form_y(-0.5, RegionId.III, -1, 1.0) == pytest.approx(-(math.pi / 4 - 0.5), abs=1e-12)
        assert closed_form_y(-2.0, RegionId.I, 1, 2.0) == pytest.approx(2.0 * (math.acosh(math.sqrt(2.0)) + math.sqrt(2.0)), abs=1e-12)

    @settings(max_examples=100, deadline=None)
    @given(z=st.floats(min_value=-20.0, max_value=20.0), xc=st.floats(min_value=0.1, max_value=10.0))
    def test_branch_symmetry_and_scaling(self, z, xc):
        for region in admissible_regions(z) if z not in (-1.0, 0.0) else ():
            up = closed_form_y(z, region, 1, xc)
            assert closed_form_y(z, region, -1, xc) == -up
            assert up == pytest.approx(xc * closed_form_y(z, region, 1, 1.0), rel=1e-12, abs=1e-300)

    def test_errors(self):
        with pytest.raises(RegionError):
            closed_form_y(0.5, RegionId.III, 1, 1.0)
        with pytest.raises(ArgumentError):
            closed_form_y(0.5, RegionId.II, 0, 1.0)
        with pytest.raises(ArgumentError):
            closed_form_y(0.5, RegionId.II, 1, -1.0)

    def test_horizon_anchoring(self):
        for z in (-1.0 - 1e-7, -1.0 + 1e-7):
            region = RegionId.I if z < -1.0 else RegionId.II
            assert abs(closed_form_y(z, region, 1, 1.0)) < 1e-3
        # y ~ 2 sqrt|1 + z| next to the horizon
        for z, region in ((-1.0 - 1e-6, RegionId.I), (-1.0 + 1e-6, RegionId.II)):
            assert closed_form_y(z, region, 1, 1.0) == pytest.approx(2e-3, rel=1e-5)

    @pytest.mark.parametrize(("region", "side"), [(RegionId.I, -1.0), (RegionId.II, 1.0)])
    @pytest.mark.parametrize("xc", [1.0, 2.5])
    def test_horizon_limit_is_monotone(self, region, side, xc):
        zs = [-1.0 + side * 10.0**-k for k in range(2, 7)]
        ys = [abs(closed_form_y(z, region, 1, xc)) for z in zs]
        assert all(b < a for a, b in zip(ys, ys[1:]))
        assert ys[-1] < 3e-3 * xc

    def test_region_three_is_bounded(self):
        zs = np.linspace(-1.0 + 1e-12, -1e-12, 2001)
        ys = [closed_form_y(float(z), RegionId.III, 1, 1.0) for z in zs]
        assert min(ys) > 0.0
        assert max(ys) < math.pi / 2 + 1e-9


class TestDerivativeResidual:
    @pytest.mark.parametrize("region", list(RegionId))
    def test_random_interior_points(self, region):
        rng = np.random.default_rng(7)
        low, high = RESIDUAL_RANGES[region]
        residuals = [abs(derivative_residual(float(z), region)) for z in rng.uniform(low, high, size=1000)]
        assert max(residuals) < 1e-8

    def test_scaled_xc(self):
        assert abs(derivative_residual(2.0, RegionId.II, xc=3.5)) < 1e-8


class TestIntegrateEmbedding:
    @pytest.mark.parametrize(
        ("region", "z_from", "z_to"),
        [(RegionId.III, -0.999, -0.001), (RegionId.II, -0.999, 5.0), (RegionId.I, -10.0, -1.001)],
    )
    def test_matches_closed_form(self, region, z_from, z_to):
        curve = integrate_embedding(region, z_from, z_to, 200, 1.0)
        zs = np.linspace(z_from, z_to, 200)
        exact = np.array([closed_form_y(float(z), region, 1, 1.0) for z in zs])
        assert np.max(np.abs(curve.ys - exact)) < 1e-6
        assert curve.xs == pytest.approx(zs)

    def test_lower_branch_and_scale(self):
        curve = integrate_embedding(RegionId.II, 0.0, 2.0, 11, 2.0, branch=-1)
        assert curve.branch == -1
        assert np.all(curve.ys <= 0.0)
        assert curve.ys[0] == pytest.approx(closed_form_y(0.0, RegionId.II, -1, 2.0), abs=1e-6)

    @pytest.mark.parametrize(
        ("args", "error"),
        [
            ((RegionId.III, -0.5, 0.5, 10, 1.0), RegionError),
            ((RegionId.II, 1.0, 0.5, 10, 1.0), ArgumentError),
            ((RegionId.II, 0.0, 1.0, 1, 1.0), ArgumentError),
        ],
    )
    def test_errors(self, args, error):
        with pytest.raises(error):
            integrate_embedding(*args)


class TestFigure1:
    def test_six_branches(self):
        curves = figure1_curves(1.0)
        assert [(c.region, c.branch) for c in curves] == [
            (RegionId.I, 1),
            (RegionId.I, -1),
            (RegionId.II, 1),
            (RegionId.II, -1),
            (RegionId.III, 1),
            (RegionId.III, -1),
        ]
        assert all(len(c.samples) == 200 for c in curves)

    def test_intervals(self):
        curves = {(c.region, c.branch): c for c in figure1_curves(2.0, margin=0.05)}
        assert curves[RegionId.I, 1].xs[0] == pytest.approx(-10.0)
        assert curves[RegionId.I, 1].xs[-1] == pytest.approx(-2.1)
        assert curves[RegionId.II, 1].xs[0] == pytest.approx(-1.9)
        assert curves[RegionId.II, 1].xs[-1] == pytest.approx(10.0)
        assert curves[RegionId.III, 1].xs[0] == pytest.approx(-1.9)
        assert curves[RegionId.III, 1].xs[-1] == pytest.approx(-0.1)

    def test_mirror_symmetry(self):
        curves = figure1_curves(1.0)
        for upper, lower in zip(curves[::2], curves[1::2]):
            assert np.array_equal(lower.xs, upper.xs)
            assert np.array_equal(lower.ys, -upper.ys)

    def test_region_three_range(self):
        for curve in figure1_curves(1.0):
            if curve.region is RegionId.III and curve.branch == 1:
                assert np.all(curve.ys > 0.0)
                assert np.all(curve.ys < math.pi / 2 + 1e-9)

    @pytest.mark.parametrize(("margin", "n"), [(0.0, 200), (0.1, 200), (0.01, 1)])
    def test_argument_errors(self, margin, n):
        with pytest.raises(ArgumentError):
            figure1_curves(1.0, margin=margin, n=n)


class TestCurveModel:
    def test_rejects_points_outside_region(self):
        with pytest.raises(ValidationError):
            EmbeddingCurve(region=RegionId.III, branch=1, samples=((0.5, 0.1),), xc=1.0)

    def test_rejects_wrong_sign(self):
        with pytest.raises(ValidationError):
            EmbeddingCurve(region=RegionId.II, branch=1, samples=((0.5, -0.1),), xc=1.0)

    def test_rejects_bad_branch(self):
        with pytest.raises(ValidationError):
            EmbeddingCurve(region=RegionId.II, branch=2, samples=(), xc=1.0)


class TestIsometry:
    @pytest.mark.parametrize(
        ("region", "x_from", "x_to"),
        [(RegionId.I, -4.0, -1.2), (RegionId.II, -0.8, 4.0), (RegionId.III, -0.8, -0.2)],
    )
    def test_induced_line_element_tends_to_metric(self, region, x_from, x_to):
        coarse = induced_line_element_ratio(region_curve(region, x_from, x_to, 50, 1.0))
        fine = induced_line_element_ratio(region_curve(region, x_from, x_to, 2000, 1.0))
        assert np.max(np.abs(fine - 1.0)) < 1e-3
        assert np.max(np.abs(fine - 1.0)) < np.max(np.abs(coarse - 1.0))
