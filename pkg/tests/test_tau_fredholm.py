"""
Test the Fredholm determinant of the tau function
"""
import math
import os

import numpy as np
import pytest

from painleve_tau.exceptions import InvalidParameters
from painleve_tau.tau_fredholm import (
    TauParams,
    assemble_a_matrix,
    bisect_sign_change,
    kernel_matrix,
    kernel_symmetry_defect,
    norm_bound,
    operator_norm_estimate,
    pole_free_threshold,
    relaxed_bound,
    scan_grid,
    sign_brackets,
    TAU_LOG_LIMIT,
    tau,
    tau_from_slogdet,
    tau_scan,
)

LONG_TESTS = os.getenv("PAINLEVE_TAU_LONG_TESTS")


def test_default_contour_shift() -> None:
    """The shift is max(1/2, -s) unless given"""
    assert TauParams.default(-2.5, 0.1, 10).epsilon == 2.5
    assert TauParams.default(-0.2, 0.1, 10).epsilon == 0.5
    assert TauParams.default(3.0, 0.1, 10).epsilon == 0.5
    assert TauParams.default(3.0, 0.1, 10, 0.0).epsilon == 0.0
    assert TauParams.default(3.0, 0.1, 10, 0.25).epsilon == 0.25


@pytest.mark.parametrize(
    "s, gamma, n, epsilon",
    [(0.0, 1.0, 10, 0.0), (0.0, -0.1, 10, 0.0), (0.0, 0.1, 0, 0.0), (0.0, 0.1, 10, -1.0)],
)
def test_invalid_parameters(s: float, gamma: float, n: int, epsilon: float) -> None:
    """gamma outside [0, 1), n < 1 and a negative shift are rejected"""
    with pytest.raises(InvalidParameters):
        TauParams(s=s, gamma=gamma, n=n, epsilon=epsilon)


def test_a_matrix_shape() -> None:
    """A has one row per negative node and one column per node"""
    matrix = assemble_a_matrix(TauParams.default(-1.0, 0.3, 12))
    assert matrix.shape == (12, 24)
    assert np.all(np.isfinite(matrix))


@pytest.mark.parametrize("s", [-6.0, -1.0, 0.0, 2.0, 5.0])
def test_gamma_zero_is_one(s: float) -> None:
    """sin(pi gamma) vanishes at gamma = 0, so tau is exactly one"""
    assert tau(TauParams.default(s, 0.0, 10)) == 1.0


@pytest.mark.parametrize("gamma", [0.1, 0.5, 0.9])
def test_tau_limit(gamma: float) -> None:
    """tau tends to one as s goes to -infinity"""
    assert abs(tau(TauParams.default(-8.0, gamma, 30)) - 1.0) < 1e-6


def test_kernel_is_real_and_symmetric() -> None:
    """A A^T is real up to rounding and the kernel is symmetric"""
    params = TauParams.default(1.5, 0.1, 40)
    _, imaginary_ratio = kernel_matrix(params)
    assert imaginary_ratio < 1e-10
    assert kernel_symmetry_defect(params) < 1e-12


def test_pole_free_threshold() -> None:
    """s0 solves sqrt(2/pi) e^{-s^2/2}/s^2 = 1"""
    s0 = pole_free_threshold()
    assert s0 == pytest.approx(-0.7701449782, abs=1e-9)
    assert relaxed_bound(s0) == pytest.approx(1.0, abs=1e-9)


def test_norm_bound() -> None:
    """The exact bound is below the relaxed one and both decay"""
    near = norm_bound(-1.5, 0.5)
    far = norm_bound(-4.0, 0.5)
    assert near.exact <= near.relaxed
    assert far.exact < near.exact
    with pytest.raises(InvalidParameters):
        norm_bound(0.5, 0.5)
    with pytest.raises(InvalidParameters):
        norm_bound(-1.0, 0.0)


def test_tau_positive_below_threshold() -> None:
    """tau stays positive on s <= s0"""
    s0 = pole_free_threshold()
    for gamma in (0.1, 0.5, 0.9):
        for s in np.arange(-8.0, s0, 0.5):
            assert tau(TauParams.default(float(s), gamma, 30)) > 0


def test_scan_grid() -> None:
    """The grid includes both ends when they are on it"""
    assert scan_grid(-1.0, 1.0, 0.5).tolist() == [-1.0, -0.5, 0.0, 0.5, 1.0]
    assert len(scan_grid(-8.0, 8.0, 0.02)) == 801
    with pytest.raises(InvalidParameters):
        scan_grid(1.0, -1.0, 0.1)
    with pytest.raises(InvalidParameters):
        scan_grid(-1.0, 1.0, 0.0)


def test_sign_brackets() -> None:
    """Consecutive points with opposite signs are bracketed"""
    grid = np.array([0.0, 1.0, 2.0, 3.0])
    values = np.array([1.0, -1.0, -2.0, 3.0])
    assert sign_brackets(grid, values) == [(0.0, 1.0), (2.0, 3.0)]


def test_bisection() -> None:
    """The bisection finds a simple root and rejects brackets without a sign change"""
    assert bisect_sign_change(lambda x: x - 0.3, 0.0, 1.0, 1e-12) == pytest.approx(0.3, abs=1e-11)
    with pytest.raises(InvalidParameters):
        bisect_sign_change(lambda x: x + 2.0, 0.0, 1.0)


def test_scan_independent_of_workers() -> None:
    """The values do not depend on the number of worker processes"""
    serial = tau_scan(0.3, 10, -2.0, 2.0, 0.5, workers=1)
    parallel = tau_scan(0.3, 10, -2.0, 2.0, 0.5, workers=2)
    assert np.array_equal(serial.tau, parallel.tau)
    assert serial.brackets == parallel.brackets
    assert np.allclose(serial.atan_tau, np.arctan(serial.tau))


@pytest.mark.skipif(not LONG_TESTS, reason="set PAINLEVE_TAU_LONG_TESTS to run")  # type: ignore
def test_first_zero_across_resolutions() -> None:
    """The first sign change at gamma = 0.1 moves by less than 0.1 from n = 30 to n = 80"""
    coarse = tau_scan(0.1, 30, -8.0, 8.0, 0.02)
    fine = tau_scan(0.1, 80, -8.0, 8.0, 0.02)
    assert coarse.brackets and fine.brackets
    first_coarse = coarse.brackets[0][0]
    first_fine = fine.brackets[0][0]
    assert math.fabs(first_coarse - first_fine) < 0.1


def test_operator_norm_below_bound() -> None:
    """The discretized kernel norm stays below the analytic bound"""
    for s in (-1.5, -3.0):
        estimate = operator_norm_estimate(TauParams.default(s, 0.5, 40))
        assert 0 < estimate <= norm_bound(s, 0.5).exact * 1.01
    with pytest.raises(InvalidParameters):
        operator_norm_estimate(TauParams.default(0.5, 0.5, 10))


@pytest.mark.parametrize("s", [0.5, 2.0])
def test_independent_of_contour_shift(s: float) -> None:
    """Moving the column contour away from the branch point leaves tau unchanged"""
    reference = tau(TauParams.default(s, 0.5, 150))
    for epsilon in (0.75, 1.0):
        shifted = tau(TauParams.default(s, 0.5, 150, epsilon))
        assert abs(shifted - reference) < 1e-6


@pytest.mark.parametrize("s", [0.5, 2.0])
def test_nystrom_convergence(s: float) -> None:
    """Successive resolutions get closer to each other"""
    coarse, middle, fine = (tau(TauParams.default(s, 0.5, n)) for n in (30, 80, 150))
    assert abs(middle - fine) < abs(coarse - middle)


def test_overflowing_tau() -> None:
    """Past the largest double tau is +/- inf and its arctan is +/- pi/2"""
    assert tau_from_slogdet(1.0, 800.0) == math.inf
    assert tau_from_slogdet(-1.0, 800.0) == -math.inf
    assert tau_from_slogdet(0.0, 800.0) == 0.0
    assert tau_from_slogdet(-1.0, math.log(2.0)) == pytest.approx(-2.0)

    series = tau_scan(0.1, 150, 29.0, 30.0, 1.0, epsilon=0.0)
    assert np.all(series.log_abs > TAU_LOG_LIMIT)
    assert np.all(np.isinf(series.tau))
    assert np.allclose(np.abs(series.atan_tau), math.pi / 2)
