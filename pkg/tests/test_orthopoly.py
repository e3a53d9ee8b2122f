"""
Test the complex moments, the Hankel solves and the planar identity
"""
import math

import numpy as np
import pytest

from painleve_tau.exceptions import InvalidParameters
from painleve_tau.orthopoly import (
    MonicPolynomial,
    complex_moments,
    exact_moments_gamma0,
    hankel_det,
    hankel_phase_check,
    monic_orthogonal,
    orthogonality_residual,
    planar_identity_error,
    unfold_polynomial,
    weight_w,
)
from painleve_tau.types import Plane
from painleve_tau.utils.precision import resolve_digits


@pytest.fixture(name="pi_six", scope="module")
def fixture_pi_six() -> MonicPolynomial:
    """pi_6 at gamma = 1/2, z0 = 1 in the automatic precision"""
    return monic_orthogonal(6, 1.0, 0.5)


def test_resolve_digits() -> None:
    """max(30, 3k) by default, explicit values at or above double precision"""
    assert resolve_digits(4, None) == 30
    assert resolve_digits(20, None) == 60
    assert resolve_digits(20, 15) == 15
    with pytest.raises(InvalidParameters):
        resolve_digits(20, 14)


def test_monic_polynomial() -> None:
    """Evaluation, scaled evaluation and derivative of z^2 - 1"""
    poly = MonicPolynomial.from_values([-1, 0, 1])
    assert poly.degree == 2
    assert poly.evaluate(3.0) == pytest.approx(8.0)
    assert poly.evaluate_scaled(2.0) == pytest.approx(0.75)
    assert poly.evaluate_derivative(2.0) == pytest.approx(4.0)
    with pytest.raises(InvalidParameters):
        poly.evaluate_scaled(0.0)
    with pytest.raises(InvalidParameters):
        MonicPolynomial.from_values([1, 2])
    with pytest.raises(InvalidParameters):
        MonicPolynomial((), 15)


def test_polynomial_json() -> None:
    """The serialized form carries the coefficients as [re, im] pairs"""
    poly = MonicPolynomial.from_values([2j, 1], 30, {"k": 1, "z0": 1.0, "gamma": 0.0})
    content = poly.to_json()
    assert content["degree"] == 1
    assert content["coefficients"] == [[0.0, 2.0], [1.0, 0.0]]
    assert content["precision"] == 30
    assert content["provenance"] == {"gamma": 0.0, "k": 1, "z0": 1.0}


def test_weight_off_segment() -> None:
    """The weight is undefined on [0, 1] and tends to z^-k e^-kz/z0 far away"""
    with pytest.raises(InvalidParameters):
        weight_w(0.5, 3, 1.0, 0.5)
    z = 40.0 + 30.0j
    ratio = weight_w(z, 3, 1.0, 0.5) / (z**-3 * np.exp(-3 * z))
    assert abs(ratio - 1.0) < 0.02


def test_gamma_zero_moments() -> None:
    """At gamma = 0 the trapezoidal moments match the residue formula"""
    numerical = complex_moments(5, 1.0, 0.0, 9)
    exact = exact_moments_gamma0(5, 1.0, 9)
    scale = exact.max_modulus
    assert np.max(np.abs(numerical.as_array() - exact.as_array())) < 1e-10 * scale
    assert exact.as_array()[5:].tolist() == [0j] * 5


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_gamma_zero_hankel(k: int) -> None:
    """The normalized Hankel determinant is pi^k at gamma = 0"""
    value = hankel_phase_check(exact_moments_gamma0(k, 1.0, 2 * k - 2), k)
    assert abs(value - math.pi**k) < 1e-10 * math.pi**k


@pytest.mark.parametrize("gamma", [1.0 / 3.0, 2.0 / 3.0])
def test_hankel_phase(gamma: float) -> None:
    """The normalized Hankel determinants are positive reals"""
    for k in range(1, 5):
        moments = complex_moments(k, 1.0, gamma, 2 * k - 2, digits=resolve_digits(k, None))
        value = hankel_phase_check(moments, k)
        assert abs(np.angle(value)) < 1e-8
        assert abs(hankel_det(moments, k)) > 0


def test_invalid_moments() -> None:
    """Contours need a power of two of points, gamma must be in [0, 1)"""
    with pytest.raises(InvalidParameters):
        complex_moments(3, 1.0, 0.5, 5, points=100)
    with pytest.raises(InvalidParameters):
        complex_moments(3, 1.0, 1.0, 5)
    with pytest.raises(InvalidParameters):
        complex_moments(3, 0.0, 0.5, 5)


def test_gamma_zero_polynomial() -> None:
    """At gamma = 0 the orthogonal polynomial is z^k"""
    poly = monic_orthogonal(4, 1.0, 0.0)
    assert poly.is_extended
    assert np.max(np.abs(poly.as_array()[:-1])) < 1e-12
    assert poly.provenance == {"k": 4, "z0": 1.0, "gamma": 0.0}


def test_orthogonality(pi_six: MonicPolynomial) -> None:
    """pi_k is orthogonal to the lower powers"""
    moments = complex_moments(6, 1.0, 0.5, 11, digits=pi_six.digits)
    assert orthogonality_residual(pi_six, moments) < 1e-18


def test_double_precision_agrees(pi_six: MonicPolynomial) -> None:
    """The double-precision solve agrees with the extended one at small degree"""
    double = monic_orthogonal(6, 1.0, 0.5, precision=15)
    assert not double.is_extended
    extended = pi_six.as_array()
    gap = np.max(np.abs(double.as_array() - extended)) / np.max(np.abs(extended))
    assert gap < 1e-5


def test_unfold_polynomial() -> None:
    """p_n(lambda) = lambda^ell q_k(lambda^d) with q_k(u) = (-1)^k t^k pi_k(1 - u/t)"""
    poly = MonicPolynomial.from_values([1.0, -2.5, 1.0])
    unfolded = unfold_polynomial(poly, 1.0, 2, 1)
    assert unfolded.plane == Plane.LAMBDA
    assert unfolded.degree == 5
    assert np.allclose(unfolded.as_array(), [0, -0.5, 0, 0.5, 0, 1], atol=1e-14)
    with pytest.raises(InvalidParameters):
        unfold_polynomial(poly, 1.0, 2, 2)
    with pytest.raises(InvalidParameters):
        unfold_polynomial(unfolded, 1.0, 2, 1)


@pytest.mark.parametrize("gamma", [0.25, 0.75])
def test_planar_identity(gamma: float) -> None:
    """Planar moments equal their contour form"""
    for j in (0, 2):
        _, _, error = planar_identity_error(3, j, gamma, 1.0, 0.3)
        assert error < 1e-6
