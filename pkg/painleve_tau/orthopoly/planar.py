"""
Planar moments and their contour representation

For a polynomial q,

    integral over C of q(u) conj(u)^j |u|^{-2 gamma} e^{-N(|u|^2 - t u - t conj(u))} dA(u)
        = pi Gamma(j - gamma + 1)/N^{j - gamma + 1}
          * (1/2 pi i) contour integral of q(u) e^{N t u} (u - t)^{-j-1} (1 - t/u)^gamma du

on a circle enclosing 0 and t. Both sides are computed independently here.
"""
import logging
import math
from typing import Sequence, Tuple, Union

import numpy as np
from numpy.polynomial import polynomial as npoly
from scipy.special import gammaln, roots_genlaguerre

from painleve_tau.exceptions import InvalidParameters, NumericalBreakdown
from painleve_tau.orthopoly.polynomial import MonicPolynomial

LOGGER = logging.getLogger("PainleveTau")

PolynomialLike = Union[MonicPolynomial, int, Sequence[complex]]

PLANAR_TOLERANCE = 1e-7
CONTOUR_TOLERANCE = 1e-12
_PLANAR_LEVELS = 4
_ANGULAR_POINTS = 128
_RADIAL_POINTS = 64
_CONTOUR_POINTS = 256
_MAX_CONTOUR_POINTS = 8192


def polynomial_coefficients(q: PolynomialLike) -> np.ndarray:
    """Ascending coefficients of a polynomial given in one of the accepted forms

    Args:
        q (PolynomialLike): a MonicPolynomial, a monomial degree, or ascending coefficients

    Raises:
        InvalidParameters: if the monomial degree is negative or the sequence is empty

    Returns:
        np.ndarray: complex coefficients
    """
    if isinstance(q, MonicPolynomial):
        return q.as_array()
    if isinstance(q, (int, np.integer)):
        if q < 0:
            raise InvalidParameters(f"Monomial degree must be nonnegative, got {q}")
        coefficients = np.zeros(int(q) + 1, dtype=complex)
        coefficients[-1] = 1.0
        return coefficients
    coefficients = np.asarray(q, dtype=complex)
    if coefficients.size == 0:
        raise InvalidParameters("Empty polynomial")
    return coefficients


def _check_planar(j: int, gamma: float, big_n: float, t: float) -> None:
    if j < 0:
        raise InvalidParameters(f"j must be nonnegative, got {j}")
    if not 0.0 <= gamma < 1.0:
        raise InvalidParameters(f"gamma must be in [0, 1), got {gamma}")
    if not big_n > 0:
        raise InvalidParameters(f"N must be positive, got {big_n}")
    if not math.isfinite(t):
        raise InvalidParameters(f"t must be finite, got {t}")


def _planar_sum(
    coefficients: np.ndarray,
    j: int,
    gamma: float,
    big_n: float,
    t: float,
    angular: int,
    radial: int,
) -> Tuple[complex, float]:
    """Product rule: angular trapezoid times generalized Gauss-Laguerre in x = N rho^2

    With x = N rho^2 the area element rho^{1 - 2 gamma} d rho becomes N^{gamma - 1} x^{-gamma}
    dx / 2, and the remaining angular integral is an entire function of x.
    """
    nodes, weights = roots_genlaguerre(radial, -gamma)
    rho = np.sqrt(nodes / big_n)
    theta = 2.0 * math.pi * np.arange(angular) / angular
    u = rho[:, None] * np.exp(1j * theta)[None, :]
    integrand = (
        npoly.polyval(u, coefficients)
        * np.conj(u) ** j
        * np.exp(2.0 * big_n * t * rho[:, None] * np.cos(theta)[None, :])
    )
    angular_integrals = integrand.sum(axis=1) * (2.0 * math.pi / angular)
    terms = weights * angular_integrals * big_n ** (gamma - 1.0) / 2.0
    return complex(terms.sum()), float(np.abs(terms).sum())


def planar_moment(q: PolynomialLike, j: int, gamma: float, big_n: float, t: float) -> complex:
    """Planar integral of q(u) conj(u)^j |u|^{-2 gamma} e^{-N(|u|^2 - t u - t conj(u))}

    The resolution doubles in both directions until two levels agree within 1e-7 relative.

    Args:
        q (PolynomialLike): polynomial
        j (int): power of conj(u)
        gamma (float): exponent in [0, 1)
        big_n (float): positive scaling N
        t (float): real time parameter

    Raises:
        NumericalBreakdown: if the certificate fails at the largest resolution

    Returns:
        complex: the planar moment
    """
    _check_planar(j, gamma, big_n, t)
    coefficients = polynomial_coefficients(q)
    angular, radial = _ANGULAR_POINTS, _RADIAL_POINTS
    previous, _ = _planar_sum(coefficients, j, gamma, big_n, t, angular, radial)
    for _ in range(_PLANAR_LEVELS):
        angular, radial = 2 * angular, 2 * radial
        current, absolute = _planar_sum(coefficients, j, gamma, big_n, t, angular, radial)
        if abs(current - previous) <= PLANAR_TOLERANCE * abs(current) + 1e-14 * absolute:
            LOGGER.debug("planar moment j=%d converged with %d x %d points", j, angular, radial)
            return current
        previous = current
    raise NumericalBreakdown(
        f"Planar moment j={j}, gamma={gamma}, N={big_n}, t={t} did not converge "
        f"with {angular} x {radial} points"
    )


def _contour_sum(
    coefficients: np.ndarray, j: int, gamma: float, big_n: float, t: float, points: int
) -> Tuple[complex, float]:
    center = t / 2.0
    radius = max(1.5, 2.0 * abs(t))
    offsets = radius * np.exp(2j * math.pi * np.arange(points) / points)
    u = center + offsets
    integrand = (
        npoly.polyval(u, coefficients)
        * np.exp(big_n * t * u)
        / (u - t) ** (j + 1)
        * np.exp(gamma * np.log(1.0 - t / u))
    )
    # (1/2 pi i) du = offset d theta / (2 pi)
    terms = integrand * offsets / points
    return complex(terms.sum()), float(np.abs(terms).sum())


def contour_rhs(q: PolynomialLike, j: int, gamma: float, big_n: float, t: float) -> complex:
    """Contour side of the planar identity, on the circle around t/2 of radius max(1.5, 2|t|)

    (1 - t/u)^gamma uses the principal branch, analytic off [0, t] and equal to 1 at infinity.

    Args:
        q (PolynomialLike): polynomial
        j (int): power of conj(u) on the planar side
        gamma (float): exponent in [0, 1)
        big_n (float): positive scaling N
        t (float): real time parameter

    Raises:
        NumericalBreakdown: if the trapezoidal rule does not converge

    Returns:
        complex: pi Gamma(j - gamma + 1)/N^{j - gamma + 1} times the contour average
    """
    _check_planar(j, gamma, big_n, t)
    coefficients = polynomial_coefficients(q)
    prefactor = math.pi * math.exp(gammaln(j - gamma + 1.0) - (j - gamma + 1.0) * math.log(big_n))
    points = _CONTOUR_POINTS
    previous, _ = _contour_sum(coefficients, j, gamma, big_n, t, points)
    while points < _MAX_CONTOUR_POINTS:
        points *= 2
        current, absolute = _contour_sum(coefficients, j, gamma, big_n, t, points)
        if abs(current - previous) <= CONTOUR_TOLERANCE * abs(current) + 1e-15 * absolute:
            return prefactor * current
        previous = current
    raise NumericalBreakdown(f"Contour side j={j}, gamma={gamma}, t={t} did not converge")


def planar_identity_error(
    q: PolynomialLike, j: int, gamma: float, big_n: float, t: float
) -> Tuple[complex, complex, float]:
    """Both sides of the planar identity and their relative difference

    Args:
        q (PolynomialLike): polynomial
        j (int): power of conj(u)
        gamma (float): exponent in [0, 1)
        big_n (float): positive scaling N
        t (float): real time parameter

    Returns:
        Tuple[complex, complex, float]: (planar, contour, |planar - contour|/|contour|)
    """
    planar = planar_moment(q, j, gamma, big_n, t)
    contour = contour_rhs(q, j, gamma, big_n, t)
    scale = abs(contour) if contour != 0 else 1.0
    return planar, contour, abs(planar - contour) / scale
