"""
Scalar potentials: phi-hat, the g-function, phi(z; r) and the conformal map zeta(z; z0)
"""
import cmath
import math
from typing import Optional, Union

import numpy as np

from painleve_tau.exceptions import InvalidParameters
from painleve_tau.geometry.tracing import trace_radial

ComplexLike = Union[complex, np.ndarray]

ON_CURVE_TOLERANCE = 1e-9
UNIVALENCE_RADIUS = 0.25
Z0_RANGE = (0.7, 1.3)
_SERIES_RADIUS = 0.05
_SERIES_TERMS = 24


def phi_hat(lam: ComplexLike, t_c: float, d: int) -> ComplexLike:
    """phi-hat(lambda) = log(t_c - lambda^d) + lambda^d/t_c - log t_c, principal log

    Args:
        lam (ComplexLike): point(s) of the lambda-plane
        t_c (float): critical time
        d (int): symmetry order

    Raises:
        InvalidParameters: if lambda^d = t_c

    Returns:
        ComplexLike: phi-hat, same shape as lam
    """
    power = np.power(np.asarray(lam, dtype=complex), d)
    gap = t_c - power
    if np.any(gap == 0):
        raise InvalidParameters("phi-hat is singular where lambda^d = t_c")
    value = np.log(gap) + power / t_c - math.log(t_c)
    if np.ndim(value) == 0:
        return complex(value)
    return value


def ell_hat(r: float, z0: float) -> float:
    """Constant log r - r/z0 of the g-function

    Args:
        r (float): level
        z0 (float): ratio t_c^2/t^2

    Returns:
        float: log r - r/z0
    """
    return math.log(r) - r / z0


def potential_v(z: complex, z0: float) -> complex:
    """V(z) = z/z0 + log z

    Args:
        z (complex): point
        z0 (float): ratio t_c^2/t^2

    Returns:
        complex: V(z)
    """
    return z / z0 + cmath.log(z)


def gamma_r_radius(theta: float, r: float, z0: float) -> float:
    """Radius of Gamma_r along the ray of angle theta

    Args:
        theta (float): ray angle
        r (float): level
        z0 (float): ratio t_c^2/t^2

    Raises:
        InvalidParameters: if the ray has no crossing

    Returns:
        float: the radius
    """
    level = ell_hat(r, z0)
    cosine = math.cos(theta)
    rho = trace_radial(
        lambda rho: math.log(rho) - rho * cosine / z0 - level,
        lambda rho: 1.0 / rho - cosine / z0,
        z0,
    )
    if rho is None:
        raise InvalidParameters(f"Gamma_r has no crossing at theta = {theta}")
    return rho


def is_inside_gamma_r(z: complex, r: float, z0: float, curve: Optional[object] = None) -> bool:
    """Interior/exterior classification with respect to Gamma_r

    The exact radial comparison is used unless a traced curve is given, in which case its winding
    number decides.

    Args:
        z (complex): point
        r (float): level
        z0 (float): ratio t_c^2/t^2
        curve (Optional[object]): traced Gamma_r, a CurveSample

    Raises:
        InvalidParameters: if z lies on the curve within tolerance

    Returns:
        bool: True inside
    """
    if z == 0:
        return True
    radius = gamma_r_radius(cmath.phase(z), r, z0)
    if abs(abs(z) - radius) <= ON_CURVE_TOLERANCE * max(1.0, radius):
        raise InvalidParameters(f"{z} lies on Gamma_r; the side is ambiguous")
    if curve is not None:
        # pylint: disable=import-outside-toplevel
        from painleve_tau.geometry.curves import winding_number

        return winding_number(curve, z) != 0  # type: ignore[arg-type]
    return abs(z) < radius


def g_function(z: complex, r: float, z0: float, curve: Optional[object] = None) -> complex:
    """g = z/z0 + ell-hat inside Gamma_r, log z outside

    Args:
        z (complex): point off the curve
        r (float): level
        z0 (float): ratio t_c^2/t^2
        curve (Optional[object]): traced Gamma_r used for the classification

    Returns:
        complex: g(z)
    """
    if is_inside_gamma_r(z, r, z0, curve):
        return z / z0 + ell_hat(r, z0)
    return cmath.log(z)


def phi(z: complex, r: float, z0: float, curve: Optional[object] = None) -> complex:
    """phi(z; r): log z - z/z0 - ell-hat inside Gamma_r, z/z0 - log z + ell-hat outside

    Args:
        z (complex): point off the curve
        r (float): level
        z0 (float): ratio t_c^2/t^2
        curve (Optional[object]): traced Gamma_r used for the classification

    Returns:
        complex: phi(z; r)
    """
    level = ell_hat(r, z0)
    if is_inside_gamma_r(z, r, z0, curve):
        return cmath.log(z) - z / z0 - level
    return z / z0 - cmath.log(z) + level


def g_jump_residual(z: complex, r: float, z0: float, step: float = 1e-6) -> complex:
    """g_+ + g_- - ell-hat - V at a point of Gamma_r

    The boundary values are g at z(1 - step) and z(1 + step), each classified against the
    curve, so a point that is not on Gamma_r leaves a residual of order |phi(z; r)|.

    Args:
        z (complex): point of the curve
        r (float): level
        z0 (float): ratio t_c^2/t^2
        step (float): relative radial offset of the boundary values

    Returns:
        complex: the residual, O(step) on the curve
    """
    g_inner = g_function(z * (1.0 - step), r, z0)
    g_outer = g_function(z * (1.0 + step), r, z0)
    return g_inner + g_outer - ell_hat(r, z0) - potential_v(z, z0)


def phi_conformal(z: ComplexLike, z0: float) -> ComplexLike:
    """Phase (z - 1)/z0 - log z whose critical point is z = z0

    Args:
        z (ComplexLike): point(s)
        z0 (float): ratio t_c^2/t^2

    Returns:
        ComplexLike: the phase
    """
    return (np.asarray(z) - 1.0) / z0 - np.log(z)


def _q_function(u: np.ndarray) -> np.ndarray:
    """q(u) = 2 (u - log(1 + u)) / u^2, analytic at u = 0 with q(0) = 1

    Args:
        u (np.ndarray): complex argument, |u| < 1

    Returns:
        np.ndarray: q(u)
    """
    u = np.asarray(u, dtype=complex)
    small = np.abs(u) < _SERIES_RADIUS
    series = np.zeros_like(u)
    power = np.ones_like(u)
    for m in range(_SERIES_TERMS):
        series = series + 2.0 * (-1) ** m * power / (m + 2)
        power = power * u
    safe = np.where(small, 1.0, u)
    direct = 2.0 * (safe - np.log(1.0 + safe)) / (safe * safe)
    return np.where(small, series, direct)


def _analytic_root(z: np.ndarray, z0: float) -> np.ndarray:
    """Analytic square root R of phi_conformal(z) - phi_conformal(z0)

    Args:
        z (np.ndarray): points near 1
        z0 (float): ratio t_c^2/t^2

    Returns:
        np.ndarray: R(z), with R(z) ~ (z - z0)/(sqrt(2) z0)
    """
    u = (np.asarray(z, dtype=complex) - z0) / z0
    return u / math.sqrt(2.0) * np.sqrt(_q_function(u))


def _check_conformal_domain(z: np.ndarray, z0: float) -> None:
    if not Z0_RANGE[0] < z0 < Z0_RANGE[1]:
        raise InvalidParameters(f"z0 must be in {Z0_RANGE}, got {z0}")
    if np.any(np.abs(z - 1.0) > UNIVALENCE_RADIUS * (1 + 1e-12)):
        raise InvalidParameters("zeta is only univalent in the disk |z - 1| <= 0.25")


def a_of(z0: float) -> complex:
    """A(z0) = sqrt(2) R(1): the real root of A^2 = -2 phi_cr with A ~ 1 - z0

    Args:
        z0 (float): ratio t_c^2/t^2 in (0.7, 1.3)

    Returns:
        complex: A(z0), real valued
    """
    _check_conformal_domain(np.array([1.0]), z0)
    return complex(math.sqrt(2.0) * _analytic_root(np.array([1.0 + 0j]), z0)[0].real)


def conformal_zeta(z: ComplexLike, z0: float) -> ComplexLike:
    """Conformal map zeta with phi = zeta^2/2 + A zeta, zeta(1) = 0 and zeta'(1) > 0

    zeta = sqrt(2) R(z) - A, where R is the analytic root of phi - phi_cr.

    Args:
        z (ComplexLike): point(s) with |z - 1| <= 0.25
        z0 (float): ratio t_c^2/t^2 in (0.7, 1.3)

    Returns:
        ComplexLike: zeta(z; z0)
    """
    points = np.asarray(z, dtype=complex)
    _check_conformal_domain(points, z0)
    value = math.sqrt(2.0) * _analytic_root(points, z0) - a_of(z0).real
    if np.ndim(value) == 0:
        return complex(value)
    return value
