"""
Complex moments of the reduced weight and their Hankel determinants

The weight w_k(z) = z^{-k} e^{-k z/z0} (z/(z-1))^gamma is analytic off [0, 1]. Its moments
nu_j, the contour integrals of z^j w_k(z) on a circle around [0, 1], are computed with the
trapezoidal rule, which converges geometrically for this integrand.
"""
import cmath
import logging
import math
from dataclasses import dataclass
from typing import Any, List, Tuple

import mpmath
import numpy as np
from scipy.special import logsumexp

from painleve_tau.exceptions import InvalidParameters, NumericalBreakdown
from painleve_tau.utils.precision import (
    DOUBLE_DIGITS,
    is_extended,
    magnitude,
    working_precision,
)

LOGGER = logging.getLogger("PainleveTau")

DEFAULT_CENTER = 0.5
DEFAULT_RADIUS = 2.5
DEFAULT_POINTS = 2048
MAX_POINTS = 16384
CERTIFICATE_TOLERANCE = 1e-11
# |det| below this multiple of 10^-digits times the Hadamard bound is indistinguishable from 0
DET_NOISE_FACTOR = 1e3


# pylint: disable=too-many-instance-attributes
@dataclass(frozen=True, eq=False)
class MomentSequence:
    """
    Moments nu_0 .. nu_{j_max} of the weight w_k
    """

    gamma: float
    k: int
    z0: float
    values: Tuple[Any, ...]
    digits: int = DOUBLE_DIGITS
    points: int = 0
    center: complex = DEFAULT_CENTER
    radius: float = DEFAULT_RADIUS

    def __len__(self) -> int:
        return len(self.values)

    @property
    def max_modulus(self) -> float:
        """Largest |nu_j|

        Returns:
            float: max |nu_j|
        """
        return max(magnitude(value) for value in self.values)

    def as_array(self) -> np.ndarray:
        """Moments rounded to double precision

        Returns:
            np.ndarray: complex array
        """
        return np.array([complex(value) for value in self.values], dtype=complex)


def weight_w(z: complex, k: int, z0: float, gamma: float) -> complex:
    """w_k(z) = z^{-k} e^{-k z/z0} (z/(z-1))^gamma with the principal logarithm

    The Mobius image z/(z-1) of the plane minus [0, 1] avoids (-inf, 0], so the principal branch
    is analytic there and tends to 1 at infinity.

    Args:
        z (complex): point off [0, 1]
        k (int): degree
        z0 (float): ratio t_c^2/t^2
        gamma (float): exponent

    Raises:
        InvalidParameters: if z lies on [0, 1]

    Returns:
        complex: w_k(z)
    """
    z = complex(z)
    if z.imag == 0 and 0.0 <= z.real <= 1.0:
        raise InvalidParameters(f"The weight is not defined on [0, 1], got z = {z}")
    return cmath.exp(-k * z / z0 - k * cmath.log(z) + gamma * cmath.log(z / (z - 1.0)))


def _check_contour(center: complex, radius: float, points: int) -> None:
    if points < 16 or points & (points - 1):
        raise InvalidParameters(f"The number of contour points must be a power of 2, got {points}")
    if not radius > max(abs(center), abs(center - 1.0)):
        raise InvalidParameters(
            f"The circle |z - {center}| = {radius} intersects [0, 1] or leaves it outside"
        )


def _terms_double(
    k: int, z0: float, gamma: float, j_max: int, center: complex, radius: float, points: int
) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Fine sum, coarse sum and log of the absolute sum in double precision"""
    angles = 2.0 * math.pi * np.arange(points) / points
    offsets = radius * np.exp(1j * angles)
    z = center + offsets
    base = (
        np.exp(-k * z / z0 - k * np.log(z) + gamma * np.log(z / (z - 1.0)))
        * 1j
        * offsets
        * (2.0 * math.pi / points)
    )
    powers = z[:, None] ** np.arange(j_max + 1)[None, :]
    terms = base[:, None] * powers
    fine = terms.sum(axis=0)
    coarse = 2.0 * terms[::2].sum(axis=0)
    log_abs = logsumexp(np.log(np.abs(base))[:, None] + np.log(np.abs(powers)), axis=0)
    return fine, coarse, log_abs


def _terms_extended(
    k: int,
    z0: float,
    gamma: float,
    j_max: int,
    center: complex,
    radius: float,
    points: int,
    digits: int,
) -> Tuple[List[Any], List[Any], np.ndarray]:
    """Fine sum, coarse sum and log of the absolute sum in mpmath arithmetic"""
    with mpmath.workdps(digits):
        c = mpmath.mpmathify(center)
        r = mpmath.mpf(radius)
        zero_over = mpmath.mpf(z0)
        g = mpmath.mpf(gamma)
        step = 2 * mpmath.pi / points
        fine = [mpmath.mpc(0)] * (j_max + 1)
        even = [mpmath.mpc(0)] * (j_max + 1)
        log_base = np.empty(points)
        log_z = np.empty(points)
        for m in range(points):
            offset = r * mpmath.expjpi(mpmath.mpf(2 * m) / points)
            z = c + offset
            base = (
                mpmath.exp(-k * z / zero_over - k * mpmath.log(z) + g * mpmath.log(z / (z - 1)))
                * mpmath.j
                * offset
                * step
            )
            log_base[m] = float(mpmath.log(mpmath.fabs(base)))
            log_z[m] = float(mpmath.log(mpmath.fabs(z)))
            power = base
            if m % 2 == 0:
                for j in range(j_max + 1):
                    fine[j] += power
                    even[j] += power
                    power *= z
            else:
                for j in range(j_max + 1):
                    fine[j] += power
                    power *= z
        coarse = [2 * value for value in even]
    log_abs = logsumexp(log_base[:, None] + np.outer(log_z, np.arange(j_max + 1)), axis=0)
    return fine, coarse, log_abs


def complex_moments(
    k: int,
    z0: float,
    gamma: float,
    j_max: int,
    center: complex = DEFAULT_CENTER,
    radius: float = DEFAULT_RADIUS,
    points: int = DEFAULT_POINTS,
    digits: int = DOUBLE_DIGITS,
) -> MomentSequence:
    """Moments nu_j, j = 0..j_max, by the trapezoidal rule on a circle

    The sum over 2M points is accepted when the sum over its even subset (M points) agrees with
    it within 1e-11 relative, plus the rounding floor 10^{1-digits} sum|terms|. M starts at
    points and doubles while 2M stays within 16384.

    Args:
        k (int): degree, k >= 0
        z0 (float): positive ratio t_c^2/t^2
        gamma (float): exponent in [0, 1)
        j_max (int): largest moment index
        center (complex): center of the circle
        radius (float): radius of the circle
        points (int): initial number of points, a power of 2
        digits (int): working precision

    Raises:
        InvalidParameters: if a parameter or the contour is invalid
        NumericalBreakdown: if the certificate fails at the largest resolution

    Returns:
        MomentSequence: the certified moments
    """
    if k < 0 or j_max < 0:
        raise InvalidParameters(f"k and j_max must be nonnegative, got {k}, {j_max}")
    if not z0 > 0:
        raise InvalidParameters(f"z0 must be positive, got {z0}")
    if not 0.0 <= gamma < 1.0:
        raise InvalidParameters(f"gamma must be in [0, 1), got {gamma}")
    _check_contour(center, radius, points)

    resolution = points
    while 2 * resolution <= MAX_POINTS:
        if is_extended(digits):
            fine, coarse, log_abs = _terms_extended(
                k, z0, gamma, j_max, center, radius, 2 * resolution, digits
            )
        else:
            fine_array, coarse_array, log_abs = _terms_double(
                k, z0, gamma, j_max, center, radius, 2 * resolution
            )
            fine, coarse = fine_array.tolist(), coarse_array.tolist()
        floor = 10.0 ** (1 - digits) * np.exp(log_abs)
        with working_precision(digits):
            gaps = [magnitude(f - c) for f, c in zip(fine, coarse)]
        bounds = [CERTIFICATE_TOLERANCE * magnitude(f) + b for f, b in zip(fine, floor)]
        if all(gap <= bound for gap, bound in zip(gaps, bounds)):
            LOGGER.debug(
                "moments k=%d z0=%g gamma=%g certified with %d points at %d digits",
                k,
                z0,
                gamma,
                2 * resolution,
                digits,
            )
            return MomentSequence(
                gamma=gamma,
                k=k,
                z0=z0,
                values=tuple(fine),
                digits=digits,
                points=2 * resolution,
                center=center,
                radius=radius,
            )
        LOGGER.debug("moment certificate failed with %d points, doubling", 2 * resolution)
        resolution *= 2
    raise NumericalBreakdown(
        f"Moment certificate failed with {MAX_POINTS} points (k={k}, z0={z0}, gamma={gamma})"
    )


def exact_moments_gamma0(
    k: int, z0: float, j_max: int, digits: int = DOUBLE_DIGITS
) -> MomentSequence:
    """Closed-form moments at gamma = 0, from the residue at z = 0

    nu_j = 2 pi i (-k/z0)^{k-1-j}/(k-1-j)! for j <= k-1, and 0 beyond since the integrand is then
    entire.

    Args:
        k (int): degree
        z0 (float): positive ratio t_c^2/t^2
        j_max (int): largest moment index
        digits (int): working precision

    Returns:
        MomentSequence: the exact moments
    """
    values: List[Any] = []
    with working_precision(digits):
        for j in range(j_max + 1):
            order = k - 1 - j
            if order < 0:
                values.append(mpmath.mpc(0) if is_extended(digits) else 0j)
                continue
            if is_extended(digits):
                value = (
                    2 * mpmath.pi * mpmath.j * (-mpmath.mpf(k) / z0) ** order
                ) / mpmath.factorial(order)
                values.append(value)
            else:
                values.append(2j * math.pi * (-k / z0) ** order / math.factorial(order))
    return MomentSequence(gamma=0.0, k=k, z0=z0, values=tuple(values), digits=digits)


def hankel_matrix(moments: MomentSequence, size: int, shift: int = 0) -> List[List[Any]]:
    """[nu_{i+j+shift}] for i, j < size

    Args:
        moments (MomentSequence): moments
        size (int): order of the matrix
        shift (int): index offset

    Raises:
        InvalidParameters: if the moments are too few

    Returns:
        List[List[Any]]: the rows
    """
    if len(moments) < 2 * size - 1 + shift:
        raise InvalidParameters(
            f"A Hankel matrix of order {size} needs {2 * size - 1 + shift} moments, "
            f"got {len(moments)}"
        )
    return [[moments.values[i + j + shift] for j in range(size)] for i in range(size)]


def _hadamard_bound(rows: List[List[Any]]) -> float:
    log_bound = 0.0
    for row in rows:
        norm = math.sqrt(sum(magnitude(entry) ** 2 for entry in row))
        if norm == 0.0:
            return 0.0
        log_bound += math.log(norm)
    return math.exp(min(log_bound, 700.0))


def hankel_det(moments: MomentSequence, k: int) -> complex:
    """det[nu_{i+j}], i, j < k, asserted away from zero

    Args:
        moments (MomentSequence): moments up to index 2k-2
        k (int): order

    Raises:
        NumericalBreakdown: if the determinant is below the rounding level of the working precision

    Returns:
        complex: the determinant
    """
    if k == 0:
        return 1.0 + 0j
    rows = hankel_matrix(moments, k)
    with working_precision(moments.digits):
        if is_extended(moments.digits):
            value = complex(mpmath.det(mpmath.matrix(rows)))
        else:
            value = complex(np.linalg.det(np.array(rows, dtype=complex)))
    bound = _hadamard_bound(rows)
    if abs(value) <= DET_NOISE_FACTOR * 10.0 ** (-moments.digits) * bound:
        raise NumericalBreakdown(
            f"Hankel determinant of order {k} is at the rounding level "
            f"(|det| = {abs(value):.3e}, Hadamard bound {bound:.3e}, {moments.digits} digits)"
        )
    return value


def hankel_phase_check(moments: MomentSequence, k: int) -> complex:
    """Hankel determinant divided by (-1)^{k(k-1)/2} (2i)^k, expected positive real

    Args:
        moments (MomentSequence): moments up to index 2k-2
        k (int): order

    Returns:
        complex: the normalized determinant
    """
    sign = -1 if (k * (k - 1) // 2) % 2 else 1
    return hankel_det(moments, k) / (sign * (2j) ** k)

