"""
Monic orthogonal polynomials from the Hankel system of the moments, and their unfolding
"""
import logging
import math
from typing import Any, List, Optional

import mpmath
import numpy as np
import scipy.linalg

from painleve_tau.exceptions import InvalidParameters, NumericalBreakdown
from painleve_tau.orthopoly.moments import (
    DEFAULT_CENTER,
    DEFAULT_POINTS,
    DEFAULT_RADIUS,
    MomentSequence,
    complex_moments,
    hankel_matrix,
)
from painleve_tau.orthopoly.polynomial import MonicPolynomial
from painleve_tau.types import Plane
from painleve_tau.utils.precision import (
    is_extended,
    magnitude,
    resolve_digits,
    working_precision,
)

LOGGER = logging.getLogger("PainleveTau")

ORTHOGONALITY_TOLERANCE = 1e-8
DOUBLE_CONDITION_LIMIT = 1e13


def _solve_double(matrix: List[List[Any]], rhs: List[Any], k: int) -> List[Any]:
    array = np.array(matrix, dtype=complex)
    lu, pivots = scipy.linalg.lu_factor(array, check_finite=True)
    if np.any(np.diag(lu) == 0):
        raise NumericalBreakdown(
            f"Hankel system of order {k} is singular in double precision; "
            "use a larger --precision or a smaller k"
        )
    condition = np.linalg.cond(array)
    LOGGER.debug("Hankel system of order %d: condition %.3e", k, condition)
    if condition > DOUBLE_CONDITION_LIMIT:
        raise NumericalBreakdown(
            f"Hankel system of order {k} has condition {condition:.3e} in double precision; "
            "use a larger --precision or a smaller k"
        )
    return scipy.linalg.lu_solve((lu, pivots), np.array(rhs, dtype=complex)).tolist()


def _solve_extended(matrix: List[List[Any]], rhs: List[Any], k: int, digits: int) -> List[Any]:
    with mpmath.workdps(digits):
        system = mpmath.matrix(matrix)
        try:
            solution = mpmath.lu_solve(system, mpmath.matrix(rhs))
        except ZeroDivisionError as exception:
            raise NumericalBreakdown(
                f"Hankel system of order {k} is singular at {digits} digits; "
                "use a larger --precision or a smaller k"
            ) from exception
        return [solution[i] for i in range(k)]


def orthogonality_residual(poly: MonicPolynomial, moments: MomentSequence) -> float:
    """Largest orthogonality defect relative to the moment scale

    Args:
        poly (MonicPolynomial): polynomial of degree k
        moments (MomentSequence): moments up to index 2k-1

    Raises:
        InvalidParameters: if the moments are too few

    Returns:
        float: max_j |sum_i c_i nu_{i+j}| / max |nu|, j < k, with c_k = 1
    """
    k = poly.degree
    if len(moments) < 2 * k:
        raise InvalidParameters(f"Degree {k} needs {2 * k} moments, got {len(moments)}")
    if k == 0:
        return 0.0
    digits = max(poly.digits, moments.digits)
    defects = []
    with working_precision(digits):
        for j in range(k):
            value = sum(
                (poly.coefficients[i] * moments.values[i + j] for i in range(k + 1)),
                0 * moments.values[0],
            )
            defects.append(magnitude(value))
    return max(defects) / moments.max_modulus


def monic_orthogonal(
    k: int,
    z0: float,
    gamma: float,
    precision: Optional[int] = None,
    moments: Optional[MomentSequence] = None,
    points: int = DEFAULT_POINTS,
    center: complex = DEFAULT_CENTER,
    radius: float = DEFAULT_RADIUS,
) -> MonicPolynomial:
    """Monic pi_k orthogonal to z^j, j < k, for the weight w_k on a contour around [0, 1]

    The coefficients solve sum_j nu_{i+j} c_j = -nu_{i+k}, i < k, by pivoted LU on the moments
    divided by their largest modulus.

    Args:
        k (int): degree
        z0 (float): positive ratio t_c^2/t^2
        gamma (float): exponent in [0, 1)
        precision (Optional[int]): decimal digits, None for max(30, 3k)
        moments (Optional[MomentSequence]): precomputed moments up to index 2k-1
        points (int): initial contour resolution
        center (complex): center of the moment contour
        radius (float): radius of the moment contour

    Raises:
        InvalidParameters: if k is negative or the moments do not match
        NumericalBreakdown: if the Hankel solve fails or the orthogonality residual is too large

    Returns:
        MonicPolynomial: pi_k with provenance (k, z0, gamma)
    """
    if k < 0:
        raise InvalidParameters(f"k must be nonnegative, got {k}")
    digits = resolve_digits(k, precision) if moments is None else moments.digits
    provenance = {"k": k, "z0": z0, "gamma": gamma}
    if k == 0:
        return MonicPolynomial.from_values([1], digits, provenance)
    if moments is None:
        moments = complex_moments(
            k, z0, gamma, 2 * k - 1, center=center, radius=radius, points=points, digits=digits
        )
    elif moments.k != k or len(moments) < 2 * k:
        raise InvalidParameters(f"Moments of k={moments.k} cannot build pi_{k}")

    with working_precision(digits):
        scale = moments.max_modulus
        normalized = [value / scale for value in moments.values]
        normalized_moments = MomentSequence(
            gamma=gamma, k=k, z0=z0, values=tuple(normalized), digits=digits
        )
        matrix = hankel_matrix(normalized_moments, k)
        rhs = [-normalized[i + k] for i in range(k)]
        if is_extended(digits):
            solution = _solve_extended(matrix, rhs, k, digits)
            one = mpmath.mpc(1)
        else:
            solution = _solve_double(matrix, rhs, k)
            one = 1 + 0j
    poly = MonicPolynomial(tuple(solution) + (one,), digits, provenance)
    residual = orthogonality_residual(poly, moments)
    LOGGER.debug("pi_%d at %d digits: orthogonality residual %.3e", k, digits, residual)
    if residual > ORTHOGONALITY_TOLERANCE:
        raise NumericalBreakdown(
            f"pi_{k} orthogonality residual {residual:.3e} above {ORTHOGONALITY_TOLERANCE}; "
            "use a larger --precision"
        )
    return poly


def unfold_polynomial(poly: MonicPolynomial, t: float, d: int, ell: int) -> MonicPolynomial:
    """p_n(lambda) = lambda^ell q_k(lambda^d) with q_k(u) = (-1)^k t^k pi_k(1 - u/t)

    The coefficient of u^m in q_k is (-1)^{k+m} t^{k-m} sum_{i>=m} binom(i, m) c_i, so only the
    exponents ell + m d appear in p_n.

    Args:
        poly (MonicPolynomial): pi_k in the z-plane
        t (float): time parameter, positive
        d (int): symmetry order, at least 1
        ell (int): residue class of the degree, 0 <= ell < d

    Raises:
        InvalidParameters: if the parameters are inconsistent

    Returns:
        MonicPolynomial: p_n of degree k d + ell in the lambda-plane
    """
    if poly.plane != Plane.Z:
        raise InvalidParameters("Only z-plane polynomials can be unfolded")
    if d < 1 or not 0 <= ell < d:
        raise InvalidParameters(f"Invalid symmetry d={d}, ell={ell}")
    if not t > 0:
        raise InvalidParameters(f"t must be positive, got {t}")
    k = poly.degree
    coefficients = poly.coefficients
    with working_precision(poly.digits):
        if poly.is_extended:
            time = mpmath.mpf(t)
            zero: Any = mpmath.mpc(0)
        else:
            time = t
            zero = 0j
        unfolded = [zero] * (k * d + ell + 1)
        for m in range(k + 1):
            total = zero
            for i in range(m, k + 1):
                total += math.comb(i, m) * coefficients[i]
            sign = -1 if (k + m) % 2 else 1
            unfolded[ell + m * d] = sign * time ** (k - m) * total
        unfolded[-1] = mpmath.mpc(1) if poly.is_extended else 1 + 0j
    provenance = dict(poly.provenance)
    provenance.update({"d": d, "ell": ell, "t": t})
    return MonicPolynomial(tuple(unfolded), poly.digits, provenance, Plane.LAMBDA)
