"""
Radial tracing of star-shaped level curves

Every traced curve is the zero set of a function f(rho) along the ray z = rho e^{i theta} that is
increasing on (0, upper], tends to -inf at 0 and is nonnegative at upper.
"""
import math
from typing import Callable, List, Optional, Tuple

import numpy as np

from painleve_tau.exceptions import InvalidParameters, NumericalBreakdown

RADIAL_TOLERANCE = 1e-12
_MAX_ITERATIONS = 200


def uniform_angles(count: int) -> np.ndarray:
    """Angles -pi + 2 pi j / count, j = 0..count-1

    Args:
        count (int): number of angles, at least 16

    Raises:
        InvalidParameters: if count < 16

    Returns:
        np.ndarray: the angles
    """
    if count < 16:
        raise InvalidParameters(f"At least 16 points are needed, got {count}")
    return -math.pi + 2.0 * math.pi * np.arange(count) / count


def trace_radial(
    func: Callable[[float], float],
    derivative: Callable[[float], float],
    upper: float,
    tolerance: float = RADIAL_TOLERANCE,
) -> Optional[float]:
    """Safeguarded Newton iteration for the root of an increasing function on (0, upper]

    Args:
        func (Callable[[float], float]): residual along the ray
        derivative (Callable[[float], float]): its derivative
        upper (float): right end of the search interval
        tolerance (float): residual tolerance

    Returns:
        Optional[float]: the radius, or None when the interval holds no sign change
    """
    f_upper = func(upper)
    if abs(f_upper) <= tolerance:
        return upper
    if f_upper < 0:
        return None
    lower = upper / 2.0
    while func(lower) > 0:
        lower /= 2.0
        if lower < 1e-300:
            return None
    high = upper
    rho = 0.5 * (lower + high)
    for _ in range(_MAX_ITERATIONS):
        value = func(rho)
        if abs(value) <= tolerance:
            return rho
        if value < 0:
            lower = rho
        else:
            high = rho
        slope = derivative(rho)
        candidate = rho - value / slope if slope > 0 else -1.0
        if not lower < candidate < high:
            candidate = 0.5 * (lower + high)
        if high - lower <= 4 * np.finfo(float).eps * high:
            return candidate
        rho = candidate
    return None


def trace_star_curve(
    residual: Callable[[float, float], float],
    derivative: Callable[[float, float], float],
    upper: Callable[[float], float],
    angles: np.ndarray,
    skip_failures: bool = False,
) -> Tuple[np.ndarray, List[int]]:
    """Trace a star-shaped curve ray by ray

    Args:
        residual (Callable[[float, float], float]): f(rho, theta)
        derivative (Callable[[float, float], float]): df/drho(rho, theta)
        upper (Callable[[float], float]): upper radius for each angle
        angles (np.ndarray): ray angles
        skip_failures (bool): drop rays without a root instead of raising

    Raises:
        NumericalBreakdown: if a ray has no root and failures are not skipped

    Returns:
        Tuple[np.ndarray, List[int]]: complex points of the kept rays, indices of skipped rays
    """
    points = []
    skipped = []
    for index, theta in enumerate(angles):
        theta = float(theta)
        rho = trace_radial(
            lambda r, th=theta: residual(r, th),
            lambda r, th=theta: derivative(r, th),
            upper(theta),
        )
        if rho is None:
            if not skip_failures:
                raise NumericalBreakdown(f"Radial solve failed at theta = {theta:.6f}")
            skipped.append(index)
            continue
        points.append(rho * complex(math.cos(theta), math.sin(theta)))
    return np.array(points, dtype=complex), skipped
