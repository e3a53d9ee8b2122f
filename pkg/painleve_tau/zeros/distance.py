"""
Distance of the zeros to Gamma_1 and the log k/k corrected curve
"""
import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, Tuple

import numpy as np

from painleve_tau.exceptions import InvalidParameters, NumericalBreakdown
from painleve_tau.geometry.curves import CurveSample
from painleve_tau.geometry.potentials import gamma_r_radius
from painleve_tau.geometry.tracing import trace_star_curve, uniform_angles
from painleve_tau.types import DeformForm, Plane
from painleve_tau.zeros.roots import ZeroSet

LOGGER = logging.getLogger("PainleveTau")

EXCLUSION_RADIUS = 0.2
MIN_CORRECTED_K = 10


# pylint: disable=too-many-instance-attributes
@dataclass(frozen=True, eq=False)
class DistanceStats:
    """
    Per-root distance to a curve and residual |Re phi(z; 1)|

    Summaries are taken over the roots outside the disk |z - 1| < exclusion.
    """

    distances: np.ndarray
    residuals: np.ndarray
    kept: np.ndarray
    max_distance: float
    mean_distance: float
    max_residual: float
    mean_residual: float
    excluded: int

    def to_json(self) -> Dict[str, float]:
        """Summary for the statistics sidecar

        Returns:
            Dict[str, float]: the summary values
        """
        return {
            "excluded": self.excluded,
            "max_distance": self.max_distance,
            "max_residual": self.max_residual,
            "mean_distance": self.mean_distance,
            "mean_residual": self.mean_residual,
        }


def polyline_distance(points: np.ndarray, curve: CurveSample) -> np.ndarray:
    """Euclidean distance of each point to the polyline of the curve

    Args:
        points (np.ndarray): complex points
        curve (CurveSample): curve, closed or open

    Raises:
        InvalidParameters: if the curve is empty

    Returns:
        np.ndarray: distances
    """
    if len(curve) == 0:
        raise InvalidParameters("Distance to an empty curve")
    if len(curve) == 1:
        return np.abs(np.asarray(points) - curve.points[0])
    start = curve.points if curve.closed else curve.points[:-1]
    end = np.roll(curve.points, -1) if curve.closed else curve.points[1:]
    edge = end - start
    offset = np.asarray(points, dtype=complex)[:, None] - start[None, :]
    length = np.where(np.abs(edge) > 0, np.abs(edge) ** 2, 1.0)
    position = np.clip(np.real(offset * np.conj(edge)[None, :]) / length[None, :], 0.0, 1.0)
    return np.min(np.abs(offset - position * edge[None, :]), axis=1)


def real_phi_level(z: np.ndarray, z0: float) -> np.ndarray:
    """Re phi(z; 1) = log|z| - Re(z)/z0 + 1/z0, the interior form

    Args:
        z (np.ndarray): points
        z0 (float): ratio t_c^2/t^2

    Returns:
        np.ndarray: values, -inf at z = 0
    """
    with np.errstate(divide="ignore"):
        return np.log(np.abs(z)) - np.real(z) / z0 + 1.0 / z0


def zero_curve_distance(
    zs: ZeroSet, curve: CurveSample, exclusion: float = EXCLUSION_RADIUS
) -> DistanceStats:
    """Distance of the roots to Gamma_1 and their residual |Re phi(root; 1)|

    Args:
        zs (ZeroSet): z-plane roots
        curve (CurveSample): Gamma_1 at the z0 of the roots
        exclusion (float): radius of the disk around z = 1 left out of the summary

    Raises:
        InvalidParameters: if the curve is empty or lives in another plane

    Returns:
        DistanceStats: per-root values and summary
    """
    if len(curve) == 0:
        raise InvalidParameters("Distance to an empty curve")
    if curve.plane != zs.plane:
        raise InvalidParameters(f"Roots in the {zs.plane}-plane, curve in the {curve.plane}-plane")
    distances = polyline_distance(zs.roots, curve)
    residuals = np.abs(real_phi_level(zs.roots, zs.z0))
    kept = np.abs(zs.roots - 1.0) >= exclusion
    if not np.any(kept):
        return DistanceStats(distances, residuals, kept, 0.0, 0.0, 0.0, 0.0, len(zs))
    return DistanceStats(
        distances=distances,
        residuals=residuals,
        kept=kept,
        max_distance=float(np.max(distances[kept])),
        mean_distance=float(np.mean(distances[kept])),
        max_residual=float(np.max(residuals[kept])),
        mean_residual=float(np.mean(residuals[kept])),
        excluded=int(np.count_nonzero(~kept)),
    )


def rate_constant(stats: DistanceStats, k: int) -> float:
    """C such that the maximal distance equals C log k / k

    Args:
        stats (DistanceStats): distance statistics at degree k
        k (int): degree, at least 2

    Returns:
        float: C
    """
    return stats.max_distance * k / math.log(k)


def _deform_terms(
    k: int, gamma: float, zu_ratio: complex, z0: float, form: DeformForm
) -> Tuple[Callable[[float, float], float], Callable[[float, float], float]]:
    """Left side minus right side of the corrected curve equation, and its radial derivative"""
    shift = 0.5 * (1.0 + gamma) * math.log(k) / k
    log_zu = math.log(abs(zu_ratio))

    def distance_to_one(rho: float, theta: float) -> float:
        return max(math.hypot(rho * math.cos(theta) - 1.0, rho * math.sin(theta)), 1e-300)

    def correction(rho: float, theta: float) -> float:
        gap = distance_to_one(rho, theta)
        return (gamma * math.log(rho) - (1.0 + gamma) * math.log(gap) + log_zu) / k

    def correction_slope(rho: float, theta: float) -> float:
        gap = distance_to_one(rho, theta)
        return -gamma / (k * rho) + (1.0 + gamma) * (rho - math.cos(theta)) / (k * gap * gap)

    if form == DeformForm.REAL_PART:

        def residual(rho: float, theta: float) -> float:
            level = math.log(rho) - rho * math.cos(theta) / z0 + 1.0 / z0
            return level + shift - correction(rho, theta)

        def derivative(rho: float, theta: float) -> float:
            return 1.0 / rho - math.cos(theta) / z0 + correction_slope(rho, theta)

    else:

        def residual(rho: float, theta: float) -> float:
            level = math.log(rho) - distance_to_one(rho, theta) / abs(z0)
            return level + shift - correction(rho, theta)

        def derivative(rho: float, theta: float) -> float:
            gap = distance_to_one(rho, theta)
            slope = 1.0 / rho - (rho - math.cos(theta)) / (gap * abs(z0))
            return slope + correction_slope(rho, theta)

    return residual, derivative


# pylint: disable=too-many-arguments
def corrected_zero_curve(
    k: int,
    gamma: float,
    zu_ratio: complex,
    count: int,
    z0: float = 1.0,
    form: DeformForm = DeformForm.REAL_PART,
) -> CurveSample:
    """Level set of Re phi(z; 1) + ((1+gamma)/2) log k/k - (1/k) log(|z/(z-1)|^gamma |zu/(z-1)|)

    The REAL_PART form is traced inside Gamma_1, ray by ray; the MODULUS form replaces
    Re phi(z; 1) by log|z| - |z - 1|/|z0| and is traced on |z| <= z0. Rays where the level set
    has no crossing, such as the ray through z = 1, are skipped and the sample is then open.

    log|z| - |z - 1| is negative away from z = 1, so the MODULUS level set is at most a small
    region next to z = 1 and is usually empty; it then raises NumericalBreakdown.

    Args:
        k (int): degree, at least 10
        gamma (float): exponent of the reduced weight
        zu_ratio (complex): nonzero Z/U estimate
        count (int): number of rays, at least 16
        z0 (float): ratio t_c^2/t^2
        form (DeformForm): reading of the left side

    Raises:
        InvalidParameters: if k < 10 or zu_ratio = 0
        NumericalBreakdown: if no ray crosses the level set

    Returns:
        CurveSample: the corrected curve
    """
    if k < MIN_CORRECTED_K:
        raise InvalidParameters(f"The corrected curve needs k >= {MIN_CORRECTED_K}, got {k}")
    if zu_ratio == 0 or not math.isfinite(abs(zu_ratio)):
        raise InvalidParameters(f"Z/U must be finite and nonzero, got {zu_ratio}")
    if not z0 > 0:
        raise InvalidParameters(f"z0 must be positive, got {z0}")
    residual, derivative = _deform_terms(k, gamma, zu_ratio, z0, form)
    if form == DeformForm.REAL_PART:
        upper: Callable[[float], float] = lambda theta: gamma_r_radius(theta, 1.0, z0)
    else:
        upper = lambda theta: z0
    angles = uniform_angles(count)
    points, skipped = trace_star_curve(residual, derivative, upper, angles, skip_failures=True)
    if len(points) == 0:
        raise NumericalBreakdown(f"The corrected level set is empty at k = {k}")
    if skipped:
        LOGGER.warning("Corrected curve at k=%d: %d of %d rays skipped", k, len(skipped), count)
    values = np.array(
        [residual(abs(z), math.atan2(z.imag, z.real)) for z in points.tolist()], dtype=float
    )
    return CurveSample(
        points=points,
        residuals=np.abs(values),
        closed=not skipped,
        plane=Plane.Z,
        label=f"corrected_{form},k={k}",
    )


def compare_deform_forms(
    zs: ZeroSet, zu_ratio: complex, exclusion: float = EXCLUSION_RADIUS
) -> Dict[str, float]:
    """Mean |left side - right side| of each corrected-curve reading at the roots

    Args:
        zs (ZeroSet): z-plane roots, k >= 10
        zu_ratio (complex): nonzero Z/U estimate
        exclusion (float): radius of the disk around z = 1 left out

    Raises:
        InvalidParameters: if no root is left to compare

    Returns:
        Dict[str, float]: mean residual per form name
    """
    roots = [z for z in zs.roots.tolist() if abs(z - 1.0) >= exclusion and z != 0]
    if not roots:
        raise InvalidParameters("No root outside the excluded disks")
    means = {}
    for form in DeformForm:
        residual, _ = _deform_terms(zs.k, zs.gamma, zu_ratio, zs.z0, form)
        values = [abs(residual(abs(z), math.atan2(z.imag, z.real))) for z in roots]
        means[str(form)] = float(np.mean(values))
    LOGGER.debug("Deform form residuals at k=%d: %s", zs.k, means)
    return means
