"""
Level curves of the model

- the Szego curve |z e^{1-z}| = 1 and the family Gamma_r, Re phi(z; r) = 0 with |z| <= z0;
- the curve C-hat in the lambda-plane, pullback of the Szego curve under z = 1 - lambda^d/t_c;
- the lemniscate |lambda^d - t| = t_c bounding the eigenvalue support;
- the measure nu-hat = (1/2 pi i) phi'(z) dz carried by the Szego curve.
"""
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from painleve_tau.exceptions import InvalidParameters, NumericalBreakdown
from painleve_tau.geometry.potentials import ell_hat, phi_hat
from painleve_tau.geometry.tracing import RADIAL_TOLERANCE, trace_star_curve, uniform_angles
from painleve_tau.types import Plane

LOGGER = logging.getLogger("PainleveTau")

UNFOLD_TOLERANCE = 1e-9
LEMNISCATE_TOLERANCE = 1e-12


# pylint: disable=too-many-instance-attributes
@dataclass(frozen=True, eq=False)
class CurveSample:
    """
    Ordered points discretizing an implicit level curve
    """

    points: np.ndarray
    residuals: np.ndarray
    closed: bool = True
    plane: Plane = Plane.Z
    density: Optional[np.ndarray] = None
    components: int = 1
    label: str = ""

    def __len__(self) -> int:
        return len(self.points)

    def with_density(self, density: np.ndarray) -> "CurveSample":
        """Copy of the sample carrying a per-point density

        Args:
            density (np.ndarray): complex density per point

        Returns:
            CurveSample: the new sample
        """
        return CurveSample(
            points=self.points,
            residuals=self.residuals,
            closed=self.closed,
            plane=self.plane,
            density=density,
            components=self.components,
            label=self.label,
        )


def _real_phi_interior(z: np.ndarray, r: float, z0: float) -> np.ndarray:
    return np.log(np.abs(z)) - z.real / z0 - ell_hat(r, z0)


def curve_gamma_r(r: float, z0: float, count: int) -> CurveSample:
    """Trace Gamma_r: Re phi(z; r) = 0 with |z| <= z0

    Along each ray the residual log(rho) - rho cos(theta)/z0 - log r + r/z0 increases on
    (0, z0] and is nonnegative at z0.

    Args:
        r (float): level, 0 < r <= z0
        z0 (float): positive ratio t_c^2/t^2
        count (int): number of rays, at least 16

    Raises:
        InvalidParameters: if r or z0 is out of range
        NumericalBreakdown: if a point misses the tracer tolerance

    Returns:
        CurveSample: the closed curve, counterclockwise from theta = -pi
    """
    if not z0 > 0:
        raise InvalidParameters(f"z0 must be positive, got {z0}")
    if not 0 < r <= z0:
        raise InvalidParameters(f"r must be in (0, z0], got {r}")
    return _trace_gamma_r(r, z0, count)


def zero_attractor_curve(z0: float, count: int) -> CurveSample:
    """Trace Gamma_1 at any positive z0, the curve attracting the zeros of pi_k

    log(z0/r) >= 1 - r/z0 for every r > 0, so the residual is nonnegative at |z| = z0 on every
    ray and the radial trace also exists when z0 < 1.

    Args:
        z0 (float): positive ratio t_c^2/t^2
        count (int): number of rays, at least 16

    Raises:
        InvalidParameters: if z0 is not positive

    Returns:
        CurveSample: the closed curve
    """
    if not z0 > 0:
        raise InvalidParameters(f"z0 must be positive, got {z0}")
    return _trace_gamma_r(1.0, z0, count)


def _trace_gamma_r(r: float, z0: float, count: int) -> CurveSample:
    level = ell_hat(r, z0)
    angles = uniform_angles(count)
    points, _ = trace_star_curve(
        lambda rho, theta: math.log(rho) - rho * math.cos(theta) / z0 - level,
        lambda rho, theta: 1.0 / rho - math.cos(theta) / z0,
        lambda theta: z0,
        angles,
    )
    residuals = np.abs(_real_phi_interior(points, r, z0))
    if np.max(residuals) > RADIAL_TOLERANCE * 10:
        raise NumericalBreakdown(f"Gamma_r residual {np.max(residuals):.3e} above tolerance")
    return CurveSample(points=points, residuals=residuals, label=f"gamma_r={r:g},z0={z0:g}")


def szego_curve_z(count: int) -> CurveSample:
    """Trace the Szego curve log|z| - Re z + 1 = 0, |z| <= 1

    Args:
        count (int): number of rays, at least 16

    Returns:
        CurveSample: the closed curve
    """
    sample = curve_gamma_r(1.0, 1.0, count)
    return CurveSample(points=sample.points, residuals=sample.residuals, label="szego")


def _principal_root(u: np.ndarray, d: int) -> np.ndarray:
    return np.abs(u) ** (1.0 / d) * np.exp(1j * np.angle(u) / d)


def unfold_curve(sample: CurveSample, t_c: float, d: int) -> CurveSample:
    """Pull a z-plane curve back to the lambda-plane through z = 1 - lambda^d/t_c

    Each sheet m multiplies the principal d-th root of t_c(1 - z) by e^{2 pi i m/d}. Sheets start
    at the sample point nearest z = 1, so the d petals chain into one closed curve through 0.

    Args:
        sample (CurveSample): z-plane curve with Re(1 - z) >= 0
        t_c (float): critical time
        d (int): symmetry order

    Raises:
        InvalidParameters: if the sample is not in the z-plane or d < 1
        NumericalBreakdown: if an unfolded point misses the tolerance

    Returns:
        CurveSample: d * len(sample) points in the lambda-plane
    """
    if sample.plane != Plane.Z:
        raise InvalidParameters("Only z-plane samples can be unfolded")
    if d < 1 or not t_c > 0:
        raise InvalidParameters(f"Invalid unfolding d={d}, t_c={t_c}")
    start = int(np.argmin(np.abs(sample.points - 1.0)))
    z = np.roll(sample.points, -start)
    base = _principal_root(t_c * (1.0 - z), d)
    omega = np.exp(2j * math.pi * np.arange(d) / d)
    points = np.concatenate([w * base for w in omega])
    residuals = np.abs(np.real(phi_hat(points, t_c, d)))
    if np.max(residuals) > UNFOLD_TOLERANCE:
        raise NumericalBreakdown(f"Unfolded residual {np.max(residuals):.3e} above tolerance")
    return CurveSample(
        points=points,
        residuals=residuals,
        closed=sample.closed,
        plane=Plane.LAMBDA,
        label=f"unfolded,d={d}",
    )


def lemniscate_boundary(t: float, t_c: float, d: int, count: int) -> CurveSample:
    """Sample the boundary |lambda^d - t| = t_c of the eigenvalue support

    For t < t_c the circle u = t + t_c e^{i psi} winds around 0, so the continuous d-th root is
    followed for d turns (one component). Otherwise each sheet gives its own component, touching
    at 0 when t = t_c.

    Args:
        t (float): time parameter
        t_c (float): critical time
        d (int): symmetry order
        count (int): points per turn

    Raises:
        InvalidParameters: if t, t_c or d is invalid
        NumericalBreakdown: if a point misses the tolerance

    Returns:
        CurveSample: d * count points, component count reported
    """
    if not t > 0 or not t_c > 0 or d < 1:
        raise InvalidParameters(f"Invalid lemniscate t={t}, t_c={t_c}, d={d}")
    if count < 16:
        raise InvalidParameters(f"At least 16 points are needed, got {count}")
    if t < t_c or d == 1:
        psi = 2.0 * math.pi * np.arange(d * count) / count
        u = t + t_c * np.exp(1j * psi)
        points = np.abs(u) ** (1.0 / d) * np.exp(1j * np.unwrap(np.angle(u)) / d)
        components = 1
    else:
        psi = 2.0 * math.pi * np.arange(count) / count
        base = _principal_root(t + t_c * np.exp(1j * psi), d)
        omega = np.exp(2j * math.pi * np.arange(d) / d)
        points = np.concatenate([w * base for w in omega])
        components = 1 if t == t_c else d
    residuals = np.abs(np.abs(points**d - t) - t_c)
    if np.max(residuals) > LEMNISCATE_TOLERANCE * max(1.0, t + t_c):
        raise NumericalBreakdown(f"Lemniscate residual {np.max(residuals):.3e} above tolerance")
    return CurveSample(
        points=points,
        residuals=residuals,
        plane=Plane.LAMBDA,
        components=components,
        label=f"lemniscate,t={t:g},t_c={t_c:g},d={d}",
    )


def nu_hat_mass(sample: CurveSample, d: int = 1, t_c: float = 1.0) -> complex:
    """Total mass of nu-hat, (1/2 pi i) times the integral of d phi along the closed curve

    Each chord is integrated exactly with the primitive of phi'(z) = 1/z - 1. A lambda-plane
    sample integrates d phi-hat instead and divides by d.

    Args:
        sample (CurveSample): closed curve, z-plane or lambda-plane
        d (int): symmetry order of a lambda-plane sample
        t_c (float): critical time of a lambda-plane sample

    Raises:
        InvalidParameters: if the curve is open

    Returns:
        complex: the mass, 1 for the Szego curve
    """
    if not sample.closed:
        raise InvalidParameters("The mass needs a closed curve")
    if sample.plane == Plane.Z:
        start = sample.points
        end = np.roll(sample.points, -1)
        increments = np.log(end / start) - (end - start)
        return complex(np.sum(increments) / (2j * math.pi))
    start_power = sample.points**d
    end_power = np.roll(start_power, -1)
    increments = np.log((t_c - end_power) / (t_c - start_power)) + (end_power - start_power) / t_c
    return complex(np.sum(increments) / (2j * math.pi * d))


def nu_hat_density(sample: CurveSample, z0: float = 1.0) -> np.ndarray:
    """Density of nu-hat per unit arclength, phi'(z) tau / (2 pi i)

    tau is the unit tangent obtained by rotating the gradient of Re phi by +90 degrees, with the
    orientation of the sample order. The density is real, and it is nonnegative exactly when the
    gradient points outward.

    Args:
        sample (CurveSample): closed z-plane curve, counterclockwise
        z0 (float): ratio t_c^2/t^2 of the curve

    Raises:
        InvalidParameters: if the sample is not a z-plane curve

    Returns:
        np.ndarray: complex density per point
    """
    if sample.plane != Plane.Z:
        raise InvalidParameters("The density is defined on z-plane samples")
    z = sample.points
    derivative = 1.0 / z - 1.0 / z0
    magnitude = np.abs(derivative)
    regular = magnitude > 1e-14
    normal = np.where(regular, np.conj(derivative) / np.where(regular, magnitude, 1.0), 0.0)
    tangent = 1j * normal
    chord = np.roll(z, -1) - np.roll(z, 1)
    orientation = np.sign(np.real(np.conj(tangent) * chord))
    return np.where(regular, derivative * orientation * tangent / (2j * math.pi), 0.0)


def winding_number(sample: CurveSample, z: complex) -> int:
    """Winding number of the closed polyline around z

    Args:
        sample (CurveSample): closed curve
        z (complex): point off the curve

    Returns:
        int: winding number
    """
    shifted = sample.points - z
    turns = np.angle(np.roll(shifted, -1) / shifted)
    return int(round(float(np.sum(turns)) / (2.0 * math.pi)))


def ring_sign_structure(
    sample: CurveSample, factors: Tuple[float, float] = (0.9, 1.1)
) -> Tuple[float, float]:
    """Largest Re phi-hat just inside the Szego curve and smallest just outside

    The value of Re phi-hat at a preimage of z equals log|z| + 1 - Re z on every sheet, so the
    rays are sampled in the z-plane. Points near z = 1 are skipped.

    Args:
        sample (CurveSample): Szego curve in the z-plane
        factors (Tuple[float, float]): radial factors of the inner and outer sample points

    Returns:
        Tuple[float, float]: (max inside, min outside); negative then positive when the sign
            structure holds
    """
    z = sample.points[np.abs(sample.points - 1.0) > 0.2]
    inner = factors[0] * z
    outer = factors[1] * z
    inside = np.log(np.abs(inner)) + 1.0 - inner.real
    outside = np.log(np.abs(outer)) + 1.0 - outer.real
    return float(np.max(inside)), float(np.min(outside))
