"""
Roots of monic polynomials

Companion-matrix eigenvalues (numpy.roots, balanced by LAPACK) give the starting points; the
Aberth-Ehrlich iteration then polishes all of them simultaneously in mpmath, on the stored
coefficients, with at least 30 digits.
"""
import logging
import math
from dataclasses import dataclass, field
from typing import Any, List, Tuple

import mpmath
import numpy as np

from painleve_tau.exceptions import InvalidParameters, NumericalBreakdown
from painleve_tau.orthopoly.polynomial import MonicPolynomial, horner
from painleve_tau.types import Plane
from painleve_tau.utils.precision import MIN_EXTENDED_DIGITS

LOGGER = logging.getLogger("PainleveTau")

CLUSTER_RADIUS = 1e-6
RESIDUAL_TOLERANCE = 1e-10
_MAX_ITERATIONS = 80
_JITTER = 1e-9


# pylint: disable=too-many-instance-attributes
@dataclass(frozen=True, eq=False)
class ZeroSet:
    """
    Roots of a polynomial with their relative residuals |p(z)| / sum |c_i| |z|^i
    """

    k: int
    z0: float
    gamma: float
    roots: np.ndarray
    residuals: np.ndarray
    multiplicities: List[Tuple[complex, int]] = field(default_factory=list)
    plane: Plane = Plane.Z

    def __len__(self) -> int:
        return len(self.roots)

    @property
    def max_residual(self) -> float:
        """Largest relative residual

        Returns:
            float: max residual, 0 for an empty set
        """
        return float(np.max(self.residuals)) if len(self.residuals) else 0.0


def _relative_residual(coefficients: List[Any], z: Any) -> float:
    value = horner(coefficients, z)
    absolute = [mpmath.fabs(c) for c in coefficients]
    scale = horner(absolute, mpmath.fabs(z))
    if scale == 0:
        return 0.0
    return float(mpmath.fabs(value) / scale)


def _starting_points(coefficients: np.ndarray) -> np.ndarray:
    guesses = np.roots(coefficients[::-1])
    # Aberth corrections divide by z_i - z_j, so coincident guesses are separated
    for i in range(len(guesses)):
        for j in range(i):
            if abs(guesses[i] - guesses[j]) < 1e-14 * max(1.0, abs(guesses[i])):
                guesses[i] += _JITTER * (i + 1) * complex(math.cos(2.4 * i), math.sin(2.4 * i))
    return guesses


def _aberth(coefficients: List[Any], guesses: np.ndarray, digits: int) -> List[Any]:
    """Simultaneous Aberth-Ehrlich polishing in mpmath"""
    derivative = [i * c for i, c in enumerate(coefficients)][1:]
    roots = [mpmath.mpc(complex(g)) for g in guesses]
    target = mpmath.mpf(10) ** (5 - digits)
    for iteration in range(_MAX_ITERATIONS):
        largest_step = mpmath.mpf(0)
        converged = True
        for i, z in enumerate(roots):
            value = horner(coefficients, z)
            if value == 0:
                continue
            ratio = value / horner(derivative, z)
            repulsion = mpmath.fsum(1 / (z - w) for j, w in enumerate(roots) if j != i)
            step = ratio / (1 - ratio * repulsion)
            roots[i] = z - step
            largest_step = max(largest_step, mpmath.fabs(step) / max(1, mpmath.fabs(z)))
            if _relative_residual(coefficients, roots[i]) > target:
                converged = False
        if converged:
            LOGGER.debug("Aberth iteration converged after %d sweeps", iteration + 1)
            return roots
        if largest_step < mpmath.mpf(10) ** (-digits):
            break
    return roots


def _clusters(roots: np.ndarray) -> List[Tuple[complex, int]]:
    """Groups of roots closer than CLUSTER_RADIUS, by single linkage"""
    labels = list(range(len(roots)))

    def find(i: int) -> int:
        while labels[i] != i:
            labels[i] = labels[labels[i]]
            i = labels[i]
        return i

    for i in range(len(roots)):
        for j in range(i):
            if abs(roots[i] - roots[j]) < CLUSTER_RADIUS:
                labels[find(i)] = find(j)
    groups: dict = {}
    for i in range(len(roots)):
        groups.setdefault(find(i), []).append(i)
    clusters = []
    for members in groups.values():
        if len(members) > 1:
            clusters.append((complex(np.mean(roots[members])), len(members)))
    return sorted(clusters, key=lambda item: (item[0].real, item[0].imag))


def polynomial_roots(poly: MonicPolynomial) -> ZeroSet:
    """All roots of a monic polynomial, polished and with their residuals

    Exact zero trailing coefficients are deflated as roots at 0. Roots closer than 1e-6 are
    reported as clusters with their multiplicity.

    Args:
        poly (MonicPolynomial): polynomial of degree >= 1

    Raises:
        InvalidParameters: if the degree is 0
        NumericalBreakdown: if the eigenvalue step fails or a residual stays above 1e-10

    Returns:
        ZeroSet: the roots, sorted by angle then modulus
    """
    if poly.degree < 1:
        raise InvalidParameters("Roots need a polynomial of degree at least 1")
    digits = max(poly.digits, MIN_EXTENDED_DIGITS)
    leading_zeros = 0
    while poly.coefficients[leading_zeros] == 0:
        leading_zeros += 1
    with mpmath.workdps(digits):
        coefficients = [mpmath.mpmathify(c) for c in poly.coefficients[leading_zeros:]]
        roots: List[Any] = []
        if len(coefficients) > 1:
            try:
                guesses = _starting_points(poly.as_array()[leading_zeros:])
            except np.linalg.LinAlgError as exception:
                raise NumericalBreakdown(
                    f"Companion eigenvalues failed: {exception}"
                ) from exception
            roots = _aberth(coefficients, guesses, digits)
        residuals = [_relative_residual(coefficients, z) for z in roots]
    values = np.array([complex(z) for z in roots] + [0j] * leading_zeros, dtype=complex)
    residual_array = np.array(residuals + [0.0] * leading_zeros)
    if len(residual_array) and np.max(residual_array) > RESIDUAL_TOLERANCE:
        raise NumericalBreakdown(
            f"Root residual {np.max(residual_array):.3e} above {RESIDUAL_TOLERANCE} "
            f"for degree {poly.degree}"
        )
    order = np.lexsort((np.abs(values), np.angle(values)))
    values = values[order]
    residual_array = residual_array[order]
    clusters = _clusters(values)
    if clusters:
        LOGGER.warning(
            "%d clusters of coincident roots (largest multiplicity %d)",
            len(clusters),
            max(count for _, count in clusters),
        )
    return ZeroSet(
        k=int(poly.provenance.get("k", poly.degree)),
        z0=float(poly.provenance.get("z0", 1.0)),
        gamma=float(poly.provenance.get("gamma", 0.0)),
        roots=values,
        residuals=residual_array,
        multiplicities=clusters,
        plane=poly.plane,
    )


def unfold_roots(zeros: ZeroSet, t: float, d: int, ell: int) -> ZeroSet:
    """Roots of p_n(lambda) = lambda^ell q_k(lambda^d) from the roots of pi_k

    A root z gives u = t (1 - z) and the d roots lambda = u^{1/d} e^{2 pi i m/d}; ell roots sit at
    lambda = 0. The set is invariant under multiplication by e^{2 pi i/d}.

    Args:
        zeros (ZeroSet): z-plane roots of pi_k
        t (float): time parameter, positive
        d (int): symmetry order
        ell (int): residue class of the degree

    Raises:
        InvalidParameters: if the parameters are inconsistent

    Returns:
        ZeroSet: the k d + ell roots in the lambda-plane
    """
    if zeros.plane != Plane.Z:
        raise InvalidParameters("Only z-plane roots can be unfolded")
    if d < 1 or not 0 <= ell < d or not t > 0:
        raise InvalidParameters(f"Invalid unfolding t={t}, d={d}, ell={ell}")
    u = t * (1.0 - zeros.roots)
    base = np.abs(u) ** (1.0 / d) * np.exp(1j * np.angle(u) / d)
    omega = np.exp(2j * math.pi * np.arange(d) / d)
    lam = np.concatenate([w * base for w in omega] + [np.zeros(ell, dtype=complex)])
    residuals = np.concatenate([zeros.residuals] * d + [np.zeros(ell)])
    order = np.lexsort((np.abs(lam), np.angle(lam)))
    lam = lam[order]
    return ZeroSet(
        k=zeros.k,
        z0=zeros.z0,
        gamma=zeros.gamma,
        roots=lam,
        residuals=residuals[order],
        multiplicities=_clusters(lam),
        plane=Plane.LAMBDA,
    )
