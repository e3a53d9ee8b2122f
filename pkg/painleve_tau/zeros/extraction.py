"""
Extraction of H and Z/U from the finite-k expansions of pi_k

Outside Gamma_1:  pi_k(z) = z^k (1 - 1/z)^gamma (1 + H/(sqrt(k)(z - 1)) + O(1/k))
Inside the zeros: pi_k(z) = -e^{k(z/z0 - 1/z0)} (Z/U)/((z - 1) k^e) (1 + o(1)),  e = 1/2 + gamma

Between the zeros and Gamma_1 the same term carries the power e = (1 + gamma)/2; the two
readings differ by k^{gamma/2}, and the corrected curve and the two-term reconstruction use the
second one.

Each estimate is evaluated at a fixed sample set; the mean is reported with the population
standard deviation of the samples.
"""
import cmath
import logging
import math
from dataclasses import dataclass, replace
from typing import Any, Dict, List, Optional, Sequence

import mpmath
import numpy as np

from painleve_tau.exceptions import InvalidParameters, NumericalBreakdown
from painleve_tau.geometry.potentials import is_inside_gamma_r
from painleve_tau.orthopoly.polynomial import MonicPolynomial
from painleve_tau.utils.precision import working_precision

LOGGER = logging.getLogger("PainleveTau")

SAMPLE_COUNT = 8
EXTERIOR_RADIUS = 1.6
INTERIOR_CENTER = 0.45
INTERIOR_RADIUS = 0.1
MIN_SAMPLE_GAP = 0.2


def default_exterior_samples() -> List[complex]:
    """|z| = 1.6 at the angles pi/8 + m pi/4

    Returns:
        List[complex]: eight samples
    """
    return [
        cmath.rect(EXTERIOR_RADIUS, math.pi / 8 + m * math.pi / 4) for m in range(SAMPLE_COUNT)
    ]


def default_interior_samples() -> List[complex]:
    """z = 0.45 + 0.1 e^{2 pi i m/8}

    Returns:
        List[complex]: eight samples
    """
    return [
        INTERIOR_CENTER + cmath.rect(INTERIOR_RADIUS, 2 * math.pi * m / SAMPLE_COUNT)
        for m in range(SAMPLE_COUNT)
    ]


def default_zu_exponent(gamma: float) -> float:
    """Default power of k normalizing the interior term, read inside the zeros

    Args:
        gamma (float): exponent of the reduced weight

    Returns:
        float: 1/2 + gamma
    """
    return 0.5 + gamma


def omega1_zu_exponent(gamma: float) -> float:
    """Power of k of the interior term between the zeros and Gamma_1

    Args:
        gamma (float): exponent of the reduced weight

    Returns:
        float: (1 + gamma)/2
    """
    return 0.5 * (1.0 + gamma)


# pylint: disable=too-many-instance-attributes
@dataclass(frozen=True)
class AsymptoticExtract:
    """
    Estimates of H and Z/U at one (k, S), with their sample dispersion and k-convergence gap

    A part that was not extracted is None.
    """

    k: int
    scaling: float
    gamma: float
    z0: float
    h: Optional[complex] = None
    h_dispersion: Optional[float] = None
    h_gap: Optional[float] = None
    zu: Optional[complex] = None
    zu_dispersion: Optional[float] = None
    zu_gap: Optional[float] = None
    zu_exponent: Optional[float] = None

    def merge(self, other: "AsymptoticExtract") -> "AsymptoticExtract":
        """Combine the H part of one extract with the Z/U part of another

        Args:
            other (AsymptoticExtract): extract at the same k

        Raises:
            InvalidParameters: if k differs

        Returns:
            AsymptoticExtract: extract holding every available part
        """
        if other.k != self.k:
            raise InvalidParameters(f"Cannot merge extracts at k={self.k} and k={other.k}")
        changes: Dict[str, Any] = {}
        for name in ("h", "h_dispersion", "h_gap", "zu", "zu_dispersion", "zu_gap", "zu_exponent"):
            if getattr(self, name) is None and getattr(other, name) is not None:
                changes[name] = getattr(other, name)
        return replace(self, **changes)

    def to_row(self) -> Dict[str, Any]:
        """Flat row for the extraction table

        Returns:
            Dict[str, Any]: the columns
        """

        def part(value: Optional[complex]) -> List[Optional[float]]:
            if value is None:
                return [None, None]
            return [value.real, value.imag]

        h_re, h_im = part(self.h)
        zu_re, zu_im = part(self.zu)
        return {
            "k": self.k,
            "scaling": self.scaling,
            "h_re": h_re,
            "h_im": h_im,
            "h_dispersion": self.h_dispersion,
            "h_gap": self.h_gap,
            "zu_re": zu_re,
            "zu_im": zu_im,
            "zu_dispersion": self.zu_dispersion,
            "zu_gap": self.zu_gap,
        }


def _validate_samples(samples: Sequence[complex], z0: float, inside: bool) -> List[complex]:
    checked = []
    for z in samples:
        z = complex(z)
        if z == 0 or abs(z - 1.0) < MIN_SAMPLE_GAP:
            raise InvalidParameters(f"Sample {z} is too close to 0 or 1")
        if is_inside_gamma_r(z, 1.0, z0) != inside:
            side = "inside" if inside else "outside"
            raise InvalidParameters(f"Sample {z} is not {side} Gamma_1")
        checked.append(z)
    if not checked:
        raise InvalidParameters("At least one sample is needed")
    return checked


def _mean_and_dispersion(values: List[complex]) -> Any:
    array = np.array(values, dtype=complex)
    if not np.all(np.isfinite(array)):
        raise NumericalBreakdown("Non-finite extraction sample")
    mean = complex(np.mean(array))
    return mean, float(np.sqrt(np.mean(np.abs(array - mean) ** 2)))


def _check_degree(poly: MonicPolynomial, k: int) -> None:
    if poly.degree != k:
        raise InvalidParameters(f"Polynomial of degree {poly.degree} given for k = {k}")


# pylint: disable=too-many-arguments
def extract_H(
    poly: MonicPolynomial,
    k: int,
    gamma: float,
    z0: float,
    z_samples: Optional[Sequence[complex]] = None,
    scaling: float = 0.0,
) -> AsymptoticExtract:
    """H estimates sqrt(k)(z - 1)(pi_k(z) z^{-k} (1 - 1/z)^{-gamma} - 1) outside Gamma_1

    pi_k(z) z^{-k} comes from the scaled evaluation, so |z|^k never overflows.

    Args:
        poly (MonicPolynomial): pi_k
        k (int): degree
        gamma (float): exponent of the reduced weight
        z0 (float): ratio t_c^2/t^2
        z_samples (Optional[Sequence[complex]]): exterior samples, default |z| = 1.6
        scaling (float): double-scaling parameter recorded in the extract

    Raises:
        InvalidParameters: if a sample is inside Gamma_1 or near 0 or 1

    Returns:
        AsymptoticExtract: the H part
    """
    _check_degree(poly, k)
    samples = _validate_samples(z_samples or default_exterior_samples(), z0, inside=False)
    estimates = []
    for z in samples:
        ratio = poly.evaluate_scaled(z) * cmath.exp(-gamma * cmath.log(1.0 - 1.0 / z))
        estimates.append(math.sqrt(k) * (z - 1.0) * (ratio - 1.0))
    mean, dispersion = _mean_and_dispersion(estimates)
    LOGGER.debug("H at k=%d: %s (dispersion %.3e)", k, mean, dispersion)
    return AsymptoticExtract(
        k=k, scaling=scaling, gamma=gamma, z0=z0, h=mean, h_dispersion=dispersion
    )


# pylint: disable=too-many-arguments
def extract_ZU(
    poly: MonicPolynomial,
    k: int,
    gamma: float,
    z0: float,
    z_samples: Optional[Sequence[complex]] = None,
    scaling: float = 0.0,
    zu_exponent: Optional[float] = None,
) -> AsymptoticExtract:
    """Z/U estimates -pi_k(z) e^{-k(z/z0 - 1/z0)} (z - 1) k^e inside Gamma_1

    The product is formed in the working precision of the polynomial.

    Args:
        poly (MonicPolynomial): pi_k
        k (int): degree
        gamma (float): exponent of the reduced weight
        z0 (float): ratio t_c^2/t^2
        z_samples (Optional[Sequence[complex]]): interior samples, default ring around 0.45
        scaling (float): double-scaling parameter recorded in the extract
        zu_exponent (Optional[float]): power e of k, default 1/2 + gamma

    Raises:
        InvalidParameters: if a sample is outside Gamma_1 or near 0 or 1

    Returns:
        AsymptoticExtract: the Z/U part
    """
    _check_degree(poly, k)
    exponent = default_zu_exponent(gamma) if zu_exponent is None else zu_exponent
    samples = _validate_samples(z_samples or default_interior_samples(), z0, inside=True)
    estimates = []
    with working_precision(max(poly.digits, 15)):
        for z in samples:
            value = poly.evaluate_exact(z)
            exponential = mpmath.exp(-k * (mpmath.mpc(z) - 1) / z0)
            estimate = -value * exponential * (mpmath.mpc(z) - 1) * mpmath.mpf(k) ** exponent
            estimates.append(complex(estimate))
    mean, dispersion = _mean_and_dispersion(estimates)
    LOGGER.debug("Z/U at k=%d: %s (dispersion %.3e)", k, mean, dispersion)
    return AsymptoticExtract(
        k=k,
        scaling=scaling,
        gamma=gamma,
        z0=z0,
        zu=mean,
        zu_dispersion=dispersion,
        zu_exponent=exponent,
    )


def omega1_reconstruction(
    poly: MonicPolynomial, extract: AsymptoticExtract, z: complex
) -> Dict[str, complex]:
    """Two-term form of pi_k between the zeros and Gamma_1, compared with pi_k(z)

    z^k ((z - 1)/z)^gamma (1 + H/(sqrt(k)(z - 1))) - e^{k(z/z0 - 1/z0)} (Z/U)/((z - 1) k^e)

    Args:
        poly (MonicPolynomial): pi_k
        extract (AsymptoticExtract): extract holding both H and Z/U
        z (complex): point inside Gamma_1, away from 0 and 1

    Raises:
        InvalidParameters: if a part of the extract is missing

    Returns:
        Dict[str, complex]: exact value, reconstruction and relative error
    """
    if extract.h is None or extract.zu is None or extract.zu_exponent is None:
        raise InvalidParameters("The reconstruction needs both H and Z/U")
    k = extract.k
    with working_precision(max(poly.digits, 15)):
        point = mpmath.mpc(z)
        exact = poly.evaluate_exact(point)
        outer = (
            point**k
            * mpmath.exp(extract.gamma * mpmath.log((point - 1) / point))
            * (1 + extract.h / (mpmath.sqrt(k) * (point - 1)))
        )
        inner = (
            mpmath.exp(k * (point - 1) / extract.z0)
            * extract.zu
            / ((point - 1) * mpmath.mpf(k) ** extract.zu_exponent)
        )
        model = outer - inner
        error = mpmath.fabs(exact - model) / mpmath.fabs(exact)
        return {"exact": complex(exact), "model": complex(model), "relative_error": float(error)}


def omega1_test_point(k: int, gamma: float, z0: float = 1.0) -> complex:
    """Point of the imaginary axis where Re phi(z; 1) = -((1 + gamma)/4) log k/k

    On z = i y, Re phi(z; 1) = log y + 1/z0, so y = exp(-((1 + gamma)/4) log k/k - 1/z0), which
    sits between the zeros and Gamma_1.

    Args:
        k (int): degree, at least 2
        gamma (float): exponent of the reduced weight
        z0 (float): ratio t_c^2/t^2

    Returns:
        complex: the test point
    """
    return 1j * math.exp(-0.25 * (1.0 + gamma) * math.log(k) / k - 1.0 / z0)


def convergence_gaps(extracts: Sequence[AsymptoticExtract]) -> List[AsymptoticExtract]:
    """Fill the gap columns with |estimate(k) - estimate(previous k)|, ordered by k

    Args:
        extracts (Sequence[AsymptoticExtract]): extracts at one scaling and several k

    Returns:
        List[AsymptoticExtract]: the extracts sorted by k, the first one without gaps
    """
    ordered = sorted(extracts, key=lambda extract: extract.k)
    result: List[AsymptoticExtract] = []
    for index, extract in enumerate(ordered):
        if index == 0:
            result.append(replace(extract, h_gap=None, zu_gap=None))
            continue
        previous = ordered[index - 1]
        h_gap = None
        if extract.h is not None and previous.h is not None:
            h_gap = abs(extract.h - previous.h)
        zu_gap = None
        if extract.zu is not None and previous.zu is not None:
            zu_gap = abs(extract.zu - previous.zu)
        result.append(replace(extract, h_gap=h_gap, zu_gap=zu_gap))
    return result
