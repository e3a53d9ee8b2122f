"""
Checks of the zeros of pi_k and of the extracted Painleve IV quantities, at d = 3, ell = 0, z0 = 1
"""
import math
from functools import lru_cache
from typing import Dict, List

from painleve_tau.geometry.curves import zero_attractor_curve
from painleve_tau.geometry.model import ModelParams
from painleve_tau.geometry.potentials import gamma_r_radius
from painleve_tau.orthopoly.orthogonal import monic_orthogonal
from painleve_tau.orthopoly.polynomial import MonicPolynomial
from painleve_tau.verify.abstract_check import AbstractCheck, CheckResult
from painleve_tau.zeros.distance import rate_constant, zero_curve_distance
from painleve_tau.zeros.extraction import (
    convergence_gaps,
    extract_H,
    extract_ZU,
    omega1_reconstruction,
    omega1_test_point,
    omega1_zu_exponent,
)
from painleve_tau.zeros.roots import polynomial_roots

DEGREES = (40, 60, 70)
SYMMETRY = 3
RESIDUE = 0
Z0 = 1.0


@lru_cache(maxsize=None)
def critical_polynomial(k: int) -> MonicPolynomial:
    """pi_k of the d = 3, ell = 0 model at z0 = 1, in the automatic precision

    Args:
        k (int): degree

    Returns:
        MonicPolynomial: pi_k
    """
    params = ModelParams.from_z0(SYMMETRY, RESIDUE, k, Z0)
    return monic_orthogonal(k, params.z0, params.gamma)


class ZeroAttraction(AbstractCheck):
    """
    The zeros of pi_k approach Gamma_1: contained, none far outside, max distance nonincreasing

    The fitted C log k/k envelope is reported, not required. The farthest roots sit on the real
    tail between 0.5 and 0.7, where the distance still decays slower than log k/k at these k.
    """

    NAME = "zero-attraction"
    DESCRIPTION = "Zeros inside |z| <= 1.05, none far outside Gamma_1, max distance nonincreasing"
    PRIORITY = 210
    SLOW = True

    CONTAINMENT_RADIUS = 1.05
    CURVE_POINTS = 1024
    VOID_FACTOR = 5.0

    def run(self) -> CheckResult:
        curve = zero_attractor_curve(Z0, self.CURVE_POINTS)
        max_distances: List[float] = []
        constant = 0.0
        largest_modulus = 0.0
        void_violations = 0
        for k in DEGREES:
            zeros = polynomial_roots(critical_polynomial(k))
            stats = zero_curve_distance(zeros, curve)
            max_distances.append(stats.max_distance)
            if k == DEGREES[0]:
                constant = rate_constant(stats, k)
            largest_modulus = max(largest_modulus, float(max(abs(z) for z in zeros.roots)))
            envelope = self.VOID_FACTOR * math.log(k) / k
            for z, distance in zip(zeros.roots.tolist(), stats.distances.tolist()):
                if z != 0 and distance > envelope:
                    if abs(z) > gamma_r_radius(math.atan2(z.imag, z.real), 1.0, Z0):
                        void_violations += 1
        monotone = all(b <= a for a, b in zip(max_distances, max_distances[1:]))
        envelope_ratios = [
            distance / (constant * math.log(k) / k) for k, distance in zip(DEGREES, max_distances)
        ]
        passed = largest_modulus <= self.CONTAINMENT_RADIUS and monotone and void_violations == 0
        return self.result(
            passed,
            f"max distances {[round(d, 6) for d in max_distances]}, C = {constant:.4f}",
            degrees=list(DEGREES),
            max_distances=max_distances,
            rate_constant=constant,
            envelope_ratios=envelope_ratios,
            within_envelope=all(ratio <= 1 + 1e-9 for ratio in envelope_ratios),
            largest_modulus=largest_modulus,
            exterior_roots=void_violations,
        )


class ExtractionConsistency(AbstractCheck):
    """
    H and Z/U are stable across the samples and converge in k
    """

    NAME = "extraction"
    DESCRIPTION = "H and Z/U dispersions < 15% at k = 60, shrinking k-gaps, Omega_1 fit within 10%"
    PRIORITY = 220
    SLOW = True

    DISPERSION_RATIO = 0.15
    RECONSTRUCTION_TOLERANCE = 0.1
    REFERENCE_DEGREE = 60

    def run(self) -> CheckResult:
        extracts = []
        gamma = ModelParams.from_z0(SYMMETRY, RESIDUE, 1, Z0).gamma
        for k in DEGREES:
            poly = critical_polynomial(k)
            h_part = extract_H(poly, k, gamma, Z0)
            zu_part = extract_ZU(poly, k, gamma, Z0, zu_exponent=omega1_zu_exponent(gamma))
            extracts.append(h_part.merge(zu_part))
        extracts = convergence_gaps(extracts)
        reference = next(e for e in extracts if e.k == self.REFERENCE_DEGREE)
        if reference.h is None or reference.zu is None:
            return self.result(False, f"No estimate at k = {self.REFERENCE_DEGREE}")
        ratios: Dict[str, float] = {
            "h": (reference.h_dispersion or 0.0) / max(abs(reference.h), 1e-300),
            "zu": (reference.zu_dispersion or 0.0) / max(abs(reference.zu), 1e-300),
        }
        h_gaps = [e.h_gap for e in extracts[1:]]
        zu_gaps = [e.zu_gap for e in extracts[1:]]
        shrinking = (
            None not in h_gaps
            and None not in zu_gaps
            and h_gaps[1] < h_gaps[0]  # type: ignore[operator]
            and zu_gaps[1] < zu_gaps[0]  # type: ignore[operator]
        )
        point = omega1_test_point(reference.k, gamma, Z0)
        fit = omega1_reconstruction(critical_polynomial(reference.k), reference, point)
        passed = (
            max(ratios.values()) < self.DISPERSION_RATIO
            and shrinking
            and fit["relative_error"] < self.RECONSTRUCTION_TOLERANCE
        )
        return self.result(
            passed,
            f"dispersion ratios {ratios}, Omega_1 error {fit['relative_error']:.3e}",
            dispersion_ratios=ratios,
            h_gaps=h_gaps,
            zu_gaps=zu_gaps,
            omega1_error=fit["relative_error"],
            rows=[e.to_row() for e in extracts],
        )
