"""
Checks of the moments, the Hankel determinants and the orthogonal polynomials
"""
import math
from itertools import product

import numpy as np

from painleve_tau.geometry.model import ModelParams
from painleve_tau.orthopoly.moments import (
    complex_moments,
    exact_moments_gamma0,
    hankel_phase_check,
)
from painleve_tau.orthopoly.orthogonal import monic_orthogonal, unfold_polynomial
from painleve_tau.orthopoly.planar import planar_identity_error
from painleve_tau.utils.precision import resolve_digits
from painleve_tau.verify.abstract_check import AbstractCheck, CheckResult


class PlanarContour(AbstractCheck):
    """
    The planar moments equal their contour representation
    """

    NAME = "planar-contour"
    DESCRIPTION = "Planar and contour sides agree within 1e-6, j <= 5, q in {1, u}, N = 1"
    PRIORITY = 70

    J_MAX = 5
    GAMMAS = (0.25, 0.5, 0.75)
    TIMES = (0.3, 1.0)
    POLYNOMIALS = (0, 1)
    TOLERANCE = 1e-6

    def run(self) -> CheckResult:
        worst = 0.0
        worst_case = ""
        cases = product(self.POLYNOMIALS, range(self.J_MAX + 1), self.GAMMAS, self.TIMES)
        for degree, j, gamma, t in cases:
            _, _, error = planar_identity_error(degree, j, gamma, 1.0, t)
            if error > worst:
                worst = error
                worst_case = f"q = u^{degree}, j = {j}, gamma = {gamma}, t = {t}"
        return self.result(
            worst < self.TOLERANCE,
            f"max relative error {worst:.3e} ({worst_case})",
            max_error=worst,
        )


class HankelNonvanishing(AbstractCheck):
    """
    det[nu_{i+j}] / ((-1)^{k(k-1)/2} (2i)^k) is positive real
    """

    NAME = "hankel-nonvanishing"
    DESCRIPTION = "Normalized Hankel determinants positive real for k <= 6, and pi^k at gamma = 0"
    PRIORITY = 80

    K_MAX = 6
    GAMMAS = (1.0 / 3.0, 2.0 / 3.0)
    Z0 = 1.0
    TOLERANCE = 1e-8

    def run(self) -> CheckResult:
        worst_phase = 0.0
        worst_exact = 0.0
        for k in range(1, self.K_MAX + 1):
            exact = exact_moments_gamma0(k, self.Z0, 2 * k - 2)
            value = hankel_phase_check(exact, k)
            worst_exact = max(worst_exact, abs(value - math.pi**k) / math.pi**k)
            digits = resolve_digits(k, None)
            for gamma in self.GAMMAS:
                moments = complex_moments(k, self.Z0, gamma, 2 * k - 2, digits=digits)
                value = hankel_phase_check(moments, k)
                phase = abs(np.angle(value)) if value != 0 else math.pi
                worst_phase = max(worst_phase, phase)
        return self.result(
            worst_phase < self.TOLERANCE and worst_exact < self.TOLERANCE,
            f"max phase {worst_phase:.3e}, gamma = 0 deviation from pi^k {worst_exact:.3e}",
            max_phase=worst_phase,
            gamma0_deviation=worst_exact,
        )


class ExactFactorization(AbstractCheck):
    """
    At t = t_c and ell = d - 1, p_n = lambda^{d-1} (lambda^d - t_c)^k
    """

    NAME = "factorization"
    DESCRIPTION = "p_n = lambda^(d-1) (lambda^d - t_c)^k at criticality, d in {2, 3}, k <= 4"
    PRIORITY = 90

    SYMMETRIES = (2, 3)
    K_MAX = 4
    TOLERANCE = 1e-9

    def run(self) -> CheckResult:
        worst = 0.0
        for d in self.SYMMETRIES:
            for k in range(1, self.K_MAX + 1):
                params = ModelParams.from_z0(d, d - 1, k, 1.0)
                poly = monic_orthogonal(k, params.z0, params.gamma)
                unfolded = unfold_polynomial(poly, params.t, d, d - 1).as_array()
                expected = np.zeros(k * d + d, dtype=complex)
                for m in range(k + 1):
                    expected[d - 1 + m * d] = math.comb(k, m) * (-params.t_c) ** (k - m)
                error = float(np.max(np.abs(unfolded - expected)) / np.max(np.abs(expected)))
                worst = max(worst, error)
        return self.result(
            worst < self.TOLERANCE,
            f"max relative coefficient error {worst:.3e}",
            max_error=worst,
        )
