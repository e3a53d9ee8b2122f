"""
Checks of the quadrature rule and of the Fredholm determinant
"""

import numpy as np

from painleve_tau.quadrature import gauss_hermite, gaussian_moment
from painleve_tau.tau_fredholm import (
    TauParams,
    kernel_matrix,
    pole_free_threshold,
    tau,
    tau_scan,
)
from painleve_tau.verify.abstract_check import AbstractCheck, CheckResult


class QuadratureExactness(AbstractCheck):
    """
    Gauss-Hermite rules integrate x^p exactly for p <= 2m - 1
    """

    NAME = "quadrature-exactness"
    DESCRIPTION = "Gauss-Hermite exactness, m <= 50, p <= 2m - 1, at 1e-10 relative"
    PRIORITY = 10

    MAX_ORDER = 50
    TOLERANCE = 1e-10

    def run(self) -> CheckResult:
        worst = 0.0
        worst_at = (0, 0)
        for m in range(1, self.MAX_ORDER + 1):
            rule = gauss_hermite(m)
            for p in range(2 * m):
                terms = rule.nodes**p * rule.weights
                exact = gaussian_moment(p)
                # odd moments vanish, so their error is measured against sum |terms|
                scale = abs(exact) if exact else float(np.sum(np.abs(terms)))
                error = abs(float(np.sum(terms)) - exact)
                if scale > 0:
                    error /= scale
                if error > worst:
                    worst, worst_at = error, (m, p)
        return self.result(
            worst < self.TOLERANCE,
            f"max relative error {worst:.3e} at (m, p) = {worst_at}",
            max_error=worst,
            order=worst_at[0],
            power=worst_at[1],
        )


class PoleFreeThreshold(AbstractCheck):
    """
    s0 = -0.7701449782
    """

    NAME = "s0"
    DESCRIPTION = "Pole-free threshold s0 = -0.7701449782 within 1e-9"
    PRIORITY = 20

    EXPECTED = -0.7701449782
    TOLERANCE = 1e-9

    def run(self) -> CheckResult:
        value = pole_free_threshold()
        return self.result(
            abs(value - self.EXPECTED) < self.TOLERANCE,
            f"s0 = {value:.12f}",
            s0=value,
            expected=self.EXPECTED,
        )


class TauLimit(AbstractCheck):
    """
    tau(-8) ~ 1 and tau > 0 below s0
    """

    NAME = "tau-limit"
    DESCRIPTION = "|tau(-8) - 1| < 1e-6 and tau > 0 on a 0.05 grid of [-8, s0], n = 30"
    PRIORITY = 30

    GAMMAS = (0.1, 0.5, 0.9)
    N = 30
    S_LEFT = -8.0
    STEP = 0.05
    TOLERANCE = 1e-6

    def run(self) -> CheckResult:
        threshold = pole_free_threshold()
        deviation = 0.0
        smallest = float("inf")
        for gamma in self.GAMMAS:
            deviation = max(
                deviation, abs(tau(TauParams.default(self.S_LEFT, gamma, self.N)) - 1.0)
            )
            series = tau_scan(gamma, self.N, self.S_LEFT, threshold, self.STEP)
            smallest = min(smallest, float(np.min(series.tau)))
        return self.result(
            deviation < self.TOLERANCE and smallest > 0.0,
            f"|tau(-8) - 1| <= {deviation:.3e}, min tau below s0 = {smallest:.6f}",
            limit_deviation=deviation,
            min_tau=smallest,
        )


class TauRealness(AbstractCheck):
    """
    A A^T is real up to rounding
    """

    NAME = "tau-realness"
    DESCRIPTION = "Relative imaginary part of A A^T < 1e-10, gamma = 0.1, n = 80, s in [-4, 4]"
    PRIORITY = 40

    GAMMA = 0.1
    N = 80
    GRID = np.linspace(-4.0, 4.0, 17)
    TOLERANCE = 1e-10

    def run(self) -> CheckResult:
        worst = 0.0
        for s in self.GRID:
            _, ratio = kernel_matrix(TauParams.default(float(s), self.GAMMA, self.N))
            worst = max(worst, ratio)
        return self.result(
            worst < self.TOLERANCE,
            f"max relative imaginary part {worst:.3e}",
            max_imaginary_ratio=worst,
        )


class TauResolution(AbstractCheck):
    """
    First sign change of tau agrees between n = 30 and n = 80
    """

    NAME = "tau-resolution"
    DESCRIPTION = "First sign change of tau at gamma = 0.1 agrees within 0.1 for n = 30 and 80"
    PRIORITY = 200
    SLOW = True

    GAMMA = 0.1
    RESOLUTIONS = (30, 80)
    S_RANGE = (-8.0, 8.0)
    STEP = 0.02
    TOLERANCE = 0.1

    def run(self) -> CheckResult:
        firsts = []
        for n in self.RESOLUTIONS:
            series = tau_scan(self.GAMMA, n, self.S_RANGE[0], self.S_RANGE[1], self.STEP)
            if not series.brackets:
                return self.result(False, f"no sign change of tau for n = {n}")
            firsts.append(0.5 * sum(series.brackets[0]))
        gap = abs(firsts[0] - firsts[1])
        return self.result(
            gap < self.TOLERANCE,
            f"first sign changes {firsts[0]:.3f} and {firsts[1]:.3f}",
            first_sign_changes=firsts,
            gap=gap,
        )
