"""
Checks of the critical curves and the conformal map
"""
import math

import numpy as np

from painleve_tau.geometry.curves import nu_hat_density, nu_hat_mass, szego_curve_z
from painleve_tau.geometry.potentials import a_of, conformal_zeta, phi_conformal
from painleve_tau.verify.abstract_check import AbstractCheck, CheckResult


class NuHatMeasure(AbstractCheck):
    """
    nu-hat is a probability measure on the Szego curve
    """

    NAME = "nu-hat"
    DESCRIPTION = "nu-hat mass = 1 within 1e-8 and density >= -1e-8 on 256 Szego points"
    PRIORITY = 50

    POINTS = 256
    TOLERANCE = 1e-8

    def run(self) -> CheckResult:
        sample = szego_curve_z(self.POINTS)
        mass = nu_hat_mass(sample)
        density = nu_hat_density(sample)
        min_density = float(np.min(density.real))
        max_imaginary = float(np.max(np.abs(density.imag)))
        passed = (
            abs(mass - 1.0) < self.TOLERANCE
            and min_density >= -self.TOLERANCE
            and max_imaginary < self.TOLERANCE
        )
        return self.result(
            passed,
            f"mass {mass.real:.12f}, min density {min_density:.3e}",
            mass=mass,
            min_density=min_density,
            max_density_imaginary=max_imaginary,
        )


class ConformalMap(AbstractCheck):
    """
    phi = zeta^2/2 + A zeta near z = 1, with A(1) = 0 and A(1 + d) ~ -d
    """

    NAME = "conformal-map"
    DESCRIPTION = "|phi - zeta^2/2 - A zeta| < 1e-12 on |z - 1| <= 0.25, A(1) = 0, A(1.01) ~ -0.01"
    PRIORITY = 60

    Z0_VALUES = (0.9, 1.0, 1.1)
    TOLERANCE = 1e-12
    # A(1 + d) = -d + 2 d^2/3 + O(d^3), so the linear reading is off by about 6.7e-5 at d = 0.01
    LINEAR_TOLERANCE = 1e-4

    def run(self) -> CheckResult:
        radii = np.linspace(0.0, 0.25, 11)
        angles = 2.0 * math.pi * np.arange(16) / 16
        disk = 1.0 + (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()
        worst = 0.0
        for z0 in self.Z0_VALUES:
            zeta = conformal_zeta(disk, z0)
            shift = a_of(z0).real
            defect = np.abs(phi_conformal(disk, z0) - 0.5 * zeta**2 - shift * zeta)
            worst = max(worst, float(np.max(defect)))
        a_one = abs(a_of(1.0))
        a_linear = abs(a_of(1.01).real + 0.01)
        passed = worst < self.TOLERANCE and a_one < self.TOLERANCE
        passed = passed and a_linear < self.LINEAR_TOLERANCE
        return self.result(
            passed,
            f"identity defect {worst:.3e}, |A(1.01) + 0.01| = {a_linear:.3e}",
            identity_defect=worst,
            a_at_one=a_one,
            a_linear_gap=a_linear,
        )
