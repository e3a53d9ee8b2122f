"""
Module importing all the checks of the verification battery
"""

# pylint: disable=unused-import
from painleve_tau.verify.geometry_checks import ConformalMap, NuHatMeasure
from painleve_tau.verify.orthopoly_checks import (
    ExactFactorization,
    HankelNonvanishing,
    PlanarContour,
)
from painleve_tau.verify.tau_checks import (
    PoleFreeThreshold,
    QuadratureExactness,
    TauLimit,
    TauRealness,
    TauResolution,
)
from painleve_tau.verify.zeros_checks import ExtractionConsistency, ZeroAttraction
