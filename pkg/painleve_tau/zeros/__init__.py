"""
Init module
"""
from .distance import (
    DistanceStats,
    compare_deform_forms,
    corrected_zero_curve,
    rate_constant,
    zero_curve_distance,
)
from .extraction import (
    AsymptoticExtract,
    convergence_gaps,
    extract_H,
    extract_ZU,
    omega1_reconstruction,
    omega1_test_point,
    omega1_zu_exponent,
)
from .roots import ZeroSet, polynomial_roots, unfold_roots
