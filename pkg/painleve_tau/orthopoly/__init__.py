"""
Init module
"""
from .moments import (
    MomentSequence,
    complex_moments,
    exact_moments_gamma0,
    hankel_det,
    hankel_phase_check,
    weight_w,
)
from .orthogonal import monic_orthogonal, orthogonality_residual, unfold_polynomial
from .planar import contour_rhs, planar_identity_error, planar_moment
from .polynomial import MonicPolynomial
