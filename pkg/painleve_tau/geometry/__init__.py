"""
Init module
"""
from .curves import (
    CurveSample,
    curve_gamma_r,
    lemniscate_boundary,
    nu_hat_density,
    nu_hat_mass,
    ring_sign_structure,
    szego_curve_z,
    unfold_curve,
    winding_number,
    zero_attractor_curve,
)
from .model import ModelParams, scaling_parameter
from .potentials import (
    a_of,
    conformal_zeta,
    g_function,
    g_jump_residual,
    phi,
    phi_conformal,
    phi_hat,
)
