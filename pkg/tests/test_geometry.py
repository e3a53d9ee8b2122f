"""
Test the model parameters, the potentials and the critical curves
"""
import math

import numpy as np
import pytest

from painleve_tau.exceptions import InvalidParameters
from painleve_tau.geometry import (
    ModelParams,
    a_of,
    conformal_zeta,
    curve_gamma_r,
    g_jump_residual,
    lemniscate_boundary,
    nu_hat_density,
    nu_hat_mass,
    phi,
    phi_conformal,
    phi_hat,
    ring_sign_structure,
    scaling_parameter,
    szego_curve_z,
    unfold_curve,
    winding_number,
    zero_attractor_curve,
)
from painleve_tau.geometry.potentials import gamma_r_radius, is_inside_gamma_r
from painleve_tau.types import Plane


def test_model_parameters() -> None:
    """Derived quantities of the model"""
    params = ModelParams.from_z0(3, 0, 10, 1.0)
    assert params.n == 30
    assert params.gamma == pytest.approx(2.0 / 3.0)
    assert params.t_c == pytest.approx(1.0)
    assert params.z0 == pytest.approx(1.0)
    assert params.N == pytest.approx(10.0)
    assert ModelParams.from_z0(5, 4, 3, 1.0).gamma == 0.0


@pytest.mark.parametrize(
    "d, ell, t, T, k",
    [(1, 0, 1.0, 1.0, 3), (3, 3, 1.0, 1.0, 3), (3, 0, 0.0, 1.0, 3), (3, 0, 1.0, 1.0, -1)],
)
def test_invalid_model(d: int, ell: int, t: float, T: float, k: int) -> None:
    """d < 2, ell outside [0, d), non-positive times and negative k are rejected"""
    with pytest.raises(InvalidParameters):
        ModelParams(d=d, ell=ell, t=t, T=T, k=k)


def test_double_scaling() -> None:
    """z0 = sqrt(k)/(sqrt(k) + S) reproduces the scaling parameter S"""
    for scaling in (-1.0, 0.0, 1.0):
        params = ModelParams.double_scaling(3, 0, 16, scaling)
        assert params.scaling == pytest.approx(scaling, abs=1e-12)
    assert scaling_parameter(100, 1.0, 1.0) == 0.0
    with pytest.raises(InvalidParameters):
        ModelParams.double_scaling(3, 0, 4, -2.0)


def test_phi_hat() -> None:
    """phi-hat vanishes at the origin and is singular on lambda^d = t_c"""
    assert phi_hat(0.0, 1.0, 3) == 0
    with pytest.raises(InvalidParameters):
        phi_hat(1.0, 1.0, 3)


def test_gamma_r_radius() -> None:
    """Gamma_1 passes through z = z0 = 1 on the positive axis"""
    assert gamma_r_radius(0.0, 1.0, 1.0) == pytest.approx(1.0)
    radius = gamma_r_radius(math.pi, 1.0, 1.0)
    assert math.log(radius) + radius + 1.0 == pytest.approx(0.0, abs=1e-10)


def test_inside_classification() -> None:
    """Points are classified against the Szego curve, the curve itself is ambiguous"""
    assert is_inside_gamma_r(0.2 + 0.1j, 1.0, 1.0)
    assert not is_inside_gamma_r(1.5j, 1.0, 1.0)
    on_curve = -gamma_r_radius(math.pi, 1.0, 1.0)
    with pytest.raises(InvalidParameters):
        is_inside_gamma_r(on_curve, 1.0, 1.0)


def test_phi_and_g() -> None:
    """phi has opposite sign inside and outside, g_+ + g_- = V + ell-hat only on the curve"""
    assert phi(0.2, 1.0, 1.0).real < 0
    assert phi(3.0, 1.0, 1.0).real > 0
    sample = curve_gamma_r(0.5, 1.0, 32)
    for z in sample.points[:8].tolist():
        assert abs(g_jump_residual(z, 0.5, 1.0)) < 1e-5
    inside = 0.5j * gamma_r_radius(math.pi / 2, 0.5, 1.0)
    assert abs(g_jump_residual(inside, 0.5, 1.0)) > 0.5


def test_szego_curve_and_measure() -> None:
    """nu-hat is a probability measure on the Szego curve"""
    sample = szego_curve_z(256)
    assert len(sample) == 256
    assert sample.closed and sample.plane == Plane.Z
    z = sample.points
    assert np.max(np.abs(np.abs(z * np.exp(1.0 - z)) - 1.0)) < 1e-10
    assert nu_hat_mass(sample) == pytest.approx(1.0, abs=1e-8)
    density = nu_hat_density(sample)
    assert np.min(density.real) >= -1e-8
    assert np.max(np.abs(density.imag)) < 1e-8


def test_szego_sign_structure() -> None:
    """Re phi-hat is negative just inside the curve and positive just outside"""
    inside, outside = ring_sign_structure(szego_curve_z(128))
    assert inside < 0 < outside


def test_gamma_r_family() -> None:
    """Each Gamma_r is a closed curve inside |z| <= z0 winding once around r/2"""
    for r in (0.25, 0.5, 0.75, 1.0):
        sample = curve_gamma_r(r, 1.0, 64)
        assert sample.closed
        assert np.max(np.abs(sample.points)) <= 1.0 + 1e-12
        assert np.max(sample.residuals) < 1e-10
        assert winding_number(sample, r / 2.0) == 1
        assert winding_number(sample, 3.0) == 0


def test_zero_attractor_curve_off_critical() -> None:
    """Gamma_1 also exists when z0 < 1"""
    sample = zero_attractor_curve(0.8, 64)
    assert np.max(sample.residuals) < 1e-10
    with pytest.raises(InvalidParameters):
        zero_attractor_curve(0.0, 64)


def test_unfolded_curve() -> None:
    """The pullback to the lambda-plane is a level set of Re phi-hat with d-fold symmetry"""
    sample = unfold_curve(szego_curve_z(64), 1.0, 5)
    assert len(sample) == 5 * 64
    assert sample.plane == Plane.LAMBDA
    assert np.max(np.abs(phi_hat(sample.points, 1.0, 5).real)) < 1e-9
    rotated = sample.points * np.exp(2j * math.pi / 5)
    gaps = np.min(np.abs(rotated[:, None] - sample.points[None, :]), axis=1)
    assert np.max(gaps) < 1e-9
    assert nu_hat_mass(sample, 5, 1.0) == pytest.approx(1.0, abs=1e-8)


@pytest.mark.parametrize("t, components", [(0.7, 1), (1.0, 1), (1.3, 5)])
def test_lemniscate(t: float, components: int) -> None:
    """|lambda^d - t| = t_c has one component up to t = t_c and d beyond"""
    sample = lemniscate_boundary(t, 1.0, 5, 64)
    assert sample.components == components
    assert len(sample) == 5 * 64
    assert np.max(np.abs(np.abs(sample.points**5 - t) - 1.0)) < 1e-12 * (1.0 + t)
    with pytest.raises(InvalidParameters):
        lemniscate_boundary(0.0, 1.0, 5, 64)


def test_conformal_map() -> None:
    """phi = zeta^2/2 + A zeta near z = 1 with zeta(1) = 0"""
    disk = 1.0 + 0.2 * np.exp(2j * math.pi * np.arange(12) / 12)
    for z0 in (0.9, 1.0, 1.1):
        zeta = conformal_zeta(disk, z0)
        shift = a_of(z0).real
        defect = phi_conformal(disk, z0) - 0.5 * zeta**2 - shift * zeta
        assert np.max(np.abs(defect)) < 1e-12
        assert abs(conformal_zeta(1.0, z0)) < 1e-12
    assert abs(a_of(1.0)) < 1e-12
    assert a_of(1.01).real == pytest.approx(-0.01, abs=1e-4)
    assert a_of(0.99).real > 0


def test_a_of_second_order() -> None:
    """A(1 + delta) = -delta + 2/3 delta^2 + O(delta^3)"""
    delta = 0.01
    upper, lower = a_of(1.0 + delta).real, a_of(1.0 - delta).real
    assert (upper - lower) / 2 == pytest.approx(-delta, abs=1e-5)
    assert (upper + lower) / 2 == pytest.approx(2 * delta**2 / 3, abs=1e-6)
    assert abs(upper + delta) > 1e-5


def test_conformal_domain() -> None:
    """zeta is only defined for z0 in (0.7, 1.3) and |z - 1| <= 0.25"""
    with pytest.raises(InvalidParameters):
        conformal_zeta(1.0, 1.5)
    with pytest.raises(InvalidParameters):
        conformal_zeta(1.5, 1.0)
