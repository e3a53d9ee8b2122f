"""
Test the scaled Gauss-Hermite rules
"""
import math

import numpy as np
import pytest

from painleve_tau.exceptions import InvalidParameters
from painleve_tau.quadrature import (
    gauss_hermite,
    gaussian_moment,
    integrate,
    log_weight_formula,
)


def test_single_node() -> None:
    """The rule of order one is the midpoint with the full mass"""
    rule = gauss_hermite(1, 2.0)
    assert rule.nodes.tolist() == [0.0]
    assert rule.weights[0] == pytest.approx(math.sqrt(math.pi / 2.0), rel=1e-14)


@pytest.mark.parametrize("m", [2, 5, 20, 50])
@pytest.mark.parametrize("scale", [0.5, 1.0, 3.0])
def test_polynomial_exactness(m: int, scale: float) -> None:
    """Monomials up to degree 2m - 1 are integrated exactly"""
    rule = gauss_hermite(m, scale)
    for p in range(2 * m):
        value = integrate(rule, lambda x, power=p: x**power)
        if p % 2:
            assert abs(value) <= 1e-10 * gaussian_moment(p + 1, scale)
        else:
            assert value.real == pytest.approx(gaussian_moment(p, scale), rel=1e-10)
            assert abs(value.imag) == 0.0


def test_symmetry_and_mass() -> None:
    """Nodes and weights are symmetric, the weights sum to sqrt(pi/L)"""
    rule = gauss_hermite(31, 0.5)
    assert np.array_equal(rule.nodes, -rule.nodes[::-1])
    assert np.array_equal(rule.weights, rule.weights[::-1])
    assert np.all(np.diff(rule.nodes) > 0)
    assert np.all(rule.weights > 0)
    assert math.fsum(rule.weights) == pytest.approx(math.sqrt(2.0 * math.pi), rel=1e-12)
    assert len(rule.negative_nodes) == 15


def test_scale_covariance() -> None:
    """Scaling the weight rescales the nodes by 1/sqrt(L) and the weights by the same factor"""
    unit = gauss_hermite(40, 1.0)
    scaled = gauss_hermite(40, 4.0)
    assert np.allclose(scaled.nodes, unit.nodes / 2.0, rtol=1e-12, atol=0)
    assert np.allclose(scaled.weights, unit.weights / 2.0, rtol=1e-12, atol=0)


def test_explicit_weight_formula() -> None:
    """The weights agree with the factorial formula evaluated in log space"""
    rule = gauss_hermite(100, 0.5)
    formula = log_weight_formula(100, 0.5, rule.nodes)
    assert np.max(np.abs(formula - rule.log_weights)) < 1e-10


def test_largest_order() -> None:
    """Order 2000 builds without overflow"""
    rule = gauss_hermite(2000, 1.0)
    assert len(rule) == 2000
    assert np.all(np.isfinite(rule.log_weights))
    assert math.fsum(rule.weights) == pytest.approx(math.sqrt(math.pi), rel=1e-12)


def test_rules_are_cached_and_immutable() -> None:
    """The same rule object is returned and its arrays are read-only"""
    rule = gauss_hermite(12, 1.0)
    assert gauss_hermite(12, 1.0) is rule
    with pytest.raises(ValueError):
        rule.nodes[0] = 0.0


@pytest.mark.parametrize("m, scale", [(0, 1.0), (2001, 1.0), (4, 0.0), (4, -1.0)])
def test_invalid_rules(m: int, scale: float) -> None:
    """Orders outside [1, 2000] and non-positive scales are rejected"""
    with pytest.raises(InvalidParameters):
        gauss_hermite(m, scale)


def test_non_finite_integrand() -> None:
    """A non-finite integrand value is reported"""
    rule = gauss_hermite(3, 1.0)
    with pytest.raises(InvalidParameters, match="node"):
        integrate(rule, lambda x: float("nan"))
