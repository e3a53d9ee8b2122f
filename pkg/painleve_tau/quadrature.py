"""
Scaled Gauss-Hermite quadrature

A rule of order m and scale L integrates f(x) exp(-L x^2) over the real line. Nodes come from the
symmetric tridiagonal Jacobi matrix of the Hermite recurrence, polished by Newton steps on the
orthonormal recurrence. The recurrence carries a running log-scale, so orders up to 2000 never
overflow.
"""
import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Tuple, Union

import numpy as np
from scipy.linalg import eigh_tridiagonal
from scipy.special import gammaln

from painleve_tau.exceptions import InvalidParameters, QuadratureError

LOGGER = logging.getLogger("PainleveTau")

MAX_ORDER = 2000
# Explicit factorial formula is cross-checked up to this order
FORMULA_CHECK_ORDER = 150

_NEWTON_MAX_ITERATIONS = 12
_RESCALE_THRESHOLD = 1e100


@dataclass(frozen=True, eq=False)
class QuadratureRule:
    """
    Gauss-Hermite rule for the weight exp(-scale x^2)
    """

    order: int
    scale: float
    nodes: np.ndarray
    weights: np.ndarray
    log_weights: np.ndarray

    def __len__(self) -> int:
        return self.order

    @property
    def negative_nodes(self) -> np.ndarray:
        """Return the strictly negative nodes, ascending

        Returns:
            np.ndarray: nodes below zero
        """
        return self.nodes[self.nodes < 0]


def _orthonormal_hermite(m: int, x: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Evaluate the orthonormal Hermite polynomials of degree m and m-1

    The polynomials are orthonormal for exp(-x^2). Values are returned as mantissas sharing a
    per-point log-scale: p_j(x) = mantissa * exp(log_scale).

    Args:
        m (int): degree, at least 1
        x (np.ndarray): evaluation points

    Returns:
        Tuple[np.ndarray, np.ndarray, np.ndarray]: p_m mantissa, p_{m-1} mantissa, log-scale
    """
    p_prev = np.zeros_like(x, dtype=float)
    p_cur = np.full_like(x, math.pi ** -0.25, dtype=float)
    log_scale = np.zeros_like(x, dtype=float)
    for j in range(m):
        p_next = math.sqrt(2.0 / (j + 1)) * x * p_cur - math.sqrt(j / (j + 1)) * p_prev
        p_prev, p_cur = p_cur, p_next
        big = np.abs(p_cur) > _RESCALE_THRESHOLD
        if np.any(big):
            factor = np.where(big, np.abs(p_cur), 1.0)
            p_cur = p_cur / factor
            p_prev = p_prev / factor
            log_scale = log_scale + np.log(factor)
    return p_cur, p_prev, log_scale


def _log_abs_physicists_hermite(m: int, x: np.ndarray) -> np.ndarray:
    """log|H_m(x)| through H_{j+1} = 2x H_j - 2j H_{j-1}, with running rescaling

    Args:
        m (int): degree
        x (np.ndarray): evaluation points

    Returns:
        np.ndarray: log|H_m(x)|
    """
    h_prev = np.zeros_like(x, dtype=float)
    h_cur = np.ones_like(x, dtype=float)
    log_scale = np.zeros_like(x, dtype=float)
    for j in range(m):
        h_next = 2.0 * x * h_cur - 2.0 * j * h_prev
        h_prev, h_cur = h_cur, h_next
        big = np.abs(h_cur) > _RESCALE_THRESHOLD
        if np.any(big):
            factor = np.where(big, np.abs(h_cur), 1.0)
            h_cur = h_cur / factor
            h_prev = h_prev / factor
            log_scale = log_scale + np.log(factor)
    return np.log(np.abs(h_cur)) + log_scale


def log_weight_formula(m: int, scale: float, x: np.ndarray) -> np.ndarray:
    """Explicit weight formula, evaluated in log space

    w = 2^{m-1} m! sqrt(pi) / (sqrt(scale) m^2 H_{m-1}(sqrt(scale) x)^2)

    Args:
        m (int): order
        scale (float): scale of the rule
        x (np.ndarray): nodes of the scaled rule

    Returns:
        np.ndarray: log of the weights
    """
    log_h = _log_abs_physicists_hermite(m - 1, math.sqrt(scale) * np.asarray(x, dtype=float))
    return (
        (m - 1) * math.log(2.0)
        + float(gammaln(m + 1))
        + 0.5 * math.log(math.pi)
        - 0.5 * math.log(scale)
        - 2.0 * math.log(m)
        - 2.0 * log_h
    )


def _polish(m: int, nodes: np.ndarray) -> np.ndarray:
    """Newton polishing of the eigenvalue nodes on p_m

    Args:
        m (int): order
        nodes (np.ndarray): initial nodes

    Raises:
        QuadratureError: if a node does not converge

    Returns:
        np.ndarray: polished nodes
    """
    x = nodes.copy()
    relative_step = np.zeros_like(x)
    for _ in range(_NEWTON_MAX_ITERATIONS):
        p_m, p_m1, _ = _orthonormal_hermite(m, x)
        step = p_m / (math.sqrt(2.0 * m) * p_m1)
        x = x - step
        relative_step = np.abs(step) / np.maximum(1.0, np.abs(x))
        if np.all(relative_step <= 1e-15):
            return x
    # rounding noise of the recurrence stops the steps from reaching machine epsilon at large m
    worst = int(np.argmax(relative_step))
    if relative_step[worst] > 1e-10 or not np.all(np.isfinite(x)):
        raise QuadratureError(
            f"Hermite node {worst} of order {m} did not converge "
            f"(residual {relative_step[worst]:.3e})"
        )
    return x


@lru_cache(maxsize=64)
def gauss_hermite(m: int, scale: float = 1.0) -> QuadratureRule:
    """Build the Gauss-Hermite rule of order m for the weight exp(-scale x^2)

    Args:
        m (int): order, 1 <= m <= 2000
        scale (float): positive scale

    Raises:
        InvalidParameters: if m or scale is out of range
        QuadratureError: if the nodes fail to converge or the rule breaks an invariant

    Returns:
        QuadratureRule: the immutable rule
    """
    if not isinstance(m, (int, np.integer)) or not 1 <= m <= MAX_ORDER:
        raise InvalidParameters(f"Quadrature order must be in [1, {MAX_ORDER}], got {m}")
    if not scale > 0 or not math.isfinite(scale):
        raise InvalidParameters(f"Quadrature scale must be positive, got {scale}")
    m = int(m)

    if m == 1:
        unit_nodes = np.zeros(1)
    else:
        off_diagonal = np.sqrt(np.arange(1, m) / 2.0)
        eigenvalues = eigh_tridiagonal(np.zeros(m), off_diagonal, eigvals_only=True)
        unit_nodes = _polish(m, np.sort(eigenvalues))

    _, p_m1, log_scale = _orthonormal_hermite(m, unit_nodes)
    unit_log_weights = -math.log(m) - 2.0 * (np.log(np.abs(p_m1)) + log_scale)

    # exact symmetry
    unit_nodes = 0.5 * (unit_nodes - unit_nodes[::-1])
    unit_log_weights = 0.5 * (unit_log_weights + unit_log_weights[::-1])

    nodes = unit_nodes / math.sqrt(scale)
    log_weights = unit_log_weights - 0.5 * math.log(scale)

    if m <= FORMULA_CHECK_ORDER:
        mismatch = np.max(np.abs(log_weight_formula(m, scale, nodes) - log_weights))
        if mismatch > 1e-10:
            raise QuadratureError(
                f"Weights of order {m} disagree with the explicit formula ({mismatch:.3e})"
            )

    weights = np.exp(log_weights)
    total = math.fsum(weights)
    expected = math.sqrt(math.pi / scale)
    if abs(total - expected) > 1e-12 * expected:
        raise QuadratureError(f"Weights of order {m} sum to {total!r}, expected {expected!r}")
    if np.any(np.diff(nodes) <= 0):
        raise QuadratureError(f"Nodes of order {m} are not strictly increasing")

    LOGGER.debug("Gauss-Hermite rule m=%d scale=%g built", m, scale)
    for array in (nodes, weights, log_weights):
        array.setflags(write=False)
    return QuadratureRule(
        order=m, scale=float(scale), nodes=nodes, weights=weights, log_weights=log_weights
    )


def integrate(rule: QuadratureRule, f: Callable[[float], Union[float, complex]]) -> complex:
    """Apply the rule: sum of f(x_i) w_i

    Args:
        rule (QuadratureRule): rule to apply
        f (Callable[[float], Union[float, complex]]): integrand without the Gaussian factor

    Raises:
        InvalidParameters: if f is not finite at a node

    Returns:
        complex: the quadrature sum
    """
    values = np.array([f(float(x)) for x in rule.nodes], dtype=complex)
    bad = np.flatnonzero(~np.isfinite(values))
    if bad.size:
        index = int(bad[0])
        raise InvalidParameters(
            f"Integrand is not finite at node {index} (x = {rule.nodes[index]!r})"
        )
    return complex(np.sum(values * rule.weights))


def gaussian_moment(p: int, scale: float = 1.0) -> float:
    """Closed form of the integral of x^p exp(-scale x^2) over the real line

    Args:
        p (int): nonnegative power
        scale (float): positive scale

    Returns:
        float: the moment (0 for odd p)
    """
    if p % 2:
        return 0.0
    return math.exp(math.lgamma((p + 1) / 2.0) - (p + 1) / 2.0 * math.log(scale))
