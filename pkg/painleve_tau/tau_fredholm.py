"""
Painleve IV tau-function as a Fredholm determinant

The determinant det(Id - F) is discretized with the Nystrom method on the Gauss-Hermite rule of
order 2n and scale 1/2. The n negative nodes carry the rows of the n x 2n matrix A, every node
carries a column, and

    tau(s, gamma, n) = det(Id - exp(eps^2/2 + s eps) sin(pi gamma) / (2 pi^2) * A A^T)

with the plain transpose. The product A A^T is real up to rounding because the nodes come in
+/- pairs; the determinant is evaluated in real arithmetic.

The default contour shift is eps = max(1/2, -s). With eps = 0 the columns touch the branch
point of (i x + eps)^{-gamma/2} and the rule converges slowly; any eps bounded away from zero
gives the same determinant.
"""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, List, Optional, Tuple

import numpy as np
from scipy.optimize import bisect

from painleve_tau.exceptions import InvalidParameters, NumericalBreakdown
from painleve_tau.quadrature import QuadratureRule, gauss_hermite

LOGGER = logging.getLogger("PainleveTau")

TAU_RULE_SCALE = 0.5
REALNESS_TOLERANCE = 1e-10
DENOMINATOR_FLOOR = 1e-14
EPSILON_FLOOR = 0.5
# log of the largest double; beyond it tau is reported as +/- inf
TAU_LOG_LIMIT = float(np.log(np.finfo(float).max))


@dataclass(frozen=True)
class TauParams:
    """
    Parameters of one tau evaluation
    """

    s: float
    gamma: float
    n: int
    epsilon: float

    def __post_init__(self) -> None:
        """Validate the parameters

        Raises:
            InvalidParameters: if gamma, n or epsilon is out of range
        """
        if not 0.0 <= self.gamma < 1.0:
            raise InvalidParameters(f"gamma must be in [0, 1), got {self.gamma}")
        if int(self.n) != self.n or self.n < 1:
            raise InvalidParameters(f"n must be a positive integer, got {self.n}")
        if not self.epsilon >= 0.0 or not math.isfinite(self.epsilon):
            raise InvalidParameters(f"epsilon must be nonnegative, got {self.epsilon}")
        if not math.isfinite(self.s):
            raise InvalidParameters(f"s must be finite, got {self.s}")

    @classmethod
    def default(
        cls, s: float, gamma: float, n: int, epsilon: Optional[float] = None
    ) -> "TauParams":
        """Build the parameters with the contour shift eps = max(1/2, -s) unless overridden

        Args:
            s (float): point on the real line
            gamma (float): exponent in [0, 1)
            n (int): number of negative nodes
            epsilon (Optional[float]): explicit contour shift

        Returns:
            TauParams: the parameter pack
        """
        shift = max(EPSILON_FLOOR, -s) if epsilon is None else epsilon
        return cls(s=float(s), gamma=float(gamma), n=int(n), epsilon=float(shift))

    @property
    def prefactor(self) -> float:
        """Scalar in front of A A^T

        Returns:
            float: exp(eps^2/2 + s eps) sin(pi gamma) / (2 pi^2)
        """
        eps = self.epsilon
        return math.exp(eps * eps / 2.0 + self.s * eps) * math.sin(math.pi * self.gamma) / (
            2.0 * math.pi**2
        )


@dataclass
class TauSeries:
    """
    tau sampled on an ascending grid of s, with the sign-change brackets
    """

    gamma: float
    n: int
    s: np.ndarray
    tau: np.ndarray
    log_abs: np.ndarray
    brackets: List[Tuple[float, float]] = field(default_factory=list)

    @property
    def atan_tau(self) -> np.ndarray:
        """arctan of tau, the plotted quantity

        Returns:
            np.ndarray: arctan(tau)
        """
        return np.arctan(self.tau)


@dataclass(frozen=True)
class NormBound:
    """
    Operator norm bound of the kernel for s < 0
    """

    exact: float
    relaxed: float


def tau_rule(n: int) -> QuadratureRule:
    """Rule of order 2n and scale 1/2 used by the discretization

    Args:
        n (int): number of negative nodes

    Returns:
        QuadratureRule: the rule
    """
    return gauss_hermite(2 * n, TAU_RULE_SCALE)


def assemble_a_matrix(p: TauParams, rule: Optional[QuadratureRule] = None) -> np.ndarray:
    """Assemble the n x 2n matrix A

    Entry (j, l) is |x_j|^{g/2} sqrt(w_j) e^{-s x_j/2} (i x_l + eps)^{-g/2}
    e^{i x_l (s + eps)/2} sqrt(w_l) / (x_j - eps - i x_l), x_j over the negative nodes.

    Args:
        p (TauParams): parameters
        rule (Optional[QuadratureRule]): rule of order 2n; defaults to tau_rule(n)

    Raises:
        InvalidParameters: if the rule does not match n, or the contours touch

    Returns:
        np.ndarray: complex matrix of shape (n, 2n)
    """
    if rule is None:
        rule = tau_rule(p.n)
    if rule.order != 2 * p.n:
        raise InvalidParameters(f"Rule of order {rule.order} does not match n = {p.n}")
    negative = rule.nodes < 0
    if int(np.count_nonzero(negative)) != p.n:
        raise InvalidParameters(f"Rule must have exactly {p.n} negative nodes")
    if p.epsilon == 0.0 and np.any(rule.nodes == 0.0):
        raise InvalidParameters("A zero node with eps = 0 lies on the branch cut")

    x_rows = rule.nodes[negative]
    x_cols = rule.nodes
    half_gamma = p.gamma / 2.0

    log_rows = (
        half_gamma * np.log(np.abs(x_rows))
        + 0.5 * rule.log_weights[negative]
        - 0.5 * p.s * x_rows
    )
    rows = np.exp(log_rows)
    columns = (
        np.power(1j * x_cols + p.epsilon, -half_gamma)
        * np.exp(0.5j * x_cols * (p.s + p.epsilon))
        * np.exp(0.5 * rule.log_weights)
    )
    denominator = x_rows[:, None] - p.epsilon - 1j * x_cols[None, :]
    if np.min(np.abs(denominator)) < DENOMINATOR_FLOOR:
        raise InvalidParameters("The row and column contours intersect")
    return rows[:, None] * columns[None, :] / denominator


def kernel_matrix(p: TauParams) -> Tuple[np.ndarray, float]:
    """Discretized kernel c A A^T in real arithmetic

    Args:
        p (TauParams): parameters

    Raises:
        NumericalBreakdown: if A A^T has a non-negligible imaginary part

    Returns:
        Tuple[np.ndarray, float]: the real n x n kernel, largest relative imaginary part
    """
    a_matrix = assemble_a_matrix(p)
    product = a_matrix @ a_matrix.T
    row_norms = np.sqrt(np.sum(np.abs(a_matrix) ** 2, axis=1))
    scale = np.outer(row_norms, row_norms)
    scale[scale == 0.0] = 1.0
    imaginary_ratio = float(np.max(np.abs(product.imag) / scale))
    if imaginary_ratio > REALNESS_TOLERANCE:
        raise NumericalBreakdown(
            f"A A^T is not real at s={p.s}, gamma={p.gamma}, n={p.n} "
            f"(relative imaginary part {imaginary_ratio:.3e})"
        )
    return p.prefactor * product.real, imaginary_ratio


def tau_slogdet(p: TauParams) -> Tuple[float, float]:
    """Sign and log-magnitude of tau

    Args:
        p (TauParams): parameters

    Returns:
        Tuple[float, float]: (sign, log|tau|)
    """
    kernel, _ = kernel_matrix(p)
    # LU with partial pivoting
    sign, log_abs = np.linalg.slogdet(np.eye(p.n) - kernel)
    return float(sign), float(log_abs)


def tau(p: TauParams) -> float:
    """Evaluate tau(s, gamma, n)

    Args:
        p (TauParams): parameters

    Returns:
        float: the real determinant
    """
    return tau_from_slogdet(*tau_slogdet(p))


def tau_from_slogdet(sign: float, log_abs: float) -> float:
    """Recombine sign and log-magnitude, +/- inf once exp(log_abs) overflows

    Args:
        sign (float): -1, 0 or 1
        log_abs (float): log|tau|

    Returns:
        float: the determinant
    """
    if sign == 0.0:
        return 0.0
    if log_abs > TAU_LOG_LIMIT:
        return math.copysign(math.inf, sign)
    return sign * math.exp(log_abs)


def kernel_symmetry_defect(p: TauParams) -> float:
    """Relative asymmetry of the discretized kernel, max|K - K^T| / max|K|

    Args:
        p (TauParams): parameters

    Returns:
        float: the defect (0 for a vanishing kernel)
    """
    kernel, _ = kernel_matrix(p)
    largest = float(np.max(np.abs(kernel)))
    if largest == 0.0:
        return 0.0
    return float(np.max(np.abs(kernel - kernel.T))) / largest


def operator_norm_estimate(p: TauParams) -> float:
    """Largest singular value of the discretized kernel

    Args:
        p (TauParams): parameters with s < 0

    Raises:
        InvalidParameters: if s >= 0

    Returns:
        float: spectral norm of c A A^T
    """
    if p.s >= 0:
        raise InvalidParameters(f"The norm estimate needs s < 0, got {p.s}")
    kernel, _ = kernel_matrix(p)
    return float(np.linalg.norm(kernel, 2))


def relaxed_bound(s: float) -> float:
    """Gamma-free piecewise relaxation of the norm bound

    Args:
        s (float): negative real

    Returns:
        float: sqrt(2/pi) e^{-s^2/2}/s^2 on [-1, 0), sqrt(2/pi) e^{-s^2/2}/|s| below -1
    """
    base = math.sqrt(2.0 / math.pi) * math.exp(-s * s / 2.0)
    if s >= -1.0:
        return base / (s * s)
    return base / abs(s)


def norm_bound(s: float, gamma: float) -> NormBound:
    """Analytic bound on the operator norm of the kernel

    Args:
        s (float): negative real
        gamma (float): exponent in (0, 1)

    Raises:
        InvalidParameters: if s >= 0 or gamma is outside (0, 1)

    Returns:
        NormBound: (sin(pi g)/pi) sqrt(2 pi) e^{-s^2/2}/|s|^{1+g} and its relaxation
    """
    if s >= 0:
        raise InvalidParameters(f"The norm bound needs s < 0, got {s}")
    if not 0.0 < gamma < 1.0:
        raise InvalidParameters(f"The norm bound needs gamma in (0, 1), got {gamma}")
    exact = (
        math.sin(math.pi * gamma)
        / math.pi
        * math.sqrt(2.0 * math.pi)
        * math.exp(-s * s / 2.0)
        / abs(s) ** (1.0 + gamma)
    )
    return NormBound(exact=exact, relaxed=relaxed_bound(s))


def bisect_sign_change(
    func: Callable[[float], float], lower: float, upper: float, xtol: float = 1e-9
) -> float:
    """Bisection on a sign change of func

    Args:
        func (Callable[[float], float]): real function
        lower (float): left end of the bracket
        upper (float): right end of the bracket
        xtol (float): final bracket width

    Raises:
        InvalidParameters: if the bracket is empty or has no sign change

    Returns:
        float: the located zero
    """
    if not lower < upper:
        raise InvalidParameters(f"Invalid bracket ({lower}, {upper})")
    f_lower = func(lower)
    f_upper = func(upper)
    if f_lower == 0.0:
        return lower
    if f_upper == 0.0:
        return upper
    if np.sign(f_lower) == np.sign(f_upper):
        raise InvalidParameters(f"No sign change on ({lower}, {upper})")
    return float(bisect(func, lower, upper, xtol=xtol, maxiter=200))


@lru_cache(maxsize=1)
def pole_free_threshold() -> float:
    """Root s0 of sqrt(2/pi) e^{-s^2/2}/s^2 = 1 on (-1, 0)

    Below s0 the kernel norm is under one, so tau cannot vanish.

    Returns:
        float: s0
    """
    return bisect_sign_change(lambda s: relaxed_bound(s) - 1.0, -1.0, -0.5, xtol=1e-13)


def refine_tau_zero(
    gamma: float,
    n: int,
    bracket: Tuple[float, float],
    epsilon: Optional[float] = None,
    xtol: float = 1e-9,
) -> float:
    """Bisection of tau on a sign-change bracket

    Args:
        gamma (float): exponent
        n (int): number of negative nodes
        bracket (Tuple[float, float]): (s_lo, s_hi) with opposite tau signs
        epsilon (Optional[float]): contour shift override
        xtol (float): final bracket width

    Returns:
        float: the zero s*
    """
    return bisect_sign_change(
        lambda s: tau(TauParams.default(s, gamma, n, epsilon)), bracket[0], bracket[1], xtol
    )


def scan_grid(s_min: float, s_max: float, step: float) -> np.ndarray:
    """Ascending grid s_min, s_min + step, ... up to s_max

    Args:
        s_min (float): first point
        s_max (float): last point (included when on the grid)
        step (float): spacing

    Raises:
        InvalidParameters: if the range or step is invalid

    Returns:
        np.ndarray: the grid
    """
    if not s_min < s_max:
        raise InvalidParameters(f"s_min must be below s_max ({s_min} >= {s_max})")
    if not step > 0:
        raise InvalidParameters(f"step must be positive, got {step}")
    count = int(math.floor((s_max - s_min) / step + 1e-9)) + 1
    return np.round(s_min + step * np.arange(count), 12)


def _slogdet_at(arguments: Tuple[float, float, int, Optional[float]]) -> Tuple[float, float]:
    s, gamma, n, epsilon = arguments
    return tau_slogdet(TauParams.default(s, gamma, n, epsilon))


def sign_brackets(grid: np.ndarray, values: np.ndarray) -> List[Tuple[float, float]]:
    """Consecutive grid points where the values change sign

    Args:
        grid (np.ndarray): ascending abscissae
        values (np.ndarray): function values

    Returns:
        List[Tuple[float, float]]: brackets (s_lo, s_hi)
    """
    signs = np.sign(values)
    brackets = []
    for i in range(len(grid) - 1):
        if signs[i] * signs[i + 1] < 0:
            brackets.append((float(grid[i]), float(grid[i + 1])))
    return brackets


def tau_scan(
    gamma: float,
    n: int,
    s_min: float,
    s_max: float,
    step: float,
    workers: int = 1,
    epsilon: Optional[float] = None,
) -> TauSeries:
    """Evaluate tau on a grid and bracket its sign changes

    Args:
        gamma (float): exponent
        n (int): number of negative nodes
        s_min (float): first grid point
        s_max (float): last grid point
        step (float): spacing
        workers (int): process count; the result does not depend on it
        epsilon (Optional[float]): contour shift override

    Returns:
        TauSeries: the sampled series
    """
    grid = scan_grid(s_min, s_max, step)
    # fail fast on invalid parameters before spawning workers
    TauParams.default(float(grid[0]), gamma, n, epsilon)
    arguments = [(float(s), gamma, n, epsilon) for s in grid]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            values = list(
                executor.map(_slogdet_at, arguments, chunksize=max(1, len(grid) // 64))
            )
    else:
        values = [_slogdet_at(argument) for argument in arguments]
    taus = np.array([tau_from_slogdet(sign, log_abs) for sign, log_abs in values])
    log_abs = np.array([log_abs for _, log_abs in values])
    brackets = sign_brackets(grid, taus)
    LOGGER.debug(
        "tau scan gamma=%g n=%d: %d points, %d brackets", gamma, n, len(grid), len(brackets)
    )
    return TauSeries(gamma=gamma, n=n, s=grid, tau=taus, log_abs=log_abs, brackets=brackets)
