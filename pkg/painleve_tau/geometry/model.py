"""
Parameters of the planar model and the double-scaling parameter
"""
import math
from dataclasses import dataclass

from painleve_tau.exceptions import InvalidParameters


def scaling_parameter(k: int, t: float, t_c: float) -> float:
    """Double-scaling parameter S = sqrt(k) (t^2/t_c^2 - 1)

    Args:
        k (int): reduced degree
        t (float): time parameter
        t_c (float): critical time

    Raises:
        InvalidParameters: if k < 1 or a time is not positive

    Returns:
        float: S
    """
    if k < 1:
        raise InvalidParameters(f"k must be at least 1, got {k}")
    if not t > 0 or not t_c > 0:
        raise InvalidParameters(f"t and t_c must be positive, got {t}, {t_c}")
    return math.sqrt(k) * (t * t / (t_c * t_c) - 1.0)


@dataclass(frozen=True)
class ModelParams:
    """
    One instance of the orthogonal-polynomial problem

    The potential is |lambda|^{2d} - t (lambda^d + conj(lambda)^d) with total charge T, and the
    degree n = k d + ell.
    """

    d: int
    ell: int
    t: float
    T: float
    k: int

    def __post_init__(self) -> None:
        """Validate the parameters

        Raises:
            InvalidParameters: if any parameter is out of range
        """
        if self.d < 2:
            raise InvalidParameters(f"d must be at least 2, got {self.d}")
        if not 0 <= self.ell <= self.d - 1:
            raise InvalidParameters(f"ell must be in [0, d-1], got {self.ell}")
        if self.k < 0:
            raise InvalidParameters(f"k must be nonnegative, got {self.k}")
        if not self.t > 0 or not self.T > 0:
            raise InvalidParameters(f"t and T must be positive, got {self.t}, {self.T}")

    @classmethod
    def from_z0(cls, d: int, ell: int, k: int, z0: float, t: float = 1.0) -> "ModelParams":
        """Parameters with a prescribed z0 = t_c^2/t^2

        Args:
            d (int): symmetry order
            ell (int): residue class of the degree
            k (int): reduced degree
            z0 (float): positive ratio t_c^2/t^2
            t (float): time parameter

        Raises:
            InvalidParameters: if z0 is not positive

        Returns:
            ModelParams: parameters with T = d z0 t^2
        """
        if not z0 > 0:
            raise InvalidParameters(f"z0 must be positive, got {z0}")
        return cls(d=d, ell=ell, t=t, T=d * z0 * t * t, k=k)

    @classmethod
    def double_scaling(
        cls, d: int, ell: int, k: int, scaling: float, t: float = 1.0
    ) -> "ModelParams":
        """Parameters at a fixed double-scaling parameter S, z0 = sqrt(k)/(sqrt(k) + S)

        Args:
            d (int): symmetry order
            ell (int): residue class of the degree
            k (int): reduced degree
            scaling (float): S
            t (float): time parameter

        Raises:
            InvalidParameters: if sqrt(k) + S is not positive

        Returns:
            ModelParams: the parameters
        """
        root_k = math.sqrt(k)
        if not root_k + scaling > 0:
            raise InvalidParameters(f"S = {scaling} is too negative for k = {k}")
        return cls.from_z0(d, ell, k, root_k / (root_k + scaling), t)

    @property
    def n(self) -> int:
        """Degree of p_n

        Returns:
            int: k d + ell
        """
        return self.k * self.d + self.ell

    @property
    def N(self) -> float:
        """Scaling of the potential

        Returns:
            float: (n - ell)/T
        """
        return (self.n - self.ell) / self.T

    @property
    def gamma(self) -> float:
        """Exponent of the reduced weight

        Returns:
            float: (d - ell - 1)/d
        """
        return (self.d - self.ell - 1) / self.d

    @property
    def t_c(self) -> float:
        """Critical time

        Returns:
            float: sqrt(T/d)
        """
        return math.sqrt(self.T / self.d)

    @property
    def z0(self) -> float:
        """Ratio t_c^2/t^2

        Returns:
            float: z0
        """
        return self.T / (self.d * self.t * self.t)

    @property
    def scaling(self) -> float:
        """Double-scaling parameter of these parameters

        Returns:
            float: sqrt(k)(t^2/t_c^2 - 1)
        """
        return scaling_parameter(max(self.k, 1), self.t, self.t_c)
