"""
Monic polynomials with coefficients in double or extended precision
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

import mpmath
import numpy as np

from painleve_tau.exceptions import InvalidParameters
from painleve_tau.types import Plane
from painleve_tau.utils.precision import (
    DOUBLE_DIGITS,
    is_extended,
    is_finite,
    working_precision,
)

Number = Union[complex, float, int, mpmath.mpc, mpmath.mpf]


def horner(coefficients: Sequence[Any], z: Any) -> Any:
    """Evaluate sum c_i z^i with the coefficients in ascending order

    Args:
        coefficients (Sequence[Any]): c_0, ..., c_n
        z (Any): point, in the arithmetic of the coefficients

    Returns:
        Any: the value
    """
    value = coefficients[-1]
    for coefficient in reversed(coefficients[:-1]):
        value = value * z + coefficient
    return value


@dataclass(frozen=True, eq=False)
class MonicPolynomial:
    """
    pi(z) = c_0 + c_1 z + ... + c_{k-1} z^{k-1} + z^k

    Coefficients are stored in ascending order, the trailing one equal to 1. They are python
    complex numbers in double precision and mpmath numbers above it.
    """

    coefficients: Tuple[Any, ...]
    digits: int = DOUBLE_DIGITS
    provenance: Dict[str, Any] = field(default_factory=dict)
    plane: Plane = Plane.Z

    def __post_init__(self) -> None:
        """Validate the coefficients

        Raises:
            InvalidParameters: if the polynomial is empty, not monic or not finite
        """
        if not self.coefficients:
            raise InvalidParameters("A polynomial needs at least its leading coefficient")
        if self.coefficients[-1] != 1:
            raise InvalidParameters(f"Leading coefficient must be 1, got {self.coefficients[-1]}")
        for index, coefficient in enumerate(self.coefficients):
            if not is_finite(coefficient):
                raise InvalidParameters(f"Coefficient {index} is not finite: {coefficient}")

    @classmethod
    def from_values(
        cls,
        values: Sequence[Number],
        digits: int = DOUBLE_DIGITS,
        provenance: Optional[Dict[str, Any]] = None,
        plane: Plane = Plane.Z,
    ) -> "MonicPolynomial":
        """Build a polynomial, converting the values to the arithmetic of digits

        Args:
            values (Sequence[Number]): ascending coefficients, the last one equal to 1
            digits (int): working precision
            provenance (Optional[Dict[str, Any]]): metadata
            plane (Plane): variable of the polynomial

        Returns:
            MonicPolynomial: the polynomial
        """
        if is_extended(digits):
            with mpmath.workdps(digits):
                converted = tuple(mpmath.mpmathify(value) for value in values)
        else:
            converted = tuple(complex(value) for value in values)
        return cls(converted, digits, dict(provenance or {}), plane)

    @classmethod
    def monomial(cls, degree: int, digits: int = DOUBLE_DIGITS) -> "MonicPolynomial":
        """z^degree

        Args:
            degree (int): degree
            digits (int): working precision

        Returns:
            MonicPolynomial: the monomial
        """
        return cls.from_values([0] * degree + [1], digits)

    @property
    def degree(self) -> int:
        """Degree of the polynomial

        Returns:
            int: degree
        """
        return len(self.coefficients) - 1

    @property
    def is_extended(self) -> bool:
        """Tell whether the coefficients are mpmath numbers

        Returns:
            bool: True above double precision
        """
        return is_extended(self.digits)

    def as_array(self) -> np.ndarray:
        """Coefficients rounded to double precision

        Returns:
            np.ndarray: ascending complex coefficients
        """
        return np.array([complex(c) for c in self.coefficients], dtype=complex)

    def _convert(self, z: Number) -> Any:
        if self.is_extended:
            return mpmath.mpmathify(z)
        return complex(z)

    def evaluate_exact(self, z: Number) -> Any:
        """Value at z in the working precision, not rounded

        Args:
            z (Number): point

        Returns:
            Any: pi(z), an mpmath number above double precision
        """
        with working_precision(self.digits):
            return horner(self.coefficients, self._convert(z))

    def evaluate(self, z: Number) -> complex:
        """Value at z computed in the working precision

        Args:
            z (Number): point

        Returns:
            complex: pi(z)
        """
        return complex(self.evaluate_exact(z))

    def evaluate_scaled(self, z: Number) -> complex:
        """pi(z)/z^k, by Horner in 1/z, which stays finite where z^k overflows

        Args:
            z (Number): nonzero point

        Raises:
            InvalidParameters: if z = 0

        Returns:
            complex: 1 + c_{k-1}/z + ... + c_0/z^k
        """
        if z == 0:
            raise InvalidParameters("The scaled evaluation needs z != 0")
        with working_precision(self.digits):
            inverse = 1 / self._convert(z)
            return complex(horner(self.coefficients[::-1], inverse))

    def derivative_coefficients(self) -> List[Any]:
        """Ascending coefficients of pi'

        Returns:
            List[Any]: i c_i for i = 1..k
        """
        with working_precision(self.digits):
            return [i * c for i, c in enumerate(self.coefficients)][1:]

    def evaluate_derivative(self, z: Number) -> complex:
        """pi'(z) in the working precision

        Args:
            z (Number): point

        Returns:
            complex: pi'(z)
        """
        derivative = self.derivative_coefficients()
        if not derivative:
            return 0j
        with working_precision(self.digits):
            return complex(horner(derivative, self._convert(z)))

    def to_json(self) -> Dict[str, Any]:
        """Serializable description

        Returns:
            Dict[str, Any]: degree, coefficients as [re, im] pairs, precision, plane, provenance
        """
        description: Dict[str, Any] = {
            "degree": self.degree,
            "coefficients": [[c.real, c.imag] for c in self.as_array().tolist()],
            "precision": self.digits,
            "plane": str(self.plane),
            "provenance": dict(sorted(self.provenance.items())),
        }
        if self.is_extended:
            with mpmath.workdps(self.digits):
                description["coefficients_text"] = [
                    [
                        mpmath.nstr(mpmath.re(c), self.digits),
                        mpmath.nstr(mpmath.im(c), self.digits),
                    ]
                    for c in self.coefficients
                ]
        return description
