"""
Working precision of the moment and polynomial pipeline

Double precision runs on numpy arrays; anything above 15 digits runs on mpmath numbers inside an
mpmath.workdps block.
"""
import cmath
import contextlib
from typing import Any, ContextManager, Optional

import mpmath

from painleve_tau.exceptions import InvalidParameters

DOUBLE_DIGITS = 15
MIN_EXTENDED_DIGITS = 30


def resolve_digits(k: int, precision: Optional[int]) -> int:
    """Decimal digits used for a polynomial of degree k

    Args:
        k (int): degree
        precision (Optional[int]): explicit digits, None for the automatic choice

    Raises:
        InvalidParameters: if the explicit precision is below double precision

    Returns:
        int: max(30, 3k) when precision is None, else precision
    """
    if precision is None:
        return max(MIN_EXTENDED_DIGITS, 3 * k)
    if int(precision) < DOUBLE_DIGITS:
        raise InvalidParameters(f"precision must be at least {DOUBLE_DIGITS}, got {precision}")
    return int(precision)


def is_extended(digits: int) -> bool:
    """Tell whether digits requires mpmath

    Args:
        digits (int): decimal digits

    Returns:
        bool: True above double precision
    """
    return digits > DOUBLE_DIGITS


def working_precision(digits: int) -> ContextManager[Any]:
    """Context in which mpmath computes with the given digits

    Args:
        digits (int): decimal digits

    Returns:
        ContextManager[Any]: mpmath.workdps, or a null context in double precision
    """
    if is_extended(digits):
        return mpmath.workdps(digits)
    return contextlib.nullcontext()


def is_finite(value: Any) -> bool:
    """Finiteness test for python and mpmath numbers

    Args:
        value (Any): complex, float or mpmath number

    Returns:
        bool: True when finite
    """
    if isinstance(value, (mpmath.mpf, mpmath.mpc)):
        return bool(mpmath.isfinite(value))
    return cmath.isfinite(complex(value))


def magnitude(value: Any) -> float:
    """Modulus as a float, saturating at the double range

    Args:
        value (Any): complex, float or mpmath number

    Returns:
        float: |value|
    """
    if isinstance(value, (mpmath.mpf, mpmath.mpc)):
        return float(mpmath.fabs(value))
    return abs(complex(value))
