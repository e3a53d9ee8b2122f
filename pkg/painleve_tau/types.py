"""
Handle the enumerations shared across modules
"""

from enum import IntEnum


class Plane(IntEnum):
    """
    Coordinate plane of a curve sample
    """

    Z = 1
    LAMBDA = 2

    def __str__(self) -> str:
        """Return a string representation

        Raises:
            ValueError: If the plane is missing in __str__ (it should not happen)

        Returns:
            str: string representation
        """
        if self == Plane.Z:
            return "z"
        if self == Plane.LAMBDA:
            return "lambda"
        raise ValueError


class DeformForm(IntEnum):
    """
    Reading of the left side of the corrected zero curve
    """

    REAL_PART = 1  # Re phi(z; 1) = log|z| - Re(z)/z0 + 1/z0
    MODULUS = 2  # log|z| - |z - 1|/|z0|

    def __str__(self) -> str:
        """Return a string representation

        Raises:
            ValueError: If the form is missing in __str__ (it should not happen)

        Returns:
            str: string representation
        """
        if self == DeformForm.REAL_PART:
            return "real_part"
        if self == DeformForm.MODULUS:
            return "modulus"
        raise ValueError

    @staticmethod
    def from_name(name: str) -> "DeformForm":
        """Parse the command line spelling

        Args:
            name (str): "real_part" or "modulus"

        Raises:
            ValueError: unknown name

        Returns:
            DeformForm: the parsed form
        """
        for form in DeformForm:
            if str(form) == name:
                return form
        raise ValueError(f"Unknown deform form {name}")
