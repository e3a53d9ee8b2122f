"""
Painleve-tau exceptions

Every failure raised by the library belongs to one of three families, which the command line
maps to its exit codes.
"""


class PainleveTauError(Exception):
    """
    Base class of the library errors
    """

    # pylint: disable=unnecessary-pass
    pass


class InvalidParameters(PainleveTauError):
    """
    A parameter violates the precondition of an operation
    """

    # pylint: disable=unnecessary-pass
    pass


class NumericalBreakdown(PainleveTauError):
    """
    A numerical procedure failed (divergence, singular system, failed certificate)
    """

    # pylint: disable=unnecessary-pass
    pass


class QuadratureError(NumericalBreakdown):
    """
    The Hermite node solver did not converge
    """

    # pylint: disable=unnecessary-pass
    pass


class VerificationFailure(PainleveTauError):
    """
    At least one verification check failed
    """

    # pylint: disable=unnecessary-pass
    pass


EXIT_CODES = {
    VerificationFailure: 1,
    InvalidParameters: 2,
    NumericalBreakdown: 3,
}


def exit_code_of(exception: PainleveTauError) -> int:
    """Return the command line exit code of an exception

    Args:
        exception (PainleveTauError): raised exception

    Returns:
        int: exit code (1 verification, 2 bad input, 3 numerical breakdown)
    """
    for kind, code in EXIT_CODES.items():
        if isinstance(exception, kind):
            return code
    return 3


def as_library_error(exception: Exception) -> PainleveTauError:
    """Wrap a floating-point failure (overflow, division by zero) as a NumericalBreakdown

    Args:
        exception (Exception): raised exception

    Returns:
        PainleveTauError: the exception itself when it already is a library error
    """
    if isinstance(exception, PainleveTauError):
        return exception
    return NumericalBreakdown(f"{type(exception).__name__}: {exception}")
