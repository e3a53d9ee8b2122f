"""
Abstract Check

This gives the skeleton for any check of the verification battery
"""
import abc
import logging
import time
from dataclasses import dataclass, field
from typing import Any, Dict

from painleve_tau.exceptions import PainleveTauError, as_library_error

LOGGER = logging.getLogger("PainleveTau")


class IncorrectCheckInitialization(Exception):
    """
    Exception raises if a check was not properly defined
    """

    # pylint: disable=unnecessary-pass
    pass


@dataclass
class CheckResult:
    """
    Outcome of one check with the measured quantities
    """

    name: str
    passed: bool
    measured: Dict[str, Any] = field(default_factory=dict)
    message: str = ""

    def to_json(self) -> Dict[str, Any]:
        """Return the entry of verify.json

        Returns:
            Dict[str, Any]: name, passed, measured values and message
        """
        return {
            "name": self.name,
            "passed": self.passed,
            "measured": self.measured,
            "message": self.message,
        }


class AbstractCheck(metaclass=abc.ABCMeta):
    """
    This is the abstract class for the checks
    """

    NAME: str = ""
    DESCRIPTION: str = ""
    PRIORITY: int = 100

    SLOW = False  # True if the check is left out of the default battery

    def __init__(self) -> None:
        """Init the object

        Raises:
            IncorrectCheckInitialization: If the check was not correctly designed
        """
        if not self.NAME:
            raise IncorrectCheckInitialization(
                f"NAME is not initialized {self.__class__.__name__}"
            )

        if not self.DESCRIPTION:
            raise IncorrectCheckInitialization(
                f"DESCRIPTION is not initialized {self.__class__.__name__}"
            )

    @abc.abstractmethod
    def run(self) -> CheckResult:
        """Run the check

        Returns:
            CheckResult: the outcome
        """
        return CheckResult(self.NAME, False)

    def result(self, passed: bool, message: str = "", **measured: Any) -> CheckResult:
        """Build the result of this check

        Args:
            passed (bool): outcome
            message (str): human readable summary
            **measured: measured quantities

        Returns:
            CheckResult: the result
        """
        return CheckResult(self.NAME, bool(passed), dict(measured), message)

    def execute(self) -> CheckResult:
        """Run the check, turning a library error into a failed result

        Returns:
            CheckResult: the outcome
        """
        start = time.perf_counter()
        try:
            outcome = self.run()
        except (PainleveTauError, ArithmeticError) as raised:
            exception = as_library_error(raised)
            LOGGER.error("%s raised %s: %s", self.NAME, type(exception).__name__, exception)
            outcome = CheckResult(self.NAME, False, {}, f"{type(exception).__name__}: {exception}")
        LOGGER.info(
            "%s: %s (%.2fs)",
            self.NAME,
            "pass" if outcome.passed else "FAIL",
            time.perf_counter() - start,
        )
        return outcome
