"""
Discovery and execution of the verification checks
"""
import inspect
import logging
from typing import List, Optional, Sequence, Type

from painleve_tau.exceptions import InvalidParameters
from painleve_tau.verify import all_checks
from painleve_tau.verify.abstract_check import AbstractCheck, CheckResult

LOGGER = logging.getLogger("PainleveTau")


def get_checks() -> List[Type[AbstractCheck]]:
    """Return the available check classes in order of priority

    Returns:
        List[Type[AbstractCheck]]: Available checks
    """
    checks = [getattr(all_checks, name) for name in dir(all_checks)]
    checks = [c for c in checks if inspect.isclass(c) and issubclass(c, AbstractCheck)]
    return sorted(checks, key=lambda check: (check.PRIORITY, check.NAME))


def select_checks(only: Optional[Sequence[str]] = None) -> List[Type[AbstractCheck]]:
    """Checks to run: the named ones, or every check that is not SLOW

    Args:
        only (Optional[Sequence[str]]): check names, None for the default battery

    Raises:
        InvalidParameters: if a name is unknown

    Returns:
        List[Type[AbstractCheck]]: selected checks, in priority order
    """
    checks = get_checks()
    if not only:
        return [check for check in checks if not check.SLOW]
    known = {check.NAME: check for check in checks}
    unknown = [name for name in only if name not in known]
    if unknown:
        raise InvalidParameters(
            f"Unknown checks {', '.join(unknown)} (available: {', '.join(known)})"
        )
    return [check for check in checks if check.NAME in set(only)]


def run_checks(only: Optional[Sequence[str]] = None) -> List[CheckResult]:
    """Run the selected checks

    Args:
        only (Optional[Sequence[str]]): check names, None for the default battery

    Returns:
        List[CheckResult]: one result per check, in priority order
    """
    results = []
    for check in select_checks(only):
        LOGGER.debug("Running %s", check.NAME)
        results.append(check().execute())
    return results
