"""
Test the verification battery
"""
import pytest

from painleve_tau.exceptions import InvalidParameters
from painleve_tau.verify import (
    AbstractCheck,
    CheckResult,
    IncorrectCheckInitialization,
    get_checks,
    run_checks,
    select_checks,
)
from painleve_tau.verify.tau_checks import QuadratureExactness

FAST_CHECKS = [
    "quadrature-exactness",
    "s0",
    "tau-limit",
    "tau-realness",
    "nu-hat",
    "conformal-map",
    "planar-contour",
    "hankel-nonvanishing",
    "factorization",
]
SLOW_CHECKS = ["tau-resolution", "zero-attraction", "extraction"]


def test_registry_order() -> None:
    """Checks are listed by priority, the slow ones last"""
    names = [check.NAME for check in get_checks()]
    assert names == FAST_CHECKS + SLOW_CHECKS
    assert [check.NAME for check in select_checks()] == FAST_CHECKS
    assert all(check.SLOW for check in get_checks() if check.NAME in SLOW_CHECKS)


def test_selection() -> None:
    """Named checks run in priority order whatever the order they are given in"""
    selected = select_checks(["factorization", "s0"])
    assert [check.NAME for check in selected] == ["s0", "factorization"]
    with pytest.raises(InvalidParameters):
        select_checks(["s0", "unknown-check"])


def test_incorrect_check() -> None:
    """A check without NAME or DESCRIPTION cannot be built"""

    class Nameless(AbstractCheck):
        DESCRIPTION = "no name"

        def run(self) -> CheckResult:
            return self.result(True)

    class Undescribed(AbstractCheck):
        NAME = "undescribed"

        def run(self) -> CheckResult:
            return self.result(True)

    with pytest.raises(IncorrectCheckInitialization):
        Nameless()
    with pytest.raises(IncorrectCheckInitialization):
        Undescribed()


def test_library_error_fails_the_check() -> None:
    """An error raised inside a check becomes a failed result"""

    class Breaking(AbstractCheck):
        NAME = "breaking"
        DESCRIPTION = "raises"

        def run(self) -> CheckResult:
            raise InvalidParameters("bad input")

    outcome = Breaking().execute()
    assert not outcome.passed
    assert outcome.message == "InvalidParameters: bad input"
    assert outcome.to_json() == {
        "name": "breaking",
        "passed": False,
        "measured": {},
        "message": "InvalidParameters: bad input",
    }


@pytest.mark.parametrize("name", FAST_CHECKS)
def test_fast_check_passes(name: str) -> None:
    """Every check of the default battery passes"""
    (outcome,) = run_checks([name])
    assert outcome.name == name
    assert outcome.passed, outcome.message


def test_arithmetic_error_fails_the_check() -> None:
    """A floating-point failure inside a check is reported as a numerical breakdown"""

    class Dividing(AbstractCheck):
        NAME = "dividing"
        DESCRIPTION = "divides by zero"

        def run(self) -> CheckResult:
            raise ZeroDivisionError("float division by zero")

    outcome = Dividing().execute()
    assert not outcome.passed
    assert outcome.message == "NumericalBreakdown: ZeroDivisionError: float division by zero"


def test_odd_moment_of_single_node() -> None:
    """The one-node rule sits at the origin, where every odd moment term vanishes"""
    outcome = QuadratureExactness().execute()
    assert outcome.passed
    assert outcome.measured["max_error"] < 1e-10
