"""
Init module
"""
from .abstract_check import AbstractCheck, CheckResult, IncorrectCheckInitialization
from .battery import get_checks, run_checks, select_checks
