from __future__ import annotations

import traceback
from datetime import datetime
from typing import Any, Optional

from chevcheck.utils.constants import EXIT_FAIL, EXIT_SKIPPED, EXIT_USAGE


class ChevcheckError(Exception):
    """Base class for every error raised by chevcheck."""


# Fields


class FieldError(ChevcheckError):
    pass


class NotPrimeError(FieldError, ValueError):
    pass


class FieldTooLargeError(FieldError, ValueError):
    pass


class FieldMismatchError(FieldError, TypeError):
    pass


class FieldZeroDivisionError(FieldError, ZeroDivisionError):
    pass


class NotFiniteFieldError(FieldError, TypeError):
    pass


class DegreeOverflowError(FieldError, OverflowError):
    pass


class UnsupportedFieldError(FieldError, ValueError):
    pass


# Root data and the Chevalley form


class RootSystemError(ChevcheckError):
    pass


class UnsupportedTypeError(RootSystemError, ValueError):
    pass


class ForeignRootError(RootSystemError, ValueError):
    pass


class NonSymmetricSubsetError(RootSystemError, ValueError):
    pass


class ConstructionError(ChevcheckError, AssertionError):
    """An internal consistency check failed while building algebraic data."""


# Groups and subspaces


class GroupError(ChevcheckError):
    pass


class DimensionMismatchError(GroupError, ValueError):
    pass


class ClosureBudgetError(GroupError):
    def __init__(self, cap: int, partial_size: int) -> None:
        super().__init__(f"closure exceeded cap {cap} (partial size {partial_size})")
        self.cap = cap
        self.partial_size = partial_size


class NotSubgroupError(GroupError, ValueError):
    pass


class GeneratorSpecError(GroupError, ValueError):
    """A generator description on the command line could not be parsed."""


class SubspaceError(ChevcheckError):
    pass


class AmbientMismatchError(SubspaceError, ValueError):
    pass


class DeclarationError(SubspaceError, ValueError):
    pass


class NotComplementaryError(SubspaceError, ValueError):
    pass


# Scenarios


class ScenarioError(ChevcheckError):
    pass


class UnknownScenarioError(ScenarioError, KeyError):
    def __init__(self, name: str, valid: list[str]) -> None:
        super().__init__(f"unknown scenario {name!r}; valid ids: {', '.join(valid)}")
        self.name = name
        self.valid = valid

    def __str__(self) -> str:
        return str(self.args[0])


class BudgetExceededError(ScenarioError):
    pass


class ScenarioAssertionError(ScenarioError, AssertionError):
    def __init__(self, check: str, operands: Optional[dict[str, Any]] = None) -> None:
        super().__init__(f"check failed: {check}")
        self.check = check
        self.operands = operands or {}


def error_hint(exc: Exception) -> str:
    if isinstance(exc, (ClosureBudgetError, BudgetExceededError)):
        return "Raise --budget or restrict --field to a smaller field."
    if isinstance(exc, UnknownScenarioError):
        return f"Pick one of: {', '.join(exc.valid)}."
    if isinstance(exc, UnsupportedTypeError):
        return "Use a simple type label such as A4, B3, D4, E8, F4 or G2."
    if isinstance(exc, (NotPrimeError, FieldTooLargeError, UnsupportedFieldError)):
        return "Use a field label such as gf2, gf4, gf8 or gf16."
    if isinstance(exc, (GeneratorSpecError, ForeignRootError)):
        return "Generators look like x[1,0](1);h[0,1](2);s[1,1], roots in simple-root coordinates."
    if isinstance(exc, ScenarioAssertionError):
        return f"First violated check: {exc.check}."
    if isinstance(exc, OSError):
        return "Check that the output path is writable."
    if isinstance(exc, ChevcheckError):
        return "See the error log for the offending operands."
    return "Unexpected failure."


def format_cli_error(action: str, exc: Exception, error_log_path: str) -> str:
    return f"{action} failed: {error_hint(exc)} (details in {error_log_path})"


def record_error(context: str, exc: BaseException, error_log_path: str) -> None:
    ts = datetime.now().isoformat(timespec="seconds")
    details = "".join(traceback.format_exception(type(exc), exc, exc.__traceback__))
    try:
        with open(error_log_path, "a", encoding="utf-8") as f:
            f.write(f"[{ts}] {context}\n{details}\n")
    except OSError:
        pass


_USAGE_ERRORS = (
    UnknownScenarioError,
    UnsupportedTypeError,
    ForeignRootError,
    GeneratorSpecError,
    UnsupportedFieldError,
    NotPrimeError,
    FieldTooLargeError,
)


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, (ClosureBudgetError, BudgetExceededError)):
        return EXIT_SKIPPED
    if isinstance(exc, _USAGE_ERRORS):
        return EXIT_USAGE
    return EXIT_FAIL
