"""
Exception hierarchy for the penta toolkit.

DataError and its subclasses describe bad input data (exit status 2 on the
command line). UsageError covers bad parameters and expression syntax
(exit status 1). ConsistencyError signals an internal numeric failure.
"""

from typing import FrozenSet, Mapping, Optional


class PentaError(Exception):
    """Base class for every error raised by apis.penta."""


# ── Data validation ───────────────────────────────────────────────────────────

class DataError(PentaError, ValueError):
    pass


class UnitRangeError(DataError):
    def __init__(self, name: str, value: float):
        self.name = name
        self.value = value
        super().__init__(f"{name} out of [0,1]")


class PartitionError(DataError):
    def __init__(self, total: float, detail: str = ""):
        self.total = total
        msg = f"partition violation: coordinates sum to {total:.12g}"
        if detail:
            msg = f"{msg} ({detail})"
        super().__init__(msg)


class ConstraintViolationError(DataError):
    def __init__(self, element: str, detail: str, coords: Optional[Mapping[str, float]] = None):
        self.element = element
        self.coords = dict(coords or {})
        witness = ", ".join(f"{k}={v:.12g}" for k, v in self.coords.items())
        msg = f"element {element!r}: {detail}"
        if witness:
            msg = f"{msg} [{witness}]"
        super().__init__(msg)


class UniverseMismatchError(DataError):
    def __init__(self, element: str):
        self.element = element
        super().__init__(f"universe mismatch at element {element!r}")


class RowError(DataError):
    def __init__(self, row: int, detail: str, column: Optional[str] = None):
        self.row = row
        self.column = column
        self.detail = detail
        super().__init__(f"row {row}: {detail}")


class MissingColumnError(DataError):
    def __init__(self, missing, found):
        self.missing = list(missing)
        super().__init__(
            f"missing required column(s): {', '.join(self.missing)}; found: {', '.join(found)}"
        )


class IotaMismatchError(DataError):
    def __init__(self, given: float, expected: float):
        self.given = given
        self.expected = expected
        super().__init__(f"iota {given:.12g} does not match recomputed {expected:.12g}")


# ── Usage / syntax ────────────────────────────────────────────────────────────

class UsageError(PentaError, ValueError):
    pass


class InvalidParameterError(UsageError):
    pass


class ExpressionSyntaxError(UsageError):
    def __init__(self, text: str, offset: int, expected: FrozenSet[str] = frozenset()):
        self.text = text
        self.offset = offset
        self.expected = frozenset(expected)
        msg = f"syntax error at offset {offset}"
        if self.expected:
            msg = f"{msg}, expected {' or '.join(sorted(self.expected))}"
        super().__init__(msg)


class UnknownCharacterError(ExpressionSyntaxError):
    def __init__(self, text: str, offset: int, char: str):
        self.char = char
        UsageError.__init__(self, f"unknown character {char!r} at offset {offset}")
        self.text = text
        self.offset = offset
        self.expected = frozenset()


class UnboundVariableError(UsageError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unbound variable {name!r}")


class TooManyVariablesError(UsageError):
    def __init__(self, count: int, cap: int):
        self.count = count
        self.cap = cap
        super().__init__(f"{count} free variables exceed the truth-table cap of {cap}")


# ── Internal ──────────────────────────────────────────────────────────────────

class ConsistencyError(PentaError, RuntimeError):
    pass
