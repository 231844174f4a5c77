"""Shared exceptions and the global enumeration budget."""

from __future__ import annotations

#: Default ceiling for exhaustive scans (codewords, ideals, cube vectors).
DEFAULT_MAX_ENUM = 2**22


class PosetCodesError(Exception):
    """Base class for package-specific failures."""


class BudgetExceededError(PosetCodesError):
    """An exhaustive scan would exceed the configured enumeration budget."""

    def __init__(self, what: str, size: int, bound: int):
        self.what = what
        self.size = size
        self.bound = bound
        super().__init__(
            f"{what} requires {size} items, exceeding the enumeration budget "
            f"of {bound}; raise the budget (--max-enum) to allow this"
        )


def check_budget(what: str, size: int, max_enum: int | None = None) -> int:
    """Raise :class:`BudgetExceededError` if ``size`` exceeds the budget."""
    bound = DEFAULT_MAX_ENUM if max_enum is None else max_enum
    if size > bound:
        raise BudgetExceededError(what, size, bound)
    return bound


class FileFormatError(PosetCodesError):
    """Malformed poset/code text file; carries the offending 1-based line."""

    def __init__(self, line_no: int, message: str):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class ConstructionError(PosetCodesError):
    """A constructor or derivation failed to produce a verified code."""
