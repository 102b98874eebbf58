"""Exception hierarchy shared by every module."""

from __future__ import annotations


class GrasscohError(Exception):
    """Base class for all library errors."""


class RangeError(GrasscohError, ValueError):
    """An index or parameter is outside its admissible range."""


class ShapeError(GrasscohError, ValueError):
    """Operands have incompatible variable counts or descriptors."""


class PreconditionError(GrasscohError, ValueError):
    """An operation was called outside its documented domain."""


class InvariantViolation(GrasscohError, RuntimeError):
    """An internal consistency check failed."""


class UnsupportedCase(GrasscohError, ValueError):
    """The requested case or mode has no implementation."""


class ParseError(GrasscohError, ValueError):
    """Text could not be parsed into a value."""


class SpaceLookupError(GrasscohError, KeyError):
    """Unknown space name. Carries the closest known names."""

    def __init__(self, name: str, suggestions: list[str] | None = None):
        self.name = name
        self.suggestions = list(suggestions or [])
        msg = f"unknown space {name!r}"
        if self.suggestions:
            msg += "; did you mean " + " or ".join(repr(s) for s in self.suggestions) + "?"
        super().__init__(msg)

    def __str__(self) -> str:
        return self.args[0]
