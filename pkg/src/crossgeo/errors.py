"""Exception hierarchy.

Every error raised on purpose by the library derives from
:class:`CrossgeoError`.  The CLI maps the three middle layers onto exit
codes: input errors (2), precondition violations (3) and cap overruns (4).
"""

from __future__ import annotations


class CrossgeoError(Exception):
    """Base class for all library errors."""


class InputError(CrossgeoError, ValueError):
    """The caller supplied data that cannot be interpreted."""


class PreconditionError(CrossgeoError, ValueError):
    """Valid input that the requested operation does not apply to."""


class CapExceeded(CrossgeoError):
    """A configured size limit was exceeded."""


# diagram parsing / validation


class MalformedToken(InputError):
    pass


class LabelCountError(InputError):
    pass


class DisconnectedDiagram(InputError):
    pass


class MultiComponent(InputError):
    """The code describes a link with more than one component."""


class NonPlanarDiagram(InputError):
    pass


class OrientationError(InputError):
    """Under-strands of the code cannot be oriented consistently."""


class NotCoprime(InputError):
    pass


# operation preconditions


class NotAlternating(PreconditionError):
    pass


class NotReduced(PreconditionError):
    pass


class Undefined(PreconditionError):
    """A closed formula is evaluated outside its stated branches."""


class OddProduct(PreconditionError):
    pass


class BadParameter(PreconditionError):
    pass


class EmptyInput(PreconditionError):
    pass


class MissingInvariant(PreconditionError):
    """An externally supplied invariant (sigma, upsilon) is absent."""


class TooManyCrossings(CapExceeded):
    pass


# catalog


class FileUnreadable(InputError):
    pass


class MalformedRecord(InputError):
    """A single catalog line failed to parse; carries its line number."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line
        self.message = message
