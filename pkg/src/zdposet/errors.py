"""Exception hierarchy.

Validation problems with a poset derive from :class:`PosetError` (a
``ValueError``); precondition failures on analyses derive from
:class:`AnalysisError`.
"""

from __future__ import annotations


class PosetError(ValueError):
    """Invalid poset input."""


class CycleError(PosetError):
    """The closed relation is not antisymmetric."""


class NoLeastElementError(PosetError):
    """No element lies below every other element."""


class DuplicateLabelError(PosetError):
    pass


class UnknownLabelError(PosetError):
    pass


class ParseError(PosetError):
    """Malformed poset text; ``line`` is 1-based, or None for whole-file problems."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class AnalysisError(ValueError):
    pass


class NoZeroDivisorsError(AnalysisError):
    """The poset has no non-zero zero-divisors, so no graph can be built."""


class NotAZeroDivisorError(AnalysisError):
    pass


class TrivialPosetError(AnalysisError):
    """The poset has a single element."""


class TooFewVerticesError(AnalysisError):
    pass


class EmptySubsetError(AnalysisError):
    pass


class OracleCapExceeded(AnalysisError):
    """Input is too large for a brute-force oracle."""


class CapExceeded(AnalysisError):
    """Enumeration size above the supported maximum."""


class UnknownExampleError(KeyError):
    pass


class BadParamsError(ValueError):
    pass
