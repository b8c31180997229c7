"""Exception hierarchy shared by the library and the command line."""

from __future__ import annotations


class EssDimError(Exception):
    """Base class for every error raised by :mod:`essdim`."""

    exit_code = 1


class DomainRefusal(EssDimError):
    """The requested value is not determined by the implemented theory."""

    exit_code = 1


class NoDegreesError(DomainRefusal):
    pass


class CharacteristicError(DomainRefusal, ValueError):
    pass


class GroupParseError(EssDimError, ValueError):
    exit_code = 2


class EnumerationBudgetError(EssDimError):
    """Signature enumeration would exceed the configured budget."""

    exit_code = 3

    def __init__(self, budget: int, what: str = "signature families"):
        self.budget = budget
        super().__init__(f"enumeration budget of {budget} {what} exceeded")


class NotInvertibleError(EssDimError, ZeroDivisionError):
    pass


class TruncationError(EssDimError):
    pass


class NotAProductError(EssDimError, ValueError):
    pass


class InternalConsistencyError(EssDimError, RuntimeError):
    """Two independent routes to the same number disagreed."""

    exit_code = 4
