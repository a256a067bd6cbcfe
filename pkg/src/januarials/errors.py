"""Exception hierarchy shared by every module.

Each class carries the CLI exit status it maps to, so the front end never
needs a lookup table.
"""


class JanuarialError(Exception):
    exit_code = 2


class DomainError(JanuarialError, ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class ZeroInverse(DomainError, ZeroDivisionError):
    pass


class NoOrderLElement(DomainError):
    """No determinant-one element of the requested order exists mod p."""


class OrderOverflow(JanuarialError, ArithmeticError):
    pass


class SearchExhausted(JanuarialError):
    exit_code = 3


class OrderMismatch(JanuarialError, AssertionError):
    """A constructed pair failed its own post-verification."""

    exit_code = 4


class ParityError(DomainError):
    pass


class DisconnectedError(DomainError):
    pass


class NonIntegralGenus(DomainError):
    pass


class SplittingError(JanuarialError):
    """g_k did not split into distinct linear factors where it must."""

    exit_code = 4


class SizeLimit(DomainError):
    pass


class NotFound(JanuarialError):
    exit_code = 4
