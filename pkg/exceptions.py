"""
Exceptions Module

Errors raised by the category, quantum and protocol layers. The CLI maps each
family onto an exit code.
"""


class CategoryError(Exception):
    """Base class for every error raised by this package."""


class ShapeMismatchError(CategoryError, ValueError):
    """Domain/codomain shapes do not line up, or iso parameters are inconsistent."""


class UnsupportedOperationError(CategoryError, ArithmeticError):
    """The active semiring or measurement kind cannot support the operation."""


class NotUnitaryError(CategoryError, ValueError):
    """A morphism required to be unitary is not."""


class CorrectionError(CategoryError, ValueError):
    """A supplied unitary correction violates its defining equation."""


class NotAPreparationError(CategoryError, ValueError):
    """A state handed to the Born rule is not normalized."""


class ParseError(CategoryError, ValueError):
    """Text could not be read in the scalar, shape, state or matrix grammar."""
