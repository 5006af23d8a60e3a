"""Exception taxonomy.

Every domain error carries a machine-readable ``name`` (the class name) and an
optional ``data`` dict; the CLI serializes both instead of parsing messages.
"""

from __future__ import annotations


class UnicubicError(Exception):
    """Base class for all structured errors raised by this package."""

    def __init__(self, message: str = "", **data):
        super().__init__(message)
        self.message = message
        self.data = data

    @property
    def name(self) -> str:
        return type(self).__name__

    def to_dict(self) -> dict:
        return {"type": self.name, "message": self.message,
                "data": {k: repr(v) for k, v in sorted(self.data.items())}}


class ParseError(UnicubicError):
    """Malformed input text (polynomial grammar, field designator, point)."""


# -- field / polynomial layer -------------------------------------------------

class FieldMismatch(UnicubicError):
    pass


class DivisionByZero(UnicubicError):
    pass


class UnsupportedField(UnicubicError):
    pass


class VariableMismatch(UnicubicError):
    pass


class ZeroDenominator(UnicubicError):
    pass


class DenominatorVanishesIdentically(UnicubicError):
    pass


# -- quadratic extension ring -------------------------------------------------

class NonInvertible(UnicubicError):
    """Element of the rank-2 ring has zero norm; signals a degenerate
    geometric configuration rather than a programming error."""


class InternalInconsistency(UnicubicError):
    """An identity the construction guarantees failed to hold; always a bug."""


# -- hypersurface layer -------------------------------------------------------

class PointNotOnHypersurface(UnicubicError):
    pass


class WrongCharacteristic(UnicubicError):
    pass


class WrongDimension(UnicubicError):
    pass


class TriplePoint(UnicubicError):
    """The given point has multiplicity three; no residual intersection."""


class QuadraticVanishesEverywhere(UnicubicError):
    """The quadratic cone at a double point vanishes on every rational
    direction; only possible over the tiniest fields."""


class SingularPoint(UnicubicError):
    pass


# -- parametrization layer ----------------------------------------------------

class NotSmooth(UnicubicError):
    pass


class ConeInput(UnicubicError):
    pass


class CubicPartVanishes(UnicubicError):
    pass


class DegenerateTangentDirection(UnicubicError):
    pass


class DegenerateSection(UnicubicError):
    pass


class LineContainedInX(UnicubicError):
    pass


class CoincidentPoints(UnicubicError):
    pass


class DegenerateRestriction(UnicubicError):
    pass


class VerificationFailed(UnicubicError):
    pass


class ExhaustedSamples(UnicubicError):
    pass


class SliceNotFound(UnicubicError):
    pass


class InconsistentTable(UnicubicError):
    pass


# -- point services -----------------------------------------------------------

class BudgetExceeded(UnicubicError):
    pass


class ShapeMismatch(UnicubicError):
    pass


class SearchExhausted(UnicubicError):
    pass


class YieldTooLow(UnicubicError):
    """Fewer distinct points than requested within the attempt budget.
    Expected over tiny finite fields; reportable, carries partial results."""
