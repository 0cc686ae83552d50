"""Exception hierarchy shared across the package."""


class RingstructError(Exception):
    """Base class for all package errors."""


class ValidationError(RingstructError):
    """An input object violates a structural axiom (raised at load time)."""


class AssociativityError(ValidationError):
    """Structure constants fail associativity.

    Carries the offending basis triple so reports can name it.
    """

    def __init__(self, triple, message=None):
        self.triple = tuple(triple)
        super().__init__(message or f"associativity fails on basis triple {self.triple}")


class DocumentError(RingstructError):
    """A document file cannot be parsed or refers to an unknown family/command."""


class DimensionMismatch(RingstructError):
    """Operands live in spaces of incompatible dimensions."""


class MismatchedAlgebras(RingstructError):
    """Two elements belong to different algebra presentations."""


class NotNilpotent(RingstructError):
    """Operation requires a nilpotent algebra."""


class NotTwoSidedIdeal(RingstructError):
    """Operation requires a two-sided ideal."""


class AnnihilatorNonzero(RingstructError):
    """Minimal principal ideal search requires the one-sided annihilator to vanish."""


class NotMinimal(RingstructError):
    """The given one-sided ideal failed its minimality certificate."""


class NotIdempotent(RingstructError):
    """Operation requires an idempotent element."""


class NotSemiprime(RingstructError):
    """Operation requires a semiprime algebra (zero radical)."""


class ZeroAlgebra(RingstructError):
    """Operation is undefined on the zero algebra."""


class NotUnital(RingstructError):
    """Operation requires a unital algebra."""


class InvalidParams(RingstructError):
    """Generator parameters out of range."""


class InternalInvariantError(RingstructError):
    """A certified internal invariant failed; indicates an engine bug."""
