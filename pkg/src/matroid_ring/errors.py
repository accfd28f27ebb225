"""Exception hierarchy.

Everything raised on purpose by this package derives from :class:`MatroidError`,
which is a :class:`ValueError` so callers that only care about "bad input" can
catch that.
"""


class MatroidError(ValueError):
    pass


class ValidationError(MatroidError):
    """An axiom system was violated by the supplied data."""


class EmptyBases(ValidationError):
    pass


class UnequalBasisSizes(ValidationError):
    pass


class ExchangeAxiomViolation(ValidationError):
    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InvalidCyclicData(ValidationError):
    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class ElementOutOfRange(MatroidError):
    pass


class RankOutOfRange(MatroidError):
    pass


class RankZero(MatroidError):
    pass


class RankTooSmall(MatroidError):
    pass


class GroundSetMismatch(MatroidError):
    pass


class NotAFlat(MatroidError):
    pass


class NotNested(MatroidError):
    pass


class HasLoops(MatroidError):
    pass


class InputHasLoops(HasLoops):
    pass


class CoLoopSetTooLarge(MatroidError):
    pass


class InvalidChain(MatroidError):
    pass


class NotAChain(MatroidError):
    pass


class GradingViolation(MatroidError):
    pass


class GradeMismatch(MatroidError):
    pass


class IncomparableElements(MatroidError):
    pass


class PreconditionViolated(MatroidError):
    pass


class ProductIsZero(MatroidError):
    pass


class BadRange(MatroidError):
    pass


class LatticeTooLarge(MatroidError):
    pass


class ParseError(MatroidError):
    def __init__(self, message, position=None):
        self.detail = message
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class InfeasibleSpec(MatroidError):
    pass
