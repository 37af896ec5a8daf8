"""Exception hierarchy shared by all algebra modules."""


class CombHopfError(Exception):
    pass


class InvariantViolation(CombHopfError):
    """An identity that must hold structurally failed (e.g. a span did not close)."""


class NotInSpanError(InvariantViolation):
    pass


class AugmentationError(CombHopfError, ValueError):
    pass


class BudgetExceededError(CombHopfError, ValueError):
    pass


class ParseError(CombHopfError, ValueError):
    pass


class AlgebraMismatchError(CombHopfError, ValueError):
    pass


class UnknownAlgebraError(CombHopfError, KeyError):
    pass


class CongruenceGradingError(InvariantViolation):
    pass


class ScalarMixError(CombHopfError, TypeError):
    pass
