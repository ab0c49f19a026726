"""Exception hierarchy shared by every layer of the package."""


class HeckeFusionError(Exception):
    """Base class for all errors raised by hecke_fusion."""


class DivisionByZero(HeckeFusionError, ZeroDivisionError):
    pass


class NonAdmissibleDivisor(HeckeFusionError, ArithmeticError):
    """A generic-mode divisor does not split into linear forms d + q_s - q_t."""


class PoleAtEvaluationPoint(HeckeFusionError, ArithmeticError):
    """A reduced rational function still has a pole where it is evaluated."""


class NodeOutsideDiagram(HeckeFusionError, ValueError):
    pass


class EntryOutOfRange(HeckeFusionError, ValueError):
    pass


class NotRemovable(HeckeFusionError, ValueError):
    pass


class ZeroDenominator(HeckeFusionError, ZeroDivisionError):
    """A weight or idempotent formula hit a vanishing linear factor."""


class SeparationViolated(HeckeFusionError, ValueError):
    """The parameters Q fail the separation condition."""


class SpectralCollision(HeckeFusionError, ValueError):
    pass


class InvariantBreach(HeckeFusionError, AssertionError):
    """An internal identity that must hold exactly did not."""
