"""Exception hierarchy shared by every module."""


class WittError(Exception):
    """Base class for all library errors."""


class DescriptorMismatch(WittError, ValueError):
    """Operands live in different rings or over different truncation sets."""


class NotAUnit(WittError, ArithmeticError):
    """An integer (or rational denominator) is not invertible in the ring."""


class NotApplicable(WittError, ValueError):
    """A precondition on the input ring or parameters does not hold."""


class ParseError(WittError, ValueError):
    """Malformed element, ring or problem text."""


class IntegralityError(WittError, ArithmeticError):
    """A division or retraction that an integrality theorem guarantees has failed.

    Raising this means either a bug or a falsified theorem; callers must not
    swallow it.
    """


class NotDivisible(IntegralityError):
    """``exact_divide`` found no quotient."""


class DualPathMismatch(IntegralityError):
    """Two independent computations of the same quantity disagree."""
