"""Exception hierarchy.

Domain errors signal a violated precondition on user input; invariant
violations signal a bug in this library and should never surface.
"""


class DomainError(ValueError):
    pass


class NotAKnot(DomainError):
    """The numerator closure is a two-component link (even numerator)."""


class BadParity(DomainError):
    pass


class OddPower(DomainError):
    pass


class NonReal(DomainError):
    pass


class NotC0(DomainError):
    pass


class NotPivotEquivalent(DomainError):
    pass


class NotDivisible(ArithmeticError):
    pass


class InvariantViolation(RuntimeError):
    pass


class IntegralityViolation(InvariantViolation):
    pass


class NoWitness(InvariantViolation):
    pass
