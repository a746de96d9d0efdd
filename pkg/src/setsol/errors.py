"""Exception hierarchy shared by every module."""


class AlgebraError(Exception):
    """Base class for all errors raised by setsol."""


class OutOfRange(AlgebraError, ValueError):
    def __init__(self, position, value=None, order=None):
        self.position = tuple(position)
        self.value = value
        self.order = order
        super().__init__(f"entry {value!r} at {self.position} outside [0, {order})")


class NotAssociative(AlgebraError, ValueError):
    def __init__(self, triple):
        self.triple = tuple(triple)
        x, y, z = self.triple
        super().__init__(f"(xy)z != x(yz) at x={x}, y={y}, z={z}")


class BadParams(AlgebraError, ValueError):
    pass


class PreconditionFailed(AlgebraError):
    """A check required before an operation did not hold.

    ``verdict`` carries the failing check when there is one.
    """

    def __init__(self, message, verdict=None, layer=None):
        self.verdict = verdict
        self.layer = layer
        super().__init__(message)


class PreconditionNotPE(PreconditionFailed):
    pass


class PreconditionNotPQYBE(PreconditionFailed):
    pass


class PreconditionNotInVarietyS(PreconditionFailed):
    pass


class NotAGroup(PreconditionFailed):
    pass


class NotMonoids(PreconditionFailed):
    pass


class NoOneSidedIdentity(PreconditionFailed):
    pass


class CapExceeded(AlgebraError):
    def __init__(self, cap, powers):
        self.cap = cap
        self.powers = powers
        super().__init__(f"no repeated power within {cap} compositions")


class SpecTooLarge(AlgebraError, ValueError):
    pass


class UnknownFixture(AlgebraError, KeyError):
    pass
