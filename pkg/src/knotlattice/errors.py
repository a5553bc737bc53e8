"""Exception hierarchy. Each family maps to one CLI exit code."""


class KnotLatticeError(Exception):
    exit_code = 4

    @property
    def name(self):
        return type(self).__name__


class InputError(KnotLatticeError):
    """Input text could not be turned into a valid diagram or graph."""

    exit_code = 2


class MalformedPd(InputError):
    pass


class ArcMultiplicity(InputError):
    pass


class NonPlanar(InputError):
    pass


class InconsistentOrientation(InputError):
    pass


class MalformedGauss(InputError):
    pass


class UnrealizableCode(InputError):
    pass


class UnsignedCode(InputError):
    pass


class InvalidRotation(InputError):
    pass


class PreconditionError(KnotLatticeError):
    """A valid input that the requested operation does not accept."""

    exit_code = 3


class NotConnected(PreconditionError):
    pass


class NoAllBColoring(PreconditionError):
    pass


class HasBridge(PreconditionError):
    pass


class NotACycle(PreconditionError):
    pass


class NotInLattice(PreconditionError):
    pass


class NotPositiveDefinite(PreconditionError):
    pass


class NotAlternating(PreconditionError):
    pass


class PreconditionFailed(PreconditionError):
    def __init__(self, predicate, message=None):
        self.predicate = predicate
        super().__init__(message or f"precondition failed: {predicate}")


class InternalConventionError(KnotLatticeError):
    """Two routes that must agree did not; this is a bug, not bad input."""

    exit_code = 4


class BoundExceeded(KnotLatticeError):
    exit_code = 5


class ImproperColoring(PreconditionError):
    pass
