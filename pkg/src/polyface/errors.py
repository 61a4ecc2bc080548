"""Exception types shared across polyface."""


class PolyfaceError(Exception):
    """Base class for every error raised by this package."""


class MalformedLattice(PolyfaceError, ValueError):
    """Input does not describe a bounded graded poset."""


class NotGraded(MalformedLattice):
    pass


class NotBounded(MalformedLattice):
    pass


class CycleDetected(MalformedLattice):
    pass


class NotComparable(PolyfaceError, ValueError):
    pass


class SpecInvariantViolated(PolyfaceError, ValueError):
    pass


class FacetNotSimplex(SpecInvariantViolated):
    pass


class ParseError(PolyfaceError, ValueError):
    pass


class FaceNotInComplex(PolyfaceError, KeyError):
    pass


class PreconditionViolated(PolyfaceError, ValueError):
    pass


class OutOfFormulaRange(PolyfaceError, ValueError):
    pass


class UnknownTheorem(PolyfaceError, KeyError):
    pass


class SizeLimit(PolyfaceError, RuntimeError):
    """A matrix or lattice exceeded the configured size cap."""
