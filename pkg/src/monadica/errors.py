"""Exception types shared across the library."""


class MonadicaError(Exception):
    """Base class for every error raised by this library."""


class NonFiniteInput(MonadicaError):
    """A NaN or infinite number was supplied where a finite real is required."""


class NotInvertible(MonadicaError):
    """Attempt to invert (or divide by) an infinitesimal."""


class DomainError(MonadicaError):
    """An argument lies outside the domain of the requested operation."""


class UnknownGenerator(MonadicaError):
    """A value references a generator id that the catalog does not know."""


class NotMonadic(MonadicaError):
    """A monadic set was required but the set carries extra real points."""


class EmptySetError(MonadicaError):
    """The operation is undefined on the empty set."""


class UnboundedError(MonadicaError):
    """The set is unbounded on the side the operation needs."""


class LengthUndefined(MonadicaError):
    """Length is only defined for bounded interval-shaped sets."""


class NotRepresentable(MonadicaError):
    """The exact result cannot be expressed as a monad plus finitely many reals."""


class OutOfDomain(MonadicaError):
    """Evaluation was requested at a point outside the function's domain."""


class NotDifferentiable(MonadicaError):
    """The requested symbolic derivative does not exist on the domain."""


class ProvisoViolated(MonadicaError):
    """A declared derivative disagrees with an existing classical limit."""


class RegionMismatch(MonadicaError):
    """Two piecewise functions do not share a compatible region structure."""


class NotInjective(MonadicaError):
    """Inversion was requested for a function that is not injective."""


class VanishingDerivative(MonadicaError):
    """Inversion was requested where the derivative has a zero."""
