"""Exception types shared across the package."""


class FdalgError(Exception):
    """Base class for all package errors."""


class ContractViolation(FdalgError):
    """An operation was called with incompatible arguments."""


class GuardError(FdalgError):
    """A characteristic guard failed (for the radical machinery the prime
    must exceed the algebra dimension)."""


class SplitRequiredError(FdalgError):
    """The algebra is not split over the ground field."""


class NonAdmissibleError(FdalgError):
    """The relation ideal does not cut out a finite-dimensional quotient
    within the given nilpotency bound."""


class HypothesisError(FdalgError):
    """A verification routine was invoked outside its hypotheses."""


class ValidationError(FdalgError):
    """A model file failed to parse or validate."""


class InternalError(FdalgError):
    """A bounded randomized search failed to converge; indicates either a
    pathological input or an internal bug."""
