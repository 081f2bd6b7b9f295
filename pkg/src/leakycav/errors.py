"""Exception types shared across the package."""


class LeakycavError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(LeakycavError, ValueError):
    """An argument lies outside the physical or mathematical domain."""


class UnsupportedRegimeError(LeakycavError):
    """A closed-form approximation was requested outside its regime of validity."""


class ResolutionError(LeakycavError):
    """An integration grid is too coarse for the requested dynamics."""


class AliasingError(LeakycavError):
    """A discretized-bath horizon exceeds the mode recurrence time."""


class SolverError(LeakycavError):
    """A bracketing root search failed to locate a sign change."""


class HorizonError(SolverError):
    """A threshold or event was not reached within the search window."""


class MeasurementError(LeakycavError):
    """A projective measurement outcome has (numerically) zero probability."""


class StructureError(LeakycavError):
    """A state vector does not have the five-component support of this model."""


class InvariantViolation(LeakycavError):
    """An internal consistency check failed; indicates a bug, not bad input."""


class ConfigError(LeakycavError):
    """A run configuration is malformed."""


class ProtocolPreconditionWarning(UserWarning):
    """The state handed to a protocol step violates a soft precondition."""
