"""Exception types raised by the simulator."""


class RabiPacketsError(Exception):
    """Base class for all errors raised by this package."""


class InvalidParameterError(RabiPacketsError, ValueError):
    """A physical or numerical parameter is outside its allowed range."""


class InvalidStateError(RabiPacketsError, ValueError):
    """A two-level state cannot be built or normalized."""


class ScenarioError(RabiPacketsError):
    """A scenario file failed to parse or violates a validity rule."""


class AccuracyError(RabiPacketsError, ArithmeticError):
    """The reference integrator drifted beyond its accuracy bound."""


class ConservationError(RabiPacketsError, ArithmeticError):
    """A conserved quantity drifted during a run."""
