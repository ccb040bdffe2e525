"""Exceptions raised by the phase-space engine."""


class PhaseSpaceError(Exception):
    """Base class for phase-space engine errors."""
    pass


class GridConfigurationError(PhaseSpaceError):
    """Raised for invalid grids, insufficient boundary decay or a violated shear alignment."""
    pass


class RepresentationError(PhaseSpaceError):
    """Raised when a state is in the wrong representation or carries a different hbar."""
    pass
