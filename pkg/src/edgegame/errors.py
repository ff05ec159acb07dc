"""Exception hierarchy shared across the package."""


class EdgegameError(Exception):
    """Base class for all errors raised by this package."""


class InputError(EdgegameError):
    """Caller supplied an invalid argument, file content, or combination."""


class ParseError(InputError):
    """A text input could not be parsed; message carries file and line."""


class CapacityError(EdgegameError):
    """An exact enumeration was requested beyond its feasibility guard."""


class TrainingDivergedError(EdgegameError):
    """The training loss became non-finite."""
