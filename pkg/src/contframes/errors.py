"""Exception hierarchy shared by the library and the command line."""


class FrameError(Exception):
    """Base class for all errors raised by ``contframes``."""


class FrameInputError(FrameError, ValueError):
    """Malformed input: wrong shapes, invalid weights, non-finite values."""


class FrameDomainError(FrameError, ValueError):
    """Input is well formed but outside the domain of the operation
    (e.g. a zero test vector in a quotient)."""


class CapacityError(FrameError):
    """Not enough effective dimension to build the requested object."""


class GenerationError(FrameError, RuntimeError):
    """A randomized construction exhausted its redraw budget."""


class DegenerateFamilyWarning(UserWarning):
    """The generated family is Bessel but cannot be a frame."""
