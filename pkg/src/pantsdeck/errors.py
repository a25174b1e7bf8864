"""Exception vocabulary shared by all pantsdeck modules.

Two broad families: input/validation problems (rejected before any geometry
is attempted) and computation problems (the geometry itself degenerates).
The CLI maps the former to exit code 1 and the latter to exit code 2.
"""


class PantsdeckError(Exception):
    """Base class for everything raised on purpose by this package."""


class InputError(PantsdeckError):
    """Bad arguments or malformed input data; nothing was computed."""


class ComputationError(PantsdeckError):
    """A geometric computation degenerated or left its supported regime."""


# -- validation-side errors --------------------------------------------------

class BadParameter(InputError):
    """A construction parameter is out of range (counts, signs, modes)."""


class OverflowGuard(InputError):
    """A cuff/side length exceeds the supported range for cosh/sinh work."""


class NonpositiveSide(InputError):
    """A pentagon side that must be positive is not."""


class NonpositiveCuff(InputError):
    """A cuff length that must be positive is not."""


class GraphMismatch(InputError):
    """Two marked surfaces do not share the same pants graph."""


class EmptyFamily(InputError):
    """A curve family that must be nonempty is empty."""


class BadWindow(InputError):
    """tail_start does not cut a valid tail out of the data window."""


class BadCutoff(InputError):
    """A prefix cutoff lies outside the data window."""


class UnsupportedWord(InputError):
    """A curve word refers to data the surface does not carry, or uses a
    kind outside the supported vocabulary."""


# -- computation-side errors -------------------------------------------------

class NotHyperbolic(ComputationError):
    """|trace| <= 2 + tol: the isometry has no positive translation length."""


class DegenerateQuadruple(ComputationError):
    """Two of the four boundary points of a cross-ratio coincide."""


class DeterminantDrift(ComputationError):
    """A composed matrix drifted too far from unit determinant to repair."""


class PunctureSeam(ComputationError):
    """A requested seam ends on a puncture; its length is infinite."""


class PunctureCrossing(ComputationError):
    """A crossing word was requested across a zero-length (puncture) curve."""


class WrapRangeExhausted(ComputationError):
    """The wrap search hit the edge of its range; the minimizer is
    unreliable and the caller should retry with a larger range."""
