"""Typed errors shared across the toolkit.

Every error the library raises deliberately is a ValueError subclass, so
callers that do not care about the fine distinction can catch ValueError.
"""


class MissingHeader(ValueError):
    """CSV input does not start with the expected `date,speed_mps` header."""


class NonUniformSpacing(ValueError):
    """Timestamps have a gap or duplicate after sorting."""


class NegativeSpeed(ValueError):
    """A wind-speed sample is negative."""


class UnparsableRow(ValueError):
    """A CSV record could not be parsed; message carries the line number."""


class MonthAbsent(ValueError):
    """The requested calendar month has no samples in the series."""


class TooShort(ValueError):
    """Sequence shorter than the operation's minimum length."""


class Empty(ValueError):
    """Operation received no data."""


class EvenWindow(ValueError):
    """Median window must be a positive odd integer."""


class WindowTooLarge(ValueError):
    """Median window exceeds twice the signal length."""


class UnsupportedFamilyOrLength(ValueError):
    """No filter table entry for the requested wavelet family and tap count."""


class NonConvergent(ValueError):
    """Cascade refinement failed to meet descriptor tolerances."""


class ScaleOutOfRange(ValueError):
    """A CWT scale is below 1 or above half the signal length."""


class SignalTooShort(ValueError):
    """Signal shorter than the transform's minimum length."""


class OracleSizeExceeded(ValueError):
    """Direct-definition oracle refused an input above its size guard."""


class MalformedSpectrum(ValueError):
    """STSpectrum row/column counts are inconsistent."""
