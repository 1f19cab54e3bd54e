"""Exception hierarchy and warning categories.

Errors are grouped into three families that the CLI maps onto exit codes:
configuration errors (exit 2), data errors (exit 3) and numerical
failures (exit 4).
"""


class FourvolError(Exception):
    """Base class for all library errors."""

    family = "internal"


class ConfigError(FourvolError):
    """Invalid parameters or request configuration."""

    family = "config"


class DataError(FourvolError):
    """Input data that cannot be used as an observation series."""

    family = "data"


class NumericalError(FourvolError):
    """A computation produced non-finite or otherwise unusable output."""

    family = "numerical"


# -- series ------------------------------------------------------------------

class NonMonotoneTimes(DataError):
    """Observation times are not strictly increasing."""


class NonFiniteValue(DataError):
    """A time or value is NaN or infinite."""


class TooFewPoints(DataError):
    """Fewer than two observations."""


class HorizonViolation(DataError):
    """An observation time lies outside [0, horizon]."""


class HorizonMismatch(DataError):
    """Two series that must share a horizon do not."""


# -- fourier -----------------------------------------------------------------

class ZeroFrequencyRequested(ConfigError):
    """The k = 0 coefficient cannot be recovered through the increment identity."""


class CutoffExceedsCoefficients(ConfigError):
    """Inversion cutoff larger than the available coefficient range."""


class InsufficientCoefficients(ConfigError):
    """Convolution demands coefficient indices beyond what was computed."""


# -- simulate ----------------------------------------------------------------

class InvalidCorrelation(ConfigError):
    """A correlation coefficient outside [-1, 1]."""


class CorrelationNotPSD(ConfigError):
    """The implied driver correlation matrix is not positive semidefinite."""


class NonPositiveInit(ConfigError):
    """Initial variance (or another strictly positive parameter) is not > 0."""


# -- policies ----------------------------------------------------------------

class TooFewObservations(ConfigError):
    """Not enough observations to resolve cutting frequencies."""


# -- cli / output ------------------------------------------------------------

class JoinMismatch(DataError):
    """A truth grid cannot be matched to the requested estimation times."""


# -- warnings ----------------------------------------------------------------

class KAboveNyquistWarning(UserWarning):
    """Coefficients requested above n/2 on the observation grid; they alias
    on equispaced grids and are permitted but flagged."""


class FrequencyClampWarning(UserWarning):
    """A cutting-frequency formula produced a value outside the usable range
    and was clamped."""
