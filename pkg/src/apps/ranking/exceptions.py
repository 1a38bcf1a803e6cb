import constants
from core.exceptions import (
    ConfigurationError,
    DataError,
    EmptySelectionError,
    InsufficientDataError,
)


class PlaneTooShort(InsufficientDataError):
    """
    Exception raised when a plane has fewer than three points.
    """


class NotPreNormalized(DataError):
    """
    Exception raised when planes are built from values outside [0, 1].
    """

    message = constants.NOT_PRE_NORMALIZED


class TopKOutOfRange(ConfigurationError):
    """
    Exception raised when k is not between 1 and the number of features.
    """


class InvalidThreshold(ConfigurationError):
    """
    Exception raised for a negative selection threshold.
    """


class NothingSelected(EmptySelectionError):
    """
    Exception raised when no feature weight exceeds the threshold.
    """
