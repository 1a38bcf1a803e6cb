import constants
from core.exceptions import ConfigurationError, DataError


class FoldCountOutOfRange(ConfigurationError):
    """
    Exception raised when n_folds is below 2 or above the number of instances.
    """


class EmptyReport(DataError):
    """
    Exception raised when a report has no successful cell to summarise.
    """

    message = constants.EMPTY_REPORT
