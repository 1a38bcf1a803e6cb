import constants
from core.exceptions import (
    ConfigurationError,
    DataError,
    InsufficientDataError,
    ParseError,
)


class EmptyFileException(ParseError):
    """
    Exception raised when the input file holds no text at all.
    """

    message = constants.PARSE_FAILED


class RaggedRowException(ParseError):
    """
    Exception raised when a row has a different number of cells than the header.
    """


class UnknownLabelColumn(ConfigurationError):
    """
    Exception raised when the label column is neither a header name nor a valid index.
    """


class MissingLabelException(DataError):
    """
    Exception raised when a row has the missing marker in its label cell.
    """


class NonNumericCellException(DataError):
    """
    Exception raised when a surviving feature cell is not a finite number.
    """


class EmptyDatasetException(DataError):
    """
    Exception raised when attribute deletion removes every feature column.
    """

    message = constants.ALL_COLUMNS_DROPPED


class TooFewInstances(InsufficientDataError):
    """
    Exception raised when a dataset has fewer rows than curvature needs.
    """
