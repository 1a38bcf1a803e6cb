from typing import Optional

from httpx import Response

import constants
from core.types import ExitCode


class CustomException(Exception):
    """
    Base custom exception class for raising necessary exceptions in the app.

    Attributes:
        exit_code (ExitCode): The process exit code associated with the exception.
        message (str): The message associated with the exception.
    """

    exit_code = ExitCode.FAILURE
    message = constants.SOMETHING_WENT_WRONG

    def __init__(self, message: Optional[str] = None):
        """
        Initialize the custom exception with an optional message.

        Args:
            message (Optional[str]): The message to be associated with the exception.
        """
        if message:
            self.message = message
        super().__init__(self.message)


class ConfigurationError(CustomException):
    """
    Custom exception for invalid parameters, flags or config file values.
    """

    exit_code = ExitCode.CONFIGURATION
    message = constants.INVALID_CONFIGURATION


class ParseError(CustomException):
    """
    Custom exception for input that is not valid delimiter-separated text.
    """

    exit_code = ExitCode.PARSE
    message = constants.PARSE_FAILED


class DataError(CustomException):
    """
    Custom exception for parsed input whose content cannot be used.
    """

    exit_code = ExitCode.DATA
    message = constants.INVALID_DATA


class EmptySelectionError(CustomException):
    """
    Custom exception signalling that a threshold selected no feature.
    """

    exit_code = ExitCode.EMPTY_SELECTION


class InsufficientDataError(DataError):
    """
    Custom exception for inputs with fewer instances than an operation needs.
    """


class NonFiniteValuesError(DataError):
    """
    Custom exception for matrices holding NaN or infinite entries.
    """

    message = constants.NON_FINITE_VALUES


class DimensionMismatchError(ConfigurationError):
    """
    Custom exception for a matrix whose column count does not match a fitted model.
    """


class UnexpectedResponse(Exception):
    """
    Exception raised for an unexpected HTTP response.

    Attributes:
        response (Response): The unexpected HTTP response.
    """

    def __init__(self, response: Response):
        """
        Initialize the exception with the unexpected HTTP response.

        Args:
            response (Response): The unexpected HTTP response.
        """
        self.response = response
        super().__init__(
            constants.DOWNLOAD_FAILED.format(
                url=response.request.url, status=response.status_code
            )
        )
