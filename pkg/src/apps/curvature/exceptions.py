import constants
from core.exceptions import DataError


class CollinearTripleError(DataError):
    """
    Exception raised by the circumradius oracle for collinear points.
    """

    message = constants.COLLINEAR_TRIPLE
