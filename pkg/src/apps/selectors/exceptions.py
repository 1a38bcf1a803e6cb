from core.exceptions import ConfigurationError, DimensionMismatchError


class UnknownSelector(ConfigurationError):
    """
    Exception raised when a selector name is not cfs, pca, ig, mi or cst.
    """


class InvalidComponents(ConfigurationError):
    """
    Exception raised when the number of principal components is out of range.
    """


class PcaDimensionMismatch(DimensionMismatchError):
    """
    Exception raised when a matrix does not have the columns a PCA model was fitted on.
    """


class NotARanking(ConfigurationError):
    """
    Exception raised when a ranking is requested from a projection selector (PCA).
    """
