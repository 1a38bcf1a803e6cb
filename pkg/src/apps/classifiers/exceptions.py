from core.exceptions import ConfigurationError, DataError, DimensionMismatchError


class UnknownClassifier(ConfigurationError):
    """
    Exception raised when a classifier name is not registered.
    """


class MissingClassError(DataError):
    """
    Exception raised when a class has no training instance.
    """


class FeatureCountMismatch(DimensionMismatchError):
    """
    Exception raised when predict gets a different number of columns than fit.
    """
