from core.exceptions import ConfigurationError


class UnknownNormalizer(ConfigurationError):
    """
    Exception raised when a normaliser name is not one of the eight supported ones.
    """
