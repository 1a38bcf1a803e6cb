import logging

from core.utils.http_client import HTTPClient
from core.utils.parallel import ordered_map
from core.utils.schema import CamelCaseModel, FrozenModel, readonly_array

logger = logging.getLogger("curvsel")

__all__ = [
    "HTTPClient",
    "logger",
    "ordered_map",
    "CamelCaseModel",
    "FrozenModel",
    "readonly_array",
]
