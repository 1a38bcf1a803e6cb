from apps.dataset.services.dataset import DatasetService
from apps.dataset.services.fetch import PRESETS, FetchService

__all__ = ["DatasetService", "FetchService", "PRESETS"]
