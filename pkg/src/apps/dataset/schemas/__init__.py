from apps.dataset.schemas.dataset import Dataset, DatasetSummary, RawTable
from apps.dataset.schemas.preset import DatasetPreset

__all__ = ["Dataset", "DatasetPreset", "DatasetSummary", "RawTable"]
