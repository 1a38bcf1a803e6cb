from core.types import BenchmarkDataset
from core.utils import CamelCaseModel


class DatasetPreset(CamelCaseModel):
    """
    Download and benchmark parameters of one public dataset.

    Attributes:
        dataset_id (BenchmarkDataset): Short identifier.
        title (str): Human-readable name.
        source_url (str): Location of the original file.
        source_format (str): One of `csv`, `xls`, `arff`.
        label_column (str): Class-label header after conversion.
        top_k (int): Number of features kept in the benchmark grid.
        drop_columns (list[str]): Identifier columns removed during conversion.
    """

    dataset_id: BenchmarkDataset
    title: str
    source_url: str
    source_format: str
    label_column: str
    top_k: int
    drop_columns: list[str] = []
