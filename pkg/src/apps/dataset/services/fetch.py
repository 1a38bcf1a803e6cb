import tempfile
from pathlib import Path

import pandas as pd
from scipy.io import arff

from apps.dataset.schemas import DatasetPreset
from config import settings
from core.types import BenchmarkDataset
from core.utils import HTTPClient, logger

UCI_BASE_URL = "https://archive.ics.uci.edu/ml/machine-learning-databases"

PRESETS: dict[BenchmarkDataset, DatasetPreset] = {
    BenchmarkDataset.CCRFDS: DatasetPreset(
        dataset_id=BenchmarkDataset.CCRFDS,
        title="Cervical Cancer (Risk Factors)",
        source_url="/00383/risk_factors_cervical_cancer.csv",
        source_format="csv",
        label_column="Biopsy",
        top_k=7,
    ),
    BenchmarkDataset.BCCDS: DatasetPreset(
        dataset_id=BenchmarkDataset.BCCDS,
        title="Breast Cancer Coimbra",
        source_url="/00451/dataR2.csv",
        source_format="csv",
        label_column="Classification",
        top_k=7,
    ),
    BenchmarkDataset.BTDS: DatasetPreset(
        dataset_id=BenchmarkDataset.BTDS,
        title="Breast Tissue",
        source_url="/00192/BreastTissue.xls",
        source_format="xls",
        label_column="Class",
        top_k=7,
        drop_columns=["Case #"],
    ),
    BenchmarkDataset.DRDDS: DatasetPreset(
        dataset_id=BenchmarkDataset.DRDDS,
        title="Diabetic Retinopathy Debrecen",
        source_url="/00329/messidor_features.arff",
        source_format="arff",
        label_column="Class",
        top_k=15,
    ),
}


class FetchService:
    """
    Downloads the benchmark datasets and converts them to canonical CSV.

    Nothing else in the toolkit downloads; every other command reads files the
    user already has.
    """

    def __init__(self, data_dir: Path | None = None, client: HTTPClient | None = None):
        self.data_dir = data_dir or settings.DATA_DIR
        self.client = client or HTTPClient(base_url=UCI_BASE_URL)

    def fetch(self, dataset_id: BenchmarkDataset) -> Path:
        """
        Download one dataset into `DATA_DIR/<id>.csv`.

        Parameters:
            dataset_id (BenchmarkDataset): Dataset to fetch.

        Returns:
            Path: The written CSV file.
        """
        preset = PRESETS[dataset_id]
        target = self.data_dir / f"{dataset_id.value}.csv"
        suffix = Path(preset.source_url).suffix
        with tempfile.TemporaryDirectory() as workdir:
            download = self.client.download(
                preset.source_url, Path(workdir) / f"source{suffix}"
            )
            logger.info(f"Downloaded {preset.title}")
            self.convert(preset, download).to_csv(
                target, index=False, lineterminator="\n"
            )
        logger.info(f"Wrote {target}")
        return target

    @staticmethod
    def convert(preset: DatasetPreset, source: Path) -> pd.DataFrame:
        """
        Read a downloaded file into a frame with the label column last.

        The CSV sources are kept as text so missing markers survive untouched.
        """
        if preset.source_format == "xls":
            frame = pd.read_excel(source, sheet_name="Data")
        elif preset.source_format == "arff":
            data, _ = arff.loadarff(source)
            frame = pd.DataFrame(data)
            for column in frame.columns:
                if frame[column].dtype == object:
                    frame[column] = frame[column].str.decode("utf-8")
        else:
            frame = pd.read_csv(source, dtype=str, keep_default_na=False)
        frame = frame.drop(columns=preset.drop_columns)
        label = frame.pop(preset.label_column)
        frame[preset.label_column] = label
        return frame
