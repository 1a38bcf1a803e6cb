from pathlib import Path
from typing import Callable

import numpy as np
import pandas as pd
import pytest

from apps.dataset.schemas import Dataset
from config import settings


def synthetic_dataset(
    class_counts: list[int],
    n_features: int,
    informative: int = 3,
    separation: float = 3.0,
    seed: int = 0,
) -> Dataset:
    """
    Gaussian features where the first `informative` columns shift with the class.
    """
    rng = np.random.default_rng(seed)
    labels = np.repeat(np.arange(len(class_counts)), class_counts)
    rng.shuffle(labels)
    features = rng.normal(size=(len(labels), n_features))
    features[:, :informative] += separation * labels[:, None]
    # positive, differently scaled columns, like clinical measurements
    features = features * np.arange(1, n_features + 1) + 10.0 * n_features
    return Dataset(
        features=features,
        labels=labels,
        feature_names=[f"f{i}" for i in range(n_features)],
        class_names=[f"c{i}" for i in range(len(class_counts))],
    )


@pytest.fixture
def blobs() -> Dataset:
    """
    Two well separated blobs: centres (0, 0) and (10, 10), sigma 0.1, 50 points each.
    """
    rng = np.random.default_rng(7)
    features = np.vstack(
        [rng.normal(0.0, 0.1, size=(50, 2)), rng.normal(10.0, 0.1, size=(50, 2))]
    )
    return Dataset(
        features=features,
        labels=np.repeat([0, 1], 50),
        feature_names=["x", "y"],
        class_names=["left", "right"],
    )


@pytest.fixture
def ccrfds_like() -> Dataset:
    return synthetic_dataset([840, 18], n_features=9, seed=6)


@pytest.fixture
def bccds_like() -> Dataset:
    return synthetic_dataset([64, 52], n_features=9, seed=1)


@pytest.fixture
def btds_like() -> Dataset:
    return synthetic_dataset([21, 15, 18, 16, 14, 22], n_features=9, seed=2)


@pytest.fixture
def drdds_like() -> Dataset:
    return synthetic_dataset([540, 611], n_features=19, informative=5, seed=3)


@pytest.fixture
def write_file(tmp_path: Path) -> Callable[..., Path]:
    def write(text: str, name: str = "data.csv") -> Path:
        path = tmp_path / name
        path.write_text(text)
        return path

    return write


@pytest.fixture
def ccrfds_like_csv(tmp_path: Path) -> Path:
    """
    858 rows, 35 feature columns of which 26 contain '?', 18 positive labels.
    """
    rng = np.random.default_rng(4)
    frame = pd.DataFrame(
        rng.integers(0, 50, size=(858, 35)).astype(str),
        columns=[f"risk_{i}" for i in range(35)],
    )
    for column in range(9, 35):
        frame.iloc[rng.choice(858, size=5, replace=False), column] = "?"
    labels = np.zeros(858, dtype=int)
    labels[rng.choice(np.arange(1, 858), size=18, replace=False)] = 1
    frame["Biopsy"] = labels.astype(str)
    path = tmp_path / "ccrfds.csv"
    frame.to_csv(path, index=False)
    return path


@pytest.fixture
def bccds_like_csv(tmp_path: Path, bccds_like: Dataset) -> Path:
    frame = pd.DataFrame(bccds_like.features, columns=bccds_like.feature_names)
    frame["Classification"] = [bccds_like.class_names[i] for i in bccds_like.labels]
    path = tmp_path / "bccds.csv"
    frame.to_csv(path, index=False)
    return path


@pytest.fixture
def data_file() -> Callable[[str], Path]:
    """
    Canonical CSV of a real benchmark dataset; skips the test when it is absent.
    """

    def locate(dataset_id: str) -> Path:
        path = settings.dataset_path(dataset_id)
        if not path.is_file():
            pytest.skip(f"{path} not found; run `fetch {dataset_id}` first")
        return path

    return locate
