from typing import Any

import numpy as np
from pydantic import Field, field_validator, model_validator

import constants
from apps.dataset.exceptions import RaggedRowException, TooFewInstances
from core.exceptions import NonFiniteValuesError
from core.utils import CamelCaseModel, FrozenModel, readonly_array


class RawTable(FrozenModel):
    """
    Delimiter-separated text as read from disk, before any cleaning.

    Attributes:
        rows (list[list[str]]): Cells preserved verbatim.
        column_names (list[str]): Header names (generated when the file has none).
        missing_marker (str): Token that marks a missing cell.
        label_index (int): Position of the class-label column.
        source (str): Where the table came from.
    """

    rows: list[list[str]]
    column_names: list[str]
    missing_marker: str = "?"
    label_index: int
    source: str = ""

    @model_validator(mode="after")
    def check_arity(self) -> "RawTable":
        """
        Every row must have exactly one cell per column.
        """
        width = len(self.column_names)
        for position, row in enumerate(self.rows):
            if len(row) != width:
                raise RaggedRowException(
                    constants.RAGGED_ROW.format(
                        row=position + 1, actual=len(row), expected=width
                    )
                )
        if not 0 <= self.label_index < width:
            raise ValueError(f"label_index {self.label_index} outside 0..{width - 1}")
        return self

    @property
    def label_name(self) -> str:
        return self.column_names[self.label_index]

    @property
    def feature_indices(self) -> list[int]:
        return [i for i in range(len(self.column_names)) if i != self.label_index]


class Dataset(FrozenModel):
    """
    A cleaned, immutable numeric table.

    Attributes:
        features (np.ndarray): m×n' matrix of finite floats (read-only).
        labels (np.ndarray): Length-m vector of contiguous class ids from 0.
        feature_names (list[str]): One name per feature column.
        class_names (list[str]): Class name of each id.
        label_name (str): Header of the label column.
        dropped_columns (list[str]): Feature columns removed by attribute deletion.
        provenance (str): Source file and the cleaning applied.
    """

    features: np.ndarray
    labels: np.ndarray
    feature_names: list[str]
    class_names: list[str]
    label_name: str = "class"
    dropped_columns: list[str] = Field(default_factory=list)
    provenance: str = ""

    @field_validator("features", mode="before")
    def freeze_features(cls, value: Any) -> np.ndarray:
        """
        Store features as a read-only float matrix with finite entries.
        """
        array = readonly_array(value, dtype=float, ndim=2)
        if not np.isfinite(array).all():
            raise NonFiniteValuesError
        return array

    @field_validator("labels", mode="before")
    def freeze_labels(cls, value: Any) -> np.ndarray:
        """
        Store labels as a read-only integer vector.
        """
        return readonly_array(value, dtype=np.int64, ndim=1)

    @model_validator(mode="after")
    def check_shape(self) -> "Dataset":
        """
        Enforce the table invariants; too few rows is a data error, the rest are
        programming errors.
        """
        m, n = self.features.shape
        if m < constants.MIN_PLANE_POINTS:
            raise TooFewInstances(
                constants.INSUFFICIENT_DATA.format(
                    minimum=constants.MIN_PLANE_POINTS, actual=m
                )
            )
        if n < 1 or len(self.feature_names) != n:
            raise ValueError("feature_names must name every one of n' >= 1 columns")
        if len(self.labels) != m:
            raise ValueError("labels must have one entry per row")
        if self.labels.min() < 0 or self.labels.max() >= len(self.class_names):
            raise ValueError("labels must lie in [0, number of classes)")
        return self

    @property
    def n_instances(self) -> int:
        return int(self.features.shape[0])

    @property
    def n_features(self) -> int:
        return int(self.features.shape[1])

    @property
    def n_classes(self) -> int:
        return len(self.class_names)

    def with_columns(self, column_ids: list[int], note: str) -> "Dataset":
        """
        Restrict to the given columns, in the given order.

        Args:
            column_ids (list[int]): Feature column indices to keep.
            note (str): Appended to the provenance.

        Returns:
            Dataset: A new dataset sharing the labels and class names.
        """
        return self.model_copy(
            update={
                "features": readonly_array(self.features[:, column_ids]),
                "feature_names": [self.feature_names[i] for i in column_ids],
                "provenance": f"{self.provenance}; {note}" if self.provenance else note,
            }
        )

    def with_features(
        self, features: np.ndarray, feature_names: list[str], note: str
    ) -> "Dataset":
        """
        Replace the feature matrix (e.g. by a projection) keeping labels and classes.
        """
        return Dataset(
            features=features,
            labels=self.labels,
            feature_names=feature_names,
            class_names=self.class_names,
            label_name=self.label_name,
            dropped_columns=self.dropped_columns,
            provenance=f"{self.provenance}; {note}" if self.provenance else note,
        )

    def take_rows(self, indices: np.ndarray) -> "Dataset":
        """
        Restrict to a subset of rows in the given order, keeping every class name.
        """
        return Dataset(
            features=self.features[indices],
            labels=self.labels[indices],
            feature_names=self.feature_names,
            class_names=self.class_names,
            label_name=self.label_name,
            dropped_columns=self.dropped_columns,
            provenance=self.provenance,
        )


class DatasetSummary(CamelCaseModel):
    """
    Dataset structure as reported for each benchmark dataset.

    Attributes:
        n_instances (int): Number of rows.
        n_features (int): Number of surviving feature columns.
        n_classes (int): Number of distinct class labels.
        class_counts (list[int]): Instances per class id.
        class_percentages (list[float]): Share of each class in percent.
        class_names (list[str]): Name of each class id.
        n_dropped_columns (int): Feature columns removed by attribute deletion.
        dropped_columns (list[str]): Their names.
        provenance (str): Source file and cleaning applied.
    """

    n_instances: int
    n_features: int
    n_classes: int
    class_counts: list[int]
    class_percentages: list[float]
    class_names: list[str]
    n_dropped_columns: int
    dropped_columns: list[str]
    provenance: str
