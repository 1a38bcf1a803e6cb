from typing import Any, Optional

import numpy as np
from pydantic import Field, field_validator

from apps.classifiers.schemas import ClassifierKind
from apps.normalize.schemas import NormalizerKind
from apps.ranking.schemas import RankedFeatures
from apps.selectors.schemas import SelectorKind
from core.types import SelectionScope
from core.utils import CamelCaseModel, FrozenModel, readonly_array


class GridSpec(FrozenModel):
    """
    The selector × normalizer × classifier grid to cross-validate.

    Attributes:
        dataset_id (str): Name of the dataset, echoed into the report.
        selectors (list[SelectorKind]): Selectors, in report order.
        k_features (int): Columns kept by every selector.
        normalizers (list[NormalizerKind]): Normalisers applied after selection.
        classifiers (list[ClassifierKind]): Classifiers trained on each fold.
        n_folds (int): Number of stratified folds.
        seed (int): Seed of the fold assignment.
        selection_scope (SelectionScope): Fit selectors once on every row
            (global) or on each training fold (per_fold).
        normalization_scope (SelectionScope): Fit normaliser statistics on each
            training fold (per_fold) or once on every row (global).
        n_jobs (int): Worker threads running cells.
    """

    dataset_id: str = "dataset"
    selectors: list[SelectorKind] = Field(min_length=1)
    k_features: int = Field(gt=0)
    normalizers: list[NormalizerKind] = Field(min_length=1)
    classifiers: list[ClassifierKind] = Field(min_length=1)
    n_folds: int = 10
    seed: int = 0
    selection_scope: SelectionScope = SelectionScope.GLOBAL
    normalization_scope: SelectionScope = SelectionScope.PER_FOLD
    n_jobs: int = Field(default=1, gt=0)

    @property
    def n_cells(self) -> int:
        return len(self.selectors) * len(self.normalizers) * len(self.classifiers)


class Fold(FrozenModel):
    """
    One train/test split of the row indices.
    """

    index: int
    train: np.ndarray
    test: np.ndarray

    @field_validator("train", "test", mode="before")
    def freeze(cls, value: Any) -> np.ndarray:
        """
        Store indices as a read-only integer vector.
        """
        return readonly_array(value, dtype=np.int64, ndim=1)


class CellResult(CamelCaseModel):
    """
    Cross-validated result of one (selector, normalizer, classifier) cell.

    Attributes:
        selector (str): Selector name.
        normalizer (str): Normaliser name.
        classifier (str): Classifier name.
        fold_accuracies (list[float]): Test accuracy of each fold, in fold order.
        mean_accuracy (float | None): Arithmetic mean of `fold_accuracies`.
        class_recall (list[float | None]): Recall of each class pooled over all
            test folds; None for a class with no test instance.
        wall_time (float): Seconds spent on the cell.
        error (str | None): Failure message; the other fields are then empty.
    """

    selector: str
    normalizer: str
    classifier: str
    fold_accuracies: list[float] = Field(default_factory=list)
    mean_accuracy: Optional[float] = None
    class_recall: list[Optional[float]] = Field(default_factory=list)
    wall_time: float = 0.0
    error: Optional[str] = None

    @property
    def key(self) -> tuple[str, str, str]:
        return self.selector, self.normalizer, self.classifier

    @property
    def ok(self) -> bool:
        return self.error is None and self.mean_accuracy is not None


class TopMeanAccuracy(CamelCaseModel):
    """
    Best cell of one selector.
    """

    selector: str
    normalizer: str
    classifier: str
    mean_accuracy: float


class CVReport(CamelCaseModel):
    """
    Everything a benchmark run produced.

    Attributes:
        dataset_id (str): Name of the dataset.
        cells (list[CellResult]): One entry per cell, in grid order
            (selector, then normalizer, then classifier).
        top_mean_accuracy (dict[str, TopMeanAccuracy]): Best cell per selector.
        averaged_mean_accuracy (dict[str, float]): Mean over the successful cells
            of each selector.
        ranking_reports (dict[str, RankedFeatures]): Feature ranking of every
            ranking selector on the full dataset.
        metadata (dict[str, Any]): Run parameters and dataset facts.
    """

    dataset_id: str
    cells: list[CellResult]
    top_mean_accuracy: dict[str, TopMeanAccuracy] = Field(default_factory=dict)
    averaged_mean_accuracy: dict[str, float] = Field(default_factory=dict)
    ranking_reports: dict[str, RankedFeatures] = Field(default_factory=dict)
    metadata: dict[str, Any] = Field(default_factory=dict)

    def cell(self, selector: str, normalizer: str, classifier: str) -> CellResult:
        """
        Look up a cell by its names.

        Raises:
            KeyError: If the grid had no such cell.
        """
        for cell in self.cells:
            if cell.key == (selector, normalizer, classifier):
                return cell
        raise KeyError((selector, normalizer, classifier))

    @property
    def n_errors(self) -> int:
        return sum(not cell.ok for cell in self.cells)

