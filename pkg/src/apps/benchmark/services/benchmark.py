import time
from typing import Any

import numpy as np

import constants
from apps.benchmark.exceptions import EmptyReport
from apps.benchmark.schemas import CellResult, CVReport, Fold, GridSpec, TopMeanAccuracy
from apps.benchmark.services.folds import make_folds
from apps.classifiers.schemas import ClassifierKind
from apps.classifiers.services import fit, predict
from apps.dataset.schemas import Dataset
from apps.normalize.schemas import NormalizerKind
from apps.normalize.services import FittedNormalizer
from apps.ranking.exceptions import TopKOutOfRange
from apps.ranking.schemas import RankedFeatures
from apps.selectors.schemas import FittedSelection, SelectorKind
from apps.selectors.services import SelectorService
from core.exceptions import CustomException
from core.types import SelectionScope, SelectorTag
from core.utils import logger, ordered_map

# Per fold: (selected training rows, selected test rows, selected rows of the whole dataset)
FoldMatrices = tuple[np.ndarray, np.ndarray, np.ndarray]


class BenchmarkService:
    """
    Cross-validates every (selector, normalizer, classifier) cell of a grid.

    Selection happens first (once on all rows or once per training fold),
    then the normaliser is fitted and applied, then the classifier is trained
    on the training fold and scored on the test fold. Cells are independent
    and can run on several threads; the report lists them in grid order.
    """

    def __init__(self, selectors: SelectorService | None = None):
        self.selectors = selectors or SelectorService()

    #  MARK: - Grid
    # *======================================== Grid ========================================
    def run_grid(self, spec: GridSpec, ds: Dataset) -> CVReport:
        """
        Run the whole grid on a dataset.

        Parameters:
            spec (GridSpec): The grid.
            ds (Dataset): Raw cleaned dataset; it is never modified.

        Returns:
            CVReport: One cell per grid entry, the TMA and AMA summaries,
                full-data rankings and run metadata.

        Raises:
            TopKOutOfRange: If k_features exceeds the number of features.
            FoldCountOutOfRange: If n_folds is not in 2..m.
        """
        if spec.k_features > ds.n_features:
            raise TopKOutOfRange(
                constants.TOP_K_OUT_OF_RANGE.format(
                    n_features=ds.n_features, k=spec.k_features
                )
            )
        folds = make_folds(ds, spec.n_folds, spec.seed)
        logger.info(
            f"Running {spec.n_cells} cell(s) on {spec.dataset_id}: {ds.n_instances} "
            f"rows, k={spec.k_features}, {spec.n_folds} folds, "
            f"selection {spec.selection_scope}, normalisation {spec.normalization_scope}"
        )

        matrices: dict[str, list[FoldMatrices] | str] = {}
        for selector in spec.selectors:
            try:
                matrices[selector.tag.value] = self.fold_matrices(selector, spec, ds, folds)
            except CustomException as exc:
                logger.warning(f"Selector {selector.label} failed: {exc.message}")
                matrices[selector.tag.value] = f"{type(exc).__name__}: {exc.message}"

        tasks = [
            (selector, normalizer, classifier)
            for selector in spec.selectors
            for normalizer in spec.normalizers
            for classifier in spec.classifiers
        ]
        cells = ordered_map(
            lambda task: self.run_cell(
                *task, matrices[task[0].tag.value], ds, folds, spec.normalization_scope
            ),
            tasks,
            spec.n_jobs,
        )

        report = CVReport(
            dataset_id=spec.dataset_id,
            cells=cells,
            ranking_reports=self.ranking_reports(spec, ds),
            metadata=self.metadata(spec, ds),
        )
        if any(cell.ok for cell in cells):
            report.top_mean_accuracy = summarize_tma(report)
            report.averaged_mean_accuracy = summarize_ama(report)
        return report

    def fold_matrices(
        self, selector: SelectorKind, spec: GridSpec, ds: Dataset, folds: list[Fold]
    ) -> list[FoldMatrices]:
        """
        Selected-feature matrices of every fold for one selector.

        With global selection scope the selector is fitted once on every row, so
        all folds share the same columns (or projection). With per-fold scope it
        is fitted on each training fold only.
        """
        out = []
        for fold, selection in zip(folds, self.selections(selector, spec, ds, folds)):
            reduced = self.selectors.transform(selection, ds.features)
            out.append((reduced[fold.train], reduced[fold.test], reduced))
        return out

    def selections(
        self, selector: SelectorKind, spec: GridSpec, ds: Dataset, folds: list[Fold]
    ) -> list[FittedSelection]:
        """
        The selection each fold uses (the same object repeated under global scope).
        """
        if spec.selection_scope == SelectionScope.GLOBAL:
            return [self.selectors.fit(selector, ds, spec.k_features)] * len(folds)
        return [
            self.selectors.fit(selector, ds.take_rows(fold.train), spec.k_features)
            for fold in folds
        ]

    #  MARK: - Cell
    # *======================================== Cell ========================================
    @staticmethod
    def fold_normalizer(
        kind: NormalizerKind,
        train: np.ndarray,
        everything: np.ndarray,
        scope: SelectionScope = SelectionScope.PER_FOLD,
    ) -> FittedNormalizer:
        """
        Fit a normaliser for one fold.

        Per-fold scope learns the statistics from the training rows only and
        clips test values into [0, 1]; global scope learns them from every row.
        """
        if scope == SelectionScope.GLOBAL:
            return FittedNormalizer(kind, clip=False).fit(everything)
        return FittedNormalizer(kind, clip=True).fit(train)

    @classmethod
    def run_cell(
        cls,
        selector: SelectorKind,
        normalizer: NormalizerKind,
        classifier: ClassifierKind,
        matrices: list[FoldMatrices] | str,
        ds: Dataset,
        folds: list[Fold],
        normalization_scope: SelectionScope = SelectionScope.PER_FOLD,
    ) -> CellResult:
        """
        Cross-validate one cell. Failures are recorded in the result, never raised.
        """
        result = CellResult(
            selector=selector.tag.value,
            normalizer=normalizer.tag.value,
            classifier=classifier.tag,
        )
        if isinstance(matrices, str):
            result.error = matrices
            return result

        started = time.perf_counter()
        try:
            accuracies = []
            hits = np.zeros(ds.n_classes, dtype=np.int64)
            for fold, (train, test, everything) in zip(folds, matrices):
                fitted = cls.fold_normalizer(normalizer, train, everything, normalization_scope)
                model = fit(
                    classifier,
                    fitted.transform(train).values,
                    ds.labels[fold.train],
                    n_classes=ds.n_classes,
                )
                truth = ds.labels[fold.test]
                predicted = predict(model, fitted.transform(test).values)
                correct = predicted == truth
                accuracies.append(float(correct.mean()))
                hits += np.bincount(truth[correct], minlength=ds.n_classes)
        except Exception as exc:
            message = exc.message if isinstance(exc, CustomException) else str(exc)
            logger.warning(f"Cell {'/'.join(result.key)} failed: {message}")
            result.error = f"{type(exc).__name__}: {message}"
            result.wall_time = time.perf_counter() - started
            return result

        totals = np.bincount(ds.labels, minlength=ds.n_classes)
        result.fold_accuracies = accuracies
        result.mean_accuracy = float(np.mean(accuracies))
        result.class_recall = [
            float(hit / total) if total else None for hit, total in zip(hits, totals)
        ]
        result.wall_time = time.perf_counter() - started
        logger.info(
            f"{'/'.join(result.key)}: mean accuracy {result.mean_accuracy:.4f} "
            f"({result.wall_time:.2f}s)"
        )
        return result

    #  MARK: - Report
    # *======================================== Report ========================================
    def ranking_reports(self, spec: GridSpec, ds: Dataset) -> dict[str, RankedFeatures]:
        """
        Full-data ranking of every ranking selector of the grid (all but PCA).
        """
        reports = {}
        for selector in spec.selectors:
            if selector.tag == SelectorTag.PCA:
                continue
            try:
                reports[selector.tag.value] = self.selectors.score_features(selector, ds)
            except CustomException as exc:
                logger.warning(f"Ranking with {selector.label} failed: {exc.message}")
        return reports

    @staticmethod
    def metadata(spec: GridSpec, ds: Dataset) -> dict[str, Any]:
        """
        Run parameters and dataset facts recorded with the report.
        """
        counts = np.bincount(ds.labels, minlength=ds.n_classes)
        return {
            "dataset_id": spec.dataset_id,
            "n_instances": ds.n_instances,
            "n_features": ds.n_features,
            "n_classes": ds.n_classes,
            "class_names": list(ds.class_names),
            "k_features": spec.k_features,
            "n_folds": spec.n_folds,
            "seed": spec.seed,
            "selection_scope": spec.selection_scope.value,
            "normalization_scope": spec.normalization_scope.value,
            "majority_baseline": float(counts.max() / ds.n_instances),
            "tma_tie_policy": constants.TMA_TIE_POLICY,
        }


def summarize_tma(report: CVReport) -> dict[str, TopMeanAccuracy]:
    """
    Top Mean Accuracy: the best successful cell of each selector.

    Ties go to the lexicographically smallest (normalizer, classifier) names.
    Selectors whose cells all failed are left out.

    Raises:
        EmptyReport: If no cell succeeded.
    """
    best: dict[str, CellResult] = {}
    for cell in report.cells:
        if not cell.ok:
            continue
        current = best.get(cell.selector)
        if current is None or _tma_key(cell) < _tma_key(current):
            best[cell.selector] = cell
    if not best:
        raise EmptyReport
    return {
        selector: TopMeanAccuracy(
            selector=selector,
            normalizer=cell.normalizer,
            classifier=cell.classifier,
            mean_accuracy=cell.mean_accuracy,
        )
        for selector, cell in best.items()
    }


def _tma_key(cell: CellResult) -> tuple[float, str, str]:
    return -cell.mean_accuracy, cell.normalizer, cell.classifier


def summarize_ama(report: CVReport) -> dict[str, float]:
    """
    Averaged Mean Accuracy: mean of the successful cell means of each selector.
    """
    means: dict[str, list[float]] = {}
    for cell in report.cells:
        if cell.ok:
            means.setdefault(cell.selector, []).append(cell.mean_accuracy)
    return {selector: float(np.mean(values)) for selector, values in means.items()}
