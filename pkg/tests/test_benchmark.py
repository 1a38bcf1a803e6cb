import json
import logging
import time

import numpy as np
import pytest

from apps.benchmark.exceptions import EmptyReport, FoldCountOutOfRange
from apps.benchmark.schemas import CellResult, CVReport, GridSpec
from apps.benchmark.services import (
    BenchmarkService,
    make_folds,
    render_matrix,
    render_report,
    summarize_ama,
    summarize_tma,
)
from apps.classifiers.schemas import ClassifierKind
from apps.classifiers.services import CLASSIFIERS, register_classifier
from apps.dataset.services import PRESETS, DatasetService
from apps.normalize.schemas import NormalizerKind
from apps.ranking.exceptions import TopKOutOfRange
from apps.selectors.schemas import SelectorKind
from core.types import (
    BenchmarkDataset,
    ClassifierTag,
    NormalizerTag,
    OutputFormat,
    SelectionScope,
    SelectorTag,
)
from core.utils import logger


def grid(
    selectors=("cfs",),
    normalizers=("mm",),
    classifiers=("gnb",),
    k=2,
    n_folds=10,
    **kwargs,
) -> GridSpec:
    return GridSpec(
        selectors=[SelectorKind.parse(name) for name in selectors],
        k_features=k,
        normalizers=[NormalizerKind.parse(name) for name in normalizers],
        classifiers=[ClassifierKind.parse(name) for name in classifiers],
        n_folds=n_folds,
        **kwargs,
    )


def test_balanced_folds(blobs):
    folds = make_folds(blobs, 10, seed=0)
    for fold in folds:
        np.testing.assert_array_equal(np.bincount(blobs.labels[fold.test]), [5, 5])


def test_folds_partition_the_rows(btds_like):
    folds = make_folds(btds_like, 10, seed=3)
    tests = np.concatenate([fold.test for fold in folds])
    np.testing.assert_array_equal(np.sort(tests), np.arange(btds_like.n_instances))
    for fold in folds:
        assert len(np.intersect1d(fold.train, fold.test)) == 0
        assert len(fold.train) + len(fold.test) == btds_like.n_instances


def test_folds_are_stratified_within_one_instance(btds_like):
    folds = make_folds(btds_like, 10, seed=1)
    totals = np.bincount(btds_like.labels)
    for fold in folds:
        counts = np.bincount(btds_like.labels[fold.test], minlength=len(totals))
        assert np.all(np.abs(counts - totals / 10) < 1.0)


def test_rare_class_lands_in_every_fold(ccrfds_like):
    for fold in make_folds(ccrfds_like, 10, seed=0):
        assert 1 <= np.sum(ccrfds_like.labels[fold.test] == 1) <= 2


def test_folds_depend_only_on_the_seed(btds_like):
    first = [fold.test.tolist() for fold in make_folds(btds_like, 5, seed=9)]
    again = [fold.test.tolist() for fold in make_folds(btds_like, 5, seed=9)]
    other = [fold.test.tolist() for fold in make_folds(btds_like, 5, seed=10)]
    assert first == again
    assert first != other


def test_small_class_warns(btds_like, caplog):
    with caplog.at_level(logging.WARNING, logger=logger.name):
        make_folds(btds_like, 16, seed=0)
    assert "c4" in caplog.text


@pytest.mark.parametrize("n_folds", [1, 107])
def test_fold_count_out_of_range(btds_like, n_folds):
    with pytest.raises(FoldCountOutOfRange):
        make_folds(btds_like, n_folds)


def test_single_cell_on_blobs(blobs):
    report = BenchmarkService().run_grid(grid(k=2), blobs)
    assert len(report.cells) == 1
    cell = report.cell("cfs", "mm", "gnb")
    assert cell.mean_accuracy == 1.0
    assert cell.fold_accuracies == [1.0] * 10
    assert cell.class_recall == [1.0, 1.0]
    assert report.top_mean_accuracy["cfs"].mean_accuracy == 1.0
    assert report.metadata["majority_baseline"] == 0.5


def test_full_grid_shape(bccds_like):
    spec = grid(
        selectors=[tag.value for tag in SelectorTag],
        normalizers=["mm", "l1", "l2", "pn", "l1pn", "l2pn", "pnl1", "pnl2"],
        classifiers=["gnb", "knn", "dt", "lr"],
        k=7,
        n_folds=3,
        n_jobs=4,
    )
    report = BenchmarkService().run_grid(spec, bccds_like)
    assert len(report.cells) == 160
    assert report.n_errors == 0
    assert set(report.top_mean_accuracy) == {tag.value for tag in SelectorTag}
    assert set(report.ranking_reports) == {"cfs", "ig", "mi", "cst"}
    for cell in report.cells:
        assert len(cell.fold_accuracies) == 3
        assert all(0.0 <= accuracy <= 1.0 for accuracy in cell.fold_accuracies)
        assert cell.mean_accuracy == float(np.mean(cell.fold_accuracies))
    # cells come back in grid order
    assert [cell.key for cell in report.cells[:2]] == [("cfs", "mm", "gnb"), ("cfs", "mm", "knn")]


def test_global_scope_selects_the_same_columns_in_every_fold(btds_like):
    spec = grid(k=4, selection_scope=SelectionScope.GLOBAL)
    folds = make_folds(btds_like, 10, seed=0)
    selections = BenchmarkService().selections(spec.selectors[0], spec, btds_like, folds)
    assert len({tuple(selection.columns) for selection in selections}) == 1


def test_per_fold_scope_fits_on_training_rows(btds_like):
    service = BenchmarkService()
    spec = grid(k=4, selection_scope=SelectionScope.PER_FOLD)
    folds = make_folds(btds_like, 5, seed=0)
    selections = service.selections(spec.selectors[0], spec, btds_like, folds)
    for fold, selection in zip(folds, selections):
        ranking = service.selectors.score_features(
            spec.selectors[0], btds_like.take_rows(fold.train)
        )
        assert selection.columns == ranking.feature_ids[:4]
    report = service.run_grid(spec.model_copy(update={"n_folds": 5}), btds_like)
    assert report.metadata["selection_scope"] == "per_fold"


def test_normalizer_statistics_ignore_the_test_fold(btds_like):
    folds = make_folds(btds_like, 10, seed=0)
    fold = folds[0]
    everything = btds_like.features.copy()
    kind = NormalizerKind.parse("mm")
    fitted = BenchmarkService.fold_normalizer(kind, everything[fold.train], everything)

    everything[fold.test] *= 1000.0
    perturbed = BenchmarkService.fold_normalizer(kind, everything[fold.train], everything)
    np.testing.assert_array_equal(fitted.minmax.mins, perturbed.minmax.mins)
    np.testing.assert_array_equal(fitted.minmax.maxs, perturbed.minmax.maxs)


def test_a_failing_cell_does_not_stop_the_grid(blobs):
    class Broken:
        def fit(self, X, y, n_classes):
            raise RuntimeError("cannot train")

    register_classifier("broken", lambda kind: Broken())
    try:
        report = BenchmarkService().run_grid(grid(classifiers=("broken", "gnb")), blobs)
    finally:
        CLASSIFIERS._factories.pop("broken")
    broken, working = report.cells
    assert not broken.ok and "cannot train" in broken.error
    assert broken.fold_accuracies == [] and broken.mean_accuracy is None
    assert working.ok and working.mean_accuracy == 1.0
    assert report.n_errors == 1
    assert "ERR" in render_matrix(report)


def test_k_larger_than_the_feature_count(blobs):
    with pytest.raises(TopKOutOfRange):
        BenchmarkService().run_grid(grid(k=3), blobs)


def test_repeated_runs_are_byte_identical(btds_like):
    spec = grid(selectors=("cfs", "mi"), normalizers=("mm", "pnl2"), classifiers=("dt", "knn"), k=7)
    first = BenchmarkService().run_grid(spec, btds_like)
    second = BenchmarkService().run_grid(spec.model_copy(update={"n_jobs": 3}), btds_like)
    for fmt in OutputFormat:
        assert render_report(first, fmt) == render_report(second, fmt)


def test_wall_time_only_with_timings(blobs):
    report = BenchmarkService().run_grid(grid(), blobs)
    assert "wallTime" not in json.loads(render_report(report, OutputFormat.JSON))["cells"][0]
    assert "wallTime" in json.loads(render_report(report, OutputFormat.JSON, timings=True))["cells"][0]
    assert "wall_time" not in render_report(report, OutputFormat.CSV)
    header = render_report(report, OutputFormat.CSV).splitlines()[0]
    assert header.startswith("selector,normalizer,classifier,mean_accuracy,fold_1")
    assert "recall_left" in header and header.endswith("error")


def hand_report(*cells: tuple[str, str, str, float | None]) -> CVReport:
    return CVReport(
        dataset_id="hand",
        cells=[
            CellResult(
                selector=selector,
                normalizer=normalizer,
                classifier=classifier,
                fold_accuracies=[] if accuracy is None else [accuracy],
                mean_accuracy=accuracy,
                error="failed" if accuracy is None else None,
            )
            for selector, normalizer, classifier, accuracy in cells
        ],
    )


def test_tma_of_a_single_cell():
    tma = summarize_tma(hand_report(("cfs", "mm", "gnb", 0.8)))
    assert tma["cfs"].normalizer == "mm" and tma["cfs"].mean_accuracy == 0.8


def test_tma_picks_the_best_cell_per_selector():
    report = hand_report(
        ("cfs", "mm", "gnb", 0.8),
        ("cfs", "l2", "dt", 0.9),
        ("cfs", "pn", "knn", None),
        ("pca", "mm", "lr", 0.7),
    )
    tma = summarize_tma(report)
    assert (tma["cfs"].normalizer, tma["cfs"].classifier) == ("l2", "dt")
    assert tma["pca"].mean_accuracy == 0.7
    assert summarize_ama(report) == {"cfs": pytest.approx(0.85), "pca": 0.7}


def test_tma_ties_go_to_the_smallest_names():
    report = hand_report(
        ("cfs", "pn", "dt", 0.9), ("cfs", "mm", "lr", 0.9), ("cfs", "mm", "knn", 0.9)
    )
    tma = summarize_tma(report)
    assert (tma["cfs"].normalizer, tma["cfs"].classifier) == ("mm", "knn")


def test_tma_of_a_report_without_successes():
    with pytest.raises(EmptyReport):
        summarize_tma(hand_report(("cfs", "mm", "gnb", None)))


def real_grid(selector: str, k: int, classifiers=("gnb", "knn", "dt", "lr"), normalizers=("mm",)):
    return grid(selectors=(selector,), normalizers=normalizers, classifiers=classifiers, k=k, n_jobs=4)


@pytest.mark.acceptance
def test_btds_mutual_information_tree(data_file):
    ds = DatasetService().load(data_file("btds"), label_column="Class")
    report = BenchmarkService().run_grid(real_grid("mi", 7, classifiers=("dt",)), ds)
    assert abs(report.cell("mi", "mm", "dt").mean_accuracy - 0.9436) <= 0.08


@pytest.mark.acceptance
def test_btds_curvature_best_classifier(data_file):
    ds = DatasetService().load(data_file("btds"), label_column="Class")
    report = BenchmarkService().run_grid(real_grid("cfs", 7), ds)
    assert report.top_mean_accuracy["cfs"].mean_accuracy >= 0.90


@pytest.mark.acceptance
def test_ccrfds_curvature_best_cell_reports_recall(data_file):
    ds = DatasetService().load(data_file("ccrfds"), label_column="Biopsy")
    normalizers = ("mm", "l1", "l2", "pn", "l1pn", "l2pn", "pnl1", "pnl2")
    report = BenchmarkService().run_grid(real_grid("cfs", 7, normalizers=normalizers), ds)
    assert report.top_mean_accuracy["cfs"].mean_accuracy >= 0.93
    assert report.metadata["majority_baseline"] > 0.97
    assert all(len(cell.class_recall) == 2 for cell in report.cells if cell.ok)


@pytest.mark.acceptance
def test_bccds_curvature_best_cell(data_file):
    ds = DatasetService().load(data_file("bccds"), label_column="Classification")
    normalizers = ("mm", "l1", "l2", "pn", "l1pn", "l2pn", "pnl1", "pnl2")
    report = BenchmarkService().run_grid(real_grid("cfs", 7, normalizers=normalizers), ds)
    assert report.top_mean_accuracy["cfs"].mean_accuracy >= 0.70


@pytest.mark.acceptance
@pytest.mark.parametrize("dataset_id", list(BenchmarkDataset))
def test_full_grid_on_real_data(data_file, dataset_id):
    preset = PRESETS[dataset_id]
    ds = DatasetService().load(data_file(dataset_id.value), label_column=preset.label_column)
    spec = grid(
        selectors=[tag.value for tag in SelectorTag],
        normalizers=[tag.value for tag in NormalizerTag],
        classifiers=[tag.value for tag in ClassifierTag],
        k=preset.top_k,
        n_folds=10,
        n_jobs=4,
    )
    started = time.perf_counter()
    report = BenchmarkService().run_grid(spec, ds)
    assert time.perf_counter() - started < 300.0
    assert len(report.cells) == 160
    assert all(len(cell.fold_accuracies) == 10 for cell in report.cells if cell.ok)
    assert set(report.top_mean_accuracy) == {tag.value for tag in SelectorTag}
