import pandas as pd

from apps.benchmark.schemas import CVReport
from apps.ranking.schemas import RankedFeatures
from core.types import OutputFormat

FLOAT_FORMAT = "%.6f"


#  MARK: - Rankings
# *======================================== Rankings ========================================
def ranking_frame(ranked: RankedFeatures) -> pd.DataFrame:
    """
    One row per feature, best first, with its 1-based rank.
    """
    return pd.DataFrame(
        [
            {
                "rank": position,
                "feature_id": item.feature_id,
                "feature_name": item.feature_name,
                "weight": item.weight,
            }
            for position, item in enumerate(ranked.ordered, start=1)
        ],
        columns=["rank", "feature_id", "feature_name", "weight"],
    )


def render_ranking(ranked: RankedFeatures, fmt: OutputFormat = OutputFormat.CSV) -> str:
    """
    Render a ranking as CSV (also used for the matrix format) or JSON.
    """
    if fmt == OutputFormat.JSON:
        return ranked.model_dump_json(by_alias=True, indent=2) + "\n"
    return ranking_frame(ranked).to_csv(
        index=False, float_format="%.12g", lineterminator="\n"
    )


#  MARK: - Grid reports
# *======================================== Grid reports ========================================
def cells_frame(report: CVReport, timings: bool = False) -> pd.DataFrame:
    """
    One row per cell: names, mean and fold accuracies, per-class recall, error.
    """
    n_folds = report.metadata.get(
        "n_folds", max((len(cell.fold_accuracies) for cell in report.cells), default=0)
    )
    class_names = report.metadata.get("class_names", [])
    rows = []
    for cell in report.cells:
        row = {
            "selector": cell.selector,
            "normalizer": cell.normalizer,
            "classifier": cell.classifier,
            "mean_accuracy": cell.mean_accuracy,
        }
        for fold in range(n_folds):
            row[f"fold_{fold + 1}"] = (
                cell.fold_accuracies[fold] if fold < len(cell.fold_accuracies) else None
            )
        for cls, name in enumerate(class_names):
            row[f"recall_{name}"] = (
                cell.class_recall[cls] if cls < len(cell.class_recall) else None
            )
        if timings:
            row["wall_time"] = cell.wall_time
        row["error"] = cell.error
        rows.append(row)
    return pd.DataFrame(rows)


def render_matrix(report: CVReport) -> str:
    """
    Plain-text accuracy matrices: normalizers × classifiers for each selector,
    mean accuracies in percent, ERR for failed cells.
    """
    frame = pd.DataFrame(
        [
            {
                "selector": cell.selector,
                "normalizer": cell.normalizer.upper(),
                "classifier": cell.classifier.upper(),
                "value": f"{cell.mean_accuracy * 100:.2f}" if cell.ok else "ERR",
            }
            for cell in report.cells
        ]
    )
    lines = [f"Dataset: {report.dataset_id}"]
    if "majority_baseline" in report.metadata:
        lines.append(f"Majority baseline: {report.metadata['majority_baseline'] * 100:.2f}")
    for selector in pd.unique(frame["selector"]):
        block = frame[frame["selector"] == selector]
        matrix = block.pivot(index="normalizer", columns="classifier", values="value")
        matrix = matrix.reindex(
            index=pd.unique(block["normalizer"]), columns=pd.unique(block["classifier"])
        )
        matrix.index.name = None
        matrix.columns.name = None
        lines.append("")
        lines.append(f"[{selector.upper()}]")
        lines.append(matrix.to_string())
        tma = report.top_mean_accuracy.get(selector)
        if tma is not None:
            lines.append(
                f"TMA {tma.mean_accuracy * 100:.2f} "
                f"({tma.normalizer.upper()}, {tma.classifier.upper()})"
            )
        if selector in report.averaged_mean_accuracy:
            lines.append(f"AMA {report.averaged_mean_accuracy[selector] * 100:.2f}")
    return "\n".join(lines) + "\n"


def render_report(
    report: CVReport, fmt: OutputFormat = OutputFormat.CSV, timings: bool = False
) -> str:
    """
    Render a CV report.

    CSV has one row per cell; JSON nests cells, summaries, rankings and
    metadata; matrix is the text layout. Wall times only appear when `timings`
    is set, so repeated runs produce identical bytes.
    """
    if fmt == OutputFormat.MATRIX:
        return render_matrix(report)
    if fmt == OutputFormat.JSON:
        exclude = None if timings else {"cells": {"__all__": {"wall_time"}}}
        return report.model_dump_json(by_alias=True, indent=2, exclude=exclude) + "\n"
    return cells_frame(report, timings).to_csv(
        index=False, float_format=FLOAT_FORMAT, lineterminator="\n"
    )
