import logging
from pathlib import Path
from typing import Annotated, Optional

import typer
from rich.logging import RichHandler
from rich.panel import Panel

from apps.benchmark.schemas import GridSpec
from apps.benchmark.services import BenchmarkService, render_ranking, render_report
from apps.classifiers.schemas import ClassifierKind
from apps.dataset.schemas import Dataset
from apps.dataset.services import PRESETS, DatasetService, FetchService
from apps.handlers import err_console, handle_errors
from apps.normalize.schemas import NormalizerKind
from apps.ranking.services import CfsService
from apps.selectors.schemas import SelectorKind
from apps.selectors.services import SelectorService
from config import settings
from core.exceptions import ConfigurationError
from core.run_config import RunConfig
from core.types import BenchmarkDataset, ExitCode, OutputFormat, SelectionScope

HELP = f"""
Curvature-based feature selection for tabular data: rank features, select
columns, and cross-validate selector x normalizer x classifier grids.

Exit codes: {ExitCode.SUCCESS} success, {ExitCode.FAILURE} unexpected failure,
{ExitCode.CONFIGURATION} invalid flags or config, {ExitCode.PARSE} unparseable input,
{ExitCode.DATA} unusable data, {ExitCode.EMPTY_SELECTION} empty threshold selection.
"""

cli = typer.Typer(pretty_exceptions_show_locals=False, help=HELP, rich_markup_mode=None)

DataOption = Annotated[Optional[Path], typer.Option("--data", help="Dataset CSV file.")]
DatasetOption = Annotated[
    Optional[BenchmarkDataset],
    typer.Option("--dataset", help="Benchmark preset; defaults --data and --top-k."),
]
LabelOption = Annotated[
    Optional[str],
    typer.Option("--label-col", help="Label header or position (default: last column)."),
]
MissingOption = Annotated[
    Optional[str], typer.Option("--missing", help="Missing-value marker.")
]
DelimiterOption = Annotated[
    Optional[str], typer.Option("--delimiter", help="Cell separator.")
]
SelectorOption = Annotated[
    Optional[str], typer.Option("--selector", help="cfs, pca, ig, mi or cst.")
]
TopKOption = Annotated[Optional[int], typer.Option("--top-k", help="Features to keep.")]
ThresholdOption = Annotated[
    Optional[float],
    typer.Option("--threshold", help="Keep features whose weight exceeds this."),
]
SeedOption = Annotated[Optional[int], typer.Option("--seed", help="Random seed.")]
BinsOption = Annotated[
    Optional[int], typer.Option("--bins", help="Bins for IG, MI and CST.")
]
SortPlanesOption = Annotated[
    Optional[bool],
    typer.Option(
        "--sort-planes/--no-sort-planes", help="Sort CFS planes by feature value."
    ),
]
NJobsOption = Annotated[Optional[int], typer.Option("--n-jobs", help="Worker threads.")]
OutOption = Annotated[
    Optional[Path], typer.Option("--out", help="Output file (default: stdout).")
]
FormatOption = Annotated[
    Optional[OutputFormat], typer.Option("--format", help="csv, json or matrix.")
]
ConfigOption = Annotated[
    Optional[Path],
    typer.Option("--config", help="File of `key = value` lines; flags override it."),
]


@cli.callback()
def main(
    verbose: Annotated[
        bool, typer.Option("--verbose", "-v", help="Log at DEBUG level.")
    ] = False,
) -> None:
    """
    Install the rich log handler on stderr.
    """
    logging.basicConfig(
        level="DEBUG" if verbose else settings.LOG_LEVEL,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


#  MARK: - Helpers
# *======================================== Helpers ========================================
def load_dataset(config: RunConfig) -> Dataset:
    """
    Load and clean the dataset the configuration points at.

    Raises:
        ConfigurationError: If neither --data nor --dataset is given.
    """
    path = config.data
    if path is None and config.dataset_id is not None:
        path = settings.dataset_path(config.dataset_id.value)
    if path is None:
        raise ConfigurationError("Give a dataset with --data or --dataset.")
    service = DatasetService(missing_marker=config.missing, delimiter=config.delimiter)
    return service.load(path, label_column=config.label_col)


def dataset_name(config: RunConfig) -> str:
    if config.dataset_id is not None:
        return config.dataset_id.value
    return config.data.stem if config.data else "dataset"


def top_k(config: RunConfig) -> Optional[int]:
    """
    --top-k, else the Top-K of the dataset preset.
    """
    if config.top_k is not None:
        return config.top_k
    if config.dataset_id is not None:
        return PRESETS[config.dataset_id].top_k
    return None


def selector_service(config: RunConfig) -> SelectorService:
    cfs = CfsService(sort_planes=config.sort_planes, n_jobs=config.n_jobs)
    return SelectorService(cfs=cfs, n_jobs=config.n_jobs)


def write_output(text: str, out: Optional[Path]) -> None:
    """
    Write to `out`, or to stdout when no file is given.
    """
    if out is None:
        typer.echo(text, nl=False)
        return
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(text)
    err_console.print(Panel.fit(f"[bold green]Wrote {out}[/bold green]"))


#  MARK: - Commands
# *======================================== Commands ========================================
@cli.command(help="Rank features by mean curvature (or another selector's score).")
def rank(
    data: DataOption = None,
    dataset: DatasetOption = None,
    label_col: LabelOption = None,
    missing: MissingOption = None,
    delimiter: DelimiterOption = None,
    selector: SelectorOption = None,
    bins: BinsOption = None,
    sort_planes: SortPlanesOption = None,
    n_jobs: NJobsOption = None,
    out: OutOption = None,
    fmt: FormatOption = None,
    config: ConfigOption = None,
) -> None:
    """
    Write the ranking of every feature, best first, as CSV or JSON.
    """
    with handle_errors():
        run = RunConfig.merge(
            "rank",
            dict(
                data=data,
                dataset_id=dataset,
                label_col=label_col,
                missing=missing,
                delimiter=delimiter,
                selector=selector,
                bin_count=bins,
                sort_planes=sort_planes,
                n_jobs=n_jobs,
                out=out,
                format=fmt,
            ),
            config,
        )
        ds = load_dataset(run)
        kind = SelectorKind.parse(run.selector, bin_count=run.bin_count)
        ranked = selector_service(run).score_features(kind, ds)
        write_output(render_ranking(ranked, run.format), run.out)


@cli.command(help="Write the dataset reduced to the selected feature columns.")
def select(
    data: DataOption = None,
    dataset: DatasetOption = None,
    label_col: LabelOption = None,
    missing: MissingOption = None,
    delimiter: DelimiterOption = None,
    selector: SelectorOption = None,
    k: TopKOption = None,
    threshold: ThresholdOption = None,
    bins: BinsOption = None,
    sort_planes: SortPlanesOption = None,
    n_jobs: NJobsOption = None,
    out: OutOption = None,
    config: ConfigOption = None,
) -> None:
    """
    Keep the top-k columns, or the columns whose weight exceeds a threshold.
    """
    with handle_errors():
        run = RunConfig.merge(
            "select",
            dict(
                data=data,
                dataset_id=dataset,
                label_col=label_col,
                missing=missing,
                delimiter=delimiter,
                selector=selector,
                top_k=k,
                threshold=threshold,
                bin_count=bins,
                sort_planes=sort_planes,
                n_jobs=n_jobs,
                out=out,
            ),
            config,
        )
        ds = load_dataset(run)
        kind = SelectorKind.parse(run.selector, bin_count=run.bin_count)
        service = selector_service(run)
        if run.threshold is not None:
            ranked = service.score_features(kind, ds)
            reduced = CfsService.select_by_threshold(ds, ranked, run.threshold)
        else:
            count = top_k(run)
            if count is None:
                raise ConfigurationError("Give --top-k or --threshold.")
            reduced = service.select_with(kind, ds, count)
        write_output(DatasetService.to_csv(reduced), run.out)


@cli.command(help="Cross-validate the selector x normalizer x classifier grid.")
def bench(
    data: DataOption = None,
    dataset: DatasetOption = None,
    label_col: LabelOption = None,
    missing: MissingOption = None,
    delimiter: DelimiterOption = None,
    selectors: Annotated[
        Optional[str], typer.Option("--selectors", "--selector", help="Comma-separated selectors.")
    ] = None,
    k: TopKOption = None,
    normalizers: Annotated[
        Optional[str],
        typer.Option("--normalizers", help="Comma-separated normalizers."),
    ] = None,
    classifiers: Annotated[
        Optional[str],
        typer.Option("--classifiers", help="Comma-separated classifiers."),
    ] = None,
    folds: Annotated[Optional[int], typer.Option("--folds", help="CV folds.")] = None,
    seed: SeedOption = None,
    scope: Annotated[
        Optional[SelectionScope],
        typer.Option("--scope", help="Fit selectors on all rows or per training fold."),
    ] = None,
    normalization_scope: Annotated[
        Optional[SelectionScope],
        typer.Option("--norm-scope", help="Where normaliser statistics come from."),
    ] = None,
    bins: BinsOption = None,
    sort_planes: SortPlanesOption = None,
    n_jobs: NJobsOption = None,
    timings: Annotated[
        Optional[bool],
        typer.Option("--timings/--no-timings", help="Include per-cell wall times."),
    ] = None,
    out: OutOption = None,
    fmt: FormatOption = None,
    config: ConfigOption = None,
) -> None:
    """
    Run the grid; with --out, a JSON report is written next to CSV or matrix output.
    Cell failures are recorded in the report and do not change the exit code.
    """
    with handle_errors():
        run = RunConfig.merge(
            "bench",
            dict(
                data=data,
                dataset_id=dataset,
                label_col=label_col,
                missing=missing,
                delimiter=delimiter,
                selectors=selectors,
                top_k=k,
                normalizers=normalizers,
                classifiers=classifiers,
                folds=folds,
                seed=seed,
                scope=scope,
                normalization_scope=normalization_scope,
                bin_count=bins,
                sort_planes=sort_planes,
                n_jobs=n_jobs,
                timings=timings,
                out=out,
                format=fmt,
            ),
            config,
        )
        ds = load_dataset(run)
        count = top_k(run)
        if count is None:
            raise ConfigurationError("Give --top-k (or a --dataset preset).")
        spec = GridSpec(
            dataset_id=dataset_name(run),
            selectors=[SelectorKind.parse(name, run.bin_count) for name in run.selectors],
            k_features=count,
            normalizers=[
                NormalizerKind.parse(name, run.pn_alpha) for name in run.normalizers
            ],
            classifiers=[
                ClassifierKind.parse(name, seed=run.seed) for name in run.classifiers
            ],
            n_folds=run.folds,
            seed=run.seed,
            selection_scope=run.scope,
            normalization_scope=run.normalization_scope,
            n_jobs=run.n_jobs,
        )
        report = BenchmarkService(selector_service(run)).run_grid(spec, ds)
        report.metadata["config"] = run.echo()

        write_output(render_report(report, run.format, run.timings), run.out)
        if run.out is not None and run.format != OutputFormat.JSON:
            write_output(
                render_report(report, OutputFormat.JSON, run.timings),
                run.out.with_suffix(".json"),
            )
        if report.n_errors:
            err_console.print(
                Panel.fit(
                    f"[bold yellow]{report.n_errors} of {len(report.cells)} cell(s) "
                    "failed; see the error column[/bold yellow]"
                )
            )


@cli.command(help="Describe the dataset structure and class balance as JSON.")
def summary(
    data: DataOption = None,
    dataset: DatasetOption = None,
    label_col: LabelOption = None,
    missing: MissingOption = None,
    delimiter: DelimiterOption = None,
    out: OutOption = None,
    config: ConfigOption = None,
) -> None:
    """
    Write instance, feature and class counts, class percentages and dropped columns.
    """
    with handle_errors():
        run = RunConfig.merge(
            "summary",
            dict(
                data=data,
                dataset_id=dataset,
                label_col=label_col,
                missing=missing,
                delimiter=delimiter,
                out=out,
            ),
            config,
        )
        result = DatasetService.summarize(load_dataset(run))
        write_output(result.model_dump_json(by_alias=True, indent=2) + "\n", run.out)


@cli.command(help="Measure how CFS weights move when the rows are shuffled.")
def stability(
    data: DataOption = None,
    dataset: DatasetOption = None,
    label_col: LabelOption = None,
    missing: MissingOption = None,
    delimiter: DelimiterOption = None,
    permutations: Annotated[
        Optional[int], typer.Option("--permutations", help="Row shuffles.")
    ] = None,
    seed: SeedOption = None,
    sort_planes: SortPlanesOption = None,
    n_jobs: NJobsOption = None,
    out: OutOption = None,
    config: ConfigOption = None,
) -> None:
    """
    Write Kendall tau between the reference weights and those of each shuffle.
    """
    with handle_errors():
        run = RunConfig.merge(
            "stability",
            dict(
                data=data,
                dataset_id=dataset,
                label_col=label_col,
                missing=missing,
                delimiter=delimiter,
                n_permutations=permutations,
                seed=seed,
                sort_planes=sort_planes,
                n_jobs=n_jobs,
                out=out,
            ),
            config,
        )
        cfs = CfsService(sort_planes=run.sort_planes, n_jobs=run.n_jobs)
        result = cfs.rank_stability(
            load_dataset(run), n_permutations=run.n_permutations, seed=run.seed
        )
        write_output(result.model_dump_json(by_alias=True, indent=2) + "\n", run.out)


@cli.command(help="Download the benchmark datasets from UCI into canonical CSV.")
def fetch(
    datasets: Annotated[
        Optional[list[BenchmarkDataset]], typer.Argument(help="Datasets (default: all).")
    ] = None,
    data_dir: Annotated[
        Optional[Path], typer.Option("--data-dir", help="Target directory.")
    ] = None,
) -> None:
    """
    Fetch and convert datasets. This is the only command that downloads.
    """
    with handle_errors():
        service = FetchService(data_dir=data_dir)
        for dataset_id in datasets or list(BenchmarkDataset):
            target = service.fetch(dataset_id)
            err_console.print(
                Panel.fit(
                    f"[bold green]{PRESETS[dataset_id].title}: {target}[/bold green]"
                )
            )
