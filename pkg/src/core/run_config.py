from pathlib import Path
from typing import Any, Literal, Optional

from dotenv import dotenv_values
from pydantic import Field, ValidationError, field_validator, model_validator

import constants
from config import settings
from core.exceptions import ConfigurationError
from core.types import (
    BenchmarkDataset,
    ClassifierTag,
    NormalizerTag,
    OutputFormat,
    SelectionScope,
    SelectorTag,
)
from core.utils import CamelCaseModel

Command = Literal["rank", "select", "bench", "summary", "stability"]

# command-line flag names accepted as config keys
FLAG_ALIASES = {
    "dataset": "dataset_id",
    "bins": "bin_count",
    "norm_scope": "normalization_scope",
    "permutations": "n_permutations",
    "k": "top_k",
}


class RunConfig(CamelCaseModel):
    """
    Effective parameters of one command after merging settings, the config file
    and the command-line flags (in increasing priority).

    Attributes:
        command (str): The command being run.
        data (Path | None): Dataset file.
        dataset_id (BenchmarkDataset | None): Benchmark preset supplying the
            default data file and Top-K.
        label_col (str): Label column header or position (negative from the end).
        missing (str): Missing-value marker.
        delimiter (str): Cell separator.
        selector (str): Selector of rank and select.
        selectors (list[str]): Selectors of the bench grid.
        top_k (int | None): Number of features to keep.
        threshold (float | None): Keep features whose weight exceeds this.
        normalizers (list[str]): Normalisers of the bench grid.
        classifiers (list[str]): Classifiers of the bench grid.
        folds (int): Number of cross-validation folds.
        seed (int): Seed of folds and permutations.
        scope (SelectionScope): Selection scope of the bench grid.
        normalization_scope (SelectionScope): Where normaliser statistics come from.
        out (Path | None): Output file; stdout when missing.
        format (OutputFormat): Output format.
        sort_planes (bool): Sort CFS planes by feature value.
        bin_count (int): Bins of IG, MI and CST.
        pn_alpha (float): Exponent of the power normaliser.
        n_permutations (int): Row shuffles measured by `stability`.
        n_jobs (int): Worker threads.
        timings (bool): Include wall times in bench reports.
    """

    command: Command
    data: Optional[Path] = None
    dataset_id: Optional[BenchmarkDataset] = None
    label_col: str = "-1"
    missing: str = settings.MISSING_MARKER
    delimiter: str = settings.DELIMITER
    selector: str = SelectorTag.CFS.value
    selectors: list[str] = Field(default_factory=lambda: [tag.value for tag in SelectorTag])
    top_k: Optional[int] = None
    threshold: Optional[float] = None
    normalizers: list[str] = Field(
        default_factory=lambda: [tag.value for tag in NormalizerTag]
    )
    classifiers: list[str] = Field(
        default_factory=lambda: [tag.value for tag in ClassifierTag]
    )
    folds: int = Field(default=settings.DEFAULT_FOLDS, ge=2)
    seed: int = settings.DEFAULT_SEED
    scope: SelectionScope = SelectionScope.GLOBAL
    normalization_scope: SelectionScope = SelectionScope.PER_FOLD
    out: Optional[Path] = None
    format: OutputFormat = OutputFormat.CSV
    sort_planes: bool = False
    bin_count: int = Field(default=settings.BIN_COUNT, ge=2)
    pn_alpha: float = Field(default=settings.PN_ALPHA, gt=0.0, le=1.0)
    n_permutations: int = Field(default=constants.DEFAULT_N_PERMUTATIONS, gt=0)
    n_jobs: int = Field(default=settings.N_JOBS, gt=0)
    timings: bool = False

    @field_validator("selectors", "normalizers", "classifiers", mode="before")
    def split_names(cls, value: Any) -> list[str]:
        """
        Accept comma-separated strings as well as lists.
        """
        if isinstance(value, str):
            return [name.strip() for name in value.split(",") if name.strip()]
        return value

    @field_validator("label_col", mode="before")
    def label_as_text(cls, value: Any) -> str:
        return str(value)

    @model_validator(mode="after")
    def check_selection(self) -> "RunConfig":
        """
        Top-k and threshold selection are mutually exclusive.
        """
        if self.top_k is not None and self.threshold is not None:
            raise ConfigurationError(constants.K_AND_THRESHOLD)
        return self

    @classmethod
    def merge(
        cls, command: str, flags: dict[str, Any], config_file: Path | None = None
    ) -> "RunConfig":
        """
        Build the effective configuration.

        Parameters:
            command (str): Command name.
            flags (dict[str, Any]): Command-line values; None means "not given".
            config_file (Path | None): `key = value` file with `#` comments.

        Returns:
            RunConfig: Validated configuration.

        Raises:
            ConfigurationError: If the file is missing, names an unknown key, or
                a value does not validate.
        """
        values: dict[str, Any] = {}
        if config_file is not None:
            values.update(read_config_file(config_file))
        values.update({key: value for key, value in flags.items() if value is not None})
        values["command"] = command
        try:
            return cls.model_validate(values)
        except ValidationError as exc:
            details = "; ".join(
                f"{'.'.join(str(part) for part in error['loc'])}: {error['msg']}"
                for error in exc.errors()
            )
            raise ConfigurationError(f"{constants.INVALID_CONFIGURATION} {details}")

    def echo(self) -> dict[str, Any]:
        """
        The effective values, as recorded in report metadata.
        """
        return self.model_dump(mode="json", exclude={"out", "timings"})


def read_config_file(path: Path) -> dict[str, str]:
    """
    Read a `key = value` config file. Keys are field names or flag names, with
    dashes or underscores, in any case.

    Raises:
        ConfigurationError: If the file does not exist or a key is unknown.
    """
    if not Path(path).is_file():
        raise ConfigurationError(f"Config file {path} not found.")
    known = set(RunConfig.model_fields) - {"command"}
    values = {}
    for key, value in dotenv_values(path).items():
        name = key.strip().lower().replace("-", "_")
        name = FLAG_ALIASES.get(name, name)
        if name not in known:
            raise ConfigurationError(
                constants.UNKNOWN_NAME.format(
                    kind="config key",
                    name=key,
                    valid=", ".join(sorted(known | set(FLAG_ALIASES))),
                )
            )
        if value is not None:
            values[name] = value
    return values
