from typing import Any

import numpy as np
from pydantic import Field, field_validator

import constants
from apps.normalize.schemas import MinMaxParams
from apps.ranking.schemas import RankedFeatures
from apps.selectors.exceptions import UnknownSelector
from core.types import BinPolicy, SelectorTag
from core.utils import FrozenModel, readonly_array

DEFAULT_BIN_POLICIES: dict[SelectorTag, BinPolicy] = {
    SelectorTag.IG: BinPolicy.EQUAL_WIDTH,
    SelectorTag.CST: BinPolicy.EQUAL_WIDTH,
    SelectorTag.MI: BinPolicy.EQUAL_FREQUENCY,
}


class SelectorKind(FrozenModel):
    """
    A feature selector of the comparison grid.

    Attributes:
        tag (SelectorTag): Which selector.
        bin_count (int): Bins used to discretise features for IG, MI and CST.
        bin_policy (BinPolicy | None): Overrides the default discretisation
            (equal-width for IG and CST, equal-frequency for MI).
    """

    tag: SelectorTag
    bin_count: int = Field(default=constants.DEFAULT_BIN_COUNT, ge=2)
    bin_policy: BinPolicy | None = None

    @classmethod
    def parse(cls, name: str, bin_count: int = constants.DEFAULT_BIN_COUNT) -> "SelectorKind":
        """
        Build a kind from its command-line name (cfs, pca, ig, mi, cst).

        Raises:
            UnknownSelector: If the name is not recognised.
        """
        try:
            tag = SelectorTag(name.strip().lower())
        except ValueError:
            raise UnknownSelector(
                constants.UNKNOWN_NAME.format(
                    kind="selector",
                    name=name,
                    valid=", ".join(tag.value for tag in SelectorTag),
                )
            )
        return cls(tag=tag, bin_count=bin_count)

    @property
    def policy(self) -> BinPolicy:
        return self.bin_policy or DEFAULT_BIN_POLICIES.get(self.tag, BinPolicy.EQUAL_WIDTH)

    @property
    def label(self) -> str:
        return self.tag.value.upper()


class PcaModel(FrozenModel):
    """
    Principal axes of a feature matrix.

    Attributes:
        column_means (np.ndarray): Mean of each input column.
        components (np.ndarray): k×k orthonormal matrix; row i is the i-th axis.
        eigenvalues (np.ndarray): Variance along each axis, non-increasing, >= 0.
    """

    column_means: np.ndarray
    components: np.ndarray
    eigenvalues: np.ndarray

    @field_validator("column_means", "components", "eigenvalues", mode="before")
    def freeze(cls, value: Any) -> np.ndarray:
        """
        Store model arrays read-only.
        """
        return readonly_array(value)

    @property
    def n_features(self) -> int:
        return int(self.column_means.shape[0])


class FittedSelection(FrozenModel):
    """
    A selector fitted on some rows, applicable to any rows with the same columns.

    Attributes:
        kind (SelectorKind): The selector.
        k (int): Number of output columns.
        columns (list[int] | None): Raw columns kept, in rank order (filters, CFS).
        ranking (RankedFeatures | None): The ranking behind `columns`.
        pca (PcaModel | None): Projection (PCA only).
        minmax (MinMaxParams | None): Pre-normalisation applied before projecting.
        output_names (list[str]): Names of the output columns.
    """

    kind: SelectorKind
    k: int
    columns: list[int] | None = None
    ranking: RankedFeatures | None = None
    pca: PcaModel | None = None
    minmax: MinMaxParams | None = None
    output_names: list[str]


class ChiSquareResult(FrozenModel):
    """
    Pearson chi-square statistic of a contingency table.

    Attributes:
        statistic (float): Sum of (O - E)^2 / E over cells with E > 0.
        zero_expected_cells (int): Cells skipped because their expected count is 0.
    """

    statistic: float
    zero_expected_cells: int = 0
