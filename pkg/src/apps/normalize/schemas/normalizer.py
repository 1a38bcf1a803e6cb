from typing import Any

import numpy as np
from pydantic import Field, field_validator

import constants
from apps.normalize.exceptions import UnknownNormalizer
from core.types import NormalizerTag
from core.utils import CamelCaseModel, FrozenModel, readonly_array

# Composite normalisers apply their steps left to right as named.
NORMALIZER_STEPS: dict[NormalizerTag, tuple[str, ...]] = {
    NormalizerTag.MM: ("mm",),
    NormalizerTag.L1: ("l1",),
    NormalizerTag.L2: ("l2",),
    NormalizerTag.PN: ("pn",),
    NormalizerTag.L1PN: ("l1", "pn"),
    NormalizerTag.L2PN: ("l2", "pn"),
    NormalizerTag.PNL1: ("pn", "l1"),
    NormalizerTag.PNL2: ("pn", "l2"),
}


class NormalizerKind(FrozenModel):
    """
    One of the eight post-selection normalisations.

    Attributes:
        tag (NormalizerTag): Which normalisation.
        pn_alpha (float): Exponent of the signed power map, in (0, 1].
    """

    tag: NormalizerTag
    pn_alpha: float = Field(default=constants.DEFAULT_PN_ALPHA, gt=0.0, le=1.0)

    @classmethod
    def parse(cls, name: str, pn_alpha: float = constants.DEFAULT_PN_ALPHA) -> "NormalizerKind":
        """
        Build a kind from its command-line name (mm, l1, l2, pn, l1pn, ...).

        Raises:
            UnknownNormalizer: If the name is not recognised.
        """
        try:
            tag = NormalizerTag(name.strip().lower())
        except ValueError:
            raise UnknownNormalizer(
                constants.UNKNOWN_NAME.format(
                    kind="normalizer",
                    name=name,
                    valid=", ".join(tag.value for tag in NormalizerTag),
                )
            )
        return cls(tag=tag, pn_alpha=pn_alpha)

    @property
    def steps(self) -> tuple[str, ...]:
        return NORMALIZER_STEPS[self.tag]

    @property
    def label(self) -> str:
        return self.tag.value.upper()


class MinMaxParams(FrozenModel):
    """
    Per-feature minimum and maximum learnt from a training matrix.
    """

    mins: np.ndarray
    maxs: np.ndarray

    @field_validator("mins", "maxs", mode="before")
    def freeze(cls, value: Any) -> np.ndarray:
        """
        Store bounds as read-only vectors.
        """
        return readonly_array(value, ndim=1)


class NormalizedFeatures(CamelCaseModel):
    """
    Output of a normaliser.

    Attributes:
        values (np.ndarray): The normalised matrix.
        zero_rows (int): Rows left unchanged by L1/L2 because their norm was 0.
    """

    values: np.ndarray
    zero_rows: int = 0
