from typing import Any

import numpy as np
from pydantic import Field, field_validator, model_validator

import constants
from core.utils import CamelCaseModel, FrozenModel, readonly_array


class FeatureWeight(CamelCaseModel):
    """
    Weight of one feature column.

    Attributes:
        feature_id (int): Column index in the cleaned dataset.
        feature_name (str): Column header.
        weight (float): Mean Menger curvature (or a filter score), finite and >= 0.
    """

    feature_id: int
    feature_name: str = ""
    weight: float = Field(ge=0.0, allow_inf_nan=False)


class RankedFeatures(CamelCaseModel):
    """
    Features ordered by weight, highest first; ties by ascending feature id.

    Attributes:
        ordered (list[FeatureWeight]): Every feature exactly once.
        tie_policy (str): How equal weights are ordered.
        method (str): Which scorer produced the weights.
    """

    ordered: list[FeatureWeight]
    tie_policy: str = constants.TIE_POLICY
    method: str = "cfs"

    @model_validator(mode="after")
    def check_order(self) -> "RankedFeatures":
        """
        The list must be a permutation of 0..n-1 sorted by (-weight, feature_id).
        """
        ids = sorted(item.feature_id for item in self.ordered)
        if ids != list(range(len(self.ordered))):
            raise ValueError("ordered must contain every feature id exactly once")
        keys = [(-item.weight, item.feature_id) for item in self.ordered]
        if keys != sorted(keys):
            raise ValueError("ordered must be sorted by weight desc, feature_id asc")
        return self

    @classmethod
    def from_weights(
        cls, weights, feature_names: list[str], method: str = "cfs"
    ) -> "RankedFeatures":
        """
        Rank a weight vector indexed by feature id.
        """
        order = sorted(range(len(weights)), key=lambda i: (-float(weights[i]), i))
        return cls(
            ordered=[
                FeatureWeight(
                    feature_id=i, feature_name=feature_names[i], weight=float(weights[i])
                )
                for i in order
            ],
            method=method,
        )

    @property
    def feature_ids(self) -> list[int]:
        return [item.feature_id for item in self.ordered]

    def weights_by_id(self) -> np.ndarray:
        """
        Weights indexed by feature id.
        """
        weights = np.zeros(len(self.ordered))
        for item in self.ordered:
            weights[item.feature_id] = item.weight
        return weights


class FeaturePlane(FrozenModel):
    """
    The (feature value, class position) points of one feature, in curve order.
    """

    feature_id: int
    points: np.ndarray

    @field_validator("points", mode="before")
    def freeze(cls, value: Any) -> np.ndarray:
        """
        Store points as a read-only (m, 2) array.
        """
        array = readonly_array(value, ndim=2)
        if array.shape[1] != 2:
            raise ValueError("points must have two columns")
        return array


class RankStability(CamelCaseModel):
    """
    Agreement of CFS weights with themselves after shuffling the rows.

    Attributes:
        taus (list[float]): Kendall tau against the reference weights, one per
            permutation.
        mean_tau (float): Average of `taus`.
        min_tau (float): Smallest of `taus`.
        identical_orderings (int): Permutations that reproduced the exact order.
    """

    taus: list[float]
    mean_tau: float
    min_tau: float
    identical_orderings: int
