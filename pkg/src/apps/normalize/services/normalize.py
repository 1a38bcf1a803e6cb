import numpy as np

from apps.normalize.schemas import MinMaxParams, NormalizedFeatures, NormalizerKind
from core.exceptions import NonFiniteValuesError
from core.utils import logger


def _finite_matrix(features) -> np.ndarray:
    matrix = np.asarray(features, dtype=float)
    if matrix.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got shape {matrix.shape}")
    if not np.isfinite(matrix).all():
        raise NonFiniteValuesError
    return matrix


def fit_minmax(features) -> MinMaxParams:
    """
    Learn per-feature bounds from a matrix.

    Raises:
        NonFiniteValuesError: If any entry is NaN or infinite.
    """
    matrix = _finite_matrix(features)
    return MinMaxParams(mins=matrix.min(axis=0), maxs=matrix.max(axis=0))


def apply_minmax(params: MinMaxParams, features, clip: bool = True) -> np.ndarray:
    """
    Map every column by (x - min) / (max - min) with learnt bounds.

    Constant training columns map to 0. With `clip`, values outside the training
    range (test rows) are clipped to [0, 1].
    """
    matrix = _finite_matrix(features)
    span = params.maxs - params.mins
    constant = span == 0
    scaled = (matrix - params.mins) / np.where(constant, 1.0, span)
    scaled[:, constant] = 0.0
    if clip:
        np.clip(scaled, 0.0, 1.0, out=scaled)
    return scaled


def minmax_per_feature(features) -> np.ndarray:
    """
    Min-Max normalise each column of a matrix onto [0, 1].

    Parameters:
        features: m×k matrix of finite numbers.

    Returns:
        np.ndarray: The normalised matrix; constant columns become all zeros.

    Raises:
        NonFiniteValuesError: If any entry is NaN or infinite.
    """
    return apply_minmax(fit_minmax(features), features, clip=False)


def _row_normalize(matrix: np.ndarray, order: int) -> tuple[np.ndarray, int]:
    norms = np.linalg.norm(matrix, ord=order, axis=1)
    zero = norms == 0
    out = matrix / np.where(zero, 1.0, norms)[:, None]
    return out, int(zero.sum())


def power_normalize(matrix: np.ndarray, alpha: float) -> np.ndarray:
    """
    Signed power map sign(x) * |x| ** alpha, applied elementwise.
    """
    return np.sign(matrix) * np.abs(matrix) ** alpha


class FittedNormalizer:
    """
    A normaliser whose data-dependent statistics come from training rows only.

    Only MM learns anything (per-feature bounds); L1, L2 and PN work row by row
    or element by element and need no fitting.
    """

    def __init__(self, kind: NormalizerKind, clip: bool = True):
        self.kind = kind
        self.clip = clip
        self.minmax: MinMaxParams | None = None

    def fit(self, features) -> "FittedNormalizer":
        """
        Learn the statistics of the normaliser from `features`.
        """
        matrix = _finite_matrix(features)
        if "mm" in self.kind.steps:
            self.minmax = fit_minmax(matrix)
        return self

    def transform(self, features) -> NormalizedFeatures:
        """
        Apply the normaliser steps in order.

        Returns:
            NormalizedFeatures: Values plus the number of zero rows left unchanged.
        """
        values = _finite_matrix(features).copy()
        zero_rows = 0
        for step in self.kind.steps:
            if step == "mm":
                if self.minmax is None:
                    raise RuntimeError("fit() must be called before transform()")
                values = apply_minmax(self.minmax, values, clip=self.clip)
            elif step == "pn":
                values = power_normalize(values, self.kind.pn_alpha)
            else:
                values, zero = _row_normalize(values, 1 if step == "l1" else 2)
                zero_rows += zero
        if zero_rows:
            logger.debug(f"{self.kind.label} left {zero_rows} zero row(s) unchanged")
        return NormalizedFeatures(values=values, zero_rows=zero_rows)


def apply_normalizer(kind: NormalizerKind, features) -> NormalizedFeatures:
    """
    Normalise a matrix with one of the eight normalisers, fitting on the same matrix.

    MM is per feature (column), L1 and L2 are per instance (row) and PN is
    elementwise. Composite kinds apply their parts left to right as named.

    Parameters:
        kind (NormalizerKind): The normaliser.
        features: m×k matrix of finite numbers.

    Returns:
        NormalizedFeatures: The result and the count of zero rows under L1/L2,
            which are left unchanged instead of producing NaN.
    """
    return FittedNormalizer(kind, clip=False).fit(features).transform(features)
