import numpy as np

import constants
from apps.selectors.exceptions import InvalidComponents, PcaDimensionMismatch
from apps.selectors.schemas import PcaModel
from core.exceptions import InsufficientDataError, NonFiniteValuesError


def pca_fit(features) -> PcaModel:
    """
    Eigendecomposition of the sample covariance of mean-centred data.

    Axes are sorted by decreasing eigenvalue and signed so that the
    largest-magnitude entry of each axis is positive. Zero eigenvalues (rank
    deficient data) are allowed.

    Parameters:
        features: m×k matrix, m >= 2.

    Returns:
        PcaModel: Column means, axes (rows) and eigenvalues.
    """
    matrix = np.asarray(features, dtype=float)
    if matrix.shape[0] < 2:
        raise InsufficientDataError(
            constants.INSUFFICIENT_DATA.format(minimum=2, actual=matrix.shape[0])
        )
    if not np.isfinite(matrix).all():
        raise NonFiniteValuesError
    means = matrix.mean(axis=0)
    centred = matrix - means
    covariance = centred.T @ centred / (matrix.shape[0] - 1)
    eigenvalues, eigenvectors = np.linalg.eigh(covariance)
    order = np.argsort(eigenvalues, kind="stable")[::-1]
    eigenvalues = np.clip(eigenvalues[order], 0.0, None)
    components = eigenvectors[:, order].T
    pivots = np.argmax(np.abs(components), axis=1)
    signs = np.sign(components[np.arange(len(components)), pivots])
    components = components * np.where(signs == 0, 1.0, signs)[:, None]
    return PcaModel(column_means=means, components=components, eigenvalues=eigenvalues)


def pca_transform(model: PcaModel, features, n_components: int) -> np.ndarray:
    """
    Project centred data onto the first `n_components` axes.

    Raises:
        PcaDimensionMismatch: If `features` does not have the model's columns.
        InvalidComponents: If n_components is outside 1..k.
    """
    matrix = np.asarray(features, dtype=float)
    if matrix.ndim != 2 or matrix.shape[1] != model.n_features:
        raise PcaDimensionMismatch(
            constants.DIMENSION_MISMATCH.format(
                expected=model.n_features, actual=matrix.shape[-1]
            )
        )
    if not 1 <= n_components <= model.n_features:
        raise InvalidComponents(
            constants.INVALID_COMPONENTS.format(k=model.n_features, n_components=n_components)
        )
    return (matrix - model.column_means) @ model.components[:n_components].T


def pca_inverse_transform(model: PcaModel, projected) -> np.ndarray:
    """
    Map projected coordinates back to the input space (exact with all components).
    """
    projected = np.asarray(projected, dtype=float)
    n_components = projected.shape[1]
    return projected @ model.components[:n_components] + model.column_means
