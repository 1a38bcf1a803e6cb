import numpy as np

import constants
from apps.classifiers.exceptions import FeatureCountMismatch, MissingClassError
from apps.classifiers.schemas import ClassifierKind, TrainedModel
from apps.classifiers.services.registry import CLASSIFIERS
from core.utils import logger


def fit(
    kind: ClassifierKind, X: np.ndarray, y: np.ndarray, n_classes: int | None = None
) -> TrainedModel:
    """
    Train a registered classifier.

    Parameters:
        kind (ClassifierKind): Classifier name and hyperparameters.
        X (np.ndarray): (m, k) training features.
        y (np.ndarray): Class ids in 0..n_classes-1.
        n_classes (int | None): Total number of classes; inferred from y if None.

    Returns:
        TrainedModel: The fitted estimator.

    Raises:
        MissingClassError: If some class in 0..n_classes-1 has no training row.
    """
    X = np.asarray(X, dtype=float)
    y = np.asarray(y, dtype=int)
    n_classes = n_classes or int(y.max()) + 1
    counts = np.bincount(y, minlength=n_classes)
    if (counts == 0).any():
        raise MissingClassError(
            constants.MISSING_CLASS.format(class_id=int(np.argmin(counts)))
        )

    estimator = CLASSIFIERS.create(kind).fit(X, y, n_classes)
    logger.debug(f"Trained {kind.label} on {X.shape[0]}x{X.shape[1]} rows")
    return TrainedModel(
        kind=kind, estimator=estimator, n_features=X.shape[1], n_classes=n_classes
    )


def predict(model: TrainedModel, X: np.ndarray) -> np.ndarray:
    """
    Predict class ids for the rows of X.

    Raises:
        FeatureCountMismatch: If X does not have the training column count.
    """
    X = np.asarray(X, dtype=float)
    if X.ndim != 2 or X.shape[1] != model.n_features:
        raise FeatureCountMismatch(
            constants.DIMENSION_MISMATCH.format(
                expected=model.n_features, actual=X.shape[-1]
            )
        )
    return np.asarray(model.estimator.predict(X), dtype=int)
