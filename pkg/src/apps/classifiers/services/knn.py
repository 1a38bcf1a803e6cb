import numpy as np
from scipy.spatial.distance import cdist

from apps.classifiers.schemas import ClassifierKind
from apps.classifiers.services.registry import CLASSIFIERS


class NearestNeighbors:
    """
    Euclidean k-nearest-neighbours majority vote.

    Neighbours at equal distance are taken in ascending label order and a tied
    vote goes to the smallest class id, so predictions never depend on row order.
    """

    def __init__(self, k_neighbors: int):
        self.k_neighbors = k_neighbors

    def fit(self, X: np.ndarray, y: np.ndarray, n_classes: int) -> "NearestNeighbors":
        self.train_X_ = np.asarray(X, dtype=float)
        self.train_y_ = np.asarray(y, dtype=int)
        self.n_classes_ = n_classes
        return self

    def predict(self, X: np.ndarray) -> np.ndarray:
        distances = cdist(np.asarray(X, dtype=float), self.train_X_)
        labels = np.broadcast_to(self.train_y_, distances.shape)
        order = np.lexsort((labels, distances), axis=-1)
        k = min(self.k_neighbors, self.train_X_.shape[0])
        nearest = self.train_y_[order[:, :k]]

        votes = np.zeros((len(X), self.n_classes_), dtype=int)
        np.add.at(votes, (np.repeat(np.arange(len(X)), k), nearest.ravel()), 1)
        return np.argmax(votes, axis=1)


@CLASSIFIERS.register("knn")
def nearest_neighbors(kind: ClassifierKind) -> NearestNeighbors:
    return NearestNeighbors(kind.k_neighbors)
