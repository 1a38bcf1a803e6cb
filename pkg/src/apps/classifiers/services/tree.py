import numpy as np

from apps.classifiers.schemas import ClassifierKind, TreeNode
from apps.classifiers.services.registry import CLASSIFIERS


def gini(counts: np.ndarray) -> np.ndarray:
    """
    Gini impurity of class-count vectors along the last axis.
    """
    totals = counts.sum(axis=-1, keepdims=True)
    shares = np.divide(counts, totals, out=np.zeros(counts.shape), where=totals > 0)
    return 1.0 - (shares**2).sum(axis=-1)


class GiniDecisionTree:
    """
    CART classification tree with binary splits on Gini impurity.

    Thresholds are midpoints between consecutive distinct values; rows with
    value <= threshold go left. Among splits of equal impurity the first one
    found (lowest feature id, then lowest threshold) wins.
    """

    def __init__(self, max_depth: int):
        self.max_depth = max_depth

    def fit(self, X: np.ndarray, y: np.ndarray, n_classes: int) -> "GiniDecisionTree":
        self.n_classes_ = n_classes
        self.root_ = self._grow(np.asarray(X, dtype=float), np.asarray(y, dtype=int), 0)
        return self

    def _grow(self, X: np.ndarray, y: np.ndarray, depth: int) -> TreeNode:
        counts = np.bincount(y, minlength=self.n_classes_)
        node = TreeNode(depth=depth, counts=counts.tolist(), label=int(np.argmax(counts)))
        if depth >= self.max_depth or np.count_nonzero(counts) <= 1:
            return node

        split = self._best_split(X, y, gini(counts))
        if split is None:
            return node
        feature, threshold = split
        goes_left = X[:, feature] <= threshold
        node.feature = feature
        node.threshold = threshold
        node.left = self._grow(X[goes_left], y[goes_left], depth + 1)
        node.right = self._grow(X[~goes_left], y[~goes_left], depth + 1)
        return node

    def _best_split(
        self, X: np.ndarray, y: np.ndarray, parent_impurity: float
    ) -> tuple[int, float] | None:
        m = len(y)
        one_hot = np.eye(self.n_classes_, dtype=float)[y]
        totals = one_hot.sum(axis=0)
        best_score, best = parent_impurity, None
        for feature in range(X.shape[1]):
            order = np.argsort(X[:, feature], kind="stable")
            values = X[order, feature]
            # left counts after taking the first i+1 sorted rows
            left = np.cumsum(one_hot[order], axis=0)[:-1]
            right = totals - left
            valid = np.flatnonzero(values[1:] > values[:-1])
            if not len(valid):
                continue
            sizes = np.arange(1, m)[valid]
            score = (
                sizes * gini(left[valid]) + (m - sizes) * gini(right[valid])
            ) / m
            pick = int(np.argmin(score))
            if score[pick] < best_score - 1e-12:
                i = valid[pick]
                best_score = float(score[pick])
                threshold = float((values[i] + values[i + 1]) / 2.0)
                # the midpoint of adjacent floats can round up to the right value
                if threshold >= values[i + 1]:
                    threshold = float(values[i])
                best = (feature, threshold)
        return best

    def predict(self, X: np.ndarray) -> np.ndarray:
        X = np.asarray(X, dtype=float)
        out = np.empty(len(X), dtype=int)
        for row in range(len(X)):
            node = self.root_
            while not node.is_leaf:
                node = node.left if X[row, node.feature] <= node.threshold else node.right
            out[row] = node.label
        return out


@CLASSIFIERS.register("dt")
def decision_tree(kind: ClassifierKind) -> GiniDecisionTree:
    return GiniDecisionTree(kind.dt_max_depth)
