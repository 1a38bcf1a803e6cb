import numpy as np
from scipy.special import expit

import constants
from apps.classifiers.schemas import ClassifierKind
from apps.classifiers.services.registry import CLASSIFIERS


def soft_threshold(values: np.ndarray, amount: float) -> np.ndarray:
    return np.sign(values) * np.maximum(np.abs(values) - amount, 0.0)


class L1LogisticRegression:
    """
    One-vs-rest logistic regression with an L1 penalty, fit by proximal gradient.

    Each binary problem minimises mean(log-loss) + ||w||_1 / (C * m) with an
    unpenalised intercept. The step is 1/L with L = sigma_max([X, 1])^2 / (4m),
    so the objective never increases between iterations.
    """

    def __init__(
        self,
        c: float = constants.DEFAULT_LR_C,
        max_iters: int = constants.DEFAULT_LR_MAX_ITERS,
        tol: float = constants.LR_TOLERANCE,
    ):
        self.c = c
        self.max_iters = max_iters
        self.tol = tol

    @staticmethod
    def _design(X: np.ndarray) -> np.ndarray:
        return np.hstack([np.asarray(X, dtype=float), np.ones((len(X), 1))])

    def objective(self, design: np.ndarray, target: np.ndarray, w: np.ndarray) -> float:
        """
        Penalised mean log-loss of weights `w` (intercept last).
        """
        z = design @ w
        loss = np.mean(np.logaddexp(0.0, z) - target * z)
        return float(loss + np.abs(w[:-1]).sum() / (self.c * len(target)))

    def _fit_binary(
        self, design: np.ndarray, target: np.ndarray, step: float
    ) -> tuple[np.ndarray, list[float]]:
        m = len(target)
        w = np.zeros(design.shape[1])
        trace = [self.objective(design, target, w)]
        shrink = step / (self.c * m)
        for _ in range(self.max_iters):
            grad = design.T @ (expit(design @ w) - target) / m
            w = w - step * grad
            w[:-1] = soft_threshold(w[:-1], shrink)
            trace.append(self.objective(design, target, w))
            if abs(trace[-2] - trace[-1]) <= self.tol * max(1.0, abs(trace[-1])):
                break
        return w, trace

    def fit(self, X: np.ndarray, y: np.ndarray, n_classes: int) -> "L1LogisticRegression":
        design = self._design(X)
        lipschitz = np.linalg.norm(design, 2) ** 2 / (4.0 * len(design))
        step = 1.0 / lipschitz if lipschitz > 0 else 1.0

        self.coef_ = np.zeros((n_classes, design.shape[1]))
        self.loss_trace_: list[list[float]] = []
        for cls in range(n_classes):
            w, trace = self._fit_binary(design, (y == cls).astype(float), step)
            self.coef_[cls] = w
            self.loss_trace_.append(trace)
        return self

    def decision_function(self, X: np.ndarray) -> np.ndarray:
        return self._design(X) @ self.coef_.T

    def predict(self, X: np.ndarray) -> np.ndarray:
        return np.argmax(self.decision_function(X), axis=1)


@CLASSIFIERS.register("lr")
def logistic_regression(kind: ClassifierKind) -> L1LogisticRegression:
    return L1LogisticRegression(c=kind.lr_c, max_iters=kind.lr_max_iters)
