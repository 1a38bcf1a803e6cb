import numpy as np

import constants
from apps.classifiers.schemas import ClassifierKind
from apps.classifiers.services.registry import CLASSIFIERS


class GaussianNaiveBayes:
    """
    Gaussian Naive Bayes with maximum-likelihood variances.

    Variances are floored at GNB_VARIANCE_FLOOR so constant columns do not
    produce infinite log-likelihoods.
    """

    def __init__(self, variance_floor: float = constants.GNB_VARIANCE_FLOOR):
        self.variance_floor = variance_floor

    def fit(self, X: np.ndarray, y: np.ndarray, n_classes: int) -> "GaussianNaiveBayes":
        self.means_ = np.zeros((n_classes, X.shape[1]))
        self.variances_ = np.ones((n_classes, X.shape[1]))
        self.log_priors_ = np.full(n_classes, -np.inf)
        for cls in range(n_classes):
            members = X[y == cls]
            if not len(members):
                continue
            self.means_[cls] = members.mean(axis=0)
            self.variances_[cls] = np.maximum(members.var(axis=0), self.variance_floor)
            self.log_priors_[cls] = np.log(len(members) / len(X))
        return self

    def joint_log_likelihood(self, X: np.ndarray) -> np.ndarray:
        """
        log P(c) + sum_j log N(x_j | mu_cj, var_cj) for every row and class.
        """
        log_norm = -0.5 * np.log(2.0 * np.pi * self.variances_).sum(axis=1)
        sq = ((X[:, None, :] - self.means_[None, :, :]) ** 2 / self.variances_[None]).sum(axis=2)
        return self.log_priors_ + log_norm - 0.5 * sq

    def predict(self, X: np.ndarray) -> np.ndarray:
        return np.argmax(self.joint_log_likelihood(X), axis=1)


@CLASSIFIERS.register("gnb")
def gaussian_naive_bayes(kind: ClassifierKind) -> GaussianNaiveBayes:
    return GaussianNaiveBayes()
