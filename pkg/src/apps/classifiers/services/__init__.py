from apps.classifiers.services.registry import (
    CLASSIFIERS,
    ClassifierRegistry,
    Estimator,
    register_classifier,
)
from apps.classifiers.services.naive_bayes import GaussianNaiveBayes
from apps.classifiers.services.knn import NearestNeighbors
from apps.classifiers.services.tree import GiniDecisionTree, gini
from apps.classifiers.services.logistic import L1LogisticRegression, soft_threshold
from apps.classifiers.services.classifier import fit, predict

__all__ = [
    "CLASSIFIERS",
    "ClassifierRegistry",
    "Estimator",
    "register_classifier",
    "GaussianNaiveBayes",
    "NearestNeighbors",
    "GiniDecisionTree",
    "gini",
    "L1LogisticRegression",
    "soft_threshold",
    "fit",
    "predict",
]
