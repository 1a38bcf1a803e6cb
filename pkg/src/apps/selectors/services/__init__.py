from apps.selectors.services.pca import pca_fit, pca_inverse_transform, pca_transform
from apps.selectors.services.scores import (
    chi_square,
    contingency_table,
    discretize,
    score_chi2,
    score_ig,
    score_mi,
)
from apps.selectors.services.selector import FILTER_SCORERS, SelectorService

__all__ = [
    "FILTER_SCORERS",
    "SelectorService",
    "chi_square",
    "contingency_table",
    "discretize",
    "pca_fit",
    "pca_inverse_transform",
    "pca_transform",
    "score_chi2",
    "score_ig",
    "score_mi",
]
