import numpy as np

import constants
from apps.dataset.schemas import Dataset
from apps.normalize.services import apply_minmax, fit_minmax, minmax_per_feature
from apps.ranking.exceptions import TopKOutOfRange
from apps.selectors.exceptions import NotARanking
from apps.ranking.schemas import RankedFeatures
from apps.ranking.services import CfsService
from apps.selectors.schemas import FittedSelection, SelectorKind
from apps.selectors.services.pca import pca_fit, pca_transform
from apps.selectors.services.scores import score_chi2, score_ig, score_mi
from config import settings
from core.types import SelectorTag
from core.utils import ordered_map

FILTER_SCORERS = {SelectorTag.IG: score_ig, SelectorTag.MI: score_mi, SelectorTag.CST: score_chi2}


class SelectorService:
    """
    Fits any selector of the grid (CFS, PCA, IG, MI, CST) and applies it to rows.

    Filters score every feature on Min-Max normalised data, rank the scores and
    keep the top k raw columns, exactly as CFS does with its curvature weights.
    PCA projects Min-Max normalised data onto its top k axes instead.
    """

    def __init__(self, cfs: CfsService | None = None, n_jobs: int | None = None):
        self.n_jobs = n_jobs or settings.N_JOBS
        self.cfs = cfs or CfsService(n_jobs=self.n_jobs)

    def score_features(self, kind: SelectorKind, ds: Dataset) -> RankedFeatures:
        """
        Rank the features of a dataset with a filter selector or CFS.

        Parameters:
            kind (SelectorKind): Any selector except PCA.
            ds (Dataset): Raw dataset.

        Returns:
            RankedFeatures: Scores sorted descending, ties by feature id.
        """
        if kind.tag == SelectorTag.CFS:
            return self.cfs.rank_features(ds)
        if kind.tag not in FILTER_SCORERS:
            raise NotARanking(constants.NOT_A_RANKING.format(selector=kind.label))
        scorer = FILTER_SCORERS[kind.tag]
        normalized = minmax_per_feature(ds.features)
        scores = ordered_map(
            lambda column: scorer(
                normalized[:, column], ds.labels, bin_count=kind.bin_count, policy=kind.policy
            ),
            range(ds.n_features),
            self.n_jobs,
        )
        return RankedFeatures.from_weights(scores, ds.feature_names, method=kind.tag.value)

    def fit(self, kind: SelectorKind, ds: Dataset, k: int) -> FittedSelection:
        """
        Fit a selector on a dataset.

        Raises:
            TopKOutOfRange: If k is outside 1..n'.
        """
        if not 1 <= k <= ds.n_features:
            raise TopKOutOfRange(
                constants.TOP_K_OUT_OF_RANGE.format(n_features=ds.n_features, k=k)
            )
        if kind.tag == SelectorTag.PCA:
            minmax = fit_minmax(ds.features)
            model = pca_fit(apply_minmax(minmax, ds.features, clip=False))
            return FittedSelection(
                kind=kind,
                k=k,
                pca=model,
                minmax=minmax,
                output_names=[f"PC{i + 1}" for i in range(k)],
            )
        ranking = self.score_features(kind, ds)
        columns = ranking.feature_ids[:k]
        return FittedSelection(
            kind=kind,
            k=k,
            columns=columns,
            ranking=ranking,
            output_names=[ds.feature_names[i] for i in columns],
        )

    @staticmethod
    def transform(selection: FittedSelection, features) -> np.ndarray:
        """
        Apply a fitted selection to rows with the original columns.
        """
        matrix = np.asarray(features, dtype=float)
        if selection.pca is not None:
            scaled = apply_minmax(selection.minmax, matrix, clip=True)
            return pca_transform(selection.pca, scaled, selection.k)
        return matrix[:, selection.columns]

    def select_with(self, kind: SelectorKind, ds: Dataset, k: int) -> Dataset:
        """
        Reduce a dataset to k columns with any selector.

        Filters and CFS return the top-k raw columns (through
        `CfsService.select_top_k`); PCA returns the k projected components.

        Parameters:
            kind (SelectorKind): The selector.
            ds (Dataset): Raw dataset.
            k (int): Number of output columns.

        Returns:
            Dataset: The reduced dataset.
        """
        selection = self.fit(kind, ds, k)
        if selection.ranking is not None:
            return CfsService.select_top_k(ds, selection.ranking, k)
        return ds.with_features(
            self.transform(selection, ds.features),
            selection.output_names,
            f"PCA projection onto {k} component(s)",
        )
