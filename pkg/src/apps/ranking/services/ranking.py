from typing import Sequence

import numpy as np
from scipy.stats import kendalltau

import constants
from apps.curvature.schemas import Point2
from apps.curvature.services import plane_curvatures
from apps.dataset.schemas import Dataset
from apps.normalize.services import minmax_per_feature
from apps.ranking.exceptions import (
    InvalidThreshold,
    NothingSelected,
    NotPreNormalized,
    PlaneTooShort,
    TopKOutOfRange,
)
from apps.ranking.schemas import FeaturePlane, RankedFeatures, RankStability
from config import settings
from core.utils import logger, ordered_map


class CfsService:
    """
    Curvature-based feature selection.

    Every feature of a Min-Max normalised dataset is paired with the class
    position to form a 2-D plane; the mean Menger curvature along that plane is
    the feature weight. Features are ranked by weight and the top ones are taken
    from the raw (un-normalised) dataset.
    """

    def __init__(self, sort_planes: bool = False, n_jobs: int | None = None):
        """
        Create a CfsService.

        Parameters:
            sort_planes (bool): Sort each plane by feature value before computing
                curvature instead of walking rows in file order.
            n_jobs (int | None): Worker threads for per-feature weights; defaults
                to `settings.N_JOBS`.
        """
        self.sort_planes = sort_planes
        self.n_jobs = n_jobs or settings.N_JOBS

    #  MARK: - Planes
    # *======================================== Planes ========================================
    def decompose_planes(self, ds: Dataset) -> list[FeaturePlane]:
        """
        Split a pre-normalised dataset into one (feature, class) plane per feature.

        Parameters:
            ds (Dataset): Dataset whose features are already in [0, 1].

        Returns:
            list[FeaturePlane]: Plane i holds (F_i value, y) in row order, where y
                is the class id Min-Max mapped onto [0, 1].

        Raises:
            NotPreNormalized: If a feature value lies outside [0, 1].
            PlaneTooShort: If the dataset has fewer than three rows.
        """
        if ds.n_instances < constants.MIN_PLANE_POINTS:
            raise PlaneTooShort(
                constants.INSUFFICIENT_DATA.format(
                    minimum=constants.MIN_PLANE_POINTS, actual=ds.n_instances
                )
            )
        if ds.features.min() < 0.0 or ds.features.max() > 1.0:
            raise NotPreNormalized
        y = minmax_per_feature(ds.labels.astype(float)[:, None])[:, 0]
        planes = []
        for feature_id in range(ds.n_features):
            points = np.column_stack([ds.features[:, feature_id], y])
            if self.sort_planes:
                points = points[np.argsort(points[:, 0], kind="stable")]
            planes.append(FeaturePlane(feature_id=feature_id, points=points))
        return planes

    @staticmethod
    def mean_curvature_weight(plane: FeaturePlane | np.ndarray | Sequence[Point2]) -> float:
        """
        Mean Menger curvature over the interior points of a plane.

        Parameters:
            plane: A FeaturePlane, an (m, 2) array or a sequence of Point2.

        Returns:
            float: (1 / (m - 2)) * sum of the curvature at points 2..m-1.
                Degenerate triples count as 0 and stay in the divisor.

        Raises:
            PlaneTooShort: If the plane has fewer than three points.
        """
        if isinstance(plane, FeaturePlane):
            points = plane.points
        elif isinstance(plane, np.ndarray):
            points = plane
        else:
            points = np.array([[point.x, point.y] for point in plane], dtype=float)
        if len(points) < constants.MIN_PLANE_POINTS:
            raise PlaneTooShort(
                constants.INSUFFICIENT_DATA.format(
                    minimum=constants.MIN_PLANE_POINTS, actual=len(points)
                )
            )
        curvatures, _ = plane_curvatures(points)
        return float(curvatures.mean())

    #  MARK: - Rank
    # *======================================== Rank ========================================
    @staticmethod
    def pre_normalize(ds: Dataset) -> Dataset:
        """
        Min-Max normalised copy of a dataset; the input stays untouched.
        """
        return ds.with_features(
            minmax_per_feature(ds.features), ds.feature_names, "Min-Max pre-normalisation"
        )

    def weights(self, ds: Dataset) -> np.ndarray:
        """
        Mean curvature of every feature of a raw dataset, indexed by feature id.
        """
        planes = self.decompose_planes(self.pre_normalize(ds))
        return np.array(ordered_map(self.mean_curvature_weight, planes, self.n_jobs))

    def rank_features(self, ds: Dataset) -> RankedFeatures:
        """
        Rank the features of a raw dataset by mean curvature.

        Parameters:
            ds (Dataset): Cleaned, un-normalised dataset.

        Returns:
            RankedFeatures: Weights sorted descending, ties by ascending feature id.
        """
        weights = self.weights(ds)
        ranks = RankedFeatures.from_weights(weights, ds.feature_names, method="cfs")
        listing = ", ".join(
            f"{item.feature_name}={item.weight:.6f}" for item in ranks.ordered
        )
        logger.debug(f"CFS weights: {listing}")
        return ranks

    #  MARK: - Select
    # *======================================== Select ========================================
    @staticmethod
    def select_top_k(ds_raw: Dataset, ranks: RankedFeatures, k: int) -> Dataset:
        """
        Keep the k best-ranked feature columns of the raw dataset.

        Parameters:
            ds_raw (Dataset): The raw dataset the ranking was computed from.
            ranks (RankedFeatures): Its ranking.
            k (int): Number of columns, 1 <= k <= n'.

        Returns:
            Dataset: Raw columns in rank order, rows and labels unchanged.

        Raises:
            TopKOutOfRange: If k is outside 1..n'.
        """
        if not 1 <= k <= ds_raw.n_features:
            raise TopKOutOfRange(
                constants.TOP_K_OUT_OF_RANGE.format(n_features=ds_raw.n_features, k=k)
            )
        return ds_raw.with_columns(
            ranks.feature_ids[:k], f"{ranks.method.upper()} top-{k} selection"
        )

    @staticmethod
    def select_by_threshold(
        ds_raw: Dataset, ranks: RankedFeatures, threshold: float
    ) -> Dataset:
        """
        Keep the raw columns whose weight is strictly greater than `threshold`.

        Raises:
            InvalidThreshold: If the threshold is negative.
            NothingSelected: If no weight exceeds the threshold.
        """
        if threshold < 0:
            raise InvalidThreshold(constants.THRESHOLD_NEGATIVE.format(threshold=threshold))
        selected = [item.feature_id for item in ranks.ordered if item.weight > threshold]
        if not selected:
            raise NothingSelected(constants.EMPTY_SELECTION.format(threshold=threshold))
        return ds_raw.with_columns(
            selected, f"{ranks.method.upper()} weight > {threshold} selection"
        )

    #  MARK: - Stability
    # *======================================== Stability ========================================
    def rank_stability(
        self,
        ds: Dataset,
        n_permutations: int = constants.DEFAULT_N_PERMUTATIONS,
        seed: int = 0,
    ) -> RankStability:
        """
        Measure how much the weights move when the rows are shuffled.

        Curvature depends on the order of the points, so shuffling rows changes the
        individual weights. This reports Kendall tau between the reference weights
        and the weights of each shuffle; it asserts nothing.
        """
        reference = self.weights(ds)
        reference_order = RankedFeatures.from_weights(reference, ds.feature_names).feature_ids
        rng = np.random.default_rng(seed)
        taus, identical = [], 0
        for _ in range(n_permutations):
            shuffled = self.weights(ds.take_rows(rng.permutation(ds.n_instances)))
            tau = kendalltau(reference, shuffled).statistic
            taus.append(1.0 if np.isnan(tau) else float(tau))
            order = RankedFeatures.from_weights(shuffled, ds.feature_names).feature_ids
            identical += order == reference_order
        return RankStability(
            taus=taus,
            mean_tau=float(np.mean(taus)),
            min_tau=float(np.min(taus)),
            identical_orderings=int(identical),
        )
