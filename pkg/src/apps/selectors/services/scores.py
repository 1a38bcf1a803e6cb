"""
Filter scores of a single feature against the class labels.

Continuous features are discretised first: equal-width bins over [min, max] or
equal-frequency bins by rank. Entropies are in bits with 0*log(0) = 0.
"""

import numpy as np
from scipy.stats import entropy, rankdata

import constants
from apps.selectors.schemas import ChiSquareResult
from core.types import BinPolicy


def discretize(
    feature, bin_count: int = constants.DEFAULT_BIN_COUNT, policy: BinPolicy = BinPolicy.EQUAL_WIDTH
) -> np.ndarray:
    """
    Bin index (0..bin_count-1) of every value of a feature.

    Equal-width bins split [min, max] evenly, the maximum falling in the last bin.
    Equal-frequency bins follow the rank of each value, tied values sharing the bin
    of their lowest rank. A constant feature falls entirely in bin 0.
    """
    values = np.asarray(feature, dtype=float)
    low, high = values.min(), values.max()
    if high == low:
        return np.zeros(len(values), dtype=np.int64)
    if policy == BinPolicy.EQUAL_WIDTH:
        position = (values - low) / (high - low)
        bins = np.floor(position * bin_count)
    else:
        ranks = rankdata(values, method="min")
        bins = np.floor((ranks - 1) * bin_count / len(values))
    return np.minimum(bins, bin_count - 1).astype(np.int64)


def contingency_table(bins: np.ndarray, labels, bin_count: int, n_classes: int | None = None) -> np.ndarray:
    """
    Counts of (bin, class) pairs; rows are bins, columns are classes.
    """
    labels = np.asarray(labels, dtype=np.int64)
    n_classes = n_classes or int(labels.max()) + 1
    table = np.zeros((bin_count, n_classes))
    np.add.at(table, (bins, labels), 1.0)
    return table


def _table(feature, labels, bin_count: int, policy: BinPolicy) -> np.ndarray:
    return contingency_table(discretize(feature, bin_count, policy), labels, bin_count)


def score_ig(
    feature,
    labels,
    bin_count: int = constants.DEFAULT_BIN_COUNT,
    policy: BinPolicy = BinPolicy.EQUAL_WIDTH,
) -> float:
    """
    Information gain H(Y) - H(Y | binned feature), in bits.

    Parameters:
        feature: Length-m feature values.
        labels: Length-m class ids.
        bin_count (int): Number of bins.
        policy (BinPolicy): Discretisation; equal-width by default.

    Returns:
        float: The gain, 0 for a constant feature.
    """
    table = _table(feature, labels, bin_count, policy)
    total = table.sum()
    class_entropy = entropy(table.sum(axis=0), base=2)
    bin_totals = table.sum(axis=1)
    conditional = sum(
        (count / total) * entropy(row, base=2)
        for row, count in zip(table, bin_totals)
        if count > 0
    )
    return max(0.0, float(class_entropy - conditional))


def score_mi(
    feature,
    labels,
    bin_count: int = constants.DEFAULT_BIN_COUNT,
    policy: BinPolicy = BinPolicy.EQUAL_FREQUENCY,
) -> float:
    """
    Mutual information I(binned feature; Y), in bits.

    The same quantity as information gain; with the default equal-frequency
    binning it is a different estimator of it.
    """
    joint = _table(feature, labels, bin_count, policy)
    joint /= joint.sum()
    outer = np.outer(joint.sum(axis=1), joint.sum(axis=0))
    nonzero = joint > 0
    return max(0.0, float(np.sum(joint[nonzero] * np.log2(joint[nonzero] / outer[nonzero]))))


def chi_square(table: np.ndarray) -> ChiSquareResult:
    """
    Pearson chi-square of a contingency table; cells with zero expected count
    contribute nothing and are counted.
    """
    table = np.asarray(table, dtype=float)
    expected = np.outer(table.sum(axis=1), table.sum(axis=0)) / table.sum()
    usable = expected > 0
    statistic = np.sum((table[usable] - expected[usable]) ** 2 / expected[usable])
    return ChiSquareResult(
        statistic=float(statistic), zero_expected_cells=int((~usable).sum())
    )


def score_chi2(
    feature,
    labels,
    bin_count: int = constants.DEFAULT_BIN_COUNT,
    policy: BinPolicy = BinPolicy.EQUAL_WIDTH,
) -> float:
    """
    Chi-square statistic of the bin_count × n_classes table of a feature.
    """
    return chi_square(_table(feature, labels, bin_count, policy)).statistic
