import math

import numpy as np
import pytest
from scipy.spatial.distance import pdist

from apps.selectors.exceptions import (
    InvalidComponents,
    NotARanking,
    PcaDimensionMismatch,
    UnknownSelector,
)
from apps.selectors.schemas import SelectorKind
from apps.selectors.services import (
    SelectorService,
    chi_square,
    discretize,
    pca_fit,
    pca_inverse_transform,
    pca_transform,
    score_chi2,
    score_ig,
    score_mi,
)
from core.types import BinPolicy, ExitCode, SelectorTag


def test_equal_width_bins():
    bins = discretize(np.arange(10.0), bin_count=5, policy=BinPolicy.EQUAL_WIDTH)
    np.testing.assert_array_equal(bins, [0, 0, 1, 1, 2, 2, 3, 3, 4, 4])


def test_equal_frequency_bins_share_ties():
    bins = discretize([1.0, 1.0, 1.0, 2.0, 3.0, 4.0], bin_count=3, policy=BinPolicy.EQUAL_FREQUENCY)
    np.testing.assert_array_equal(bins, [0, 0, 0, 1, 2, 2])


def test_constant_feature_scores_zero():
    labels = np.array([0, 1, 0, 1])
    assert score_ig(np.ones(4), labels) == 0.0
    assert score_mi(np.ones(4), labels) == 0.0
    np.testing.assert_array_equal(discretize(np.ones(4)), [0, 0, 0, 0])


def test_information_gain_of_a_perfect_feature():
    feature = np.array([0.0, 0.1, 0.2, 0.9, 1.0, 0.95])
    labels = np.array([0, 0, 0, 1, 1, 1])
    assert score_ig(feature, labels, bin_count=2) == pytest.approx(1.0)


def test_information_gain_equals_mutual_information_on_the_same_bins():
    rng = np.random.default_rng(0)
    feature = rng.normal(size=200)
    labels = (feature + rng.normal(size=200) > 0).astype(int)
    for policy in BinPolicy:
        assert score_ig(feature, labels, policy=policy) == pytest.approx(
            score_mi(feature, labels, policy=policy), abs=1e-12
        )


def test_mutual_information_ignores_increasing_transforms():
    rng = np.random.default_rng(1)
    feature = rng.normal(size=150)
    labels = rng.integers(0, 3, size=150)
    assert score_mi(np.exp(feature), labels) == score_mi(feature, labels)


def test_chi_square_by_hand():
    assert chi_square(np.array([[10, 0], [0, 10]])).statistic == pytest.approx(20.0)
    result = chi_square(np.array([[5, 5], [0, 0]]))
    assert result.statistic == 0.0
    assert result.zero_expected_cells == 2
    feature = np.array([0.0, 0.1, 0.9, 1.0])
    assert score_chi2(feature, np.array([0, 0, 1, 1]), bin_count=2) == pytest.approx(4.0)


def test_pca_axes():
    rng = np.random.default_rng(2)
    X = rng.normal(size=(100, 4)) @ rng.normal(size=(4, 4))
    model = pca_fit(X)
    assert np.all(np.diff(model.eigenvalues) <= 0)
    np.testing.assert_allclose(model.components @ model.components.T, np.eye(4), atol=1e-10)
    pivots = np.argmax(np.abs(model.components), axis=1)
    assert np.all(model.components[np.arange(4), pivots] > 0)
    np.testing.assert_allclose(
        np.var(pca_transform(model, X, 4), axis=0, ddof=1), model.eigenvalues, rtol=1e-9
    )
    np.testing.assert_allclose(pca_inverse_transform(model, pca_transform(model, X, 4)), X)


def test_pca_allows_rank_deficient_data():
    X = np.column_stack([np.arange(10.0), 2 * np.arange(10.0)])
    model = pca_fit(X)
    assert model.eigenvalues[1] == pytest.approx(0.0, abs=1e-10)


def test_pca_errors():
    model = pca_fit(np.random.default_rng(3).normal(size=(20, 3)))
    with pytest.raises(PcaDimensionMismatch) as info:
        pca_transform(model, np.zeros((2, 4)), 2)
    assert info.value.exit_code == ExitCode.CONFIGURATION
    with pytest.raises(InvalidComponents):
        pca_transform(model, np.zeros((2, 3)), 4)


def test_selector_parsing():
    assert SelectorKind.parse("IG").policy == BinPolicy.EQUAL_WIDTH
    assert SelectorKind.parse("mi").policy == BinPolicy.EQUAL_FREQUENCY
    with pytest.raises(UnknownSelector) as info:
        SelectorKind.parse("relief")
    assert "cst" in info.value.message


@pytest.mark.parametrize("name", ["cfs", "ig", "mi", "cst"])
def test_ranking_selectors_keep_raw_columns(btds_like, name):
    service = SelectorService()
    kind = SelectorKind.parse(name)
    ranking = service.score_features(kind, btds_like)
    selected = service.select_with(kind, btds_like, 4)
    assert selected.feature_names == [btds_like.feature_names[i] for i in ranking.feature_ids[:4]]
    np.testing.assert_array_equal(selected.features, btds_like.features[:, ranking.feature_ids[:4]])


@pytest.mark.parametrize("name", ["ig", "mi", "cst"])
def test_filters_find_the_informative_columns(btds_like, name):
    ranking = SelectorService().score_features(SelectorKind.parse(name), btds_like)
    assert set(ranking.feature_ids[:3]) == {0, 1, 2}


def test_pca_selection_projects(btds_like):
    service = SelectorService()
    kind = SelectorKind.parse("pca")
    selection = service.fit(kind, btds_like, 3)
    assert selection.output_names == ["PC1", "PC2", "PC3"]
    assert service.transform(selection, btds_like.features).shape == (btds_like.n_instances, 3)
    reduced = service.select_with(kind, btds_like, 3)
    assert reduced.feature_names == ["PC1", "PC2", "PC3"]
    with pytest.raises(NotARanking):
        service.score_features(kind, btds_like)


def test_every_selector_is_deterministic(bccds_like):
    service = SelectorService()
    for tag in SelectorTag:
        first = service.select_with(SelectorKind(tag=tag), bccds_like, 5)
        second = service.select_with(SelectorKind(tag=tag), bccds_like, 5)
        np.testing.assert_array_equal(first.features, second.features)


# eight points, two bins; the outlier 21 moves every other value into the first
# equal-width bin while equal-frequency bins still split four and four
HAND_FEATURE = np.array([0.0, 1.0, 2.0, 3.0, 4.0, 5.0, 6.0, 21.0])
HAND_LABELS = np.array([0, 0, 0, 1, 0, 1, 1, 1])


def entropy_bits(*probabilities: float) -> float:
    return -sum(p * math.log2(p) for p in probabilities if p > 0)


def test_information_gain_on_the_hand_fixture():
    # equal-width bins: (4 x 0, 3 x 1) and (1 x 1)
    expected = 1.0 - 7 / 8 * entropy_bits(4 / 7, 3 / 7)
    assert score_ig(HAND_FEATURE, HAND_LABELS, bin_count=2) == pytest.approx(expected, abs=1e-12)


def test_mutual_information_on_the_hand_fixture():
    # equal-frequency bins: (3 x 0, 1 x 1) and (1 x 0, 3 x 1)
    expected = 1.0 - entropy_bits(3 / 4, 1 / 4)
    assert score_mi(HAND_FEATURE, HAND_LABELS, bin_count=2) == pytest.approx(expected, abs=1e-12)


def test_chi_square_on_the_hand_fixture():
    # observed [[4, 3], [0, 1]] against expected [[3.5, 3.5], [0.5, 0.5]]
    assert score_chi2(HAND_FEATURE, HAND_LABELS, bin_count=2) == pytest.approx(8 / 7, abs=1e-12)


def test_perfect_balanced_predictor_has_chi_square_m():
    feature = np.repeat([0.0, 1.0], 50)
    assert score_chi2(feature, feature.astype(int), bin_count=2) == pytest.approx(100.0)


def test_pca_projection_of_the_diagonal():
    x = np.arange(-3.0, 4.0)
    model = pca_fit(np.column_stack([x, x]))
    np.testing.assert_allclose(np.abs(model.components[0]), [1 / math.sqrt(2)] * 2)
    assert model.eigenvalues[1] == pytest.approx(0.0, abs=1e-12)
    projected = pca_transform(model, np.column_stack([x, x]), 1)[:, 0]
    assert np.allclose(projected, math.sqrt(2) * x) or np.allclose(projected, -math.sqrt(2) * x)


def test_full_projection_preserves_distances():
    X = np.random.default_rng(6).normal(size=(30, 4))
    model = pca_fit(X)
    np.testing.assert_allclose(pdist(pca_transform(model, X, 4)), pdist(X), atol=1e-8)
