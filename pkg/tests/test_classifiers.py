import numpy as np
import pytest

from apps.classifiers.exceptions import FeatureCountMismatch, MissingClassError, UnknownClassifier
from apps.classifiers.schemas import ClassifierKind
from apps.classifiers.services import (
    CLASSIFIERS,
    GaussianNaiveBayes,
    GiniDecisionTree,
    L1LogisticRegression,
    NearestNeighbors,
    fit,
    predict,
    register_classifier,
)
from core.types import ClassifierTag, ExitCode


@pytest.mark.parametrize("name", [tag.value for tag in ClassifierTag])
def test_separable_blobs_are_learnt(blobs, name):
    model = fit(ClassifierKind.parse(name), blobs.features, blobs.labels)
    assert np.mean(predict(model, blobs.features) == blobs.labels) == 1.0


@pytest.mark.parametrize("name", [tag.value for tag in ClassifierTag])
def test_fit_and_predict_are_deterministic(btds_like, name):
    kind = ClassifierKind.parse(name)
    first = predict(fit(kind, btds_like.features, btds_like.labels), btds_like.features)
    second = predict(fit(kind, btds_like.features, btds_like.labels), btds_like.features)
    np.testing.assert_array_equal(first, second)


def test_gnb_parameters_by_hand():
    X = np.array([[1.0], [3.0], [10.0], [12.0], [14.0]])
    y = np.array([0, 0, 1, 1, 1])
    gnb = GaussianNaiveBayes().fit(X, y, 2)
    np.testing.assert_allclose(gnb.means_[:, 0], [2.0, 12.0], atol=1e-12)
    np.testing.assert_allclose(gnb.variances_[:, 0], [1.0, 8.0 / 3.0], atol=1e-12)
    np.testing.assert_allclose(np.exp(gnb.log_priors_), [0.4, 0.6], atol=1e-12)

    query = np.array([[6.0]])
    by_hand = [
        np.log(p) - 0.5 * np.log(2 * np.pi * v) - (6.0 - m) ** 2 / (2 * v)
        for p, m, v in [(0.4, 2.0, 1.0), (0.6, 12.0, 8.0 / 3.0)]
    ]
    np.testing.assert_allclose(gnb.joint_log_likelihood(query)[0], by_hand, atol=1e-12)
    assert gnb.predict(query)[0] == int(np.argmax(by_hand))


def test_gnb_variance_floor():
    X = np.array([[1.0, 5.0], [1.0, 6.0], [2.0, 7.0], [2.0, 9.0]])
    gnb = GaussianNaiveBayes().fit(X, np.array([0, 0, 1, 1]), 2)
    assert gnb.variances_[0, 0] == 1e-9
    assert np.isfinite(gnb.joint_log_likelihood(X)).all()


def test_three_nearest_neighbours_by_hand():
    X = np.array([[0.0, 0.0], [1.0, 0.0], [0.0, 2.0], [5.0, 5.0], [6.0, 5.0]])
    y = np.array([1, 0, 1, 0, 0])
    knn = NearestNeighbors(3).fit(X, y, 2)
    # distances from (0.5, 0.5): 0.71, 0.71, 1.58, 6.36, 7.07 -> labels 1, 0, 1
    assert knn.predict(np.array([[0.5, 0.5]]))[0] == 1


def test_one_nearest_neighbour_reproduces_training_labels(btds_like):
    model = fit(ClassifierKind.parse("knn", k_neighbors=1), btds_like.features, btds_like.labels)
    np.testing.assert_array_equal(predict(model, btds_like.features), btds_like.labels)


def test_knn_vote_ties_go_to_the_smallest_class():
    X = np.array([[-1.0], [1.0], [5.0]])
    knn = NearestNeighbors(2).fit(X, np.array([1, 0, 1]), 2)
    assert knn.predict(np.array([[0.0]]))[0] == 0


def test_knn_ignores_training_row_order(btds_like):
    rng = np.random.default_rng(0)
    order = rng.permutation(btds_like.n_instances)
    queries = rng.normal(size=(30, btds_like.n_features)) * 3 + btds_like.features.mean(axis=0)
    plain = NearestNeighbors(3).fit(btds_like.features, btds_like.labels, 6)
    shuffled = NearestNeighbors(3).fit(btds_like.features[order], btds_like.labels[order], 6)
    np.testing.assert_array_equal(plain.predict(queries), shuffled.predict(queries))


def test_knn_distance_ties_use_labels_not_positions():
    X = np.array([[1.0], [-1.0], [1.0], [-1.0]])
    y = np.array([1, 1, 0, 0])
    for order in ([0, 1, 2, 3], [3, 2, 1, 0]):
        knn = NearestNeighbors(3).fit(X[order], y[order], 2)
        assert knn.predict(np.array([[0.0]]))[0] == 0


def test_tree_depth_limit_and_majority_leaves():
    # alternating labels along one axis need one split per boundary
    X = np.arange(64, dtype=float)[:, None]
    y = (np.arange(64) // 2) % 2
    tree = GiniDecisionTree(max_depth=5).fit(X, y, 2)
    assert tree.root_.max_depth() <= 5
    for leaf in tree.root_.leaves():
        assert leaf.label == int(np.argmax(leaf.counts))
    assert np.mean(tree.predict(X) == y) < 1.0


def test_tree_goes_left_on_threshold():
    tree = GiniDecisionTree(max_depth=1).fit(np.array([[0.0], [2.0]]), np.array([0, 1]), 2)
    assert tree.root_.threshold == 1.0
    np.testing.assert_array_equal(tree.predict(np.array([[1.0], [1.0001]])), [0, 1])


def test_logistic_loss_never_increases(btds_like):
    X = (btds_like.features - btds_like.features.mean(axis=0)) / btds_like.features.std(axis=0)
    lr = L1LogisticRegression(max_iters=300).fit(X, btds_like.labels, 6)
    for trace in lr.loss_trace_:
        assert np.all(np.diff(trace) <= 1e-12)
        assert trace[-1] < trace[0]


def test_strong_l1_penalty_zeroes_weights(blobs):
    lr = L1LogisticRegression(c=1e-4, max_iters=200).fit(blobs.features, blobs.labels, 2)
    np.testing.assert_array_equal(lr.coef_[:, :-1], 0.0)


def test_missing_class_is_a_training_error(blobs):
    with pytest.raises(MissingClassError) as info:
        fit(ClassifierKind.parse("gnb"), blobs.features, blobs.labels, n_classes=3)
    assert info.value.exit_code == ExitCode.DATA


def test_predict_checks_feature_count(blobs):
    model = fit(ClassifierKind.parse("dt"), blobs.features, blobs.labels)
    with pytest.raises(FeatureCountMismatch) as info:
        predict(model, np.zeros((2, 3)))
    assert info.value.exit_code == ExitCode.CONFIGURATION


def test_unknown_classifier_lists_valid_names():
    with pytest.raises(UnknownClassifier) as info:
        ClassifierKind.parse("svm")
    assert info.value.exit_code == ExitCode.CONFIGURATION
    assert all(name in info.value.message for name in ("gnb", "knn", "dt", "lr"))


def test_plug_in_classifier(blobs):
    class Majority:
        def fit(self, X, y, n_classes):
            self.label_ = int(np.argmax(np.bincount(y, minlength=n_classes)))
            return self

        def predict(self, X):
            return np.full(len(X), self.label_)

    register_classifier("majority", lambda kind: Majority())
    try:
        model = fit(ClassifierKind.parse("majority"), blobs.features, blobs.labels)
        np.testing.assert_array_equal(predict(model, blobs.features[:3]), [0, 0, 0])
    finally:
        CLASSIFIERS._factories.pop("majority")


def test_tree_threshold_between_adjacent_floats():
    a = np.nextafter(1.0, 2.0)
    b = np.nextafter(a, 2.0)
    X = np.array([[a], [a], [b], [b]])
    y = np.array([0, 0, 1, 1])
    tree = GiniDecisionTree(max_depth=5).fit(X, y, 2)
    assert a <= tree.root_.threshold < b
    np.testing.assert_array_equal(tree.predict(X), y)
    for leaf in tree.root_.leaves():
        assert sum(leaf.counts) > 0
