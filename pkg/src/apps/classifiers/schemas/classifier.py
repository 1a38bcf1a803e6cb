from typing import Any, Literal, Optional

from pydantic import Field

import constants
from core.utils import CamelCaseModel, FrozenModel


class ClassifierKind(FrozenModel):
    """
    A classifier name plus the hyperparameters of the built-in classifiers.

    Attributes:
        tag (str): Registered classifier name (gnb, knn, dt, lr or a plug-in).
        k_neighbors (int): Neighbours voting in kNN.
        dt_max_depth (int): Maximum depth of the decision tree.
        dt_criterion (str): Impurity used for tree splits.
        lr_penalty (str): Regularisation of logistic regression.
        lr_c (float): Inverse regularisation strength of logistic regression, with
            the objective C * sum(log-loss) + ||w||_1.
        lr_max_iters (int): Proximal gradient iterations per class.
        seed (int): Seed offered to stochastic plug-ins.
    """

    tag: str
    k_neighbors: int = Field(default=constants.DEFAULT_K_NEIGHBORS, gt=0)
    dt_max_depth: int = Field(default=constants.DEFAULT_DT_MAX_DEPTH, gt=0)
    dt_criterion: Literal["gini"] = "gini"
    lr_penalty: Literal["l1"] = "l1"
    lr_c: float = Field(default=constants.DEFAULT_LR_C, gt=0)
    lr_max_iters: int = Field(default=constants.DEFAULT_LR_MAX_ITERS, gt=0)
    seed: int = 0

    @classmethod
    def parse(cls, name: str, **hyperparams: Any) -> "ClassifierKind":
        """
        Build a kind from a command-line name, checking it against the registry.

        Raises:
            UnknownClassifier: If no classifier is registered under the name.
        """
        from apps.classifiers.services import CLASSIFIERS

        return cls(tag=CLASSIFIERS.resolve(name), **hyperparams)

    @property
    def label(self) -> str:
        return self.tag.upper()


class TrainedModel(FrozenModel):
    """
    A fitted classifier.

    Attributes:
        kind (ClassifierKind): How it was trained.
        estimator (Any): The fitted estimator (opaque state).
        n_features (int): Columns seen during fit.
        n_classes (int): Number of class ids.
    """

    kind: ClassifierKind
    estimator: Any
    n_features: int
    n_classes: int


class TreeNode(CamelCaseModel):
    """
    A node of a decision tree. Leaves have no split.

    Attributes:
        depth (int): 0 at the root.
        counts (list[int]): Training instances per class reaching the node.
        label (int): Majority class of `counts` (smallest id on ties).
        feature (int | None): Split column.
        threshold (float | None): Rows with value <= threshold go left.
    """

    depth: int
    counts: list[int]
    label: int
    feature: Optional[int] = None
    threshold: Optional[float] = None
    left: Optional["TreeNode"] = None
    right: Optional["TreeNode"] = None

    @property
    def is_leaf(self) -> bool:
        return self.feature is None

    def max_depth(self) -> int:
        """
        Depth of the deepest leaf below this node.
        """
        if self.is_leaf:
            return self.depth
        return max(self.left.max_depth(), self.right.max_depth())

    def leaves(self) -> list["TreeNode"]:
        if self.is_leaf:
            return [self]
        return self.left.leaves() + self.right.leaves()


TreeNode.model_rebuild()
