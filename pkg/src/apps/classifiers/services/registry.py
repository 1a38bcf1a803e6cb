from typing import Callable, Protocol

import numpy as np

import constants
from apps.classifiers.exceptions import UnknownClassifier
from apps.classifiers.schemas import ClassifierKind


class Estimator(Protocol):
    """
    What a classifier plug-in provides: fit on class ids 0..n_classes-1, then predict.
    """

    def fit(self, X: np.ndarray, y: np.ndarray, n_classes: int) -> "Estimator": ...

    def predict(self, X: np.ndarray) -> np.ndarray: ...


EstimatorFactory = Callable[[ClassifierKind], Estimator]


class ClassifierRegistry:
    """
    Name to estimator-factory mapping; the grid resolves classifier names here.

    Plug-ins add themselves with the `register` decorator:

        @CLASSIFIERS.register("rf")
        def random_forest(kind: ClassifierKind) -> Estimator:
            ...
    """

    def __init__(self, name: str):
        self.name = name
        self._factories: dict[str, EstimatorFactory] = {}

    def register(self, name: str) -> Callable[[EstimatorFactory], EstimatorFactory]:
        """
        Decorator registering an estimator factory under `name`.
        """

        def decorator(factory: EstimatorFactory) -> EstimatorFactory:
            self._factories[name.lower()] = factory
            return factory

        return decorator

    def resolve(self, name: str) -> str:
        """
        Canonical registered name for `name`.

        Raises:
            UnknownClassifier: If nothing is registered under the name.
        """
        key = name.strip().lower()
        if key not in self._factories:
            raise UnknownClassifier(
                constants.UNKNOWN_NAME.format(
                    kind="classifier", name=name, valid=", ".join(self.names)
                )
            )
        return key

    def create(self, kind: ClassifierKind) -> Estimator:
        return self._factories[self.resolve(kind.tag)](kind)

    @property
    def names(self) -> list[str]:
        return sorted(self._factories)


CLASSIFIERS = ClassifierRegistry("classifiers")


def register_classifier(name: str, factory: EstimatorFactory) -> EstimatorFactory:
    """
    Register an estimator factory under `name` without the decorator syntax.
    """
    return CLASSIFIERS.register(name)(factory)
