from apps.classifiers.schemas.classifier import ClassifierKind, TrainedModel, TreeNode

__all__ = ["ClassifierKind", "TrainedModel", "TreeNode"]
