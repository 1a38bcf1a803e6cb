from apps.normalize.services.normalize import (
    FittedNormalizer,
    apply_minmax,
    apply_normalizer,
    fit_minmax,
    minmax_per_feature,
    power_normalize,
)

__all__ = [
    "FittedNormalizer",
    "apply_minmax",
    "apply_normalizer",
    "fit_minmax",
    "minmax_per_feature",
    "power_normalize",
]
