from apps.normalize.schemas.normalizer import (
    NORMALIZER_STEPS,
    MinMaxParams,
    NormalizedFeatures,
    NormalizerKind,
)

__all__ = ["NORMALIZER_STEPS", "MinMaxParams", "NormalizedFeatures", "NormalizerKind"]
