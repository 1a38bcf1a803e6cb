from apps.ranking.schemas.ranking import (
    FeaturePlane,
    FeatureWeight,
    RankedFeatures,
    RankStability,
)

__all__ = ["FeaturePlane", "FeatureWeight", "RankedFeatures", "RankStability"]
