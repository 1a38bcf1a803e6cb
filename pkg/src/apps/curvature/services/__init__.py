from apps.curvature.services.curvature import (
    circumradius_oracle,
    corner_cosine,
    curvature_from_cosine,
    evaluate_triple,
    menger_curvature,
    plane_curvatures,
    triple_curvatures,
)

__all__ = [
    "circumradius_oracle",
    "corner_cosine",
    "curvature_from_cosine",
    "evaluate_triple",
    "menger_curvature",
    "plane_curvatures",
    "triple_curvatures",
]
