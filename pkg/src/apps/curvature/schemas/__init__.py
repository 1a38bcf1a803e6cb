from apps.curvature.schemas.triple import CurvatureReading, Point2, Triple

__all__ = ["CurvatureReading", "Point2", "Triple"]
