import math

import numpy as np
from pydantic import field_validator

from core.utils import FrozenModel


class Point2(FrozenModel):
    """
    A point of a 2-D plane with finite coordinates.
    """

    x: float
    y: float

    @field_validator("x", "y")
    def check_finite(cls, value: float) -> float:
        """
        Reject NaN and infinite coordinates.
        """
        if not math.isfinite(value):
            raise ValueError("coordinates must be finite")
        return value


class Triple(FrozenModel):
    """
    Three consecutive points of a plane; q2 is the corner the curvature belongs to.

    Collinear and coincident triples are valid and have a defined curvature of 0.
    """

    q1: Point2
    q2: Point2
    q3: Point2

    @classmethod
    def of(cls, q1, q2, q3) -> "Triple":
        """
        Build a triple from three (x, y) pairs.
        """
        return cls(
            q1=Point2(x=q1[0], y=q1[1]),
            q2=Point2(x=q2[0], y=q2[1]),
            q3=Point2(x=q3[0], y=q3[1]),
        )

    def as_array(self) -> np.ndarray:
        return np.array(
            [[self.q1.x, self.q1.y], [self.q2.x, self.q2.y], [self.q3.x, self.q3.y]]
        )

    def reversed(self) -> "Triple":
        return Triple(q1=self.q3, q2=self.q2, q3=self.q1)


class CurvatureReading(FrozenModel):
    """
    Curvature of one triple.

    Attributes:
        value (float): Menger curvature, >= 0.
        degenerate (bool): True when two or more points coincide; `value` is then 0.
    """

    value: float
    degenerate: bool = False
