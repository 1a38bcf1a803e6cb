"""
Menger curvature of point triples in a plane.

The curvature of q1, q2, q3 is the reciprocal of the radius of the circle through
them, 2*sin(phi)/|q1 q3| with phi the angle at the q2 corner. It is evaluated as
4*Area/(d12*d23*d13) with the area from the cross product, which stays accurate
when phi is close to 0 or pi.

The Law of Cosines gives cos(phi) = (d12^2 + d23^2 - d13^2) / (2*d12*d23). A
variant in circulation squares both distances in the denominator; that form is
wrong (it leaves [-1, 1] for generic triples) and is not used here.
"""

import math

import numpy as np

import constants
from apps.curvature.exceptions import CollinearTripleError
from apps.curvature.schemas import CurvatureReading, Triple


def _sides(points: np.ndarray) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Twice the signed area and the three side lengths, vectorised over triples."""
    a, b, c = points[..., 0, :], points[..., 1, :], points[..., 2, :]
    ab, bc, ac = b - a, c - b, c - a
    cross = ab[..., 0] * ac[..., 1] - ab[..., 1] * ac[..., 0]
    d12 = np.hypot(ab[..., 0], ab[..., 1])
    d23 = np.hypot(bc[..., 0], bc[..., 1])
    d13 = np.hypot(ac[..., 0], ac[..., 1])
    return cross, d12, d23, d13


def triple_curvatures(points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Curvature of many triples at once.

    Parameters:
        points (np.ndarray): Array of shape (t, 3, 2).

    Returns:
        tuple[np.ndarray, np.ndarray]: Curvatures (>= 0) and the degenerate flag of
            each triple. Collinear triples give exactly 0; so do coincident ones,
            which are also flagged.
    """
    points = np.asarray(points, dtype=float)
    cross, d12, d23, d13 = _sides(points)
    degenerate = (d12 == 0) | (d23 == 0) | (d13 == 0)
    longest = np.maximum(np.maximum(d12, d23), d13)
    with np.errstate(divide="ignore", invalid="ignore"):
        normalized_area = np.abs(cross) / np.where(degenerate, 1.0, longest**2)
        curvature = 2.0 * np.abs(cross) / (d12 * d23 * d13)
    flat = degenerate | (normalized_area <= constants.COLLINEAR_TOLERANCE)
    return np.where(flat, 0.0, curvature), degenerate


def plane_curvatures(points: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """
    Curvature at every interior point of a sequence of 2-D points.

    The first and last points are boundary points and have no curvature, so a
    sequence of m points yields m - 2 values.
    """
    points = np.asarray(points, dtype=float)
    windows = np.stack([points[:-2], points[1:-1], points[2:]], axis=1)
    return triple_curvatures(windows)


def evaluate_triple(t: Triple) -> CurvatureReading:
    """
    Curvature of one triple together with its degenerate flag.
    """
    values, degenerate = triple_curvatures(t.as_array()[None, ...])
    return CurvatureReading(value=float(values[0]), degenerate=bool(degenerate[0]))


def menger_curvature(t: Triple) -> float:
    """
    Menger curvature of a triple of points.

    Parameters:
        t (Triple): Three points; q2 is the corner.

    Returns:
        float: 1/R for the circle through the points, exactly 0 for collinear or
            coincident points (see `evaluate_triple` for the degenerate flag).
    """
    return evaluate_triple(t).value


def corner_cosine(t: Triple) -> float:
    """
    cos of the angle at q2 by the Law of Cosines.

    Raises:
        CollinearTripleError: If q2 coincides with q1 or q3 (the angle is undefined).
    """
    _, d12, d23, d13 = _sides(t.as_array())
    if d12 == 0 or d23 == 0:
        raise CollinearTripleError("The q2 corner angle is undefined for coincident points.")
    return float((d12**2 + d23**2 - d13**2) / (2.0 * d12 * d23))


def curvature_from_cosine(t: Triple) -> float:
    """
    Curvature as 2*sin(phi)/|q1 q3| through the corner cosine.

    Kept as a cross-check of the area formula; loses precision near phi = 0 or pi.
    """
    cosine = min(1.0, max(-1.0, corner_cosine(t)))
    _, _, _, d13 = _sides(t.as_array())
    if d13 == 0:
        return 0.0
    return 2.0 * math.sqrt(1.0 - cosine * cosine) / float(d13)


def circumradius_oracle(t: Triple) -> float:
    """
    Radius of the circle through three points, R = d12*d23*d13 / (4*Area).

    Written independently of `menger_curvature` so tests can compare the two.

    Raises:
        CollinearTripleError: If the points are collinear (infinite radius).
    """
    (x1, y1), (x2, y2), (x3, y3) = t.as_array()
    area = abs((x2 - x1) * (y3 - y1) - (x3 - x1) * (y2 - y1)) / 2.0
    d12 = math.dist((x1, y1), (x2, y2))
    d23 = math.dist((x2, y2), (x3, y3))
    d13 = math.dist((x1, y1), (x3, y3))
    longest = max(d12, d23, d13)
    if longest == 0 or 2.0 * area / longest**2 <= constants.COLLINEAR_TOLERANCE:
        raise CollinearTripleError
    return d12 * d23 * d13 / (4.0 * area)
