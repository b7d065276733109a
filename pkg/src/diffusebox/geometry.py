"""Planar geometric primitives: points, implicit domains and triangle quadrature.

Coordinates are plain floats or numpy arrays; all functions are vectorized
over trailing point dimensions and free of global state.
"""

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

__all__ = [
    "Point2",
    "ImplicitDomain",
    "QuadratureRule",
    "circle_signed_distance",
    "circle_domain",
    "triangle_tube_overlap",
    "quadrature",
]


@dataclass(frozen=True)
class Point2:
    """A point in the plane. Coordinates must be finite."""

    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError("point coordinates must be finite")

    def __iter__(self):
        yield self.x
        yield self.y


@dataclass(frozen=True)
class ImplicitDomain:
    """Level-set description of a bounded domain.

    ``signed_distance(x, y)`` is negative strictly inside the domain, zero on
    the interface and positive outside. ``is_exact`` declares that the level
    set function is the exact Euclidean distance to the interface; in that
    case ``abs_distance_range`` returns, for an array of triangles of shape
    ``(..., 3, 2)``, the exact range ``(dmin, dmax)`` of ``|signed_distance|``
    over each triangle. Without a range function, classification falls back
    to a conservative vertex-sampling test.
    """

    signed_distance: Callable
    is_exact: bool = False
    abs_distance_range: Optional[Callable] = None


@dataclass(frozen=True)
class QuadratureRule:
    """Symmetric quadrature rule on the reference triangle.

    ``points`` holds barycentric coordinates, shape (npts, 3); ``weights``
    sum to one and are relative to the triangle area.
    """

    points: np.ndarray
    weights: np.ndarray
    degree: int


def circle_signed_distance(x, y):
    """Signed distance to the unit circle centred at the origin.

    Negative inside the disk, ``|p| - 1`` everywhere; exact Euclidean
    distance for every point in the plane.
    """
    return np.hypot(x, y) - 1.0


def _circle_radius_range(tri):
    """Exact range of the radial coordinate over each triangle.

    ``tri`` has shape (..., 3, 2). The maximum of ``|p|`` over a triangle is
    attained at a vertex (convexity); the minimum is zero if the origin lies
    inside, otherwise the distance from the origin to the closest edge.
    """
    tri = np.asarray(tri, dtype=float)
    r_vert = np.hypot(tri[..., 0], tri[..., 1])
    r_max = r_vert.max(axis=-1)

    # distance from the origin to each edge segment
    p = tri
    q = np.roll(tri, -1, axis=-2)
    d = q - p
    dd = (d * d).sum(axis=-1)
    t = np.clip(-(p * d).sum(axis=-1) / np.where(dd > 0, dd, 1.0), 0.0, 1.0)
    closest = p + t[..., None] * d
    r_edge = np.hypot(closest[..., 0], closest[..., 1]).min(axis=-1)

    # origin-in-triangle test via consistent cross-product signs
    cross = p[..., 0] * q[..., 1] - p[..., 1] * q[..., 0]
    inside = (cross >= 0).all(axis=-1) | (cross <= 0).all(axis=-1)
    r_min = np.where(inside, 0.0, r_edge)
    return r_min, r_max


def _circle_abs_distance_range(tri):
    """Exact range of |signed distance to the unit circle| over triangles."""
    r_min, r_max = _circle_radius_range(tri)
    lo = np.abs(r_min - 1.0)
    hi = np.abs(r_max - 1.0)
    d_max = np.maximum(lo, hi)
    d_min = np.where((r_min <= 1.0) & (r_max >= 1.0), 0.0, np.minimum(lo, hi))
    return d_min, d_max


def circle_domain():
    """The open unit disk centred at the origin as an ImplicitDomain."""
    return ImplicitDomain(
        signed_distance=circle_signed_distance,
        is_exact=True,
        abs_distance_range=_circle_abs_distance_range,
    )


def _triangle_array(tri):
    pts = np.array([tuple(p) for p in tri], dtype=float)
    if pts.shape != (3, 2):
        raise ValueError("triangle must consist of three planar points")
    return pts


def triangle_tube_overlap(tri, dom, eps):
    """Whether a triangle intersects the closed tube of width eps around the interface.

    The tube is the set of points whose level-set value has magnitude at most
    ``eps``. For domains with an exact range function the decision is exact;
    otherwise a conservative vertex test is used (a triangle is reported as
    intersecting whenever ``min_v |dist(v)| <= eps + diameter``), which may
    over-classify but never misses an intersection.
    """
    if eps < 0:
        raise ValueError("tube width eps must be nonnegative")
    pts = _triangle_array(tri)
    e1 = pts[1] - pts[0]
    e2 = pts[2] - pts[0]
    area2 = abs(e1[0] * e2[1] - e1[1] * e2[0])
    if area2 <= 0.0:
        raise ValueError("degenerate element")

    if dom.abs_distance_range is not None:
        d_min, _ = dom.abs_distance_range(pts[None])
        return bool(d_min[0] <= eps)

    dist = np.abs(dom.signed_distance(pts[:, 0], pts[:, 1]))
    diam = max(
        np.hypot(*(pts[1] - pts[0])),
        np.hypot(*(pts[2] - pts[1])),
        np.hypot(*(pts[0] - pts[2])),
    )
    return bool(dist.min() <= eps + diam)


# Symmetric rules on the reference triangle, exact for the declared degree.
_RULES = {}


def _build_rules():
    third = 1.0 / 3.0
    _RULES[1] = (np.array([[third, third, third]]), np.array([1.0]))

    # three-point rule, degree 2
    a, b = 2.0 / 3.0, 1.0 / 6.0
    pts2 = np.array([[a, b, b], [b, a, b], [b, b, a]])
    _RULES[2] = (pts2, np.full(3, third))

    # six-point rule, degree 4
    a1, b1, w1 = 0.816847572980459, 0.091576213509771, 0.109951743655322
    a2, b2, w2 = 0.108103018168070, 0.445948490915965, 0.223381589678011
    pts4 = np.array(
        [
            [a1, b1, b1],
            [b1, a1, b1],
            [b1, b1, a1],
            [a2, b2, b2],
            [b2, a2, b2],
            [b2, b2, a2],
        ]
    )
    _RULES[4] = (pts4, np.array([w1, w1, w1, w2, w2, w2]))


_build_rules()


def quadrature(degree):
    """Symmetric triangle quadrature rule exact up to the given polynomial degree.

    Supported degrees: 1 (centroid), 2 (three points), 4 (six points).
    """
    if degree not in _RULES:
        raise ValueError(f"unsupported quadrature degree {degree!r}; choose 1, 2 or 4")
    pts, w = _RULES[degree]
    return QuadratureRule(points=pts.copy(), weights=w.copy(), degree=degree)
