"""Planar primitives: tolerances, points, triangles, canonical labeling,
containment predicates, and support lines.

Angles are radians throughout; degrees appear only at the CLI boundary.
Every type is immutable and every function is pure, so the whole module is
safe to use concurrently without locking.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

__all__ = [
    "GeometryError",
    "NonFinite",
    "DegenerateTriangle",
    "NotScalene",
    "Tolerances",
    "DEFAULT_TOLERANCES",
    "Point",
    "Triangle",
    "ShapeClass",
    "CanonicalTriangle",
    "signed_area",
    "area",
    "canonicalize",
    "contains_point",
    "contains_triangle",
    "support_line",
]


class GeometryError(ValueError):
    """A geometric precondition was violated."""


class NonFinite(GeometryError):
    """A coordinate is NaN or infinite."""


class DegenerateTriangle(GeometryError):
    """Unsigned area is at or below the degeneracy threshold."""


class NotScalene(GeometryError):
    """The operation needs three pairwise-distinct side lengths."""


@dataclass(frozen=True)
class Tolerances:
    """Tolerance bundle threaded explicitly through geometric decisions.

    ``eps_area_factor`` is multiplied by the squared bounding-box diagonal of
    the figure under test to obtain the absolute area threshold.  ``eps_len``
    and ``eps_num`` are relative; ``eps_angle`` is absolute radians;
    ``eps_tie`` is the relative margin for declaring equal-area minimizers.
    """

    eps_area_factor: float = 1e-12
    eps_len: float = 1e-9
    eps_angle: float = 1e-9
    eps_num: float = 1e-9
    eps_tie: float = 1e-9

    def eps_area(self, *points: "Point") -> float:
        """Absolute area threshold scaled to the bounding box of `points`."""
        xs = [p.x for p in points]
        ys = [p.y for p in points]
        diag2 = (max(xs) - min(xs)) ** 2 + (max(ys) - min(ys)) ** 2
        return self.eps_area_factor * diag2


DEFAULT_TOLERANCES = Tolerances()


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise NonFinite(f"non-finite coordinate ({self.x}, {self.y})")


@dataclass(frozen=True)
class Triangle:
    """Three labeled vertices.

    The type itself admits collinear vertex sets so that `area` can be used
    as a degeneracy test; operations that need a proper triangle raise
    `DegenerateTriangle` instead.
    """

    A: Point
    B: Point
    C: Point

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.A, self.B, self.C)


class ShapeClass(Enum):
    SCALENE = "scalene"
    ISOSCELES = "isosceles"
    EQUILATERAL = "equilateral"


@dataclass(frozen=True)
class CanonicalTriangle:
    """A triangle relabeled so that a = |BC| <= b = |AC| <= c = |AB|.

    The interior angles alpha, beta, gamma sit at A, B, C respectively, so
    alpha <= beta <= gamma.  Build instances via `canonicalize`.
    """

    tri: Triangle
    a: float
    b: float
    c: float
    alpha: float
    beta: float
    gamma: float
    area: float
    shape_class: ShapeClass

    @property
    def A(self) -> Point:
        return self.tri.A

    @property
    def B(self) -> Point:
        return self.tri.B

    @property
    def C(self) -> Point:
        return self.tri.C


def _dist(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


def signed_area(t: Triangle) -> float:
    """Shoelace area; positive when A, B, C wind counter-clockwise."""
    return 0.5 * (
        (t.B.x - t.A.x) * (t.C.y - t.A.y) - (t.B.y - t.A.y) * (t.C.x - t.A.x)
    )


def area(t: Triangle) -> float:
    """Unsigned shoelace area; 0 is a legal return for collinear input."""
    return abs(signed_area(t))


def _angle_at(p: Point, q: Point, r: Point) -> float:
    # atan2 of (|cross|, dot) stays accurate even for needle triangles,
    # where the law of cosines loses the small angles to cancellation
    ux, uy = q.x - p.x, q.y - p.y
    vx, vy = r.x - p.x, r.y - p.y
    return math.atan2(abs(ux * vy - uy * vx), ux * vx + uy * vy)


def canonicalize(t: Triangle, tol: Tolerances = DEFAULT_TOLERANCES) -> CanonicalTriangle:
    """Relabel vertices so side lengths satisfy a <= b <= c.

    The relabeling is a vertex permutation only; the point set is unchanged.
    Ties within `tol.eps_len` are broken lexicographically on vertex
    coordinates, which makes the operation idempotent.
    """
    for p in t.vertices:
        if not (math.isfinite(p.x) and math.isfinite(p.y)):
            raise NonFinite(f"non-finite coordinate ({p.x}, {p.y})")
    if area(t) <= tol.eps_area(*t.vertices):
        raise DegenerateTriangle(f"triangle area {area(t)} is below threshold")

    verts = list(t.vertices)
    # opposite[i] is the side not incident to verts[i]
    opposite = [_dist(verts[(i + 1) % 3], verts[(i + 2) % 3]) for i in range(3)]
    order = sorted(range(3), key=lambda i: (opposite[i], verts[i].x, verts[i].y))
    A, B, C = (verts[i] for i in order)
    a, b, c = (opposite[i] for i in order)

    eq_ab = abs(a - b) <= tol.eps_len * c
    eq_bc = abs(b - c) <= tol.eps_len * c
    eq_ac = abs(a - c) <= tol.eps_len * c
    if eq_ac:
        shape = ShapeClass.EQUILATERAL
    elif eq_ab or eq_bc:
        shape = ShapeClass.ISOSCELES
    else:
        shape = ShapeClass.SCALENE

    alpha = _angle_at(A, B, C)
    beta = _angle_at(B, C, A)
    gamma = _angle_at(C, A, B)
    tri = Triangle(A, B, C)
    return CanonicalTriangle(
        tri=tri,
        a=a,
        b=b,
        c=c,
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        area=area(tri),
        shape_class=shape,
    )


def contains_point(t: Triangle, p: Point, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    """Closed containment test with slack toward inclusion.

    A point on an edge or vertex counts as contained; the slack keeps exact
    shared edges from flipping to "outside" under rounding.
    """
    sa = signed_area(t)
    eps = tol.eps_area(*t.vertices, p)
    if abs(sa) <= eps:
        raise DegenerateTriangle("containment is undefined for a degenerate triangle")
    orient = 1.0 if sa > 0 else -1.0
    # each cross product is twice the signed area of the sub-triangle
    slack = 2.0 * eps
    va, vb, vc = t.vertices
    for q0, q1 in ((va, vb), (vb, vc), (vc, va)):
        cross = (q1.x - q0.x) * (p.y - q0.y) - (q1.y - q0.y) * (p.x - q0.x)
        if orient * cross < -slack:
            return False
    return True


def contains_triangle(
    outer: Triangle, inner: Triangle, tol: Tolerances = DEFAULT_TOLERANCES
) -> bool:
    """True iff every vertex of `inner` lies in closed `outer` (convexity)."""
    return all(contains_point(outer, p, tol) for p in inner.vertices)


def support_line(t: Triangle, normal_angle: float) -> float:
    """Support value h = max over vertices of <v, (cos, sin)(normal_angle)>.

    The supporting line is {p : <p, n> = h}; all of `t` satisfies <p, n> <= h.
    """
    nx, ny = math.cos(normal_angle), math.sin(normal_angle)
    return max(p.x * nx + p.y * ny for p in t.vertices)
