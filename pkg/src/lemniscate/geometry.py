"""Exact-formula planar primitives.

Points, lines, circles, reflection, inversion, and intersections. All
types are immutable values and all operations are pure closed-form
computations, so everything here is safe to use concurrently.

Conventions: angles are radians, tolerances are absolute on unit-scale
configurations (callers normalize), intersection results are returned in
a deterministic order so downstream branch selection is reproducible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import CenterSingular, Concentric, DegenerateRay, LineThroughCenter

_EPS = 1e-12


@dataclass(frozen=True, slots=True)
class Point:
    """A point of the Euclidean plane, also used as a free vector."""

    x: float
    y: float

    def __post_init__(self):
        object.__setattr__(self, "x", float(self.x))
        object.__setattr__(self, "y", float(self.y))
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"coordinates must be finite, got ({self.x}, {self.y})")

    def __add__(self, other: "Point") -> "Point":
        return Point(self.x + other.x, self.y + other.y)

    def __sub__(self, other: "Point") -> "Point":
        return Point(self.x - other.x, self.y - other.y)

    def __mul__(self, k: float) -> "Point":
        return Point(self.x * k, self.y * k)

    __rmul__ = __mul__

    def __neg__(self) -> "Point":
        return Point(-self.x, -self.y)

    def dot(self, other: "Point") -> float:
        return self.x * other.x + self.y * other.y

    def cross(self, other: "Point") -> float:
        return self.x * other.y - self.y * other.x

    def norm_sq(self) -> float:
        return self.x * self.x + self.y * self.y

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def distance_to(self, other: "Point") -> float:
        return math.hypot(self.x - other.x, self.y - other.y)

    def unit(self) -> "Point":
        n = self.norm()
        if n == 0.0:
            raise ValueError("cannot normalize the zero vector")
        return Point(self.x / n, self.y / n)

    def perp(self) -> "Point":
        """Rotate by +90 degrees."""
        return Point(-self.y, self.x)

    def rotated(self, angle: float) -> "Point":
        c, s = math.cos(angle), math.sin(angle)
        return Point(self.x * c - self.y * s, self.x * s + self.y * c)

    def angle(self) -> float:
        return math.atan2(self.y, self.x)


def midpoint(a: Point, b: Point) -> Point:
    return Point(0.5 * (a.x + b.x), 0.5 * (a.y + b.y))


@dataclass(frozen=True, slots=True)
class Line:
    """Oriented line given by an anchor point and a unit direction."""

    anchor: Point
    direction: Point

    def __post_init__(self):
        n = self.direction.norm()
        if n == 0.0:
            raise ValueError("line direction must be nonzero")
        if abs(n - 1.0) > _EPS:
            object.__setattr__(self, "direction", Point(self.direction.x / n, self.direction.y / n))

    @classmethod
    def through(cls, a: Point, b: Point) -> "Line":
        return cls(a, b - a)

    def point_at(self, t: float) -> Point:
        return self.anchor + self.direction * t

    def param_of(self, p: Point) -> float:
        """Signed arc parameter of the projection of p onto the line."""
        return (p - self.anchor).dot(self.direction)

    def foot_of(self, p: Point) -> Point:
        """Orthogonal projection of p onto the line."""
        return self.point_at(self.param_of(p))

    def signed_distance(self, p: Point) -> float:
        """Positive on the left of the direction vector."""
        return self.direction.cross(p - self.anchor)


@dataclass(frozen=True, slots=True)
class Circle:
    center: Point
    radius: float

    def __post_init__(self):
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise ValueError(f"circle radius must be positive, got {self.radius}")

    def contains(self, p: Point, tol: float = 1e-9) -> bool:
        return abs(p.distance_to(self.center) - self.radius) <= tol


@dataclass(frozen=True, slots=True)
class InversionMap:
    """Inversion in the circle with the given center and radius.

    Sends X to the point on the ray from the center through X whose
    distance from the center is radius**2 / |center X|.
    """

    center: Point
    radius: float

    def __post_init__(self):
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise ValueError(f"inversion radius must be positive, got {self.radius}")


def invert_point(inv: InversionMap, p: Point) -> Point:
    """Image of p under the inversion. Raises CenterSingular at the center."""
    v = p - inv.center
    d2 = v.norm_sq()
    if d2 <= _EPS * _EPS:
        raise CenterSingular("cannot invert the center of inversion")
    k = (inv.radius * inv.radius) / d2
    return Point(inv.center.x + v.x * k, inv.center.y + v.y * k)


def reflect_across_line(l: Line, p: Point) -> Point:
    """Mirror image of p in the line (an involution)."""
    foot = l.foot_of(p)
    return Point(2.0 * foot.x - p.x, 2.0 * foot.y - p.y)


def invert_line(inv: InversionMap, l: Line) -> Circle:
    """Image of a line not through the center: the circle on diameter
    from the center to the image of the line's closest point.

    The circle's center coincides with the inversion image of the
    reflection of the inversion center in the line.
    """
    foot = l.foot_of(inv.center)
    if foot.distance_to(inv.center) <= _EPS:
        raise LineThroughCenter("line through the inversion center maps to a line")
    image = invert_point(inv, foot)
    return Circle(midpoint(inv.center, image), 0.5 * image.distance_to(inv.center))


def circle_circle_intersection(c1: Circle, c2: Circle) -> list[Point]:
    """Intersection points of two circles, 0 to 2 of them.

    Two-point results are ordered with the point on the positive side of
    the center line (normal = direction rotated -90 degrees) first.
    Tangency within rounding yields a single point; disjoint or nested
    circles yield an empty list.
    """
    d = c2.center - c1.center
    d2 = d.norm_sq()
    if d2 == 0.0:
        raise Concentric("concentric circles have no isolated intersections")
    r1, r2 = c1.radius, c2.radius
    dist = math.sqrt(d2)
    a = (d2 + r1 * r1 - r2 * r2) / (2.0 * dist)
    h2 = r1 * r1 - a * a
    if h2 < -_EPS * max(r1, r2) ** 2:
        return []
    u = Point(d.x / dist, d.y / dist)
    m = c1.center + u * a
    if h2 <= 0.0:
        return [m]
    h = math.sqrt(h2)
    n = Point(u.y, -u.x)
    return [m + n * h, m - n * h]


def line_circle_intersection(l: Line, c: Circle) -> list[Point]:
    """Intersection points of a line and a circle, sorted by line parameter."""
    t0 = l.param_of(c.center)
    closest = l.point_at(t0)
    h2 = c.radius * c.radius - (c.center - closest).norm_sq()
    if h2 < -_EPS * c.radius * c.radius:
        return []
    if h2 <= 0.0:
        return [closest]
    h = math.sqrt(h2)
    return [l.point_at(t0 - h), l.point_at(t0 + h)]


def angle_at(vertex: Point, a: Point, b: Point) -> float:
    """Unsigned angle in [0, pi] between the rays vertex->a and vertex->b."""
    va = a - vertex
    vb = b - vertex
    if va.norm() <= _EPS or vb.norm() <= _EPS:
        raise DegenerateRay("ray endpoint coincides with the vertex")
    return math.atan2(abs(va.cross(vb)), va.dot(vb))


def line_line_intersection(l1: Line, l2: Line) -> Point | None:
    """Intersection of two lines, or None when they are parallel."""
    denom = l1.direction.cross(l2.direction)
    if abs(denom) <= _EPS:
        return None
    t = (l2.anchor - l1.anchor).cross(l2.direction) / denom
    return l1.point_at(t)
