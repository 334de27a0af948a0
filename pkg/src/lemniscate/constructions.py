"""Executable lemniscate constructions.

Three mechanisms that generate the Bernoulli lemniscate (a three-stick
antiparallelogram, a secant-chord construction on a circle, and a
right-angle two-stick linkage), plus the inversion correspondence with
the equilateral hyperbola, the tangent circle at a curve point, and the
angle-doubling normal construction.

All solvers are pure: a parameter value in, a solved immutable state out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curves import (
    BernoulliConfig,
    EquilateralHyperbola,
    field_scale,
    lemniscate_field,
)
from .errors import (
    DoublePoint,
    NoChord,
    NoSolution,
    NotOnCurve,
    OutOfReach,
    UndefinedCenter,
)
from .geometry import (
    Circle,
    Line,
    Point,
    angle_at,
    circle_circle_intersection,
    invert_point,
    line_circle_intersection,
    line_line_intersection,
    midpoint,
    reflect_across_line,
)

_SQRT2 = math.sqrt(2.0)

SIDE_OPPOSITE = "opposite"
SIDE_SAME = "same"


@dataclass(frozen=True, slots=True)
class ThreeBarState:
    """Solved three-stick configuration at one crank angle.

    Sticks f1->a and f2->b have length c*sqrt(2), the coupler a->b has
    length 2c, and x is the coupler midpoint. p is the intersection of
    the stick lines (None when they are parallel) and q its mirror image
    in the focal axis.
    """

    theta: float
    a: Point
    b: Point
    x: Point
    p: Point | None
    q: Point | None
    side: str


@dataclass(frozen=True, slots=True)
class MaclaurinSample:
    """Chord a->b of the construction circle cut by the secant at angle phi,
    with the chord length laid off both ways from the center onto x, x_prime."""

    phi: float
    a: Point
    b: Point
    x: Point
    x_prime: Point


@dataclass(frozen=True, slots=True)
class RightAngleState:
    """Crank point a with |f1 a| = c and the two coupler tips x, y seen
    from the double point at a right angle to the crank."""

    alpha: float
    a: Point
    x: Point
    y: Point


def three_bar_solve(B: BernoulliConfig, theta: float, side: str = SIDE_OPPOSITE) -> ThreeBarState:
    """Solve the three-stick linkage at crank angle theta.

    theta is the angle of stick f1->a measured from the f1->f2 direction.
    The crossed (opposite-side) branch traces the lemniscate; the
    parallelogram (same-side) branch traces a circle of radius c*sqrt(2)
    about the double point. Branch selection picks the candidate for b
    whose signed distance from the focal axis has the requested sign
    relative to a's.
    """
    if side not in (SIDE_OPPOSITE, SIDE_SAME):
        raise ValueError(f"side must be '{SIDE_OPPOSITE}' or '{SIDE_SAME}', got {side!r}")
    c = B.half_distance
    u = B.axis_unit
    a = B.f1 + u.rotated(theta) * (c * _SQRT2)

    candidates = circle_circle_intersection(Circle(a, 2.0 * c), Circle(B.f2, c * _SQRT2))
    if not candidates:
        raise NoSolution(f"stick constraint circles do not intersect at theta = {theta}")

    sign_a = u.cross(a - B.f1)
    chosen = []
    for cand in candidates:
        s = u.cross(cand - B.f1)
        prod = sign_a * s
        if side == SIDE_OPPOSITE and prod <= 0.0:
            chosen.append((abs(s), cand))
        elif side == SIDE_SAME and prod >= 0.0:
            chosen.append((abs(s), cand))
    if not chosen:
        raise NoSolution(f"no {side}-side branch at theta = {theta}")
    chosen.sort(key=lambda item: item[0])
    b = chosen[0][1]

    x = midpoint(a, b)
    p = line_line_intersection(Line.through(B.f1, a), Line.through(B.f2, b))
    q = reflect_across_line(Line(B.f1, u), p) if p is not None else None
    return ThreeBarState(theta=theta, a=a, b=b, x=x, p=p, q=q, side=side)


def maclaurin_sample(B: BernoulliConfig, phi: float) -> MaclaurinSample:
    """Secant-chord construction at secant angle phi.

    The secant through the double point at angle phi (measured from the
    center-to-f1 direction) cuts the circle of radius c/sqrt(2) about f1
    in a chord a->b; x and x_prime lie on the secant at distance |ab|
    from the center, one to each side.
    """
    o = B.center
    c = B.half_distance
    direction = (B.f1 - o).unit().rotated(phi)
    secant = Line(o, direction)
    pts = line_circle_intersection(secant, Circle(B.f1, c / _SQRT2))
    if not pts:
        raise NoChord(f"secant at phi = {phi} misses the construction circle")
    if len(pts) == 1:
        a = b = pts[0]
        length = 0.0
    else:
        a, b = pts
        length = a.distance_to(b)
    return MaclaurinSample(
        phi=phi,
        a=a,
        b=b,
        x=o + direction * length,
        x_prime=o - direction * length,
    )


def right_angle_solve(B: BernoulliConfig, alpha: float) -> RightAngleState:
    """Solve the right-angle linkage at crank angle alpha.

    a runs on the circle of radius c about f1 (alpha measured from the
    direction toward the double point); the sticks a->x and a->y of
    length c*sqrt(2) are held so that the mid-stick ties to the double
    point force a right angle there. Then |ox| = c*sqrt(2*cos(alpha))
    and x sits at polar angle alpha/2, which also resolves the removable
    singularity at alpha = 0 by continuity.
    """
    cos_a = math.cos(alpha)
    if cos_a < 0.0:
        raise OutOfReach(f"crank at alpha = {alpha} puts the double point out of reach")
    c = B.half_distance
    u = B.axis_unit
    a = B.f1 + u.rotated(alpha) * c
    r = c * math.sqrt(2.0 * cos_a)
    w = u.rotated(0.5 * alpha)
    o = B.center
    return RightAngleState(alpha=alpha, a=a, x=o + w * r, y=o - w * r)


def invert_between(B: BernoulliConfig, p: Point) -> Point:
    """Inversion in the circle about the double point through the foci.

    Maps lemniscate points to equilateral-hyperbola points (same foci)
    and back; the double point itself maps to infinity.
    """
    return invert_point(B.inversion, p)


def tangent_circle_at(state: ThreeBarState) -> Circle:
    """Circle centered at the stick-line intersection p through x and the
    double point; it touches the lemniscate at x."""
    if state.p is None:
        raise UndefinedCenter("stick lines are parallel; the tangent circle has no center")
    return Circle(state.p, state.p.distance_to(state.x))


def normal_by_angle(B: BernoulliConfig, x: Point) -> Line:
    """Normal line to the lemniscate at x by angle doubling.

    The normal through x forms an unsigned angle of 2 * angle(x, o, f1)
    with the line o->x; the rotation sense swings the ray x->o toward
    the ray x->f1. Matches the direction of the field gradient.
    """
    L = B.lemniscate
    if abs(lemniscate_field(L, x)) > 1e-9 * field_scale(L):
        raise NotOnCurve(f"point {x} is not on the lemniscate")
    o = B.center
    if x.distance_to(o) <= 1e-12:
        raise DoublePoint("two branches cross at the double point; no single normal")
    delta = angle_at(o, x, B.f1)
    phi0 = (o - x).angle()
    swing = math.remainder((B.f1 - x).angle() - phi0, math.tau)
    sense = 1.0 if swing >= 0.0 else -1.0
    ang = phi0 + sense * 2.0 * delta
    return Line(x, Point(math.cos(ang), math.sin(ang)))


def hyperbola_of(B: BernoulliConfig) -> EquilateralHyperbola:
    """The equilateral hyperbola sharing B's foci (the inversion partner)."""
    return EquilateralHyperbola(B.f1, B.f2)
