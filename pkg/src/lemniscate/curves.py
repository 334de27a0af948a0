"""Implicit and parametric curve representations.

Polynomial lemniscates (product of distances to n foci held constant),
the Bernoulli special case, and the equilateral hyperbola, plus the
analytic gradient, dense coefficient expansion, and the exact area of
the Bernoulli lemniscate.

Sign convention: the implicit field is negative strictly inside a lobe
and positive outside.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NotOnCurve, OutsideLobe, TooManyFoci
from .geometry import InversionMap, Line, Point, midpoint

_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True, slots=True)
class PolynomialLemniscate:
    """Locus where the product of distances to the foci equals radius**n.

    The stored field is the product of *squared* distances minus
    radius**(2n), an algebraic curve of degree at most 2n.
    """

    foci: tuple[Point, ...]
    radius: float

    def __post_init__(self):
        foci = tuple(self.foci)
        object.__setattr__(self, "foci", foci)
        if len(foci) < 1:
            raise ValueError("a lemniscate needs at least one focus")
        if not (self.radius > 0.0 and math.isfinite(self.radius)):
            raise ValueError(f"lemniscate radius must be positive, got {self.radius}")
        for i in range(len(foci)):
            for j in range(i + 1, len(foci)):
                if foci[i].distance_to(foci[j]) == 0.0:
                    raise ValueError("foci must be pairwise distinct")

    @property
    def n(self) -> int:
        return len(self.foci)

    @property
    def level(self) -> float:
        """The constant the product of squared distances is held at."""
        return self.radius ** (2 * self.n)


def field_scale(L: PolynomialLemniscate) -> float:
    """Magnitude of the field on unit-distance configurations of L.

    Used to turn absolute residual thresholds into scale-free ones:
    max(1, radius, focus magnitudes) raised to the field's degree.
    """
    s = max(1.0, L.radius)
    for f in L.foci:
        s = max(s, f.norm())
    return s ** (2 * L.n)


def lemniscate_field(L: PolynomialLemniscate, p: Point) -> float:
    """Product of squared focal distances minus radius**(2n).

    Zero exactly on the curve, negative inside a lobe, positive outside.
    """
    acc = 1.0
    for f in L.foci:
        dx = p.x - f.x
        dy = p.y - f.y
        acc *= dx * dx + dy * dy
    return acc - L.level


def lemniscate_gradient(L: PolynomialLemniscate, p: Point) -> Point:
    """Analytic gradient of lemniscate_field at p."""
    q = []
    for f in L.foci:
        dx = p.x - f.x
        dy = p.y - f.y
        q.append(dx * dx + dy * dy)
    gx = 0.0
    gy = 0.0
    for i, f in enumerate(L.foci):
        pref = 1.0
        for j, qj in enumerate(q):
            if j != i:
                pref *= qj
        gx += pref * 2.0 * (p.x - f.x)
        gy += pref * 2.0 * (p.y - f.y)
    return Point(gx, gy)


@dataclass(frozen=True, eq=False)
class CoefficientTable:
    """Dense monomial coefficients of the expanded lemniscate field.

    coeffs[i, j] multiplies x**i * y**j; entries with i + j > 2n are zero
    and the degree-2n form is the binomial expansion of (x^2 + y^2)^n.
    """

    n: int
    coeffs: np.ndarray

    @property
    def degree(self) -> int:
        return 2 * self.n

    def coefficient(self, i: int, j: int) -> float:
        if i < 0 or j < 0 or i + j > self.degree:
            return 0.0
        return float(self.coeffs[i, j])

    def evaluate(self, p: Point) -> float:
        """Horner evaluation, inner loop over y inside a loop over x."""
        acc = 0.0
        for i in range(self.coeffs.shape[0] - 1, -1, -1):
            row = self.coeffs[i]
            r = 0.0
            for j in range(self.coeffs.shape[1] - 1, -1, -1):
                r = r * p.y + row[j]
            acc = acc * p.x + r
        return acc


def _mul2d(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    out = np.zeros((a.shape[0] + b.shape[0] - 1, a.shape[1] + b.shape[1] - 1))
    for i, j in zip(*np.nonzero(a)):
        out[i : i + b.shape[0], j : j + b.shape[1]] += a[i, j] * b
    return out


def expand_coefficients(L: PolynomialLemniscate) -> CoefficientTable:
    """Expand the product of the n quadratic distance factors.

    Exact convolution in a dense (i, j) table; guarded to n <= 8 where
    the table stays tiny and float arithmetic stays exact for integer
    inputs.
    """
    if L.n > 8:
        raise TooManyFoci(f"coefficient expansion supports n <= 8, got {L.n}")
    acc = np.ones((1, 1))
    for f in L.foci:
        factor = np.zeros((3, 3))
        factor[0, 0] = f.x * f.x + f.y * f.y
        factor[1, 0] = -2.0 * f.x
        factor[0, 1] = -2.0 * f.y
        factor[2, 0] = 1.0
        factor[0, 2] = 1.0
        acc = _mul2d(acc, factor)
    # pad to a square (2n+1) x (2n+1) table for uniform indexing
    size = 2 * L.n + 1
    table = np.zeros((size, size))
    table[: acc.shape[0], : acc.shape[1]] = acc
    table[0, 0] -= L.level
    return CoefficientTable(n=L.n, coeffs=table)


@dataclass(frozen=True, slots=True)
class BernoulliConfig:
    """Focus pair of a Bernoulli lemniscate.

    The induced lemniscate has radius c = |F1 F2| / 2, so the curve
    passes through the midpoint of the foci (its double point).
    """

    f1: Point
    f2: Point

    def __post_init__(self):
        if self.f1.distance_to(self.f2) == 0.0:
            raise ValueError("Bernoulli foci must be distinct")

    @property
    def center(self) -> Point:
        return midpoint(self.f1, self.f2)

    @property
    def half_distance(self) -> float:
        return 0.5 * self.f1.distance_to(self.f2)

    @property
    def axis_unit(self) -> Point:
        """Unit vector from f1 toward f2 (also from f1 toward the center)."""
        return (self.f2 - self.f1).unit()

    @property
    def lemniscate(self) -> PolynomialLemniscate:
        return PolynomialLemniscate((self.f1, self.f2), self.half_distance)

    @property
    def inversion(self) -> InversionMap:
        """Inversion in the circle centered at the double point through the foci."""
        return InversionMap(self.center, self.half_distance)


def bernoulli_polar_point(B: BernoulliConfig, theta: float) -> Point:
    """Point of the lemniscate at polar angle theta about the double point.

    theta is measured from the center-to-f2 direction; the radius obeys
    r^2 = 2 c^2 cos(2 theta), so theta is restricted to the two lobes
    where cos(2 theta) >= 0.
    """
    cos2 = math.cos(2.0 * theta)
    if cos2 < 0.0:
        raise OutsideLobe(f"cos(2*theta) = {cos2} < 0: no curve point at theta = {theta}")
    c = B.half_distance
    r = c * math.sqrt(2.0 * cos2)
    u = B.axis_unit
    ct, st = math.cos(theta), math.sin(theta)
    o = B.center
    return Point(o.x + r * (u.x * ct - u.y * st), o.y + r * (u.x * st + u.y * ct))


def bernoulli_area(B: BernoulliConfig) -> float:
    """Exact area enclosed by both lobes: half the squared focal distance."""
    return 0.5 * (B.f2 - B.f1).norm_sq()


@dataclass(frozen=True, slots=True)
class EquilateralHyperbola:
    """Hyperbola with perpendicular asymptotes, represented by its foci.

    The locus is | |F1 X| - |F2 X| | = |F1 F2| / sqrt(2); the quadratic
    form is synthesized on demand from the pose implied by the foci.
    """

    f1: Point
    f2: Point

    def __post_init__(self):
        if self.f1.distance_to(self.f2) == 0.0:
            raise ValueError("hyperbola foci must be distinct")

    @property
    def center(self) -> Point:
        return midpoint(self.f1, self.f2)

    @property
    def axis_unit(self) -> Point:
        return (self.f2 - self.f1).unit()

    @property
    def semi_axis(self) -> float:
        """Common semi-axis a = b = |F1 F2| / (2 sqrt(2))."""
        return self.f1.distance_to(self.f2) / (2.0 * _SQRT2)


def hyperbola_residual(H: EquilateralHyperbola, p: Point) -> float:
    """Defining residual | |p F1| - |p F2| | - |F1 F2| / sqrt(2)."""
    d1 = p.distance_to(H.f1)
    d2 = p.distance_to(H.f2)
    return abs(d1 - d2) - H.f1.distance_to(H.f2) / _SQRT2


def _form_and_gradient(H: EquilateralHyperbola, p: Point) -> tuple[float, Point]:
    # quadratic form xi^2 - eta^2 - a^2 in the frame aligned with the focal axis
    u = H.axis_unit
    v = p - H.center
    xi = v.dot(u)
    eta = u.cross(v)
    a = H.semi_axis
    form = xi * xi - eta * eta - a * a
    grad = u * (2.0 * xi) - u.perp() * (2.0 * eta)
    return form, grad


def hyperbola_tangent_at(H: EquilateralHyperbola, q: Point) -> Line:
    """Tangent line at a point of the hyperbola.

    The direction is perpendicular to the gradient of the quadratic form,
    so the returned line has second-order contact with the branch.
    """
    if abs(hyperbola_residual(H, q)) > 1e-8:
        raise NotOnCurve(f"point {q} is not on the hyperbola")
    _, grad = _form_and_gradient(H, q)
    return Line(q, grad.perp())


def hyperbola_point(H: EquilateralHyperbola, t: float, branch: int = 1) -> Point:
    """Point at hyperbolic parameter t on the branch nearest f2 (+1) or f1 (-1)."""
    a = H.semi_axis
    u = H.axis_unit
    xi = (1.0 if branch >= 0 else -1.0) * a * math.cosh(t)
    eta = a * math.sinh(t)
    return H.center + u * xi + u.perp() * eta


def unit_hyperbola_foci() -> tuple[Point, Point]:
    """Foci of the hyperbola y = 1/x: on the diagonal at distance 2 from O."""
    return (Point(_SQRT2, _SQRT2), Point(-_SQRT2, -_SQRT2))
