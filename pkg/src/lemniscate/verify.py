"""Numerical verification sweeps over every identity the package encodes.

Each check drives a construction through a dense parameter sweep and
measures the worst residual against an independent arithmetic oracle
(distance products, defining relations, finite differences, sampled
memberships). The CLI's `verify` subcommand runs everything and fails on
any violation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .curves import (
    BernoulliConfig,
    EquilateralHyperbola,
    PolynomialLemniscate,
    bernoulli_area,
    bernoulli_polar_point,
    expand_coefficients,
    hyperbola_point,
    hyperbola_residual,
    hyperbola_tangent_at,
    lemniscate_field,
    lemniscate_gradient,
    unit_hyperbola_foci,
)
from .constructions import (
    hyperbola_of,
    invert_between,
    maclaurin_sample,
    normal_by_angle,
    right_angle_solve,
    tangent_circle_at,
    three_bar_solve,
)
from .geometry import (
    InversionMap,
    Line,
    Point,
    invert_line,
    invert_point,
    line_line_intersection,
    reflect_across_line,
)
from .tracer import TraceWindow, contour_area, trace

_SQRT2 = math.sqrt(2.0)
TAU = math.tau


@dataclass(frozen=True)
class Check:
    """A named worst-case residual against its tolerance."""

    name: str
    max_residual: float
    tolerance: float

    @property
    def passed(self) -> bool:
        return self.max_residual <= self.tolerance


def canonical_config() -> BernoulliConfig:
    return BernoulliConfig(Point(-1.0, 0.0), Point(1.0, 0.0))


def polar_angles(count: int, margin: float = 0.0):
    """Angles across both lobes where the polar radius is defined."""
    half = count // 2
    span = math.pi / 2 - 2 * margin
    out = []
    for k in range(half):
        t = -math.pi / 4 + margin + span * (k + 0.5) / half
        out.append(t)
        out.append(t + math.pi)
    return out[:count]


def sweep_angles(count: int, avoid_multiples_of: float | None = None, tol: float = 1e-9):
    """(k + 1/2) * tau / count grid, optionally skipping near-degenerate values."""
    out = []
    for k in range(count):
        t = (k + 0.5) * TAU / count
        if avoid_multiples_of is not None:
            r = math.remainder(t, avoid_multiples_of)
            if abs(r) < tol:
                continue
        out.append(t)
    return out


def check_defining_product(B: BernoulliConfig, count: int = 10_000) -> Check:
    c2 = B.half_distance**2
    worst = 0.0
    for t in polar_angles(count):
        x = bernoulli_polar_point(B, t)
        worst = max(worst, abs(x.distance_to(B.f1) * x.distance_to(B.f2) - c2))
    return Check("defining_product", worst, 1e-10)


def threebar_states(B: BernoulliConfig, count: int, side: str = "opposite"):
    return [three_bar_solve(B, t, side) for t in sweep_angles(count)]


def check_threebar(B: BernoulliConfig, states) -> list[Check]:
    L = B.lemniscate
    worst_field = 0.0
    worst_trap = 0.0
    worst_len = 0.0
    c = B.half_distance
    for st in states:
        worst_field = max(worst_field, abs(lemniscate_field(L, st.x)))
        # isosceles trapezoid f1-a-f2-b: the legs f1a, f2b are equal by
        # construction, so the testable content is that the bases a->f2
        # and b->f1 are parallel
        worst_trap = max(
            worst_trap, abs((B.f2 - st.a).unit().cross((B.f1 - st.b).unit()))
        )
        worst_len = max(
            worst_len,
            abs(st.a.distance_to(B.f1) - c * _SQRT2),
            abs(st.b.distance_to(B.f2) - c * _SQRT2),
            abs(st.a.distance_to(st.b) - 2.0 * c),
        )
    return [
        Check("threebar_field", worst_field, 1e-8),
        Check("threebar_trapezoid", worst_trap, 1e-9),
        Check("threebar_stick_lengths", worst_len, 1e-10),
    ]


def check_inversion_pairing(B: BernoulliConfig, states) -> list[Check]:
    H = hyperbola_of(B)
    o = B.center
    c2 = B.half_distance**2
    worst_h = 0.0
    worst_pair = 0.0
    worst_ray = 0.0
    for st in states:
        if st.p is None:
            continue
        worst_h = max(worst_h, abs(hyperbola_residual(H, st.p)), abs(hyperbola_residual(H, st.q)))
        ox = st.x - o
        oq = st.q - o
        worst_pair = max(worst_pair, abs(ox.norm() * oq.norm() - c2))
        worst_ray = max(worst_ray, abs(ox.unit().cross(oq.unit())), max(0.0, -ox.dot(oq)))
    return [
        Check("hyperbola_membership_pq", worst_h, 1e-8),
        Check("inversion_pairing", worst_pair, 1e-8),
        Check("inversion_ray", worst_ray, 1e-8),
    ]


def check_hyperbola_inverse(B: BernoulliConfig, count: int = 1_000) -> Check:
    H = hyperbola_of(B)
    L = B.lemniscate
    worst = 0.0
    half = count // 2
    for k in range(half):
        t = -3.0 + 6.0 * (k + 0.5) / half
        for branch in (1, -1):
            q = hyperbola_point(H, t, branch)
            x = invert_between(B, q)
            worst = max(worst, abs(lemniscate_field(L, x)))
    return Check("hyperbola_inverse_direction", worst, 1e-8)


def check_sameside_locus(B: BernoulliConfig, count: int = 10_000) -> Check:
    target = B.half_distance * _SQRT2
    o = B.center
    worst = 0.0
    for st in threebar_states(B, count, side="same"):
        worst = max(worst, abs(st.x.distance_to(o) - target))
    return Check("sameside_locus", worst, 1e-8)


def check_maclaurin(B: BernoulliConfig, count: int = 10_000) -> list[Check]:
    L = B.lemniscate
    worst_field = 0.0
    worst_len = 0.0
    for k in range(count):
        phi = -math.pi / 4 + (k + 0.5) * (math.pi / 2) / count
        s = maclaurin_sample(B, phi)
        worst_field = max(
            worst_field, abs(lemniscate_field(L, s.x)), abs(lemniscate_field(L, s.x_prime))
        )
        chord = s.a.distance_to(s.b)
        worst_len = max(
            worst_len,
            abs(s.x.distance_to(B.center) - chord),
            abs(s.x_prime.distance_to(B.center) - chord),
        )
    return [
        Check("maclaurin_field", worst_field, 1e-8),
        Check("maclaurin_chord_identity", worst_len, 1e-10),
    ]


def check_rightangle(B: BernoulliConfig, count: int = 10_000) -> list[Check]:
    L = B.lemniscate
    o = B.center
    u = B.axis_unit
    c = B.half_distance
    worst_field = 0.0
    worst_right = 0.0
    lobe_margin = math.inf
    for k in range(count):
        alpha = -math.pi / 2 + (k + 0.5) * math.pi / count
        st = right_angle_solve(B, alpha)
        worst_field = max(
            worst_field, abs(lemniscate_field(L, st.x)), abs(lemniscate_field(L, st.y))
        )
        for tip in (st.x, st.y):
            worst_right = max(
                worst_right,
                abs(
                    tip.distance_to(o) ** 2
                    + st.a.distance_to(o) ** 2
                    - st.a.distance_to(tip) ** 2
                ),
                abs(st.a.distance_to(tip) - c * _SQRT2),
            )
        lobe_margin = min(lobe_margin, u.dot(st.x - o), -u.dot(st.y - o))
    return [
        Check("rightangle_field", worst_field, 1e-8),
        Check("rightangle_right_angle", worst_right, 1e-10),
        Check("rightangle_lobe_separation", max(0.0, -lobe_margin), 0.0),
    ]


def check_normals(B: BernoulliConfig, count: int = 1_000) -> Check:
    L = B.lemniscate
    worst = 0.0
    for t in polar_angles(count, margin=0.02):
        x = bernoulli_polar_point(B, t)
        normal = normal_by_angle(B, x)
        g = lemniscate_gradient(L, x).unit()
        worst = max(worst, abs(math.asin(max(-1.0, min(1.0, normal.direction.cross(g))))))
    return Check("normal_vs_gradient_angle", worst, 1e-8)


def check_tangent_circle(B: BernoulliConfig, count: int = 1_000) -> list[Check]:
    L = B.lemniscate
    H = hyperbola_of(B)
    o = B.center
    worst_align = 0.0
    worst_radius = 0.0
    worst_center = 0.0
    slope_deficit = 0.0
    # pad the grid so at least `count` states survive after skipping the
    # crank angles where the stick lines are parallel or x hits o; near
    # those angles the tangent circle degenerates (radius to infinity)
    for t in sweep_angles(count + count // 4, avoid_multiples_of=math.pi / 4, tol=5e-2):
        st = three_bar_solve(B, t)
        if st.p is None:
            continue
        circle = tangent_circle_at(st)
        radial = (st.x - circle.center).unit()
        grad = lemniscate_gradient(L, st.x).unit()
        worst_align = max(worst_align, abs(radial.cross(grad)))
        worst_radius = max(worst_radius, abs(circle.radius - circle.center.distance_to(o)))

        # the circle center also sits on the normal at x and on the
        # perpendicular from o to the hyperbola tangent at q
        tangent = hyperbola_tangent_at(H, st.q)
        rebuilt = line_line_intersection(normal_by_angle(B, st.x), Line(o, tangent.direction.perp()))
        if rebuilt is not None:
            worst_center = max(worst_center, rebuilt.distance_to(circle.center))

        slope_deficit = max(slope_deficit, max(0.0, 1.9 - _contact_slope(L, circle, st.x)))
    return [
        Check("tangent_circle_alignment", worst_align, 1e-8),
        Check("tangent_circle_through_o", worst_radius, 1e-9),
        Check("tangent_circle_center_rebuild", worst_center, 1e-8),
        Check("tangent_contact_slope_deficit", slope_deficit, 1e-9),
    ]


def _contact_slope(L, circle, x) -> float:
    """Least-squares log-log slope of |field| along the circle near x."""
    base = math.atan2(x.y - circle.center.y, x.x - circle.center.x)
    logs = []
    for s in (1e-2, 1e-3, 1e-4):
        ang = base + s / circle.radius
        p = Point(
            circle.center.x + circle.radius * math.cos(ang),
            circle.center.y + circle.radius * math.sin(ang),
        )
        value = abs(lemniscate_field(L, p))
        if value == 0.0:
            return 2.0
        logs.append((math.log(s), math.log(value)))
    n = len(logs)
    mean_x = sum(lx for lx, _ in logs) / n
    mean_y = sum(ly for _, ly in logs) / n
    num = sum((lx - mean_x) * (ly - mean_y) for lx, ly in logs)
    den = sum((lx - mean_x) ** 2 for lx, _ in logs)
    return num / den


def check_lemma1(pair_count: int = 1_000, samples_per_line: int = 50, seed: int = 42) -> list[Check]:
    import random

    rng = random.Random(seed)
    worst_on = 0.0
    worst_center = 0.0
    for _ in range(pair_count):
        center = Point(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0))
        inv = InversionMap(center, rng.uniform(0.5, 2.0))
        ang = rng.uniform(0.0, math.pi)
        direction = Point(math.cos(ang), math.sin(ang))
        offset = rng.choice((-1.0, 1.0)) * rng.uniform(0.1, 3.0)
        anchor = center + direction.perp() * offset
        line = Line(anchor, direction)

        image = invert_line(inv, line)
        for k in range(samples_per_line):
            t = -5.0 + 10.0 * (k + 0.5) / samples_per_line
            b = invert_point(inv, line.point_at(t))
            worst_on = max(worst_on, abs(b.distance_to(image.center) - image.radius))
        worst_on = max(worst_on, abs(center.distance_to(image.center) - image.radius))
        mirrored = reflect_across_line(line, center)
        worst_center = max(worst_center, invert_point(inv, mirrored).distance_to(image.center))
    return [
        Check("line_inversion_on_circle", worst_on, 1e-9),
        Check("line_inversion_center", worst_center, 1e-9),
    ]


def check_coefficients(seed: int = 42) -> Check:
    import random

    rng = random.Random(seed)
    worst = 0.0
    for n in (1, 2, 3, 5):
        foci = tuple(Point(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)) for _ in range(n))
        L = PolynomialLemniscate(foci, rng.uniform(0.5, 2.0))
        table = expand_coefficients(L)
        for _ in range(100):
            p = Point(rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0))
            f = lemniscate_field(L, p)
            magnitude = (f + L.level) + L.level  # product term plus level, both >= 0
            worst = max(worst, abs(table.evaluate(p) - f) / max(1.0, magnitude))
    return Check("coefficient_pointwise", worst, 1e-9)


def check_unit_hyperbola(count: int = 100) -> list[Check]:
    f1, f2 = unit_hyperbola_foci()
    H = EquilateralHyperbola(f1, f2)
    worst_res = 0.0
    worst_mid = 0.0
    for k in range(count):
        t = 0.1 * (10.0 / 0.1) ** (k / (count - 1))
        q = Point(t, 1.0 / t)
        worst_res = max(worst_res, abs(hyperbola_residual(H, q)))
        tangent = hyperbola_tangent_at(H, q)
        r = line_line_intersection(tangent, Line(Point(0.0, 0.0), Point(1.0, 0.0)))
        s = line_line_intersection(tangent, Line(Point(0.0, 0.0), Point(0.0, 1.0)))
        mid = Point(0.5 * (r.x + s.x), 0.5 * (r.y + s.y))
        worst_mid = max(worst_mid, mid.distance_to(q))
    return [
        Check("unit_hyperbola_residual", worst_res, 1e-9),
        Check("tangent_midpoint", worst_mid, 1e-12),
    ]


def check_area(B: BernoulliConfig, grid: int = 512) -> Check:
    o = B.center
    hx = 1.6 * B.half_distance
    hy = 0.8 * B.half_distance
    w = TraceWindow(o.x - hx, o.x + hx, o.y - hy, o.y + hy, grid, grid)
    contours = trace(B.lemniscate, w)
    total = sum(contour_area(c) for c in contours if c.closed)
    exact = bernoulli_area(B)
    return Check(f"area_grid_{grid}", abs(total - exact) / exact, 1e-3)


def run_verification(
    B: BernoulliConfig | None = None,
    *,
    sweep: int = 10_000,
    dense: int = 1_000,
    grid: int = 512,
) -> list[Check]:
    """Run every sweep at the given sample counts and collect the checks."""
    B = B or canonical_config()
    checks = [check_defining_product(B, sweep)]
    states = threebar_states(B, sweep)
    checks += check_threebar(B, states)
    checks += check_inversion_pairing(B, states)
    checks.append(check_hyperbola_inverse(B, dense))
    checks.append(check_sameside_locus(B, sweep))
    checks += check_maclaurin(B, sweep)
    checks += check_rightangle(B, sweep)
    checks.append(check_normals(B, dense))
    checks += check_tangent_circle(B, dense)
    checks += check_lemma1(dense)
    checks.append(check_coefficients())
    checks += check_unit_hyperbola()
    checks.append(check_area(B, grid))
    return checks


def format_report(checks: list[Check]) -> str:
    width = max(len(c.name) for c in checks)
    lines = []
    for c in checks:
        status = "PASS" if c.passed else "FAIL"
        lines.append(f"{c.name:<{width}}  max residual {c.max_residual:.3e}  tol {c.tolerance:.1e}  {status}")
    failed = sum(1 for c in checks if not c.passed)
    lines.append(f"{len(checks) - failed}/{len(checks)} checks passed")
    return "\n".join(lines)
