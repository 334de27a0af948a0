"""Scene assembly and deterministic SVG emission.

A Scene is an ordered list of drawables (contour polylines, circles,
segments, point markers, text labels) over a view window. figure_scene
composes the canonical figures (the traced curve plus the auxiliary
elements of each construction); emit_svg serializes a scene to SVG 1.1
text that is byte-identical for identical scenes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .constructions import (
    hyperbola_of,
    maclaurin_sample,
    normal_by_angle,
    right_angle_solve,
    tangent_circle_at,
    three_bar_solve,
)
from .curves import (
    BernoulliConfig,
    PolynomialLemniscate,
    bernoulli_polar_point,
    hyperbola_point,
    hyperbola_tangent_at,
)
from .errors import UnknownPreset
from .geometry import Point, midpoint
from .tracer import TraceWindow, trace

_SQRT2 = math.sqrt(2.0)

FIGURE_PRESETS = (
    "family3",
    "lemniscate",
    "threebar",
    "maclaurin",
    "rightangle",
    "inversion",
    "tangentcircle",
    "normal",
)


@dataclass(frozen=True)
class Style:
    """Stroke width in scene units, dash flag, and an optional label."""

    stroke_width: float = 0.0
    dashed: bool = False
    label: str = ""


@dataclass(frozen=True)
class PolylineElement:
    points: tuple[Point, ...]
    closed: bool
    style: Style


@dataclass(frozen=True)
class CircleElement:
    center: Point
    radius: float
    style: Style


@dataclass(frozen=True)
class SegmentElement:
    a: Point
    b: Point
    style: Style


@dataclass(frozen=True)
class MarkerElement:
    at: Point
    style: Style


@dataclass(frozen=True)
class TextElement:
    at: Point
    style: Style


@dataclass
class Scene:
    """Drawable elements over a view window.

    Adding an element checks that its geometry stays within twice the
    view window, a guard against runaway coordinates from degenerate
    construction parameters.
    """

    viewbox: TraceWindow
    elements: list = field(default_factory=list)

    def _bounds(self):
        w = self.viewbox
        cx = 0.5 * (w.xmin + w.xmax)
        cy = 0.5 * (w.ymin + w.ymax)
        hx = w.xmax - w.xmin
        hy = w.ymax - w.ymin
        return cx - hx, cx + hx, cy - hy, cy + hy

    def _check(self, pts):
        x0, x1, y0, y1 = self._bounds()
        for p in pts:
            if not (x0 <= p.x <= x1 and y0 <= p.y <= y1):
                raise ValueError(f"element reaches {p}, outside 2x the view window")

    def add(self, element) -> None:
        if isinstance(element, PolylineElement):
            self._check(element.points)
        elif isinstance(element, CircleElement):
            c, r = element.center, element.radius
            self._check([Point(c.x - r, c.y - r), Point(c.x + r, c.y + r)])
        elif isinstance(element, SegmentElement):
            self._check([element.a, element.b])
        elif isinstance(element, (MarkerElement, TextElement)):
            self._check([element.at])
        else:
            raise TypeError(f"not a scene element: {element!r}")
        self.elements.append(element)


def _default_window(B: BernoulliConfig, grid: int, tall: float = 0.8) -> TraceWindow:
    # 1.6x the outer vertex distance c*sqrt(2) horizontally; the vertical
    # factor grows for presets whose construction elements reach above
    # the curve (stick tips go up to c*sqrt(2) from the double point)
    o = B.center
    hx = 1.6 * B.half_distance * _SQRT2
    hy = tall * B.half_distance * _SQRT2
    return TraceWindow(o.x - hx, o.x + hx, o.y - hy, o.y + hy, grid, grid)


def _stroke(w: TraceWindow) -> float:
    return 0.006 * (w.xmax - w.xmin)


def _add_lemniscate(scene: Scene, B: BernoulliConfig, w: TraceWindow) -> None:
    sw = _stroke(w)
    for contour in trace(B.lemniscate, w):
        scene.add(PolylineElement(contour.points, contour.closed, Style(stroke_width=sw)))


def _marker(scene, p, label=""):
    scene.add(MarkerElement(p, Style(label=label)))


def _clip_runs(points, scene: Scene):
    """Split a polyline into maximal runs inside the scene's 2x bounds."""
    x0, x1, y0, y1 = scene._bounds()
    runs = []
    cur = []
    for p in points:
        if x0 <= p.x <= x1 and y0 <= p.y <= y1:
            cur.append(p)
        elif cur:
            runs.append(cur)
            cur = []
    if cur:
        runs.append(cur)
    return [r for r in runs if len(r) >= 2]


def _add_hyperbola(scene: Scene, B: BernoulliConfig, w: TraceWindow) -> None:
    H = hyperbola_of(B)
    sw = _stroke(w)
    ts = [-3.0 + 6.0 * k / 240 for k in range(241)]
    for branch in (1, -1):
        pts = [hyperbola_point(H, t, branch) for t in ts]
        for run in _clip_runs(pts, scene):
            scene.add(PolylineElement(tuple(run), False, Style(stroke_width=sw)))


def _scene_lemniscate(B, grid, **_):
    w = _default_window(B, grid)
    scene = Scene(w)
    _add_lemniscate(scene, B, w)
    _marker(scene, B.f1, "F1")
    _marker(scene, B.f2, "F2")
    _marker(scene, B.center, "O")
    return scene


def _scene_family3(B, grid, **_):
    # invented preset: unit equilateral triangle of foci, nine radius
    # levels geometrically spaced across the critical radius
    del B
    circumradius = 1.0 / math.sqrt(3.0)
    foci = tuple(
        Point(circumradius * math.cos(a), circumradius * math.sin(a))
        for a in (math.pi / 2, math.pi / 2 + 2 * math.pi / 3, math.pi / 2 + 4 * math.pi / 3)
    )
    half = 1.15
    w = TraceWindow(-half, half, -half, half, grid, grid)
    scene = Scene(w)
    sw = 0.7 * _stroke(w)
    ratio = (1.4 / 0.7) ** (1.0 / 8.0)
    for k in range(9):
        radius = circumradius * 0.7 * ratio**k
        for contour in trace(PolynomialLemniscate(foci, radius), w):
            scene.add(PolylineElement(contour.points, contour.closed, Style(stroke_width=sw)))
    for i, f in enumerate(foci, start=1):
        _marker(scene, f, f"F{i}")
    return scene


def _scene_threebar(B, grid, theta=math.pi / 2, **_):
    w = _default_window(B, grid, tall=1.15)
    scene = Scene(w)
    _add_lemniscate(scene, B, w)
    state = three_bar_solve(B, theta)
    sw = 1.4 * _stroke(w)
    scene.add(SegmentElement(B.f1, state.a, Style(stroke_width=sw)))
    scene.add(SegmentElement(state.a, state.b, Style(stroke_width=sw)))
    scene.add(SegmentElement(B.f2, state.b, Style(stroke_width=sw)))
    _marker(scene, B.f1, "F1")
    _marker(scene, B.f2, "F2")
    _marker(scene, state.a, "A")
    _marker(scene, state.b, "B")
    _marker(scene, state.x, "X")
    _marker(scene, B.center, "O")
    return scene


def _scene_maclaurin(B, grid, phi=math.pi / 6, **_):
    w = _default_window(B, grid, tall=1.15)
    scene = Scene(w)
    _add_lemniscate(scene, B, w)
    sample = maclaurin_sample(B, phi)
    c = B.half_distance
    scene.add(CircleElement(B.f1, c / _SQRT2, Style(stroke_width=_stroke(w), dashed=True)))
    scene.add(SegmentElement(sample.x_prime, sample.b, Style(stroke_width=1.2 * _stroke(w))))
    _marker(scene, B.f1, "F1")
    _marker(scene, B.center, "O")
    _marker(scene, sample.a, "A")
    _marker(scene, sample.b, "B")
    _marker(scene, sample.x, "X")
    _marker(scene, sample.x_prime, "X'")
    return scene


def _scene_rightangle(B, grid, alpha=math.pi / 3, **_):
    w = _default_window(B, grid, tall=1.15)
    scene = Scene(w)
    _add_lemniscate(scene, B, w)
    state = right_angle_solve(B, alpha)
    sw = 1.4 * _stroke(w)
    o = B.center
    scene.add(CircleElement(B.f1, B.half_distance, Style(stroke_width=_stroke(w), dashed=True)))
    scene.add(SegmentElement(B.f1, state.a, Style(stroke_width=sw)))
    scene.add(SegmentElement(state.a, state.x, Style(stroke_width=sw)))
    scene.add(SegmentElement(state.a, state.y, Style(stroke_width=sw)))
    mid_x = midpoint(state.a, state.x)
    mid_y = midpoint(state.a, state.y)
    scene.add(SegmentElement(o, mid_x, Style(stroke_width=_stroke(w), dashed=True)))
    scene.add(SegmentElement(o, mid_y, Style(stroke_width=_stroke(w), dashed=True)))
    _marker(scene, B.f1, "F1")
    _marker(scene, o, "O")
    _marker(scene, state.a, "A")
    _marker(scene, mid_x, "B")
    _marker(scene, mid_y, "C")
    _marker(scene, state.x, "X")
    _marker(scene, state.y, "Y")
    return scene


def _scene_inversion(B, grid, theta=math.pi / 2, **_):
    w = _default_window(B, grid, tall=1.15)
    scene = Scene(w)
    _add_lemniscate(scene, B, w)
    _add_hyperbola(scene, B, w)
    state = three_bar_solve(B, theta)
    o = B.center
    scene.add(CircleElement(o, B.half_distance, Style(stroke_width=_stroke(w), dashed=True)))
    far = state.q if state.q.distance_to(o) >= state.x.distance_to(o) else state.x
    scene.add(SegmentElement(o, far, Style(stroke_width=_stroke(w), dashed=True)))
    _marker(scene, o, "O")
    _marker(scene, B.f1, "F1")
    _marker(scene, B.f2, "F2")
    _marker(scene, state.x, "X")
    _marker(scene, state.q, "Q")
    _marker(scene, state.p, "P")
    product = state.x.distance_to(o) * state.q.distance_to(o)
    label_at = Point(w.xmin + 0.05 * (w.xmax - w.xmin), w.ymax - 0.08 * (w.ymax - w.ymin))
    scene.add(TextElement(label_at, Style(label=f"|OX|*|OQ| = {product:.3f}")))
    return scene


def _scene_tangentcircle(B, grid, theta=math.pi / 2, **_):
    w = _default_window(B, grid, tall=1.45)
    scene = Scene(w)
    _add_lemniscate(scene, B, w)
    state = three_bar_solve(B, theta)
    circle = tangent_circle_at(state)
    scene.add(CircleElement(circle.center, circle.radius, Style(stroke_width=_stroke(w))))
    tangent = hyperbola_tangent_at(hyperbola_of(B), state.q)
    half_len = 0.9 * B.half_distance
    scene.add(
        SegmentElement(
            tangent.point_at(-half_len),
            tangent.point_at(half_len),
            Style(stroke_width=_stroke(w), dashed=True),
        )
    )
    _marker(scene, B.center, "O")
    _marker(scene, state.x, "X")
    _marker(scene, state.q, "Q")
    _marker(scene, state.p, "P")
    return scene


def _scene_normal(B, grid, theta=math.pi / 6, **_):
    w = _default_window(B, grid)
    scene = Scene(w)
    _add_lemniscate(scene, B, w)
    x = bernoulli_polar_point(B, theta)
    normal = normal_by_angle(B, x)
    o = B.center
    half_len = 0.7 * B.half_distance
    scene.add(SegmentElement(o, x, Style(stroke_width=_stroke(w), dashed=True)))
    scene.add(
        SegmentElement(
            normal.point_at(-half_len),
            normal.point_at(half_len),
            Style(stroke_width=1.2 * _stroke(w)),
        )
    )
    _marker(scene, o, "O")
    _marker(scene, B.f1, "F1")
    _marker(scene, x, "X")
    return scene


_PRESET_BUILDERS = {
    "family3": _scene_family3,
    "lemniscate": _scene_lemniscate,
    "threebar": _scene_threebar,
    "maclaurin": _scene_maclaurin,
    "rightangle": _scene_rightangle,
    "inversion": _scene_inversion,
    "tangentcircle": _scene_tangentcircle,
    "normal": _scene_normal,
}


def figure_scene(
    preset: str,
    B: BernoulliConfig,
    *,
    theta: float | None = None,
    phi: float | None = None,
    alpha: float | None = None,
    grid: int = 512,
) -> Scene:
    """Compose the named figure.

    Parameters left as None fall back to each preset's representative
    value (crank theta = pi/2, secant phi = pi/6, crank alpha = pi/3,
    and polar angle pi/6 for the normal figure).
    """
    builder = _PRESET_BUILDERS.get(preset)
    if builder is None:
        raise UnknownPreset(f"unknown preset {preset!r}; choose from {FIGURE_PRESETS}")
    kwargs = {"grid": grid}
    for key, value in (("theta", theta), ("phi", phi), ("alpha", alpha)):
        if value is not None:
            kwargs[key] = value
    return builder(B, **kwargs)


def _fmt(v: float) -> str:
    if v == 0.0:
        v = 0.0
    return f"{v:.9g}"


def _escape(text: str) -> str:
    return text.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


_CURVE_COLOR = "#1a1a1a"
_AUX_COLOR = "#4477aa"
_STICK_COLOR = "#aa3333"
_TEXT_COLOR = "#333333"
_SVG_WIDTH = 800.0


def emit_svg(scene: Scene, flip_y: bool = True) -> str:
    """Serialize a scene to SVG 1.1 text.

    The view window maps to a fixed 800-unit-wide pixel space; with
    flip_y the y axis points up, preserving mathematical orientation.
    Output is deterministic: the same scene yields byte-identical text.
    """
    w = scene.viewbox
    scale = _SVG_WIDTH / (w.xmax - w.xmin)
    height = (w.ymax - w.ymin) * scale

    def to_px(p: Point) -> tuple[float, float]:
        px = (p.x - w.xmin) * scale
        py = (w.ymax - p.y) * scale if flip_y else (p.y - w.ymin) * scale
        return px, py

    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_fmt(_SVG_WIDTH)}" height="{_fmt(height)}" '
        f'viewBox="0 0 {_fmt(_SVG_WIDTH)} {_fmt(height)}">',
    ]

    def dash(style: Style) -> str:
        return ' stroke-dasharray="6 4"' if style.dashed else ""

    def width_px(style: Style) -> float:
        return max(style.stroke_width * scale, 0.75)

    for el in scene.elements:
        if isinstance(el, PolylineElement):
            coords = " ".join("%s,%s" % tuple(map(_fmt, to_px(p))) for p in el.points)
            tag = "polygon" if el.closed else "polyline"
            lines.append(
                f'  <{tag} points="{coords}" fill="none" stroke="{_CURVE_COLOR}" '
                f'stroke-width="{_fmt(width_px(el.style))}"{dash(el.style)}/>'
            )
        elif isinstance(el, CircleElement):
            cx, cy = to_px(el.center)
            lines.append(
                f'  <circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="{_fmt(el.radius * scale)}" '
                f'fill="none" stroke="{_AUX_COLOR}" '
                f'stroke-width="{_fmt(width_px(el.style))}"{dash(el.style)}/>'
            )
        elif isinstance(el, SegmentElement):
            x1, y1 = to_px(el.a)
            x2, y2 = to_px(el.b)
            lines.append(
                f'  <line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                f'stroke="{_STICK_COLOR}" '
                f'stroke-width="{_fmt(width_px(el.style))}"{dash(el.style)}/>'
            )
        elif isinstance(el, MarkerElement):
            cx, cy = to_px(el.at)
            lines.append(f'  <circle cx="{_fmt(cx)}" cy="{_fmt(cy)}" r="3.5" fill="{_CURVE_COLOR}"/>')
            if el.style.label:
                lines.append(
                    f'  <text x="{_fmt(cx + 6.0)}" y="{_fmt(cy - 6.0)}" '
                    f'font-family="sans-serif" font-size="15" '
                    f'fill="{_TEXT_COLOR}">{_escape(el.style.label)}</text>'
                )
        elif isinstance(el, TextElement):
            cx, cy = to_px(el.at)
            lines.append(
                f'  <text x="{_fmt(cx)}" y="{_fmt(cy)}" font-family="sans-serif" '
                f'font-size="16" fill="{_TEXT_COLOR}">{_escape(el.style.label)}</text>'
            )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
