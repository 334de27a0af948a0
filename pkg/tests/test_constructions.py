"""Construction solver tests against the worked states and oracles."""

import math

import pytest

from lemniscate import (
    BernoulliConfig,
    Point,
    hyperbola_residual,
    hyperbola_tangent_at,
    invert_between,
    lemniscate_field,
    lemniscate_gradient,
    line_line_intersection,
    maclaurin_sample,
    normal_by_angle,
    right_angle_solve,
    tangent_circle_at,
    three_bar_solve,
)
from lemniscate.constructions import hyperbola_of
from lemniscate.errors import (
    CenterSingular,
    DoublePoint,
    NoChord,
    NotOnCurve,
    OutOfReach,
    UndefinedCenter,
)
from lemniscate.geometry import Line

SQRT2 = math.sqrt(2.0)
B = BernoulliConfig(Point(-1.0, 0.0), Point(1.0, 0.0))
L = B.lemniscate
O = Point(0.0, 0.0)


class TestThreeBar:
    def test_pinned_state(self):
        # radical-line solve by hand at theta = pi/2
        st = three_bar_solve(B, math.pi / 2)
        assert st.a.distance_to(Point(-1.0, SQRT2)) <= 1e-12
        assert st.b.distance_to(Point(-1.0 / 3.0, -SQRT2 / 3.0)) <= 1e-12
        assert st.x.distance_to(Point(-2.0 / 3.0, SQRT2 / 3.0)) <= 1e-12
        product_sq = (st.x - B.f1).norm_sq() * (st.x - B.f2).norm_sq()
        assert product_sq == pytest.approx(1.0, abs=1e-12)

    def test_pinned_p_and_q(self):
        st = three_bar_solve(B, math.pi / 2)
        assert st.p.distance_to(Point(-1.0, -SQRT2 / 2)) <= 1e-12
        assert st.q.distance_to(Point(-1.0, SQRT2 / 2)) <= 1e-12
        assert abs(hyperbola_residual(hyperbola_of(B), st.q)) <= 1e-12
        assert st.x.norm() * st.q.norm() == pytest.approx(1.0, abs=1e-12)

    def test_same_side_branch(self):
        st = three_bar_solve(B, math.pi / 2, side="same")
        assert st.b.distance_to(Point(1.0, SQRT2)) <= 1e-12
        assert st.x.distance_to(Point(0.0, SQRT2)) <= 1e-12
        assert st.x.distance_to(O) == pytest.approx(SQRT2, abs=1e-12)
        # parallelogram branch: stick lines parallel, no p
        assert st.p is None and st.q is None

    def test_stick_lengths_and_midpoint(self):
        for k in range(200):
            theta = (k + 0.5) * math.tau / 200
            st = three_bar_solve(B, theta)
            assert abs(st.a.distance_to(B.f1) - SQRT2) <= 1e-10
            assert abs(st.b.distance_to(B.f2) - SQRT2) <= 1e-10
            assert abs(st.a.distance_to(st.b) - 2.0) <= 1e-10
            mid = Point(0.5 * (st.a.x + st.b.x), 0.5 * (st.a.y + st.b.y))
            assert st.x.distance_to(mid) == 0.0
            assert abs(lemniscate_field(L, st.x)) <= 1e-9

    def test_opposite_sides(self):
        for k in range(100):
            theta = (k + 0.5) * math.tau / 100
            st = three_bar_solve(B, theta)
            assert st.a.y * st.b.y < 0.0

    def test_degenerate_p_at_quarter_turn(self):
        # at theta = pi/4 the coupler midpoint hits o and the stick lines
        # are parallel; the state comes back without p and q
        st = three_bar_solve(B, math.pi / 4)
        assert st.p is None and st.q is None
        assert st.x.distance_to(O) <= 1e-12

    def test_side_validation(self):
        with pytest.raises(ValueError):
            three_bar_solve(B, 1.0, side="sideways")

    def test_general_pose(self):
        tilted = BernoulliConfig(Point(0.7, -0.3), Point(1.9, 1.1))
        for k in range(50):
            theta = (k + 0.5) * math.tau / 50
            st = three_bar_solve(tilted, theta)
            assert abs(lemniscate_field(tilted.lemniscate, st.x)) <= 1e-9


class TestMaclaurin:
    def test_axis_secant_reaches_vertices(self):
        s = maclaurin_sample(B, 0.0)
        assert s.x.distance_to(Point(-SQRT2, 0.0)) <= 1e-12
        assert s.x_prime.distance_to(Point(SQRT2, 0.0)) <= 1e-12
        assert s.a.distance_to(s.b) == pytest.approx(SQRT2, abs=1e-12)

    def test_tangent_secant_collapses_to_center(self):
        s = maclaurin_sample(B, math.pi / 4)
        assert s.a.distance_to(s.b) <= 1e-9
        assert s.x.distance_to(O) <= 1e-9
        assert s.x_prime.distance_to(O) <= 1e-9

    def test_thirty_degree_chord(self):
        # chord half-length sqrt(1/2 - sin^2 30) = 1/2, so |ab| = |ox| = 1
        s = maclaurin_sample(B, math.pi / 6)
        assert s.a.distance_to(s.b) == pytest.approx(1.0, abs=1e-12)
        assert s.x.distance_to(O) == pytest.approx(1.0, abs=1e-12)
        assert abs(lemniscate_field(L, s.x)) <= 1e-9

    def test_no_chord(self):
        with pytest.raises(NoChord):
            maclaurin_sample(B, math.pi / 3)

    def test_sweep_field_residual(self):
        c_over = 1.0 / SQRT2
        for k in range(500):
            phi = -math.pi / 4 + (k + 0.5) * (math.pi / 2) / 500
            s = maclaurin_sample(B, phi)
            assert abs(lemniscate_field(L, s.x)) <= 1e-9
            assert abs(lemniscate_field(L, s.x_prime)) <= 1e-9
            assert abs(s.a.distance_to(B.f1) - c_over) <= 1e-10
            assert abs(s.b.distance_to(B.f1) - c_over) <= 1e-10


class TestRightAngle:
    def test_pinned_state(self):
        st = right_angle_solve(B, math.pi / 3)
        assert st.a.distance_to(Point(-0.5, math.sqrt(3) / 2)) <= 1e-12
        assert st.x.distance_to(Point(math.sqrt(3) / 2, 0.5)) <= 1e-12
        product_sq = (st.x - B.f1).norm_sq() * (st.x - B.f2).norm_sq()
        assert product_sq == pytest.approx(1.0, abs=1e-12)

    def test_boundary_collapses_to_center(self):
        st = right_angle_solve(B, math.pi / 2)
        assert st.x.distance_to(O) <= 1e-7
        assert st.y.distance_to(O) <= 1e-7

    def test_crank_on_axis_by_continuity(self):
        st = right_angle_solve(B, 0.0)
        assert st.x.distance_to(Point(SQRT2, 0.0)) <= 1e-12
        assert st.a.distance_to(O) <= 1e-12

    def test_out_of_reach(self):
        with pytest.raises(OutOfReach):
            right_angle_solve(B, 2 * math.pi / 3)

    def test_sweep_invariants(self):
        for k in range(500):
            alpha = -math.pi / 2 + (k + 0.5) * math.pi / 500
            st = right_angle_solve(B, alpha)
            for tip in (st.x, st.y):
                assert abs(lemniscate_field(L, tip)) <= 1e-9
                # right angle at o: |o tip|^2 + |o a|^2 = |a tip|^2
                assert abs(
                    tip.norm_sq() + st.a.norm_sq() - (tip - st.a).norm_sq()
                ) <= 1e-10
                assert abs(st.a.distance_to(tip) - SQRT2) <= 1e-10
            assert st.x.x > 0.0 > st.y.x  # opposite lobes


class TestInvertBetween:
    def test_vertex_to_hyperbola_vertex(self):
        image = invert_between(B, Point(SQRT2, 0.0))
        assert image.distance_to(Point(1.0 / SQRT2, 0.0)) <= 1e-12

    def test_worked_point(self):
        image = invert_between(B, Point(-2.0 / 3.0, SQRT2 / 3.0))
        assert image.distance_to(Point(-1.0, SQRT2 / 2)) <= 1e-12
        assert abs(hyperbola_residual(hyperbola_of(B), image)) <= 1e-12

    def test_focus_fixed(self):
        image = invert_between(B, Point(1.0, 0.0))
        assert image.distance_to(Point(1.0, 0.0)) <= 1e-12

    def test_center_singular(self):
        with pytest.raises(CenterSingular):
            invert_between(B, O)


class TestTangentCircle:
    def test_pinned_circle(self):
        st = three_bar_solve(B, math.pi / 2)
        circle = tangent_circle_at(st)
        assert circle.center.distance_to(Point(-1.0, -SQRT2 / 2)) <= 1e-12
        assert circle.radius == pytest.approx(math.sqrt(1.5), abs=1e-12)
        assert abs(circle.radius - circle.center.distance_to(O)) <= 1e-12

    def test_radius_vector_parallel_to_gradient(self):
        st = three_bar_solve(B, math.pi / 2)
        circle = tangent_circle_at(st)
        radial = (st.x - circle.center).unit()
        grad = lemniscate_gradient(L, st.x).unit()
        assert abs(radial.cross(grad)) <= 1e-12

    def test_undefined_center(self):
        same = three_bar_solve(B, math.pi / 2, side="same")
        with pytest.raises(UndefinedCenter):
            tangent_circle_at(same)

    def test_second_order_contact(self):
        st = three_bar_solve(B, math.pi / 2)
        circle = tangent_circle_at(st)
        base = math.atan2(st.x.y - circle.center.y, st.x.x - circle.center.x)
        values = []
        for s in (1e-2, 1e-3, 1e-4):
            ang = base + s / circle.radius
            p = Point(
                circle.center.x + circle.radius * math.cos(ang),
                circle.center.y + circle.radius * math.sin(ang),
            )
            values.append(abs(lemniscate_field(L, p)))
        slope = (math.log(values[0]) - math.log(values[2])) / (math.log(1e-2) - math.log(1e-4))
        assert slope >= 1.9

    def test_axis_limit_puts_center_on_axis(self):
        # symmetry forces p onto the focal axis as x approaches the
        # vertex; the circle tends to the one on diameter o-vertex
        st = three_bar_solve(B, 0.01)
        circle = tangent_circle_at(st)
        assert abs(st.p.y) <= 0.02
        assert circle.radius == pytest.approx(SQRT2 / 2, abs=0.01)

    def test_center_on_normal_and_perpendicular(self):
        # the proof's characterization: p = normal at x intersected with
        # the perpendicular from o to the hyperbola tangent at q
        st = three_bar_solve(B, 2.0)
        circle = tangent_circle_at(st)
        tangent = hyperbola_tangent_at(hyperbola_of(B), st.q)
        rebuilt = line_line_intersection(
            normal_by_angle(B, st.x), Line(O, tangent.direction.perp())
        )
        assert rebuilt.distance_to(circle.center) <= 1e-8


class TestNormal:
    def test_vertex_normal_is_axis(self):
        line = normal_by_angle(B, Point(SQRT2, 0.0))
        assert abs(line.direction.cross(Point(1.0, 0.0))) <= 1e-12
        assert line.anchor.distance_to(Point(SQRT2, 0.0)) == 0.0

    def test_left_vertex(self):
        line = normal_by_angle(B, Point(-SQRT2, 0.0))
        assert abs(line.direction.cross(Point(1.0, 0.0))) <= 1e-12

    def test_worked_point(self):
        line = normal_by_angle(B, Point(-2.0 / 3.0, SQRT2 / 3.0))
        expected = math.atan2(5 * SQRT2, 2.0)
        actual = math.atan2(line.direction.y, line.direction.x) % math.pi
        assert actual == pytest.approx(expected, abs=1e-9)

    def test_matches_gradient_all_quadrants(self):
        for x in (
            Point(math.sqrt(3) / 2, 0.5),
            Point(math.sqrt(3) / 2, -0.5),
            Point(-2.0 / 3.0, SQRT2 / 3.0),
            Point(-2.0 / 3.0, -SQRT2 / 3.0),
        ):
            line = normal_by_angle(B, x)
            grad = lemniscate_gradient(L, x).unit()
            assert abs(line.direction.cross(grad)) <= 1e-8

    def test_double_point_rejected(self):
        with pytest.raises(DoublePoint):
            normal_by_angle(B, O)

    def test_not_on_curve(self):
        with pytest.raises(NotOnCurve):
            normal_by_angle(B, Point(0.9, 0.9))
