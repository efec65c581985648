import math
import random

import pytest

from tripatrol.geom import (
    DegenerateTriangle,
    EdgeId,
    Point,
    PointOffEdge,
    Triangle,
    angles,
    edge_length,
    edge_param,
    edge_point,
    is_acute,
    line_intersection,
    project_onto_edge,
    reflect_point,
    segment_distance,
)
from conftest import random_acute_triangle


def law_of_cosines_angles(t: Triangle) -> tuple[float, float, float]:
    """Independent recomputation of the angles from the side lengths."""
    al, be, ga = t.side_lengths
    a = math.acos((be * be + ga * ga - al * al) / (2 * be * ga))
    b = math.acos((al * al + ga * ga - be * be) / (2 * al * ga))
    c = math.acos((al * al + be * be - ga * ga) / (2 * al * be))
    return a, b, c


def test_angles_equilateral(equilateral):
    for ang in angles(equilateral):
        assert ang == pytest.approx(math.pi / 3, abs=1e-12)


def test_angles_right_isosceles():
    t = Triangle(Point(0.5, 0.5), Point(0.0, 0.0), Point(1.0, 0.0))
    a, b, c = angles(t)
    assert a == pytest.approx(math.pi / 2, abs=1e-12)
    assert b == pytest.approx(math.pi / 4, abs=1e-12)
    assert c == pytest.approx(math.pi / 4, abs=1e-12)
    assert not is_acute(t)


def test_angles_match_law_of_cosines(rng):
    for _ in range(200):
        t = random_acute_triangle(rng)
        got = angles(t)
        want = law_of_cosines_angles(t)
        assert sum(got) == pytest.approx(math.pi, rel=1e-12)
        for g, w in zip(got, want):
            assert g == pytest.approx(w, abs=1e-12 * math.pi)


def test_angles_rigid_motion_invariant(rng):
    for _ in range(50):
        t = random_acute_triangle(rng)
        th = rng.uniform(0, 2 * math.pi)
        s = rng.uniform(0.1, 10.0)
        ct, st = math.cos(th), math.sin(th)
        moved = Triangle(
            *[Point(s * (ct * v.x - st * v.y) + 2, s * (st * v.x + ct * v.y) - 7) for v in t.vertices]
        )
        for g, w in zip(angles(t), angles(moved)):
            assert g == pytest.approx(w, abs=1e-12)


def test_degenerate_triangle_rejected():
    with pytest.raises(DegenerateTriangle):
        Triangle(Point(0, 0), Point(1, 0), Point(2, 0))
    with pytest.raises(DegenerateTriangle):
        Triangle(Point(0, 0), Point(0, 0), Point(1, 1))


def test_projection_identity_and_symmetry(equilateral):
    # A point already on the edge line projects to itself.
    p = edge_point(equilateral, EdgeId.A, 0.37)
    assert project_onto_edge(p, equilateral, EdgeId.A).dist(p) < 1e-15
    # Vertex A of the equilateral projects onto the midpoint of BC.
    foot = project_onto_edge(equilateral.a, equilateral, EdgeId.A)
    mid = edge_point(equilateral, EdgeId.A, 0.5)
    assert foot.dist(mid) < 1e-15


def test_projection_orthogonality_residual(rng):
    from tripatrol.geom import edge_endpoints

    for _ in range(200):
        t = random_acute_triangle(rng)
        p = Point(rng.uniform(-5, 5), rng.uniform(-5, 5))
        e = rng.choice(list(EdgeId))
        q = project_onto_edge(p, t, e)
        s, f = edge_endpoints(t, e)
        d = f - s
        assert abs((q - p).dot(d)) / (d.norm() * max(1.0, (q - p).norm())) < 1e-12


def test_projection_minimality(rng):
    for _ in range(50):
        t = random_acute_triangle(rng)
        p = Point(rng.uniform(-5, 5), rng.uniform(-5, 5))
        e = rng.choice(list(EdgeId))
        foot = project_onto_edge(p, t, e)
        for _ in range(20):
            q = edge_point(t, e, rng.uniform(-2, 3))
            assert p.dist(foot) <= p.dist(q) + 1e-12


def test_reflection_closed_form_coordinates():
    # B at the origin, C = (1, 0); reflecting A across BC flips its height,
    # reflecting C across AB lands at (cos 2B, sin 2B).
    b_ang, c_ang = 0.6, 0.7
    p = math.cos(b_ang) * math.sin(c_ang) / math.sin(b_ang + c_ang)
    q = math.sin(b_ang) * math.sin(c_ang) / math.sin(b_ang + c_ang)
    a, b, c = Point(p, q), Point(0, 0), Point(1, 0)
    a1 = reflect_point(a, (b, c))
    assert a1.dist(Point(p, -q)) < 1e-15
    c1 = reflect_point(c, (a, b))
    assert c1.dist(Point(math.cos(2 * b_ang), math.sin(2 * b_ang))) < 1e-14


def test_reflection_involution_and_isometry(rng):
    for _ in range(200):
        line = (
            Point(rng.uniform(-3, 3), rng.uniform(-3, 3)),
            Point(rng.uniform(-3, 3), rng.uniform(-3, 3)),
        )
        if line[0].dist(line[1]) < 1e-6:
            continue
        p = Point(rng.uniform(-3, 3), rng.uniform(-3, 3))
        q = Point(rng.uniform(-3, 3), rng.uniform(-3, 3))
        scale = max(p.norm(), q.norm(), 1.0)
        assert reflect_point(reflect_point(p, line), line).dist(p) <= 1e-12 * scale
        assert abs(reflect_point(p, line).dist(reflect_point(q, line)) - p.dist(q)) <= 1e-12 * scale
    # Point on the line is fixed.
    line = (Point(0, 0), Point(2, 1))
    on = Point(4, 2)
    assert reflect_point(on, line).dist(on) < 1e-14


def test_reflection_coincident_endpoints_error():
    with pytest.raises(ValueError):
        reflect_point(Point(1, 2), (Point(3, 3), Point(3, 3)))


def test_edge_param_conventions(equilateral):
    # Endpoint order: A: B->C, B: A->C, C: A->B.
    assert edge_param(equilateral, EdgeId.A, equilateral.b) == pytest.approx(0.0, abs=1e-15)
    assert edge_param(equilateral, EdgeId.A, equilateral.c) == pytest.approx(1.0, abs=1e-15)
    assert edge_param(equilateral, EdgeId.B, equilateral.a) == pytest.approx(0.0, abs=1e-15)
    assert edge_param(equilateral, EdgeId.C, equilateral.b) == pytest.approx(1.0, abs=1e-15)
    mid = edge_point(equilateral, EdgeId.B, 0.5)
    assert edge_param(equilateral, EdgeId.B, mid) == pytest.approx(0.5, abs=1e-15)


def test_edge_param_round_trip(rng):
    for _ in range(200):
        t = random_acute_triangle(rng)
        e = rng.choice(list(EdgeId))
        u = rng.uniform(-0.5, 1.5)
        p = edge_point(t, e, u)
        u2 = edge_param(t, e, p)
        assert edge_point(t, e, u2).dist(p) <= 1e-12 * t.diameter


def test_edge_param_off_edge_error(equilateral):
    with pytest.raises(PointOffEdge):
        edge_param(equilateral, EdgeId.A, Point(0.5, 0.25))


def test_line_intersection():
    p = line_intersection((Point(0, 0), Point(2, 2)), (Point(0, 2), Point(2, 0)))
    assert p.dist(Point(1, 1)) < 1e-15
    with pytest.raises(ValueError):
        line_intersection((Point(0, 0), Point(1, 0)), (Point(0, 1), Point(1, 1)))


def test_segment_distance():
    s1 = (Point(0, 0), Point(1, 0))
    assert segment_distance(s1, (Point(0, 1), Point(1, 1))) == pytest.approx(1.0)
    assert segment_distance(s1, (Point(2, 0), Point(3, 0))) == pytest.approx(1.0)
    assert segment_distance(s1, (Point(0.5, -1), Point(0.5, 1))) == 0.0
    # Parallel but offset along the direction: nearest endpoints decide.
    assert segment_distance(s1, (Point(3, 4), Point(5, 4))) == pytest.approx(math.hypot(2, 4))
