"""Planar primitives: points, triangle edges, projections, reflections, angles.

All tolerances are scale-relative: a length comparison uses
``rel_tol * diameter`` where ``diameter`` is the longest side of the
triangle involved.  The geometric formulas themselves are exact; floating
point is the only noise source.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import IntEnum

DEFAULT_REL_TOL = 1e-9

# Angular slack used when classifying a triangle as acute: a max angle
# within ACUTE_ANGLE_TOL of pi/2 counts as right, i.e. not acute.
ACUTE_ANGLE_TOL = 1e-9


class DegenerateTriangle(ValueError):
    """Vertices are (numerically) collinear or not finite."""


class PointOffEdge(ValueError):
    """A point handed to edge_param does not lie on the edge's line."""


class NotAcute(ValueError):
    """An operation that needs an acute triangle received a right/obtuse one."""


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite coordinates ({self.x}, {self.y})")

    def __add__(self, o: "Point") -> "Point":
        return Point(self.x + o.x, self.y + o.y)

    def __sub__(self, o: "Point") -> "Point":
        return Point(self.x - o.x, self.y - o.y)

    def __mul__(self, s: float) -> "Point":
        return Point(self.x * s, self.y * s)

    __rmul__ = __mul__

    def dot(self, o: "Point") -> float:
        return self.x * o.x + self.y * o.y

    def cross(self, o: "Point") -> float:
        return self.x * o.y - self.y * o.x

    def norm(self) -> float:
        return math.hypot(self.x, self.y)

    def dist(self, o: "Point") -> float:
        return math.hypot(self.x - o.x, self.y - o.y)

    def as_tuple(self) -> tuple[float, float]:
        return (self.x, self.y)


class EdgeId(IntEnum):
    """Edge opposite the same-named vertex: A = BC, B = AC, C = AB."""

    A = 0
    B = 1
    C = 2


# Endpoint order convention, fixed globally so edge parameters are
# comparable across operations: A: B->C, B: A->C, C: A->B.
_EDGE_ENDS = {EdgeId.A: (1, 2), EdgeId.B: (0, 2), EdgeId.C: (0, 1)}

# Edges incident to the vertex sitting at u=0 / u=1 of each edge.
_VERTEX_EDGES = {
    (EdgeId.A, 0): (EdgeId.A, EdgeId.C),  # vertex B
    (EdgeId.A, 1): (EdgeId.A, EdgeId.B),  # vertex C
    (EdgeId.B, 0): (EdgeId.B, EdgeId.C),  # vertex A
    (EdgeId.B, 1): (EdgeId.B, EdgeId.A),  # vertex C
    (EdgeId.C, 0): (EdgeId.C, EdgeId.B),  # vertex A
    (EdgeId.C, 1): (EdgeId.C, EdgeId.A),  # vertex B
}


@dataclass(frozen=True)
class Triangle:
    a: Point
    b: Point
    c: Point

    def __post_init__(self):
        d = self.diameter
        if d == 0.0 or abs((self.b - self.a).cross(self.c - self.a)) <= DEFAULT_REL_TOL * d * d:
            raise DegenerateTriangle(f"collinear vertices {self.a}, {self.b}, {self.c}")

    @property
    def vertices(self) -> tuple[Point, Point, Point]:
        return (self.a, self.b, self.c)

    @property
    def side_lengths(self) -> tuple[float, float, float]:
        """(alpha, beta, gamma) = lengths of BC, AC, AB."""
        return (self.b.dist(self.c), self.a.dist(self.c), self.a.dist(self.b))

    @property
    def perimeter(self) -> float:
        return sum(self.side_lengths)

    @property
    def diameter(self) -> float:
        return max(self.b.dist(self.c), self.a.dist(self.c), self.a.dist(self.b))

    def tol(self, rel_tol: float | None = None) -> float:
        """Absolute length tolerance for this triangle's scale."""
        return (DEFAULT_REL_TOL if rel_tol is None else rel_tol) * self.diameter


def angles(t: Triangle) -> tuple[float, float, float]:
    """Interior angles (A, B, C) in radians at vertices a, b, c."""
    return (
        _angle_at(t.a, t.b, t.c),
        _angle_at(t.b, t.c, t.a),
        _angle_at(t.c, t.a, t.b),
    )


def _angle_at(v: Point, p: Point, q: Point) -> float:
    u, w = p - v, q - v
    return math.atan2(abs(u.cross(w)), u.dot(w))


def is_acute(t: Triangle) -> bool:
    """Strictly acute; a right angle (within ACUTE_ANGLE_TOL) is rejected."""
    return max(angles(t)) < math.pi / 2 - ACUTE_ANGLE_TOL


def require_acute(t: Triangle) -> None:
    if not is_acute(t):
        raise NotAcute(f"max angle {max(angles(t)):.12f} rad is not acutely below pi/2")


def edge_endpoints(t: Triangle, e: EdgeId) -> tuple[Point, Point]:
    i, j = _EDGE_ENDS[e]
    v = t.vertices
    return (v[i], v[j])


def edge_length(t: Triangle, e: EdgeId) -> float:
    s, f = edge_endpoints(t, e)
    return s.dist(f)


def edge_point(t: Triangle, e: EdgeId, u: float) -> Point:
    """Point at normalized parameter u along edge e (u in [0,1] on the segment)."""
    s, f = edge_endpoints(t, e)
    return Point(s.x + u * (f.x - s.x), s.y + u * (f.y - s.y))


def edge_param(t: Triangle, e: EdgeId, p: Point, rel_tol: float | None = None) -> float:
    """Normalized parameter of p along edge e; raises PointOffEdge if p is off the line."""
    s, f = edge_endpoints(t, e)
    d = f - s
    dd = d.dot(d)
    resid = abs(d.cross(p - s)) / math.sqrt(dd)
    if resid > t.tol(rel_tol):
        raise PointOffEdge(f"point {p} is {resid:g} off the line of edge {e.name}")
    return (p - s).dot(d) / dd


def vertex_edges(e: EdgeId, u: float) -> tuple[EdgeId, ...]:
    """Edges visited by a point at parameter u on edge e (two if u is a vertex)."""
    if u <= 1e-12:
        return _VERTEX_EDGES[(e, 0)]
    if u >= 1.0 - 1e-12:
        return _VERTEX_EDGES[(e, 1)]
    return (e,)


Line = tuple[Point, Point]


def _line_dir(line: Line) -> Point:
    p, q = line
    d = q - p
    n = d.norm()
    if n <= 1e-12 * max(1.0, p.norm(), q.norm()):
        raise ValueError("line endpoints coincide")
    return d * (1.0 / n)


def project_onto_line(p: Point, line: Line) -> Point:
    """Foot of the perpendicular from p onto the (infinite) line."""
    a, _ = line
    d = _line_dir(line)
    return a + d * (p - a).dot(d)


def project_onto_edge(p: Point, t: Triangle, e: EdgeId) -> Point:
    """Foot of the perpendicular from p onto the line through edge e."""
    return project_onto_line(p, edge_endpoints(t, e))


def reflect_point(p: Point, line: Line) -> Point:
    """Mirror image of p across the line; an involution."""
    f = project_onto_line(p, line)
    return Point(2.0 * f.x - p.x, 2.0 * f.y - p.y)


def line_intersection(l1: Line, l2: Line) -> Point:
    """Intersection of two non-parallel lines."""
    p, q = l1
    r, s = l2
    d1, d2 = q - p, s - r
    den = d1.cross(d2)
    if abs(den) <= 1e-14 * d1.norm() * d2.norm():
        raise ValueError("lines are parallel")
    u = (r - p).cross(d2) / den
    return p + d1 * u


def signed_offset(p: Point, anchor: Point, unit_dir: Point) -> float:
    """Signed perpendicular distance of p from the line (anchor, direction)."""
    return unit_dir.cross(p - anchor)


def point_segment_distance(p: Point, seg: tuple[Point, Point]) -> float:
    a, b = seg
    d = b - a
    dd = d.dot(d)
    if dd == 0.0:
        return p.dist(a)
    u = min(1.0, max(0.0, (p - a).dot(d) / dd))
    return p.dist(a + d * u)


def segment_distance(s1: tuple[Point, Point], s2: tuple[Point, Point]) -> float:
    """Minimum distance between two closed segments."""
    a, b = s1
    c, d = s2
    # Proper crossing means distance zero.
    d1, d2 = b - a, d - c
    den = d1.cross(d2)
    if den != 0.0:
        u = (c - a).cross(d2) / den
        v = (c - a).cross(d1) / den
        if 0.0 <= u <= 1.0 and 0.0 <= v <= 1.0:
            return 0.0
    return min(
        point_segment_distance(a, s2),
        point_segment_distance(b, s2),
        point_segment_distance(c, s1),
        point_segment_distance(d, s1),
    )
