"""Orthic triangle, the five-reflection unfolding, the orthic channel, and
the 6-periodic schedules obtained by folding channel lines back in.

The unfolding works on a relabeled copy of the input whose side lengths
satisfy alpha >= beta >= gamma; results are mapped back to the caller's
vertex labels before they are returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geom import (
    EdgeId,
    Line,
    NotAcute,
    Point,
    Triangle,
    angles,
    edge_endpoints,
    edge_param,
    edge_point,
    line_intersection,
    project_onto_edge,
    project_onto_line,
    reflect_point,
    require_acute,
    signed_offset,
)
from .schedule import Schedule, SchedulePoint


class OutsideChannel(ValueError):
    """Channel parameter lambda outside [-1, 1]."""


@dataclass(frozen=True)
class OrthicData:
    k_foot: Point  # altitude foot from A on BC
    l_foot: Point  # from B on AC
    m_foot: Point  # from C on AB
    perimeter: float
    x0: float  # L = x0*C + (1-x0)*A, the convex-combination optimizer


def orthic_perimeter(t: Triangle) -> float:
    """Closed-form orthic perimeter 2p / (1/(sinB sinC) + 1/(sinA sinC) + 1/(sinA sinB)).

    Accepts right triangles as a boundary evaluation of the formula.
    """
    a_ang, b_ang, c_ang = angles(t)
    if min(a_ang, b_ang, c_ang) <= 0.0 or max(a_ang, b_ang, c_ang) > math.pi / 2 + 1e-12:
        raise ValueError("angles must lie in (0, pi/2] for the perimeter formula")
    sa, sb, sc = math.sin(a_ang), math.sin(b_ang), math.sin(c_ang)
    inv = 1.0 / (sb * sc) + 1.0 / (sa * sc) + 1.0 / (sa * sb)
    return 2.0 * t.perimeter / inv


def orthic_triangle(t: Triangle) -> OrthicData:
    """Altitude feet K, L, M and the orthic perimeter of an acute triangle."""
    require_acute(t)
    k = project_onto_edge(t.a, t, EdgeId.A)
    l = project_onto_edge(t.b, t, EdgeId.B)
    m = project_onto_edge(t.c, t, EdgeId.C)
    a_ang, b_ang, c_ang = angles(t)
    x0 = math.cos(a_ang) * math.sin(c_ang) / math.sin(b_ang)
    # Cross-check the projection against the parametric optimizer form.
    l_param = t.c * x0 + t.a * (1.0 - x0)
    if l_param.dist(l) > 1e-10 * t.diameter:
        raise AssertionError("altitude foot disagrees with parametric optimizer")
    per = k.dist(l) + l.dist(m) + m.dist(k)
    if abs(per - orthic_perimeter(t)) > 1e-10 * per:
        raise AssertionError("coordinate perimeter disagrees with closed formula")
    return OrthicData(k_foot=k, l_foot=l, m_foot=m, perimeter=per, x0=x0)


def orthic_schedule(t: Triangle) -> Schedule:
    """The 3-periodic cyclic schedule along the orthic triangle K -> M -> L."""
    data = orthic_triangle(t)
    return Schedule(
        t,
        (
            SchedulePoint(EdgeId.A, edge_param(t, EdgeId.A, data.k_foot)),
            SchedulePoint(EdgeId.C, edge_param(t, EdgeId.C, data.m_foot)),
            SchedulePoint(EdgeId.B, edge_param(t, EdgeId.B, data.l_foot)),
        ),
    )


@dataclass(frozen=True)
class ReflectionChain:
    """Five successive reflections of a triangle with alpha >= beta >= gamma.

    C1 is C reflected about AB, B1 is B about A-C1, A1 is A about B1-C1,
    C2 is C1 about A1-B1, B2 is B1 about A1-C2.  The altitude feet of the
    successive copies (k, m, l1, k1, m1, l2, k2) all lie on one line, the
    orthic line, and the segment k -> k2 is two orbit periods long.
    """

    source: Triangle  # caller's triangle, original labels
    base: Triangle  # relabeled copy (alpha >= beta >= gamma)
    triangles: tuple[Triangle, Triangle, Triangle, Triangle, Triangle]
    mirrors: tuple[Line, Line, Line, Line, Line]
    a1: Point
    b1: Point
    b2: Point
    c1: Point
    c2: Point
    k: Point
    m: Point
    l1: Point
    k1: Point
    m1: Point
    l2: Point
    k2: Point
    # relabeled EdgeId -> caller EdgeId
    edge_map: dict[EdgeId, EdgeId]

    @property
    def all_triangles(self) -> tuple[Triangle, ...]:
        return (self.base,) + self.triangles

    def fold(self, p: Point, depth: int) -> Point:
        """Map a point of the depth-th reflected copy back onto the base."""
        for i in range(depth - 1, -1, -1):
            p = reflect_point(p, self.mirrors[i])
        return p


def _relabel(t: Triangle) -> tuple[Triangle, dict[EdgeId, EdgeId]]:
    """Vertices reordered so opposite side lengths are non-increasing."""
    sides = t.side_lengths
    order = sorted(range(3), key=lambda i: (-sides[i], i))
    v = t.vertices
    relabeled = Triangle(v[order[0]], v[order[1]], v[order[2]])
    edge_map = {EdgeId(i): EdgeId(order[i]) for i in range(3)}
    return relabeled, edge_map


def reflection_chain(t: Triangle) -> ReflectionChain:
    require_acute(t)
    base, edge_map = _relabel(t)
    a, b, c = base.vertices

    c1 = reflect_point(c, (a, b))
    b1 = reflect_point(b, (a, c1))
    a1 = reflect_point(a, (b1, c1))
    c2 = reflect_point(c1, (a1, b1))
    b2 = reflect_point(b1, (a1, c2))

    mirrors: tuple[Line, ...] = ((a, b), (a, c1), (b1, c1), (a1, b1), (a1, c2))
    tris = (
        Triangle(a, b, c1),
        Triangle(a, b1, c1),
        Triangle(a1, b1, c1),
        Triangle(a1, b1, c2),
        Triangle(a1, b2, c2),
    )

    k = project_onto_line(a, (b, c))
    m = project_onto_line(c, (a, b))
    l1 = project_onto_line(b, (a, c1))
    k1 = project_onto_line(a, (b1, c1))
    m1 = project_onto_line(c1, (a1, b1))
    l2 = project_onto_line(b1, (a1, c2))
    k2 = project_onto_line(a1, (b2, c2))

    # The final copy's base must come out parallel to BC (total turning 3*pi).
    d0, d5 = c - b, c2 - b2
    sin_angle = abs(d0.cross(d5)) / (d0.norm() * d5.norm())
    if sin_angle > 1e-10:
        raise AssertionError("B2C2 failed to come out parallel to BC")

    return ReflectionChain(
        source=t,
        base=base,
        triangles=tris,
        mirrors=mirrors,
        a1=a1,
        b1=b1,
        b2=b2,
        c1=c1,
        c2=c2,
        k=k,
        m=m,
        l1=l1,
        k1=k1,
        m1=m1,
        l2=l2,
        k2=k2,
        edge_map=edge_map,
    )


def orthic_line(chain: ReflectionChain) -> tuple[Point, Point]:
    """The straight unfolded image (K, K2) of two orthic orbit periods."""
    return (chain.k, chain.k2)


@dataclass(frozen=True)
class ChannelData:
    direction: Point  # unit vector along the orthic line
    boundary_low: Line  # through A1, parallel to the orthic line
    boundary_high: Line  # through A, parallel to the orthic line
    half_width_low: float
    half_width_high: float


def _count_edge_hits(line: Line, tri: Triangle, tol: float) -> int:
    """Edges of tri whose closed segment (with tolerance slack) meets the line."""
    anchor, other = line
    d = other - anchor
    hits = 0
    for e in EdgeId:
        s, f = edge_endpoints(tri, e)
        seg = f - s
        den = d.cross(seg)
        if abs(den) <= 1e-14 * d.norm() * seg.norm():
            # Parallel: counts only if collinear with the edge line.
            if abs(d.cross(s - anchor)) <= tol * d.norm():
                hits += 1
            continue
        v = (s - anchor).cross(d) / den  # parameter along the edge
        pad = tol / seg.norm()
        if -pad <= v <= 1.0 + pad:
            hits += 1
    return hits


def orthic_channel(t: Triangle) -> ChannelData:
    """Maximal strip of lines parallel to the orthic line that still cross at
    least two edges of every reflected copy; bounded by the parallels
    through A and through A1."""
    chain = reflection_chain(t)
    return _channel_from_chain(chain)


def _channel_from_chain(chain: ReflectionChain) -> ChannelData:
    k, k2 = chain.k, chain.k2
    w = k2 - k
    direction = w * (1.0 / w.norm())
    a = chain.base.a
    off_high = signed_offset(a, k, direction)
    off_low = signed_offset(chain.a1, k, direction)
    if not off_high * off_low < 0.0:
        raise AssertionError("A and A1 should straddle the orthic line")
    low_line: Line = (chain.a1, chain.a1 + direction)
    high_line: Line = (a, a + direction)
    tol = chain.base.tol(1e-9)
    for boundary in (low_line, high_line):
        for tri in chain.all_triangles:
            if _count_edge_hits(boundary, tri, tol) < 2:
                raise AssertionError("channel boundary misses a reflected triangle")
    return ChannelData(
        direction=direction,
        boundary_low=low_line,
        boundary_high=high_line,
        half_width_low=abs(off_low),
        half_width_high=abs(off_high),
    )


# Unfolded crossing sequence: (line supplier, fold depth, relabeled edge).
def _crossing_lines(chain: ReflectionChain) -> list[tuple[Line, int, EdgeId]]:
    base = chain.base
    return [
        ((base.b, base.c), 0, EdgeId.A),
        (chain.mirrors[0], 0, EdgeId.C),
        (chain.mirrors[1], 1, EdgeId.B),
        (chain.mirrors[2], 2, EdgeId.A),
        (chain.mirrors[3], 3, EdgeId.C),
        (chain.mirrors[4], 4, EdgeId.B),
    ]


def sub_orthic_schedule(t: Triangle, lam: float) -> Schedule:
    """Cyclic 6-periodic schedule from the channel line at parameter lam.

    lam = -1 is the boundary through A1, 0 the orthic line itself, +1 the
    boundary through A; in between the offset interpolates linearly in
    signed distance on each side.
    """
    if not -1.0 <= lam <= 1.0:
        raise OutsideChannel(f"lambda {lam} outside [-1, 1]")
    chain = reflection_chain(t)
    channel = _channel_from_chain(chain)
    dir_u = channel.direction
    # Unit normal pointing toward the A side (positive signed offset).
    normal = Point(-dir_u.y, dir_u.x)
    if signed_offset(chain.base.a, chain.k, dir_u) < 0.0:
        normal = normal * -1.0
    off = lam * (channel.half_width_high if lam >= 0.0 else channel.half_width_low)
    anchor = chain.k + normal * off
    line: Line = (anchor, anchor + dir_u)

    crossings = _crossing_lines(chain)
    folded: list[Point] = [
        chain.fold(line_intersection(line, cl), depth) for cl, depth, _ in crossings
    ]
    # The line's exit through the final copy's base must fold back onto the start.
    closing = chain.fold(
        line_intersection(line, (chain.b2, chain.c2)), len(chain.mirrors)
    )
    if closing.dist(folded[0]) > 1e-8 * t.diameter:
        raise AssertionError("folded trajectory failed to close up")

    pts = []
    for p, (_, _, rel_edge) in zip(folded, crossings):
        edge = chain.edge_map[rel_edge]
        u = edge_param(t, edge, p, rel_tol=1e-8)
        snap = t.tol(1e-8) / max(t.side_lengths)
        if abs(u) <= snap:
            u = 0.0
        elif abs(u - 1.0) <= snap:
            u = 1.0
        pts.append(SchedulePoint(edge, u))
    return Schedule(t, tuple(pts))
