import math
import random

import pytest

from tripatrol.geom import Point, Triangle


def random_acute_triangle(rng: random.Random, margin: float = 0.08) -> Triangle:
    """Random acute triangle, angles bounded away from 0 and pi/2 by margin,
    with a random scale, rotation and translation applied."""
    while True:
        a_ang = rng.uniform(margin, math.pi / 2 - margin)
        b_ang = rng.uniform(margin, math.pi / 2 - margin)
        c_ang = math.pi - a_ang - b_ang
        if margin < c_ang < math.pi / 2 - margin:
            break
    alpha = rng.uniform(0.5, 3.0)
    p = math.cos(b_ang) * math.sin(c_ang) / math.sin(b_ang + c_ang)
    q = math.sin(b_ang) * math.sin(c_ang) / math.sin(b_ang + c_ang)
    pts = [Point(alpha * p, alpha * q), Point(0.0, 0.0), Point(alpha, 0.0)]
    th = rng.uniform(0.0, 2.0 * math.pi)
    dx, dy = rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)
    ct, st = math.cos(th), math.sin(th)
    return Triangle(
        *[Point(ct * v.x - st * v.y + dx, st * v.x + ct * v.y + dy) for v in pts]
    )


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20230917)


@pytest.fixture
def equilateral() -> Triangle:
    return Triangle(Point(0.0, 0.0), Point(1.0, 0.0), Point(0.5, math.sqrt(3.0) / 2.0))
