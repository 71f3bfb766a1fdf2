"""Generators for the example families and for randomized test profiles."""
from __future__ import annotations

import math
import random
from fractions import Fraction

from .domain import HPolytope, LShape, MomentPolygon, classify
from .errors import InvalidGeometry
from .geometry import Point2, as_rational


def _positive(*values):
    out = [as_rational(v) for v in values]
    if any(v <= 0 for v in out):
        raise InvalidGeometry("family parameters must be positive")
    return out


def make_Xa(a) -> MomentPolygon:
    """Omega_a with corners (0,0), (1-2a,0), (1-a,a), (a,1-a), (0,1-2a)."""
    a = as_rational(a)
    if not 0 < a < Fraction(1, 2):
        raise InvalidGeometry(f"X_a needs 0 < a < 1/2, got {a}")
    return MomentPolygon.from_points((0, 1 - 2 * a), (a, 1 - a), (1 - a, a), (1 - 2 * a, 0))


def make_simplex(r) -> MomentPolygon:
    (r,) = _positive(r)
    return MomentPolygon.from_points((0, r), (r, 0))


make_ball = make_simplex


def make_ellipsoid(a, b) -> MomentPolygon:
    a, b = _positive(a, b)
    return MomentPolygon.from_points((0, b), (a, 0))


def make_polydisk(a, b) -> MomentPolygon:
    a, b = _positive(a, b)
    return MomentPolygon.from_points((0, b), (a, b), (a, 0))


def make_simplex_polytope(r, n: int) -> HPolytope:
    (r,) = _positive(r)
    return HPolytope((tuple(1 for _ in range(n)),), (r,))


def make_polydisk_polytope(*sides) -> HPolytope:
    sides = _positive(*sides)
    n = len(sides)
    rows = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))
    return HPolytope(rows, tuple(sides))


def make_Lshape(*a, box=None) -> LShape:
    """Truncated L-shape; the default box side is 2 * sum(a)."""
    a = _positive(*a)
    if box is None:
        box = 2 * sum(a)
    return LShape(tuple(a), as_rational(box))


def _floor_to(x: float, den: int) -> Fraction:
    return Fraction(math.floor(x * den), den)


def make_lp_ball(p, samples: int, den: int = 10**6) -> MomentPolygon:
    """Polygon through points of the quadrant L^p unit sphere, rounded inward.

    Vertices are (t, (1 - t^p)^(1/p)) for t = i/samples with the second
    coordinate floored to a multiple of 1/den; p = 1 is returned exactly.
    """
    p = as_rational(p)
    if p <= 0 or samples < 2:
        raise InvalidGeometry("need p > 0 and at least two samples")
    if p == 1:
        return make_simplex(1)
    pf = float(p)
    pts = [Point2(Fraction(0), Fraction(1))]
    for i in range(1, samples):
        t = Fraction(i, samples)
        y = _floor_to((1.0 - float(t) ** pf) ** (1.0 / pf), den)
        if y > 0:
            pts.append(Point2(t, y))
    pts.append(Point2(Fraction(1), Fraction(0)))
    return MomentPolygon(tuple(pts))


def lp_ball_convex_in_R4(p) -> bool:
    """Whether the smooth quadrant L^p ball gives a convex subset of R^{2n}.

    Its real slice is the L^{2p} unit ball.
    """
    return as_rational(p) >= Fraction(1, 2)


def lp_midpoint_violation(p: float, samples: int = 4000, seed: int = 0):
    """Float search for a chord of the smooth real slice leaving it.

    Independent check of :func:`lp_ball_convex_in_R4`; returns a pair of
    boundary points whose midpoint lies outside, or ``None``.
    """
    rng = random.Random(seed)
    q = 2.0 * float(p)

    def boundary(theta):
        c, s = math.cos(theta), math.sin(theta)
        scale = (abs(c) ** q + abs(s) ** q) ** (-1.0 / q)
        return c * scale, s * scale

    for _ in range(samples):
        t1 = rng.uniform(0, 2 * math.pi)
        t2 = t1 + rng.uniform(-0.5, 0.5)
        x, y = boundary(t1), boundary(t2)
        mx, my = (x[0] + y[0]) / 2, (x[1] + y[1]) / 2
        if abs(mx) ** q + abs(my) ** q > 1 + 1e-9:
            return x, y
    return None


# -- random families -------------------------------------------------------------


def _chain_from_steps(steps) -> list[Point2]:
    B = -sum(dy for _, dy in steps)
    x, y = Fraction(0), Fraction(B)
    pts = [Point2(x, y)]
    for dx, dy in steps:
        x, y = x + dx, y + dy
        pts.append(Point2(x, y))
    return pts


def random_monotone_polygon(seed: int, n_vertices: int, shape: str = "any") -> MomentPolygon:
    """Strictly monotone profile with ``n_vertices`` chain vertices.

    Every edge steps right and down, so all normals are strictly positive.
    ``shape`` sorts the slopes to get a concave or convex chain instead of
    an arbitrary one.
    """
    rng = random.Random(seed)
    while True:
        steps = []
        for _ in range(max(1, n_vertices - 1)):
            dx = Fraction(rng.randint(1, 9), rng.randint(1, 4))
            dy = -Fraction(rng.randint(1, 9), rng.randint(1, 4))
            steps.append((dx, dy))
        if shape == "concave":
            steps.sort(key=lambda s: s[1] / s[0])
        elif shape == "convex":
            steps.sort(key=lambda s: s[1] / s[0], reverse=True)
        elif shape != "any":
            raise ValueError(f"unknown shape {shape!r}")
        try:
            return MomentPolygon(tuple(_chain_from_steps(steps)))
        except InvalidGeometry:
            continue


def random_concave_polygon(seed: int, n_vertices: int) -> MomentPolygon:
    return random_monotone_polygon(seed, n_vertices, shape="concave")


def random_weakly_convex_polygon(seed: int, n_edges: int) -> MomentPolygon:
    """Convex profile whose edge normals may have mixed signs.

    Integer directions are drawn with the first one pointing right and the
    last one pointing down, sorted clockwise, and given random positive
    lengths; draws that leave the open quadrant are rejected.
    """
    rng = random.Random(seed)
    while True:
        dirs = set()
        dirs.add((rng.randint(1, 4), rng.randint(-4, 4)))
        dirs.add((rng.randint(-4, 4), -rng.randint(1, 4)))
        while len(dirs) < max(2, n_edges):
            v = (rng.randint(-4, 4), rng.randint(-4, 4))
            if v != (0, 0) and (v[0] > 0 or v[1] < 0):
                dirs.add(v)
        # clockwise from the first direction: decreasing angle; small integer
        # directions are distinct in angle far beyond float resolution
        ordered = sorted(dirs, key=lambda v: math.atan2(v[1], v[0]), reverse=True)
        uniq = []
        for v in ordered:
            if uniq and uniq[-1][0] * v[1] - uniq[-1][1] * v[0] == 0:
                continue
            uniq.append(v)
        if len(uniq) < 2:
            continue
        steps = []
        for vx, vy in uniq:
            m = rng.randint(1, 3)
            steps.append((Fraction(vx * m), Fraction(vy * m)))
        if sum(dy for _, dy in steps) >= 0:
            continue
        try:
            omega = MomentPolygon(tuple(_chain_from_steps(steps)))
        except InvalidGeometry:
            continue
        if "weakly_convex" in classify(omega):
            return omega


FAMILIES = {
    "xa": (make_Xa, 1),
    "simplex": (make_simplex, 1),
    "ball": (make_ball, 1),
    "ellipsoid": (make_ellipsoid, 2),
    "polydisk": (make_polydisk, 2),
}
