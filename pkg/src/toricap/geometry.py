"""Exact planar geometry over the rationals.

All coordinates are :class:`fractions.Fraction`.  Nothing in this module
produces a float; approximate output only happens at the CLI boundary.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, NamedTuple, Sequence

from .errors import InvalidGeometry

Rational = Fraction


def as_rational(value) -> Fraction:
    """Coerce ``value`` to a Fraction without ever going through a float.

    Accepts ints, Fractions, ``"p/q"`` strings and ``[p, q]`` integer pairs.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, (list, tuple)) and len(value) == 2:
        num, den = value
        if all(isinstance(v, int) and not isinstance(v, bool) for v in (num, den)):
            if den == 0:
                raise ZeroDivisionError("zero denominator")
            return Fraction(num, den)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class Point2(NamedTuple):
    x: Fraction
    y: Fraction

    def __add__(self, other):
        return Point2(self.x + other.x, self.y + other.y)

    def __sub__(self, other):
        return Point2(self.x - other.x, self.y - other.y)

    def __mul__(self, s):
        return Point2(self.x * s, self.y * s)

    __rmul__ = __mul__

    def dot(self, other) -> Fraction:
        return self.x * other[0] + self.y * other[1]

    def cross(self, other) -> Fraction:
        return self.x * other[1] - self.y * other[0]

    def total(self) -> Fraction:
        return self.x + self.y

    def __repr__(self):
        return f"Point2({self.x}, {self.y})"


def point(x, y) -> Point2:
    return Point2(as_rational(x), as_rational(y))


class IntVec2(NamedTuple):
    a: int
    b: int

    @property
    def is_primitive(self) -> bool:
        return gcd(self.a, self.b) == 1

    def dot(self, p) -> Fraction:
        return self.a * p[0] + self.b * p[1]


def primitive_vector(x, y) -> IntVec2:
    """Scale a nonzero rational vector to the primitive integer vector on its ray."""
    x, y = Fraction(x), Fraction(y)
    if x == 0 and y == 0:
        raise InvalidGeometry("zero vector has no primitive direction")
    m = lcm(x.denominator, y.denominator)
    a, b = int(x * m), int(y * m)
    g = gcd(a, b)
    return IntVec2(a // g, b // g)


def primitive_outward_normal(p, q, interior: str = "left") -> IntVec2:
    """Primitive integer normal to the edge p->q pointing away from the interior.

    ``interior`` says on which side of the directed edge the region lies;
    counterclockwise polygons have their interior on the left.
    """
    p, q = Point2(*p), Point2(*q)
    d = q - p
    if d.x == 0 and d.y == 0:
        raise InvalidGeometry(f"invalid edge: endpoints coincide at {p}")
    if interior == "left":
        return primitive_vector(d.y, -d.x)
    if interior == "right":
        return primitive_vector(-d.y, d.x)
    raise ValueError(f"interior must be 'left' or 'right', got {interior!r}")


def orientation(p, q, r) -> int:
    """Sign of the turn p->q->r: +1 left, -1 right, 0 collinear."""
    c = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (c > 0) - (c < 0)


def _on_segment(p, q, r) -> bool:
    # r collinear with p,q assumed
    return min(p[0], q[0]) <= r[0] <= max(p[0], q[0]) and min(p[1], q[1]) <= r[1] <= max(p[1], q[1])


def segments_intersect(p1, p2, q1, q2) -> bool:
    """Closed-segment intersection test, exact."""
    o1, o2 = orientation(p1, p2, q1), orientation(p1, p2, q2)
    o3, o4 = orientation(q1, q2, p1), orientation(q1, q2, p2)
    if o1 != o2 and o3 != o4:
        return True
    if o1 == 0 and _on_segment(p1, p2, q1):
        return True
    if o2 == 0 and _on_segment(p1, p2, q2):
        return True
    if o3 == 0 and _on_segment(q1, q2, p1):
        return True
    if o4 == 0 and _on_segment(q1, q2, p2):
        return True
    return False


def is_simple_polygon(vertices: Sequence) -> bool:
    n = len(vertices)
    if n < 3:
        return False
    edges = [(vertices[i], vertices[(i + 1) % n]) for i in range(n)]
    for p, q in edges:
        if p == q:
            return False
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                continue
            if segments_intersect(*edges[i], *edges[j]):
                return False
    return True


def signed_area(vertices: Sequence) -> Fraction:
    n = len(vertices)
    s = Fraction(0)
    for i in range(n):
        x0, y0 = vertices[i]
        x1, y1 = vertices[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return s / 2


def polygon_area(vertices: Sequence) -> Fraction:
    """Unsigned shoelace area of a simple closed polygon."""
    vertices = [Point2(as_rational(x), as_rational(y)) for x, y in vertices]
    if not is_simple_polygon(vertices):
        raise InvalidGeometry("invalid polygon: vertex chain is degenerate or self-intersecting")
    return abs(signed_area(vertices))


def point_in_polygon(pt, vertices: Sequence) -> bool:
    """Closed point-in-polygon test (boundary counts as inside)."""
    n = len(vertices)
    x, y = pt
    inside = False
    for i in range(n):
        p, q = vertices[i], vertices[(i + 1) % n]
        if orientation(p, q, pt) == 0 and _on_segment(p, q, pt):
            return True
        if (p[1] > y) != (q[1] > y):
            xc = p[0] + (y - p[1]) * (q[0] - p[0]) / (q[1] - p[1])
            if xc > x:
                inside = not inside
    return inside


@dataclass(frozen=True)
class UnimodularAffine:
    """p -> linear @ p + translation with linear in GL(2, Z)."""

    linear: tuple[tuple[int, int], tuple[int, int]] = ((1, 0), (0, 1))
    translation: tuple[Fraction, Fraction] = (Fraction(0), Fraction(0))

    def __post_init__(self):
        (a, b), (c, d) = self.linear
        if not all(isinstance(v, int) for v in (a, b, c, d)):
            raise InvalidGeometry("linear part must be an integer matrix")
        if abs(a * d - b * c) != 1:
            raise InvalidGeometry(f"matrix {self.linear} is not unimodular")
        object.__setattr__(self, "translation", tuple(as_rational(t) for t in self.translation))

    @property
    def det(self) -> int:
        (a, b), (c, d) = self.linear
        return a * d - b * c

    def __call__(self, p) -> Point2:
        (a, b), (c, d) = self.linear
        x, y = p
        tx, ty = self.translation
        return Point2(a * x + b * y + tx, c * x + d * y + ty)

    def compose(self, inner: "UnimodularAffine") -> "UnimodularAffine":
        """The map p -> self(inner(p))."""
        (a, b), (c, d) = self.linear
        (e, f), (g, h) = inner.linear
        lin = ((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h))
        return UnimodularAffine(lin, tuple(self(inner.translation)))

    def inverse(self) -> "UnimodularAffine":
        (a, b), (c, d) = self.linear
        det = self.det
        inv = ((d * det, -b * det), (-c * det, a * det))
        tx, ty = self.translation
        (p, q), (r, s) = inv
        return UnimodularAffine(inv, (-(p * tx + q * ty), -(r * tx + s * ty)))


IDENTITY = UnimodularAffine()


def translation(dx, dy) -> UnimodularAffine:
    return UnimodularAffine(((1, 0), (0, 1)), (dx, dy))


def apply_affine(T: UnimodularAffine, region: Iterable) -> list[Point2]:
    return [T(p) for p in region]


def is_unimodular_triangle(vertices: Sequence, size: Fraction) -> bool:
    """True iff the triangle is an affine GL(2,Z) image of the simplex of side ``size``."""
    if size <= 0:
        return False
    p0, p1, p2 = (Point2(*v) for v in vertices)
    u, v = (p1 - p0) * (1 / size), (p2 - p0) * (1 / size)
    if any(c.denominator != 1 for c in (*u, *v)):
        return False
    return abs(u.cross(v)) == 1


def triangles_overlap(t1: Sequence, t2: Sequence) -> bool:
    """True iff two triangles share interior points (separating-axis test, exact)."""
    for tri, other in ((t1, t2), (t2, t1)):
        if signed_area(tri) == 0:
            return False
        for i in range(3):
            p, q = tri[i], tri[(i + 1) % 3]
            inward = orientation(p, q, tri[(i + 2) % 3])
            # other lies weakly outside this edge -> separated
            if all(orientation(p, q, r) * inward <= 0 for r in other):
                return False
    return True
