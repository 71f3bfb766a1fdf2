"""Toric-domain profiles and their classification.

A four-dimensional toric domain is described by the region of the closed
positive quadrant bounded by the two axes and a vertex chain running from
``(0, B)`` to ``(A, 0)``.  Higher-dimensional monotone profiles are handled
as H-polytopes, and the non-compact L-shaped region by its own small type.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Sequence

from .errors import ClassMismatch, InvalidGeometry
from .geometry import (
    IntVec2,
    Point2,
    as_rational,
    is_simple_polygon,
    point_in_polygon,
    primitive_outward_normal,
    signed_area,
)

FLAG_NAMES = (
    "star_shaped",
    "monotone",
    "strictly_monotone",
    "concave",
    "convex_toric",
    "weakly_convex",
    "convex_in_R4",
)


def _normalize_chain(points: Sequence[Point2]) -> tuple[Point2, ...]:
    chain = [Point2(as_rational(x), as_rational(y)) for x, y in points]
    if len(chain) < 2:
        raise InvalidGeometry("boundary chain needs at least two points")
    for p, q in zip(chain, chain[1:]):
        if p == q:
            raise InvalidGeometry(f"invalid edge: zero-length edge at {p}")
    out = [chain[0]]
    for q in chain[1:]:
        if len(out) >= 2:
            p0, p1 = out[-2], out[-1]
            d0, d1 = p1 - p0, q - p1
            if d0.cross(d1) == 0:
                if d0.dot(d1) < 0:
                    raise InvalidGeometry(f"chain doubles back on itself at {p1}")
                out[-1] = q
                continue
        out.append(q)
    return tuple(out)


@dataclass(frozen=True)
class MomentPolygon:
    """Planar profile Omega given by the closure of its positive boundary.

    ``boundary_plus`` runs from ``(0, B)`` to ``(A, 0)``; interior vertices
    must lie in the open quadrant.  Collinear interior vertices are dropped
    on construction so every stored edge is maximal.
    """

    boundary_plus: tuple[Point2, ...]

    def __post_init__(self):
        chain = _normalize_chain(self.boundary_plus)
        first, last = chain[0], chain[-1]
        if first.x != 0 or first.y <= 0:
            raise InvalidGeometry(f"chain must start at (0, B) with B > 0, got {first}")
        if last.y != 0 or last.x <= 0:
            raise InvalidGeometry(f"chain must end at (A, 0) with A > 0, got {last}")
        for v in chain[1:-1]:
            if v.x <= 0 or v.y <= 0:
                raise InvalidGeometry(
                    f"interior chain vertex {v} is not in the open quadrant "
                    "(chains running along an axis are rejected)"
                )
        poly = (Point2(Fraction(0), Fraction(0)),) + tuple(reversed(chain))
        if not is_simple_polygon(poly):
            raise InvalidGeometry("invalid polygon: boundary chain self-intersects")
        if signed_area(poly) <= 0:
            raise InvalidGeometry("invalid polygon: region has no positive area")
        object.__setattr__(self, "boundary_plus", chain)

    @classmethod
    def from_points(cls, *points) -> "MomentPolygon":
        return cls(tuple(Point2(as_rational(x), as_rational(y)) for x, y in points))

    @property
    def chain(self) -> tuple[Point2, ...]:
        return self.boundary_plus

    @property
    def A(self) -> Fraction:
        return self.boundary_plus[-1].x

    @property
    def B(self) -> Fraction:
        return self.boundary_plus[0].y

    @property
    def vertices(self) -> tuple[Point2, ...]:
        """Closed polygon, counterclockwise, starting at the origin."""
        return (Point2(Fraction(0), Fraction(0)),) + tuple(reversed(self.boundary_plus))

    @property
    def edges(self) -> list[tuple[Point2, Point2]]:
        """Edges of the chain in chain order, (0,B) side first."""
        c = self.boundary_plus
        return list(zip(c, c[1:]))

    @property
    def normals(self) -> list[IntVec2]:
        # chain order is clockwise around the region, so the interior is on the right
        return [primitive_outward_normal(p, q, interior="right") for p, q in self.edges]

    def turns(self) -> list[Fraction]:
        """Cross products of consecutive chain edge directions (positive = left turn)."""
        c = self.boundary_plus
        return [(c[i] - c[i - 1]).cross(c[i + 1] - c[i]) for i in range(1, len(c) - 1)]

    @property
    def area(self) -> Fraction:
        return signed_area(self.vertices)

    def scaled(self, lam) -> "MomentPolygon":
        lam = as_rational(lam)
        if lam <= 0:
            raise ValueError("scale factor must be positive")
        return MomentPolygon(tuple(p * lam for p in self.boundary_plus))

    def contains(self, mu) -> bool:
        x, y = mu
        if x < 0 or y < 0:
            return False
        return point_in_polygon((x, y), self.vertices)

    def max_coordinate(self, j: int) -> Fraction:
        return max(p[j] for p in self.boundary_plus)

    def min_total(self) -> Fraction:
        return min(p.total() for p in self.boundary_plus)

    def max_total(self) -> Fraction:
        return max(p.total() for p in self.boundary_plus)

    def __repr__(self):
        pts = ", ".join(f"({p.x}, {p.y})" for p in self.boundary_plus)
        return f"MomentPolygon[{pts}]"


@dataclass(frozen=True)
class DomainClass:
    flags: frozenset = field(default_factory=frozenset)

    def __contains__(self, flag: str) -> bool:
        return flag in self.flags

    def __getattr__(self, name):
        if name in FLAG_NAMES:
            return name in self.flags
        raise AttributeError(name)

    def sorted(self) -> list[str]:
        return [f for f in FLAG_NAMES if f in self.flags]


def classify(omega: MomentPolygon) -> DomainClass:
    normals = omega.normals
    turns = omega.turns()
    flags = set()
    if all(nu.dot(p) > 0 for nu, (p, _) in zip(normals, omega.edges)):
        flags.add("star_shaped")
    monotone = all(nu.a >= 0 and nu.b >= 0 for nu in normals)
    if monotone:
        flags.add("monotone")
        if all(nu.a > 0 and nu.b > 0 for nu in normals):
            flags.add("strictly_monotone")
        if all(t >= 0 for t in turns):
            flags.add("concave")
    # the axis corners of a positive-quadrant chain are always convex, so
    # convexity of Omega reduces to right turns along the chain
    if all(t <= 0 for t in turns):
        flags.add("weakly_convex")
        if monotone:
            flags.add("convex_toric")
            flags.add("convex_in_R4")
    return DomainClass(frozenset(flags))


def require(omega: MomentPolygon, flag: str) -> DomainClass:
    cls = classify(omega)
    if flag not in cls:
        raise ClassMismatch(f"domain is not {flag.replace('_', ' ')}: {omega!r}", required=flag)
    return cls


def is_convex_in_R4(omega: MomentPolygon) -> bool:
    """Whether X_Omega is a convex subset of R^4.

    Over each edge with normal nu the preimage curve in the real slice is
    ``nu_1 x_1^2 + nu_2 x_2^2 = c``: an ellipse arc when both components are
    nonnegative, a hyperbola (locally non-convex side) otherwise.  Reflex
    corners of Omega pull back to reflex corners.  So for polygons the set
    is convex iff Omega is convex with nonnegative normals.
    """
    return "convex_in_R4" in classify(omega)


def _sqrt_floor(v: Fraction, bits: int = 24) -> Fraction:
    scale = 1 << bits
    return Fraction(isqrt(int(v * scale * scale)), scale)


def _random_point_on(p: Point2, q: Point2, rng: random.Random, den: int = 1 << 12) -> Point2:
    t = Fraction(rng.randrange(den + 1), den)
    return p + (q - p) * t


def midpoint_convexity_violation(omega: MomentPolygon, samples: int = 2000, seed: int = 0):
    """Search for x, x' in the real slice with midpoint outside it.

    Independent oracle for :func:`is_convex_in_R4`: points are drawn near
    the boundary (same edge or across a corner), lifted to the slice
    ``{x : (x_1^2, x_2^2) in Omega}`` with rational square roots taken from
    below, and the midpoint is tested exactly.  Returns the offending pair
    or ``None``.
    """
    rng = random.Random(seed)
    edges = omega.edges
    shrink = Fraction(999_999, 1_000_000)

    def lift(mu: Point2) -> tuple[Fraction, Fraction]:
        x = (_sqrt_floor(mu.x * shrink), _sqrt_floor(mu.y * shrink))
        return (x[0] * rng.choice((1, -1)) if rng.random() < 0.1 else x[0],
                x[1] * rng.choice((1, -1)) if rng.random() < 0.1 else x[1])

    def inside(x) -> bool:
        return omega.contains((x[0] * x[0], x[1] * x[1]))

    for _ in range(samples):
        i = rng.randrange(len(edges))
        if rng.random() < 0.5 or len(edges) == 1:
            mu1 = _random_point_on(*edges[i], rng)
            mu2 = _random_point_on(*edges[i], rng)
        else:
            j = i + 1 if i + 1 < len(edges) else i - 1
            corner = edges[i][1] if j > i else edges[i][0]
            far_i = edges[i][0] if j > i else edges[i][1]
            far_j = edges[j][1] if j > i else edges[j][0]
            t1 = Fraction(rng.randrange(1, 257), 256)
            t2 = Fraction(rng.randrange(1, 257), 256)
            mu1 = corner + (far_i - corner) * t1
            mu2 = corner + (far_j - corner) * t2
        x1, x2 = lift(mu1), lift(mu2)
        if not (inside(x1) and inside(x2)):
            continue
        mid = ((x1[0] + x2[0]) / 2, (x1[1] + x2[1]) / 2)
        if not inside(mid):
            return x1, x2
    return None


def volume(omega: MomentPolygon) -> Fraction:
    """Vol(X_Omega), which equals the area of Omega."""
    return omega.area


# -- n-dimensional profiles -------------------------------------------------


def _solve(matrix: list[list[Fraction]], rhs: list[Fraction]):
    """Exact Gaussian elimination; ``None`` when singular."""
    n = len(matrix)
    m = [row[:] + [r] for row, r in zip(matrix, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def _enumerate_vertices(rows, rhs, n) -> list[tuple[Fraction, ...]]:
    """Vertices of {x : rows x <= rhs} by brute force over n-subsets of constraints."""
    found = set()
    for idx in itertools.combinations(range(len(rows)), n):
        sol = _solve([list(rows[i]) for i in idx], [rhs[i] for i in idx])
        if sol is None:
            continue
        if all(sum(a * x for a, x in zip(row, sol)) <= r for row, r in zip(rows, rhs)):
            found.add(tuple(sol))
    return sorted(found)


@dataclass(frozen=True)
class HPolytope:
    """Profile {mu >= 0 : A mu <= b} in R^n."""

    A: tuple[tuple[Fraction, ...], ...]
    b: tuple[Fraction, ...]

    def __post_init__(self):
        A = tuple(tuple(as_rational(v) for v in row) for row in self.A)
        b = tuple(as_rational(v) for v in self.b)
        if not A or len(A) != len(b):
            raise InvalidGeometry("A and b must be nonempty with matching lengths")
        n = len(A[0])
        if n < 1 or any(len(row) != n for row in A):
            raise InvalidGeometry("rows of A must share one positive length")
        for i, row in enumerate(A):
            if all(v == 0 for v in row):
                raise InvalidGeometry(f"invalid constraint: row {i} of A is zero")
        if any(v <= 0 for v in b):
            raise InvalidGeometry("entries of b must be positive")
        object.__setattr__(self, "A", A)
        object.__setattr__(self, "b", b)
        if not self._bounded():
            raise InvalidGeometry("polytope is unbounded")

    @property
    def n(self) -> int:
        return len(self.A[0])

    def _constraints(self):
        n = self.n
        rows = list(self.A)
        rhs = list(self.b)
        for j in range(n):
            rows.append(tuple(Fraction(-1) if i == j else Fraction(0) for i in range(n)))
            rhs.append(Fraction(0))
        return rows, rhs

    def _bounded(self) -> bool:
        # recession cone {d >= 0, A d <= 0} must be trivial; intersect with sum(d) = 1
        n = self.n
        rows, rhs = [], []
        for row in self.A:
            rows.append(row)
            rhs.append(Fraction(0))
        for j in range(n):
            rows.append(tuple(Fraction(-1) if i == j else Fraction(0) for i in range(n)))
            rhs.append(Fraction(0))
        ones = tuple(Fraction(1) for _ in range(n))
        rows += [ones, tuple(-v for v in ones)]
        rhs += [Fraction(1), Fraction(-1)]
        return not _enumerate_vertices(rows, rhs, n)

    @property
    def is_monotone(self) -> bool:
        return all(v >= 0 for row in self.A for v in row)

    def vertices(self) -> list[tuple[Fraction, ...]]:
        rows, rhs = self._constraints()
        return _enumerate_vertices(rows, rhs, self.n)

    def boundary_vertices(self) -> list[tuple[Fraction, ...]]:
        """Vertices lying on some facet of A, i.e. on the closure of the positive boundary."""
        return [
            v
            for v in self.vertices()
            if any(sum(a * x for a, x in zip(row, v)) == r for row, r in zip(self.A, self.b))
        ]

    def contains(self, mu) -> bool:
        mu = [as_rational(x) for x in mu]
        return all(x >= 0 for x in mu) and all(
            sum(a * x for a, x in zip(row, mu)) <= r for row, r in zip(self.A, self.b)
        )

    def scaled(self, lam) -> "HPolytope":
        lam = as_rational(lam)
        return HPolytope(self.A, tuple(v * lam for v in self.b))

    def to_polygon(self) -> MomentPolygon:
        if self.n != 2:
            raise ValueError("only two-dimensional polytopes have a moment polygon")
        pts = [Point2(*v) for v in self.vertices() if v != (0, 0)]
        pts.sort(key=lambda p: p.y / (p.x + p.y), reverse=True)
        return MomentPolygon(tuple(pts))


def simplex_inradius(omega: HPolytope) -> Fraction:
    """Largest a with the simplex Delta^n(a) inside a monotone polytope."""
    if not omega.is_monotone:
        raise ClassMismatch("simplex inradius formula needs nonnegative constraint rows", "monotone")
    return min(b / max(row) for row, b in zip(omega.A, omega.b))


def vertex_scan_min_total(omega: HPolytope) -> Fraction:
    """min of sum(mu) over the vertices on the closure of the positive boundary."""
    return min(sum(v) for v in omega.boundary_vertices())


@dataclass(frozen=True)
class LShape:
    """L(a_1..a_n) = {mu >= 0 : mu_j <= a_j for some j}, truncated to [0, box]^n."""

    a: tuple[Fraction, ...]
    box: Fraction

    def __post_init__(self):
        a = tuple(as_rational(v) for v in self.a)
        box = as_rational(self.box)
        if len(a) < 2 or any(v <= 0 for v in a):
            raise InvalidGeometry("L-shape needs n >= 2 positive parameters")
        if box <= max(a):
            raise InvalidGeometry("truncation box must exceed every a_j")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "box", box)

    @property
    def n(self) -> int:
        return len(self.a)

    def contains(self, mu) -> bool:
        return all(0 <= x <= self.box for x in mu) and any(x <= a for x, a in zip(mu, self.a))

    def boundary_candidates(self) -> list[tuple[Fraction, ...]]:
        """Grid vertices lying on the closure of the positive boundary.

        That closure is the union of the outer box faces inside the region
        and the inner faces {mu_i = a_i, mu_j >= a_j}.
        """
        out = []
        for i in range(self.n):
            for v in itertools.product(*[(Fraction(0), a, self.box) for a in self.a]):
                if v[i] == self.box and self.contains(v):
                    out.append(v)
                elif v[i] == self.a[i] and all(x >= a for x, a in zip(v, self.a)):
                    out.append(v)
        return sorted(set(out))

    def to_polygon(self) -> MomentPolygon:
        if self.n != 2:
            raise ValueError("only the planar L-shape has a moment polygon")
        (a1, a2), s = self.a, self.box
        return MomentPolygon.from_points((0, s), (a1, s), (a1, a2), (s, a2), (s, 0))
