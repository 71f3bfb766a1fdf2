"""Embedding checks by comparing ECH capacity sequences.

A finite comparison up to K either finds an obstruction or leaves the tail
open.  The tail is closed only by a certificate valid for every k > K:

    c_k(source) <= sqrt(4 k area_src)              (concave source)
    c_k(target) >= sqrt(4 k area_tgt) - 3 r / 2    (weakly convex target)

so it suffices that 2 sqrt(K+1) (sqrt(area_tgt) - sqrt(area_src)) >= 3r/2,
checked with exact rational square-root brackets.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .catalog import make_polydisk
from .domain import MomentPolygon, require
from .ech import capacity_sequence, sqrt_lower, sqrt_upper
from .errors import InvalidGeometry
from .geometry import Point2, as_rational, is_unimodular_triangle, point_in_polygon, triangles_overlap
from .weights import outer_decomposition

EMBEDS, OBSTRUCTED, VERIFIED = "embeds", "obstructed", "verified_up_to_K"

DEFAULT_K = 200


@dataclass(frozen=True)
class EmbedVerdict:
    status: str
    checked_up_to: int
    obstruction_index: Optional[int] = None
    certificate: Optional[str] = None
    source_values: tuple[Fraction, ...] = field(default=(), repr=False)
    target_values: tuple[Fraction, ...] = field(default=(), repr=False)

    @property
    def violation(self) -> Optional[tuple[Fraction, Fraction]]:
        if self.obstruction_index is None:
            return None
        k = self.obstruction_index
        return self.source_values[k], self.target_values[k]


def tail_certificate(src: MomentPolygon, tgt: MomentPolygon, K: int) -> Optional[str]:
    r = outer_decomposition(tgt).r
    gap = sqrt_lower(tgt.area) - sqrt_upper(src.area)
    if gap <= 0:
        return None
    if 2 * sqrt_lower(Fraction(K + 1)) * gap < 3 * r / 2:
        return None
    return (
        f"for k > {K}: sqrt(4k*{src.area}) <= sqrt(4k*{tgt.area}) - 3*{r}/2 "
        f"since 2*sqrt({K + 1})*(sqrt({tgt.area}) - sqrt({src.area})) >= {3 * r / 2}"
    )


def _compare(src: MomentPolygon, tgt: MomentPolygon, K: int) -> EmbedVerdict:
    if K < 0:
        raise ValueError("K must be nonnegative")
    s = tuple(capacity_sequence(src).upto(K))
    t = tuple(capacity_sequence(tgt).upto(K))
    for k in range(K + 1):
        if s[k] > t[k]:
            return EmbedVerdict(OBSTRUCTED, K, k, None, s, t)
    cert = tail_certificate(src, tgt, K)
    return EmbedVerdict(EMBEDS if cert else VERIFIED, K, None, cert, s, t)


def check_concave_into_weakly_convex(src: MomentPolygon, tgt: MomentPolygon, K: int = DEFAULT_K) -> EmbedVerdict:
    """Does int(X_src) embed into X_tgt?  Compared for k <= K plus the tail test."""
    require(src, "concave")
    require(tgt, "weakly_convex")
    return _compare(src, tgt, K)


def check_concave_into_polydisk(src: MomentPolygon, r, R, K: int = DEFAULT_K) -> EmbedVerdict:
    require(src, "concave")
    return _compare(src, make_polydisk(r, R), K)


def folding_polydisk(omega: MomentPolygon) -> tuple[Fraction, Fraction]:
    """(r, max(b, a - r)): a polydisk that int(X_omega) embeds into."""
    require(omega, "concave")
    r = omega.min_total()
    return r, max(omega.B, omega.A - r)


# -- ball packings of X_a ------------------------------------------------------


@dataclass(frozen=True)
class PackingCertificate:
    """Plane-geometry datum behind a lower bound for c_Gr(X_a)."""

    kind: str
    a: Fraction
    width: Fraction
    container: tuple[Point2, ...]
    triangles: tuple[tuple[Fraction, tuple[Point2, Point2, Point2]], ...] = ()
    center: Optional[Point2] = None
    half_diagonal: Optional[Fraction] = None

    def verify(self) -> Fraction:
        """Check the placement exactly; return the certified ball size."""
        if self.kind == "triangles":
            for size, tri in self.triangles:
                if not is_unimodular_triangle(tri, size):
                    raise AssertionError(f"triangle {tri} is not a unimodular copy of size {size}")
                if not all(point_in_polygon(p, self.container) for p in tri):
                    raise AssertionError(f"triangle {tri} leaves the container")
            tris = [t for _, t in self.triangles]
            for i in range(len(tris)):
                for j in range(i + 1, len(tris)):
                    if triangles_overlap(tris[i], tris[j]):
                        raise AssertionError(f"triangles {i} and {j} overlap")
            return self.width
        c, d = self.center, self.half_diagonal
        if not (c.x >= d and c.y >= d and 2 * d == self.width):
            raise AssertionError("diamond does not satisfy the center condition")
        corners = (Point2(c.x + d, c.y), Point2(c.x, c.y + d), Point2(c.x - d, c.y), Point2(c.x, c.y - d))
        if not all(point_in_polygon(p, self.container) for p in corners):
            raise AssertionError("diamond leaves Omega_a")
        return self.width

    @property
    def area_used(self) -> Fraction:
        return sum((s * s / 2 for s, _ in self.triangles), Fraction(0))


def ball_packing_certificate_Xa(a) -> PackingCertificate:
    """Five triangles in Delta^2(1) for a <= 1/3, the inscribed diamond for a >= 1/3."""
    from .catalog import make_Xa

    a = as_rational(a)
    if not 0 < a < Fraction(1, 2):
        raise InvalidGeometry(f"X_a needs 0 < a < 1/2, got {a}")
    P = lambda x, y: Point2(Fraction(x), Fraction(y))  # noqa: E731
    if a <= Fraction(1, 3):
        b = 1 - a
        tris = (
            (b, (P(0, 0), P(b, 0), P(0, b))),
            (a, (P(b, 0), P(1, 0), P(b, a))),
            (a, (P(b, 0), P(b, a), P(1 - 2 * a, a))),
            (a, (P(b, a), P(1 - 2 * a, 2 * a), P(1 - 2 * a, a))),
            (a, (P(0, b), P(a, b), P(0, 1))),
        )
        container = (P(0, 0), P(1, 0), P(0, 1))
        return PackingCertificate("triangles", a, b, container, tris)
    d = 1 - 2 * a
    return PackingCertificate("diamond", a, 2 * d, make_Xa(a).vertices, center=P(a, a), half_diagonal=d)
