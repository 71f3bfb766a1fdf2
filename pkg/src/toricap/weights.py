"""Weight sequences of concave profiles and outer decompositions of weakly convex ones.

The concave recursion cuts the largest inscribed simplex Delta^2(r) out of
Omega and renormalizes the two leftover pieces with the shears

    [[1, 1], [0, 1]]  (piece along the mu_1 axis, after translating by (-r, 0))
    [[1, 0], [1, 1]]  (piece along the mu_2 axis, after translating by (0, -r))

so each piece is again a concave profile.  Every removed simplex is
recorded together with the unimodular map placing it inside Omega.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .domain import MomentPolygon, classify, require
from .errors import ClassMismatch, ToricError
from .geometry import IDENTITY, Point2, UnimodularAffine

# piece-coordinates -> parent-coordinates for the two concave pieces
_AXIS1_LINEAR = ((1, -1), (0, 1))
_AXIS2_LINEAR = ((1, 0), (-1, 1))

MAX_STEPS = 200_000


@dataclass(frozen=True)
class PlacedTriangle:
    size: Fraction
    placement: UnimodularAffine
    depth: int

    @property
    def vertices(self) -> tuple[Point2, Point2, Point2]:
        z = Fraction(0)
        return (
            self.placement(Point2(z, z)),
            self.placement(Point2(self.size, z)),
            self.placement(Point2(z, self.size)),
        )


@dataclass(frozen=True)
class WeightSequence:
    weights: tuple[Fraction, ...]
    triangles: tuple[PlacedTriangle, ...] = ()

    def __iter__(self):
        return iter(self.weights)

    def __len__(self):
        return len(self.weights)

    def sum_of_squares(self) -> Fraction:
        return sum((w * w for w in self.weights), Fraction(0))


@dataclass(frozen=True)
class OuterDecomposition:
    r: Fraction
    inner_weights: WeightSequence


def _concave_pieces(chain, r):
    """Split Omega minus Delta^2(r) into (chain, parent map) pairs."""
    totals = [p.total() for p in chain]
    hits = [i for i, t in enumerate(totals) if t == r]
    i0, i1 = hits[0], hits[-1]
    pieces = []
    if i1 < len(chain) - 1:
        # along the mu_1 axis: (x, y) -> (x + y - r, y)
        piece = [Point2(p.x + p.y - r, p.y) for p in chain[i1:]]
        pieces.append((piece, UnimodularAffine(_AXIS1_LINEAR, (r, 0))))
    if i0 > 0:
        # along the mu_2 axis: (x, y) -> (x, x + y - r)
        piece = [Point2(p.x, p.x + p.y - r) for p in chain[: i0 + 1]]
        pieces.append((piece, UnimodularAffine(_AXIS2_LINEAR, (0, r))))
    return pieces


def _expand(omega: MomentPolygon, placement: UnimodularAffine, depth: int):
    weights: list[Fraction] = []
    triangles: list[PlacedTriangle] = []
    stack = [(omega, placement, depth)]
    steps = 0
    while stack:
        piece, T, d = stack.pop()
        steps += 1
        if steps > MAX_STEPS:
            raise ToricError("weight recursion did not terminate within the step budget")
        r = piece.min_total()
        weights.append(r)
        triangles.append(PlacedTriangle(r, T, d))
        area_left = piece.area - r * r / 2
        for chain, parent in _concave_pieces(piece.chain, r):
            sub = MomentPolygon(tuple(chain))
            if "concave" not in classify(sub):
                raise ToricError(f"renormalized piece is not concave: {sub!r}")
            if not sub.area <= area_left:
                raise ToricError("renormalized piece does not shrink")
            stack.append((sub, T.compose(parent), d + 1))
    return weights, triangles


def weight_sequence(omega: MomentPolygon, placement: UnimodularAffine = IDENTITY) -> WeightSequence:
    """Full recursive weight expansion of a concave polygonal profile.

    The result satisfies sum(a_i^2) == 2 * area(Omega) exactly; this is
    checked before returning.
    """
    require(omega, "concave")
    weights, triangles = _expand(omega, placement, 0)
    order = sorted(range(len(weights)), key=lambda i: weights[i], reverse=True)
    ws = WeightSequence(tuple(weights[i] for i in order), tuple(triangles[i] for i in order))
    if ws.sum_of_squares() != 2 * omega.area:
        raise ToricError("weight expansion does not exhaust the area of Omega")
    return ws


def outer_decomposition(omega: MomentPolygon) -> OuterDecomposition:
    """r and the inner weights of Delta^2(r) minus a weakly convex Omega.

    The two corner pieces of Delta^2(r) \\ Omega are brought to concave form
    by the involutions (x, y) -> (x, r - x - y) and (x, y) -> (r - x - y, y).
    Zero-area pieces are dropped.
    """
    require(omega, "weakly_convex")
    chain = omega.chain
    r = omega.max_total()
    hits = [i for i, p in enumerate(chain) if p.total() == r]
    i0, i1 = hits[0], hits[-1]
    weights: list[Fraction] = []
    triangles: list[PlacedTriangle] = []
    if i0 > 0:
        fold = UnimodularAffine(((1, 0), (-1, -1)), (0, r))
        piece = MomentPolygon(tuple(fold(p) for p in chain[: i0 + 1]))
        ws = weight_sequence(piece, placement=fold)
        weights += ws.weights
        triangles += ws.triangles
    if i1 < len(chain) - 1:
        fold = UnimodularAffine(((-1, -1), (0, 1)), (r, 0))
        piece = MomentPolygon(tuple(fold(p) for p in chain[i1:]))
        ws = weight_sequence(piece, placement=fold)
        weights += ws.weights
        triangles += ws.triangles
    order = sorted(range(len(weights)), key=lambda i: weights[i], reverse=True)
    inner = WeightSequence(tuple(weights[i] for i in order), tuple(triangles[i] for i in order))
    if r * r != 2 * omega.area + inner.sum_of_squares():
        raise ToricError("outer decomposition does not balance areas")
    return OuterDecomposition(r, inner)


def ball_weights(balls) -> WeightSequence:
    """Wrap a plain multiset of ball sizes, sorted descending."""
    ws = tuple(sorted((Fraction(b) for b in balls), reverse=True))
    if any(w <= 0 for w in ws):
        raise ClassMismatch("ball sizes must be positive")
    return WeightSequence(ws)
