"""ECH capacity sequences of balls, ball unions, concave and weakly convex profiles.

Rationals are scaled to a common denominator before they reach the integer
kernels, so every value returned here is exact.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt, lcm
from typing import Callable, Sequence

from . import kernels
from .domain import MomentPolygon, classify
from .errors import ClassMismatch, InvalidGeometry
from .geometry import as_rational
from .weights import outer_decomposition, weight_sequence


def ball_capacity(k: int, a) -> Fraction:
    """c_k of the ball B^4(a): d*a with d^2 + d <= 2k <= d^2 + 3d."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    a = as_rational(a)
    if a <= 0:
        raise ValueError("ball size must be positive")
    return kernels.ball_multiplier(k) * a


def _common_scale(values: Sequence[Fraction]) -> int:
    return lcm(1, *(v.denominator for v in values))


def union_capacities(balls: Sequence, kmax: int, backend: str | None = None) -> list[Fraction]:
    """c_0..c_kmax of a finite disjoint union of balls."""
    balls = sorted((as_rational(b) for b in balls), reverse=True)
    if any(b <= 0 for b in balls):
        raise ValueError("ball sizes must be positive")
    scale = _common_scale(balls)
    table = kernels.union_table([int(b * scale) for b in balls], kmax, backend=backend)
    return [Fraction(v, scale) for v in table]


def union_capacity(k: int, balls: Sequence) -> Fraction:
    return union_capacities(balls, k)[k]


def concave_capacities(omega: MomentPolygon, kmax: int) -> list[Fraction]:
    return union_capacities(weight_sequence(omega).weights, kmax)


def concave_capacity(k: int, omega: MomentPolygon) -> Fraction:
    return concave_capacities(omega, k)[k]


# -- weakly convex profiles --------------------------------------------------

_SQRT_BITS = 48


def sqrt_lower(x: Fraction, bits: int = _SQRT_BITS) -> Fraction:
    s = 1 << bits
    return Fraction(isqrt(x.numerator * s * s // x.denominator), s)


def sqrt_upper(x: Fraction, bits: int = _SQRT_BITS) -> Fraction:
    s = 1 << bits
    return Fraction(isqrt(-(-x.numerator * s * s // x.denominator)) + 1, s)


def candidate_lower_bound(l: int, r: Fraction, sum_sq: Fraction) -> Fraction:
    """Certified lower bound on c_{k+l}(B(r)) - c_l(union), valid for every k >= 0.

    c_{k+l}(B(r)) >= r (sqrt(2(k+l) + 9/4) - 3/2) >= r sqrt(2l) - 3r/2, and
    c_l(union) = sum d_i a_i with sum d_i^2 <= 2l, so Cauchy-Schwarz bounds
    it by sqrt(2l * sum a_i^2).  The bound is nondecreasing in l once
    r^2 > sum a_i^2.
    """
    root = sqrt_lower(Fraction(2 * l))
    return root * (r - sqrt_upper(sum_sq)) - 3 * r / 2


def stopping_index(r: Fraction, sum_sq: Fraction, ceiling: Fraction) -> int:
    """Smallest l whose certified lower bound exceeds ``ceiling``."""
    gap = r - sqrt_upper(sum_sq)
    if gap <= 0:
        raise InvalidGeometry("profile has zero area; the infimum has no certified truncation")
    target = (ceiling + 3 * r / 2) / gap
    l = max(0, int(target * target / 2))
    while candidate_lower_bound(l, r, sum_sq) <= ceiling:
        l += 1
    while l > 0 and candidate_lower_bound(l - 1, r, sum_sq) > ceiling:
        l -= 1
    return l


@dataclass(frozen=True)
class InfimumTable:
    """c_k for k <= kmax together with the minimizing l and the certified scan length."""

    values: tuple[Fraction, ...]
    argmin: tuple[int, ...]
    stop_index: int
    r: Fraction
    weights: tuple[Fraction, ...]


def weakly_convex_table(
    r, inner_weights: Sequence, kmax: int, scan_to: int | None = None, backend: str | None = None
) -> InfimumTable:
    """inf over l >= 0 of c_{k+l}(B(r)) - c_l(union of B(a_i)) for k <= kmax.

    The scan stops at the certified index from :func:`stopping_index`;
    ``scan_to`` overrides it (used to cross-check the truncation).
    """
    r = as_rational(r)
    weights = tuple(sorted((as_rational(a) for a in inner_weights), reverse=True))
    sum_sq = sum((a * a for a in weights), Fraction(0))
    ceiling = kernels.ball_multiplier(kmax) * r
    stop = stopping_index(r, sum_sq, ceiling) if weights else 0
    length = stop if scan_to is None else scan_to
    scale = _common_scale((r,) + weights)
    union = kernels.union_table([int(a * scale) for a in weights], length, backend=backend)
    vals, args = kernels.scan_infimum(int(r * scale), union, kmax, backend=backend)
    return InfimumTable(tuple(Fraction(v, scale) for v in vals), tuple(args), stop, r, weights)


@dataclass(frozen=True)
class WeaklyConvexValue:
    value: Fraction
    argmin: int
    stop_index: int


def weakly_convex_capacities(omega: MomentPolygon, kmax: int) -> list[Fraction]:
    dec = outer_decomposition(omega)
    return list(weakly_convex_table(dec.r, dec.inner_weights.weights, kmax).values)


def weakly_convex_capacity(k: int, omega: MomentPolygon) -> WeaklyConvexValue:
    dec = outer_decomposition(omega)
    table = weakly_convex_table(dec.r, dec.inner_weights.weights, k)
    return WeaklyConvexValue(table.values[k], table.argmin[k], table.stop_index)


# -- independent oracle --------------------------------------------------------


def ellipsoid_oracle(k: int, a, b) -> Fraction:
    """(k+1)-th smallest element, with multiplicity, of {m a + n b : m, n >= 0}.

    The multiples 0, s, .., k s of s = min(a, b) are already k+1 values, so
    only pairs with m a + n b <= k s can matter.
    """
    a, b = as_rational(a), as_rational(b)
    if a <= 0 or b <= 0:
        raise ValueError("ellipsoid parameters must be positive")
    scale = lcm(a.denominator, b.denominator)
    ia, ib = int(a * scale), int(b * scale)
    bound = k * min(ia, ib)
    values = []
    for m in range(bound // ia + 1):
        base = m * ia
        values.extend(range(base, bound + 1, ib))
    values.sort()
    return Fraction(values[k], scale)


# -- memoized sequences ----------------------------------------------------------


class CapacitySequence:
    """Lazily extended k -> c_k table; safe to extend from several threads."""

    def __init__(self, source: str, compute: Callable[[int], list[Fraction]]):
        self.source = source
        self._compute = compute
        self._values: list[Fraction] = []
        self._lock = threading.Lock()

    def _ensure(self, k: int) -> list[Fraction]:
        values = self._values
        if len(values) > k:
            return values
        with self._lock:
            if len(self._values) <= k:
                n = max(k, 2 * len(self._values), 16)
                self._values = self._compute(n)
            return self._values

    def __getitem__(self, k: int) -> Fraction:
        if k < 0:
            raise IndexError("capacity index must be nonnegative")
        return self._ensure(k)[k]

    def upto(self, kmax: int) -> list[Fraction]:
        return self._ensure(kmax)[: kmax + 1]

    def __repr__(self):
        return f"CapacitySequence({self.source!r}, known={len(self._values)})"


@lru_cache(maxsize=256)
def ball_sequence(a: Fraction) -> CapacitySequence:
    a = as_rational(a)
    return CapacitySequence(f"ball({a})", lambda n: [ball_capacity(k, a) for k in range(n + 1)])


@lru_cache(maxsize=256)
def union_sequence(balls: tuple) -> CapacitySequence:
    return CapacitySequence(f"union{tuple(str(b) for b in balls)}", lambda n: union_capacities(balls, n))


@lru_cache(maxsize=256)
def capacity_sequence(omega: MomentPolygon) -> CapacitySequence:
    """ECH capacities of a concave or weakly convex profile."""
    cls = classify(omega)
    if "concave" in cls:
        ws = weight_sequence(omega).weights
        return CapacitySequence(f"concave{omega!r}", lambda n: union_capacities(ws, n))
    if "weakly_convex" in cls:
        dec = outer_decomposition(omega)
        return CapacitySequence(
            f"weakly_convex{omega!r}",
            lambda n: list(weakly_convex_table(dec.r, dec.inner_weights.weights, n).values),
        )
    raise ClassMismatch("ECH capacities are available for concave or weakly convex profiles only")
