"""Slow, independent reference computations used to check the fast code.

Nothing here imports the package's capacity code; only Fraction and
brute force.
"""
from fractions import Fraction
from itertools import product


def ellipsoid_values(a, b, k):
    """First k+1 entries of the sorted multiset {m a + n b}."""
    a, b = Fraction(a), Fraction(b)
    vals = sorted(m * a + n * b for m in range(k + 1) for n in range(k + 1))
    return vals[: k + 1]


def ball_values(a, k):
    return ellipsoid_values(a, a, k)


def naive_union(balls, kmax):
    """max over all compositions k_1 + ... + k_m = k of sum c_{k_i}(B(a_i)); O(m K^2)."""
    best = [Fraction(0)] * (kmax + 1)
    for a in balls:
        ball = ball_values(a, kmax)
        best = [max(best[k - j] + ball[j] for j in range(k + 1)) for k in range(kmax + 1)]
    return best


def union_by_enumeration(balls, k):
    """Literal maximum over every tuple (k_1, .., k_m) summing to k."""
    tables = [ball_values(a, k) for a in balls]
    best = Fraction(0)
    for ks in product(range(k + 1), repeat=len(balls)):
        if sum(ks) == k:
            best = max(best, sum(t[j] for t, j in zip(tables, ks)))
    return best


def weakly_convex_bruteforce(r, inner, kmax, lmax):
    """inf over l <= lmax of c_{k+l}(B(r)) - c_l(union of inner balls)."""
    ball = ball_values(r, kmax + lmax)
    union = naive_union(inner, lmax) if inner else [Fraction(0)] * (lmax + 1)
    return [min(ball[k + l] - union[l] for l in range(lmax + 1)) for k in range(kmax + 1)]


def polydisk_values(a, b, kmax):
    """c_k(P(a, b)) = min{a m + b n : (m + 1)(n + 1) >= k + 1}."""
    a, b = Fraction(a), Fraction(b)
    out = []
    for k in range(kmax + 1):
        out.append(min(a * m + b * n for m in range(k + 1) for n in range(k + 1) if (m + 1) * (n + 1) >= k + 1))
    return out


def vertex_min_total(chain):
    return min(Fraction(x) + Fraction(y) for x, y in chain)


def shoelace(vertices):
    s = Fraction(0)
    for (x1, y1), (x2, y2) in zip(vertices, vertices[1:] + vertices[:1]):
        s += Fraction(x1) * Fraction(y2) - Fraction(x2) * Fraction(y1)
    return s / 2
