import threading
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from toricap.catalog import make_ellipsoid, make_polydisk, make_simplex, make_Xa, random_concave_polygon
from toricap.domain import MomentPolygon
from toricap.ech import (
    CapacitySequence,
    ball_capacity,
    candidate_lower_bound,
    capacity_sequence,
    concave_capacities,
    concave_capacity,
    ellipsoid_oracle,
    sqrt_lower,
    sqrt_upper,
    stopping_index,
    union_capacities,
    weakly_convex_capacity,
    weakly_convex_table,
)
from toricap.errors import ClassMismatch, InvalidGeometry
from toricap.kernels import available_backends

from oracles import ball_values, ellipsoid_values, naive_union, polydisk_values, union_by_enumeration, weakly_convex_bruteforce

XA_QUARTER = [0, F(3, 4), 1, F(3, 2), F(7, 4), 2, F(9, 4), F(5, 2), F(11, 4), 3, 3, F(13, 4), F(7, 2)]
XA_TWO_FIFTHS = [0, F(2, 5), F(4, 5), 1, F(6, 5), F(7, 5), F(8, 5), F(9, 5), F(9, 5), 2, F(11, 5), F(11, 5), F(12, 5)]


def test_ball_spot_values():
    assert [ball_capacity(k, 1) for k in range(8)] == [0, 1, 1, 2, 2, 2, 3, 3]
    assert ball_capacity(5, F(2, 3)) == F(4, 3)


def test_ellipsoid_oracle_matches_lattice_count():
    assert [ellipsoid_oracle(k, 1, 2) for k in range(11)] == ellipsoid_values(1, 2, 10)


@pytest.mark.parametrize("q", [1, F(3, 2), 2, 3, F(5, 3)])
def test_concave_ellipsoid_equals_oracle(q):
    assert concave_capacities(make_ellipsoid(1, q), 30) == ellipsoid_values(1, q, 30)


@given(st.lists(st.fractions(min_value=F(1, 8), max_value=3, max_denominator=8), min_size=1, max_size=3), st.integers(0, 12))
def test_union_against_enumeration(balls, k):
    assert union_capacities(balls, k)[k] == union_by_enumeration(balls, k)


@given(st.lists(st.fractions(min_value=F(1, 9), max_value=4, max_denominator=9), min_size=1, max_size=5))
def test_union_against_quadratic_dp(balls):
    assert union_capacities(balls, 40) == naive_union(balls, 40)


@pytest.mark.parametrize("backend", available_backends())
def test_union_backends(backend):
    assert union_capacities([F(1, 3), F(2, 7)], 25, backend=backend) == naive_union([F(1, 3), F(2, 7)], 25)


def test_frozen_xa_values():
    assert capacity_sequence(make_Xa(F(1, 4))).upto(12) == XA_QUARTER
    assert capacity_sequence(make_Xa(F(2, 5))).upto(12) == XA_TWO_FIFTHS
    assert weakly_convex_bruteforce(1, [F(1, 4)] * 4, 12, 150) == XA_QUARTER


@pytest.mark.parametrize("a, b", [(1, 1), (1, 2), (F(1, 2), 3), (2, F(5, 3))])
def test_polydisk_closed_form(a, b):
    assert capacity_sequence(make_polydisk(a, b)).upto(25) == polydisk_values(a, b, 25)


def test_simplex_both_formulas_agree():
    omega = make_simplex(F(5, 4))
    table = weakly_convex_table(F(5, 4), [], 20)
    assert list(table.values) == concave_capacities(omega, 20) == ball_values(F(5, 4), 20)


def test_weakly_convex_capacity_reports_argmin():
    v = weakly_convex_capacity(1, make_Xa(F(1, 4)))
    assert v.value == F(3, 4) and v.argmin >= 1 and v.stop_index >= v.argmin


@given(st.integers(0, 10**6))
def test_sqrt_brackets(seed):
    import random

    rng = random.Random(seed)
    x = F(rng.randint(1, 10**9), rng.randint(1, 10**6))
    lo, hi = sqrt_lower(x), sqrt_upper(x)
    assert lo * lo <= x <= hi * hi and lo < hi


@given(
    st.fractions(min_value=F(1, 2), max_value=3, max_denominator=6),
    st.lists(st.fractions(min_value=F(1, 10), max_value=F(1, 2), max_denominator=10), min_size=1, max_size=4),
    st.integers(0, 60),
)
def test_candidate_bound_is_valid(r, inner, l):
    """LB(l) never exceeds any candidate c_{k+l}(B(r)) - c_l(union)."""
    sum_sq = sum(a * a for a in inner)
    if sum_sq >= r * r:
        return
    lb = candidate_lower_bound(l, r, sum_sq)
    union_l = naive_union(inner, l)[l]
    ball = ball_values(r, l + 10)
    for k in range(11):
        assert lb <= ball[k + l] - union_l


def test_stopping_index_zero_area():
    with pytest.raises(InvalidGeometry):
        stopping_index(F(1), F(1), F(3))


def test_scan_to_override_matches():
    t = weakly_convex_table(1, [F(1, 4)] * 4, 10)
    long = weakly_convex_table(1, [F(1, 4)] * 4, 10, scan_to=5 * t.stop_index)
    assert t.values == long.values


def test_capacity_sequence_lazy_and_threadsafe():
    calls = []

    def compute(n):
        calls.append(n)
        return [F(k) for k in range(n + 1)]

    seq = CapacitySequence("test", compute)
    threads = [threading.Thread(target=lambda: seq[100]) for _ in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert seq[37] == 37 and len(calls) == 1
    assert seq.upto(3) == [0, 1, 2, 3]
    with pytest.raises(IndexError):
        seq[-1]


def test_capacity_sequence_class_mismatch():
    zigzag = MomentPolygon.from_points((0, 3), (1, 2), (2, 2), (3, 0))
    with pytest.raises(ClassMismatch):
        capacity_sequence(zigzag)


@given(st.integers(0, 10**6), st.fractions(min_value=F(1, 3), max_value=3, max_denominator=4))
def test_capacities_scale(seed, lam):
    omega = random_concave_polygon(seed, 4)
    base = concave_capacities(omega, 15)
    assert concave_capacities(omega.scaled(lam), 15) == [lam * v for v in base]


@given(st.integers(0, 10**6), st.integers(2, 5))
def test_capacity_monotone_under_inclusion(seed, n):
    """Shrinking the profile never increases a capacity."""
    omega = random_concave_polygon(seed, n)
    inner = omega.scaled(F(9, 10))
    assert all(x <= y for x, y in zip(concave_capacities(inner, 15), concave_capacities(omega, 15)))
    assert concave_capacity(1, omega) == omega.min_total()
