from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from toricap.catalog import (
    make_ellipsoid,
    make_polydisk,
    make_simplex,
    make_Xa,
    random_concave_polygon,
    random_weakly_convex_polygon,
)
from toricap.domain import MomentPolygon
from toricap.errors import ClassMismatch
from toricap.geometry import is_unimodular_triangle, point_in_polygon, triangles_overlap
from toricap.weights import ball_weights, outer_decomposition, weight_sequence


@pytest.mark.parametrize(
    "omega, expected",
    [
        (make_simplex(F(3, 2)), [F(3, 2)]),
        (make_ellipsoid(1, 2), [1, 1]),
        (make_ellipsoid(1, F(3, 2)), [1, F(1, 2), F(1, 2)]),
        (make_ellipsoid(1, 3), [1, 1, 1]),
        (make_ellipsoid(2, 3), [2, 1, 1]),
    ],
)
def test_ellipsoid_weights(omega, expected):
    assert list(weight_sequence(omega).weights) == [F(w) for w in expected]


def test_weights_sorted_descending():
    omega = MomentPolygon.from_points((0, 5), (1, 2), (3, 1), (7, 0))
    ws = weight_sequence(omega).weights
    assert list(ws) == sorted(ws, reverse=True)
    assert ws[0] == omega.min_total()


def test_weights_need_concave():
    with pytest.raises(ClassMismatch):
        weight_sequence(make_Xa(F(1, 4)))


@pytest.mark.parametrize(
    "omega, r, inner",
    [
        (make_Xa(F(1, 4)), 1, [F(1, 4)] * 4),
        (make_polydisk(1, 1), 2, [1, 1]),
        (make_polydisk(1, 2), 3, [2, 1]),
        (make_simplex(1), 1, []),
    ],
)
def test_outer_decomposition(omega, r, inner):
    dec = outer_decomposition(omega)
    assert dec.r == r
    assert list(dec.inner_weights.weights) == [F(w) for w in inner]


def _check_tiling(omega, triangles, container):
    for t in triangles:
        assert is_unimodular_triangle(t.vertices, t.size)
        assert all(point_in_polygon(p, container) for p in t.vertices)
    for i in range(len(triangles)):
        for j in range(i + 1, len(triangles)):
            assert not triangles_overlap(triangles[i].vertices, triangles[j].vertices)


@given(st.integers(0, 10**6), st.integers(2, 6))
def test_concave_triangles_tile_omega(seed, n):
    omega = random_concave_polygon(seed, n)
    ws = weight_sequence(omega)
    assert ws.sum_of_squares() == 2 * omega.area
    _check_tiling(omega, ws.triangles, omega.vertices)
    assert ws.triangles[0].depth == 0


@given(st.integers(0, 10**6), st.integers(3, 6))
def test_weakly_convex_area_balance(seed, n):
    omega = random_weakly_convex_polygon(seed, n)
    dec = outer_decomposition(omega)
    assert dec.r * dec.r == 2 * omega.area + dec.inner_weights.sum_of_squares()
    # inner triangles live in Delta^2(r) minus the interior of Omega
    simplex = ((0, 0), (dec.r, 0), (0, dec.r))
    _check_tiling(omega, dec.inner_weights.triangles, simplex)


@given(st.integers(0, 10**6), st.fractions(min_value=F(1, 4), max_value=4, max_denominator=5))
def test_weights_scale_linearly(seed, lam):
    omega = random_concave_polygon(seed, 4)
    assert weight_sequence(omega.scaled(lam)).weights == tuple(lam * w for w in weight_sequence(omega).weights)


def test_ball_weights():
    assert ball_weights([1, 3, 2]).weights == (3, 2, 1)
    with pytest.raises(ClassMismatch):
        ball_weights([1, 0])
