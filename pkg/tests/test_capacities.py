from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from toricap.capacities import (
    FAILS,
    HOLDS,
    UNKNOWN,
    Bounds,
    c1_ch_concave,
    c1_ch_monotone,
    cylindrical_capacity_monotone_4d,
    cylindrical_capacity_weakly_convex,
    gromov_width_monotone_4d,
    gromov_width_Xa,
    viterbo_report,
    xa_parameter,
    xa_report,
    zk_ratio_bound,
)
from toricap.catalog import (
    make_ellipsoid,
    make_Lshape,
    make_polydisk,
    make_polydisk_polytope,
    make_simplex,
    make_simplex_polytope,
    make_Xa,
    random_monotone_polygon,
    random_weakly_convex_polygon,
)
from toricap.domain import MomentPolygon
from toricap.ech import capacity_sequence
from toricap.errors import ClassMismatch, HypothesisNotSatisfied, InvalidGeometry

from oracles import vertex_min_total


def test_c1_ch_concave_examples():
    assert c1_ch_concave(make_ellipsoid(1, 2)) == 1
    assert c1_ch_concave(make_simplex(F(7, 3))) == F(7, 3)
    assert c1_ch_concave(make_Lshape(1, 2, 3)) == 6
    assert c1_ch_concave(make_simplex_polytope(2, 4)) == 2
    with pytest.raises(ClassMismatch):
        c1_ch_concave(make_Xa(F(1, 4)))
    with pytest.raises(ClassMismatch):
        c1_ch_concave(make_polydisk_polytope(1, 2))


def test_c1_ch_monotone_examples():
    chain = MomentPolygon.from_points((0, 2), (1, F(3, 2)), (2, 0))
    for f in (c1_ch_monotone, gromov_width_monotone_4d, cylindrical_capacity_monotone_4d):
        assert f(chain) == 2
        assert f(make_polydisk(1, F(5, 2))) == 1
        assert f(make_simplex(3)) == 3
    assert c1_ch_monotone(make_polydisk_polytope(3, 2, 5)) == 2
    with pytest.raises(ClassMismatch):
        c1_ch_monotone(make_Xa(F(1, 4)))


def test_cylindrical_weakly_convex():
    assert cylindrical_capacity_weakly_convex(make_Xa(F(1, 4))) == F(3, 4)
    assert cylindrical_capacity_weakly_convex(make_polydisk(2, 3)) == 2
    assert cylindrical_capacity_weakly_convex(make_simplex(F(1, 2))) == F(1, 2)


def test_cylindrical_hypothesis_failure_reports_interval():
    # max mu_1 = 3 is attained only at (3, 5), where mu_2 = 5 > 3
    omega = MomentPolygon.from_points((0, 1), (2, 6), (3, 5), (1, 0))
    with pytest.raises(HypothesisNotSatisfied) as err:
        cylindrical_capacity_weakly_convex(omega)
    assert err.value.side == "mu_1"
    assert err.value.upper == 3 and err.value.lower == 1
    report = viterbo_report(omega)
    assert report.c_z == Bounds(report.c_gr.lower, F(3))


@pytest.mark.parametrize(
    "a, gr",
    [(F(1, 4), F(3, 4)), (F(2, 5), F(2, 5)), (F(1, 100), F(99, 100)), (F(1, 3), F(2, 3)), (F(9, 20), F(1, 5))],
)
def test_gromov_width_xa(a, gr):
    assert gromov_width_Xa(a) == gr


@pytest.mark.parametrize("a", [0, F(1, 2), F(-1, 3)])
def test_gromov_width_xa_range(a):
    with pytest.raises(InvalidGeometry):
        gromov_width_Xa(a)


def test_report_quarter():
    r = xa_report(F(1, 4))
    assert r.c_gr.value == r.c_z.value == F(3, 4)
    assert r.strong_viterbo == HOLDS and r.viterbo == HOLDS


def test_report_three_eighths():
    r = xa_report(F(3, 8))
    assert (r.c_gr.value, r.c_z.value) == (F(1, 2), F(5, 8))
    assert r.strong_viterbo == FAILS and r.viterbo == HOLDS
    assert r.viterbo_ratio == (F(25, 64), F(7, 16))


def test_report_nine_twentieths():
    r = xa_report(F(9, 20))
    assert r.viterbo_ratio == (F(121, 400), F(19, 100))
    assert r.viterbo == FAILS


def test_report_sandwich_and_scaling():
    for a in (F(1, 5), F(3, 8)):
        for lam in (F(1), F(5, 2)):
            omega = make_Xa(a).scaled(lam)
            assert xa_parameter(omega) == (a, lam)
            r = viterbo_report(omega)
            base = xa_report(a)
            assert r.c_gr == base.c_gr.scaled(lam) and r.c_z == base.c_z.scaled(lam)
            assert r.c1_ech == lam * base.c1_ech
            assert (r.strong_viterbo, r.viterbo) == (base.strong_viterbo, base.viterbo)
            assert r.c_gr.value <= r.c1_ech <= r.c_z.value


@given(st.integers(0, 10**6), st.integers(2, 7))
def test_monotone_capacities_coincide(seed, n):
    omega = random_monotone_polygon(seed, n)
    r = viterbo_report(omega)
    v = vertex_min_total(omega.chain)
    assert r.c_gr.value == r.c_z.value == r.c1_ch == v
    assert r.strong_viterbo == HOLDS
    if r.c1_ech is not None:
        assert r.c1_ech == v


@given(st.integers(0, 10**6), st.integers(3, 6))
def test_weakly_convex_report_is_consistent(seed, n):
    omega = random_weakly_convex_polygon(seed, n)
    r = viterbo_report(omega)
    assert r.c1_ech == capacity_sequence(omega)[1]
    assert r.c_gr.lower <= r.c1_ech
    if r.c_z.upper is not None:
        assert r.c1_ech <= r.c_z.upper
    assert r.strong_viterbo in (HOLDS, FAILS, UNKNOWN)


def test_nonconvex_report_unknown():
    omega = MomentPolygon.from_points((0, 1), (2, 3), (3, 1), (4, 2), (5, 0))
    r = viterbo_report(omega)
    assert r.c_z.upper is None and r.viterbo == UNKNOWN


def test_zk_bound():
    assert zk_ratio_bound(4) == pytest.approx(4 / 3.141592653589793)
    assert zk_ratio_bound(1000) == pytest.approx(1.0, abs=1e-5)
    with pytest.raises(ValueError):
        zk_ratio_bound(2)
