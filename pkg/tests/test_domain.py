from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from toricap.catalog import make_ellipsoid, make_polydisk, make_simplex, make_Xa, random_monotone_polygon
from toricap.domain import (
    HPolytope,
    LShape,
    MomentPolygon,
    classify,
    is_convex_in_R4,
    midpoint_convexity_violation,
    require,
    simplex_inradius,
    vertex_scan_min_total,
    volume,
)
from toricap.errors import ClassMismatch, InvalidGeometry
from toricap.geometry import IntVec2

from oracles import shoelace


def test_xa_classification():
    cls = classify(make_Xa(F(1, 4)))
    assert cls.sorted() == ["star_shaped", "weakly_convex"]
    assert make_Xa(F(1, 4)).normals == [IntVec2(-1, 1), IntVec2(1, 1), IntVec2(1, -1)]


def test_simplex_has_every_flag():
    assert set(classify(make_simplex(1)).sorted()) == {
        "star_shaped", "monotone", "strictly_monotone", "concave", "convex_toric", "weakly_convex", "convex_in_R4",
    }


def test_polydisk_is_monotone_not_strict():
    cls = classify(make_polydisk(1, 2))
    assert cls.monotone and cls.convex_toric and not cls.strictly_monotone and not cls.concave


def test_convex_strictly_monotone_chain():
    omega = MomentPolygon.from_points((0, 2), (1, F(3, 2)), (2, 0))
    assert omega.normals == [IntVec2(1, 2), IntVec2(3, 2)]
    cls = classify(omega)
    assert cls.strictly_monotone and cls.convex_toric and not cls.concave


def test_concave_chain():
    omega = MomentPolygon.from_points((0, 3), (1, 1), (3, 0))
    cls = classify(omega)
    assert cls.concave and not cls.weakly_convex


@pytest.mark.parametrize(
    "points, match",
    [
        (((0, 1), (0, 1), (1, 0)), "zero-length"),
        (((1, 1), (1, 0)), r"\(0, B\)"),
        (((0, 1), (1, 1)), r"\(A, 0\)"),
        (((0, 1), (1, 0), (2, 0)), "open quadrant"),
        (((0, 2), (2, 2), (1, 1), (1, 3), (3, 0)), "self-intersects"),
    ],
)
def test_invalid_profiles(points, match):
    with pytest.raises(InvalidGeometry, match=match):
        MomentPolygon.from_points(*points)


def test_collinear_vertices_merge():
    omega = MomentPolygon.from_points((0, 2), (1, 1), (2, 0))
    assert omega == make_simplex(2)


def test_require_raises_class_mismatch():
    with pytest.raises(ClassMismatch) as err:
        require(make_Xa(F(1, 3)), "concave")
    assert err.value.required == "concave"


def test_volume_of_xa():
    for a in (F(1, 4), F(3, 8)):
        assert volume(make_Xa(a)) == F(1, 2) - 2 * a * a


@given(st.integers(0, 10**6), st.integers(2, 7), st.fractions(min_value=F(1, 5), max_value=5, max_denominator=7))
def test_area_scaling_and_shoelace(seed, n, lam):
    omega = random_monotone_polygon(seed, n)
    assert omega.area == shoelace(list(omega.vertices))
    assert omega.scaled(lam).area == lam * lam * omega.area
    assert classify(omega.scaled(lam)) == classify(omega)


def test_convex_in_R4_matches_midpoint_sampler():
    assert midpoint_convexity_violation(make_Xa(F(1, 4))) is not None
    assert not is_convex_in_R4(make_Xa(F(1, 4)))
    concave = MomentPolygon.from_points((0, 3), (1, 1), (3, 0))
    assert midpoint_convexity_violation(concave) is not None
    for omega in (make_simplex(1), make_ellipsoid(1, 3), make_polydisk(1, 2)):
        assert is_convex_in_R4(omega)
        assert midpoint_convexity_violation(omega, samples=500) is None


def test_hpolytope_inradius_and_vertices():
    H = HPolytope(((1, 2), (3, 2)), (4, 6))
    assert simplex_inradius(H) == 2
    assert vertex_scan_min_total(H) == 2
    poly = H.to_polygon()
    assert poly.chain[0].x == 0 and poly.chain[-1].y == 0


def test_hpolytope_validation():
    with pytest.raises(InvalidGeometry, match="invalid constraint"):
        HPolytope(((0, 0), (1, 1)), (1, 1))
    with pytest.raises(InvalidGeometry, match="unbounded"):
        HPolytope(((1, -1),), (1,))
    with pytest.raises(ClassMismatch):
        simplex_inradius(HPolytope(((1, -1), (1, 1)), (1, 2)))


def test_lshape():
    L = LShape((F(1), F(2)), F(6))
    assert L.contains((1, 5)) and not L.contains((F(3, 2), F(5, 2)))
    assert min(sum(v) for v in L.boundary_candidates()) == 3
    with pytest.raises(InvalidGeometry):
        LShape((F(1), F(2)), F(2))
