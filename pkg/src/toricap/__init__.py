"""Exact ECH and normalized capacities of toric domains in R^4."""
from .capacities import (
    Bounds,
    CapacityReport,
    c1_ch_concave,
    c1_ch_monotone,
    cylindrical_capacity_monotone_4d,
    cylindrical_capacity_weakly_convex,
    gromov_width_monotone_4d,
    gromov_width_Xa,
    viterbo_report,
    xa_report,
    zk_ratio_bound,
)
from .catalog import (
    make_ball,
    make_ellipsoid,
    make_lp_ball,
    make_Lshape,
    make_polydisk,
    make_simplex,
    make_Xa,
    random_concave_polygon,
    random_monotone_polygon,
    random_weakly_convex_polygon,
)
from .domain import DomainClass, HPolytope, LShape, MomentPolygon, classify, simplex_inradius, volume
from .ech import (
    ball_capacity,
    capacity_sequence,
    concave_capacity,
    ellipsoid_oracle,
    union_capacity,
    weakly_convex_capacity,
)
from .embed import (
    EmbedVerdict,
    ball_packing_certificate_Xa,
    check_concave_into_polydisk,
    check_concave_into_weakly_convex,
    folding_polydisk,
)
from .errors import ClassMismatch, DomainParseError, HypothesisNotSatisfied, InvalidGeometry, ToricError
from .geometry import IntVec2, Point2, UnimodularAffine, as_rational, point, primitive_outward_normal
from .kernels import BACKEND
from .reeb import ReebOrbitInfo, a_min, enumerate_orbits, is_dynamically_convex
from .weights import WeightSequence, outer_decomposition, weight_sequence

__version__ = "0.1.0"
