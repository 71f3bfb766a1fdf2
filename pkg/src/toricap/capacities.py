"""Normalized capacities: first equivariant capacity, Gromov width, cylindrical capacity.

Exact values where a closed formula applies; otherwise a closed interval
[lower, upper] with ``None`` meaning "no bound known".  Viterbo-type
comparisons are done on squares, never on square roots.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .catalog import make_Xa
from .domain import HPolytope, LShape, MomentPolygon, classify, simplex_inradius, volume
from .ech import capacity_sequence, weakly_convex_capacity
from .errors import ClassMismatch, HypothesisNotSatisfied, InvalidGeometry
from .geometry import as_rational

HOLDS, FAILS, UNKNOWN = "holds", "fails", "unknown"


@dataclass(frozen=True)
class Bounds:
    lower: Optional[Fraction]
    upper: Optional[Fraction]

    @classmethod
    def exact(cls, v) -> "Bounds":
        return cls(v, v)

    @property
    def is_exact(self) -> bool:
        return self.lower is not None and self.lower == self.upper

    @property
    def value(self) -> Fraction:
        if not self.is_exact:
            raise ValueError("capacity is only known up to an interval")
        return self.lower

    def scaled(self, lam) -> "Bounds":
        return Bounds(
            None if self.lower is None else self.lower * lam,
            None if self.upper is None else self.upper * lam,
        )


def c1_ch_concave(omega: Union[MomentPolygon, HPolytope, LShape]) -> Fraction:
    """min of mu_1 + ... + mu_n over the closure of the positive boundary."""
    if isinstance(omega, MomentPolygon):
        if "concave" not in classify(omega):
            raise ClassMismatch("c1_ch_concave needs a concave profile", "concave")
        return omega.min_total()
    if isinstance(omega, LShape):
        # concave except for compactness; the formula passes to the limit by exhaustion
        return min(sum(v) for v in omega.boundary_candidates())
    if isinstance(omega, HPolytope):
        # a convex polytope has convex complement in the orthant only when it is a
        # single positive half-space cut
        if len(omega.A) != 1 or any(v <= 0 for v in omega.A[0]):
            raise ClassMismatch("polytope is not a concave profile", "concave")
        return min(omega.b[0] / v for v in omega.A[0])
    raise TypeError(f"unsupported profile type {type(omega).__name__}")


def c1_ch_monotone(omega: Union[MomentPolygon, HPolytope]) -> Fraction:
    """Largest a with Delta^n(a) inside Omega; equals c_1^CH and c_Gr for monotone profiles."""
    if isinstance(omega, HPolytope):
        return simplex_inradius(omega)
    if "monotone" not in classify(omega):
        raise ClassMismatch("c1_ch_monotone needs a monotone profile", "monotone")
    return omega.min_total()


def gromov_width_monotone_4d(omega: MomentPolygon) -> Fraction:
    return c1_ch_monotone(omega)


def cylindrical_capacity_monotone_4d(omega: MomentPolygon) -> Fraction:
    # the inscribed simplex is tight: Omega also folds into P(r, R) inside Z(r)
    return c1_ch_monotone(omega)


def _extreme_point_check(omega: MomentPolygon, j: int) -> tuple[Fraction, bool]:
    """(M_j, whether some boundary point with mu_j = M_j has the other coordinate <= M_j)."""
    M = omega.max_coordinate(j)
    chain = omega.chain
    others = [p[1 - j] for p in chain if p[j] == M]
    return M, min(others) <= M


def cylindrical_capacity_weakly_convex(omega: MomentPolygon) -> Fraction:
    """min(M_1, M_2) under the extreme-point hypotheses; raises when they fail."""
    if "weakly_convex" not in classify(omega):
        raise ClassMismatch("needs a weakly convex profile", "weakly_convex")
    M1, ok1 = _extreme_point_check(omega, 0)
    M2, ok2 = _extreme_point_check(omega, 1)
    if not (ok1 and ok2):
        side = "mu_1" if not ok1 else "mu_2"
        raise HypothesisNotSatisfied(
            f"no boundary point realizing M at the {side} side with the other coordinate <= M",
            side=side,
            lower=omega.min_total(),
            upper=min(M1, M2),
        )
    return min(M1, M2)


def gromov_width_Xa(a) -> Fraction:
    """min(1 - a, 2 - 4a), cross-checked against both of its proofs.

    Upper bound: c_1^ECH from the weakly convex formula.  Lower bound: the
    explicit packing certificate (five triangles for a <= 1/3, a diamond
    for a >= 1/3).
    """
    from .embed import ball_packing_certificate_Xa

    a = as_rational(a)
    if not 0 < a < Fraction(1, 2):
        raise InvalidGeometry(f"X_a needs 0 < a < 1/2, got {a}")
    value = min(1 - a, 2 - 4 * a)
    upper = weakly_convex_capacity(1, make_Xa(a)).value
    lower = ball_packing_certificate_Xa(a).verify()
    if not lower == value == upper:
        raise ArithmeticError(f"Gromov width bounds disagree for a={a}: {lower}, {value}, {upper}")
    return value


def xa_parameter(omega: MomentPolygon) -> Optional[tuple[Fraction, Fraction]]:
    """(a, lam) if Omega is lam * Omega_a, else None."""
    if "weakly_convex" not in classify(omega):
        return None
    lam = omega.max_total()
    a = 1 - omega.max_coordinate(0) / lam
    if not 0 < a < Fraction(1, 2):
        return None
    if make_Xa(a).scaled(lam) != omega:
        return None
    return a, lam


@dataclass(frozen=True)
class CapacityReport:
    c_gr: Bounds
    c_z: Bounds
    c1_ch: Optional[Fraction]
    c1_ech: Optional[Fraction]
    volume: Fraction
    strong_viterbo: str
    viterbo: str
    notes: tuple[str, ...] = ()

    @property
    def viterbo_ratio(self) -> Optional[tuple[Fraction, Fraction]]:
        """(c_Z^2, 2 Vol) when c_Z is exact."""
        if not self.c_z.is_exact:
            return None
        return self.c_z.value ** 2, 2 * self.volume


def _strong_viterbo(c_gr: Bounds, c_z: Bounds) -> str:
    if c_gr.is_exact and c_z.is_exact:
        return HOLDS if c_gr.value == c_z.value else FAILS
    if c_gr.upper is not None and c_z.lower is not None and c_gr.upper < c_z.lower:
        return FAILS
    return UNKNOWN


def _viterbo(c_z: Bounds, vol: Fraction) -> str:
    # c_Z is the largest normalized capacity, so it alone decides the inequality
    if c_z.upper is not None and c_z.upper ** 2 <= 2 * vol:
        return HOLDS
    if c_z.lower is not None and c_z.lower ** 2 > 2 * vol:
        return FAILS
    return UNKNOWN


def viterbo_report(omega: MomentPolygon) -> CapacityReport:
    cls = classify(omega)
    vol = volume(omega)
    notes = []
    c1_ech = None
    if "concave" in cls or "weakly_convex" in cls:
        c1_ech = capacity_sequence(omega)[1]
    c1_ch = None
    if "monotone" in cls:
        r = c1_ch_monotone(omega)
        c_gr = c_z = Bounds.exact(r)
        c1_ch = r
        notes.append("monotone: all normalized capacities equal the inscribed simplex size")
    elif "weakly_convex" in cls:
        xa = xa_parameter(omega)
        if xa is not None:
            a, lam = xa
            c_gr = Bounds.exact(gromov_width_Xa(a) * lam)
            notes.append(f"scaled X_a family member: a = {a}, scale = {lam}")
        else:
            c_gr = Bounds(omega.min_total(), c1_ech)
            notes.append("Gromov width bracketed by the inscribed simplex and c_1^ECH")
        try:
            c_z = Bounds.exact(cylindrical_capacity_weakly_convex(omega))
        except HypothesisNotSatisfied as exc:
            c_z = Bounds(c_gr.lower, exc.upper)
            notes.append(f"cylindrical capacity hypothesis fails on the {exc.side} side")
    else:
        c_gr = Bounds(omega.min_total(), None)
        c_z = Bounds(omega.min_total(), None)
        notes.append("profile is neither monotone nor weakly convex")
    report = CapacityReport(
        c_gr=c_gr,
        c_z=c_z,
        c1_ch=c1_ch,
        c1_ech=c1_ech,
        volume=vol,
        strong_viterbo=_strong_viterbo(c_gr, c_z),
        viterbo=_viterbo(c_z, vol),
        notes=tuple(notes),
    )
    _check_sandwich(report)
    return report


def _check_sandwich(report: CapacityReport) -> None:
    lo, hi = report.c_gr.lower, report.c_z.upper
    for name, v in (("c1_ch", report.c1_ch), ("c1_ech", report.c1_ech)):
        if v is None:
            continue
        if (lo is not None and v < lo) or (hi is not None and v > hi):
            raise ArithmeticError(f"{name} = {v} escapes [c_Gr, c_Z] = [{lo}, {hi}]")


def xa_report(a) -> CapacityReport:
    return viterbo_report(make_Xa(a))


def zk_ratio_bound(k: int) -> float:
    """(k/pi) tan(pi/k), the c_Z / c_Gr bound for Z/k-invariant convex domains.

    Approximate by construction.
    """
    if k < 3:
        raise ValueError("k must be at least 3")
    return k / math.pi * math.tan(math.pi / k)
