"""JSON, CSV and SVG forms of domains and results.

Rationals travel as ``[numerator, denominator]`` integer pairs.  SVG output
is the only place floats appear, and it is marked non-canonical.
"""
from __future__ import annotations

import csv
import io
import json
import os
import re
from fractions import Fraction
from typing import Any, Iterable, Sequence

from . import catalog
from .domain import HPolytope, LShape, MomentPolygon
from .errors import DomainParseError, InvalidGeometry
from .geometry import as_rational


def rat(x) -> list[int]:
    x = Fraction(x)
    return [x.numerator, x.denominator]


def rat_or_none(x):
    return None if x is None else rat(x)


def parse_rational(value, field: str) -> Fraction:
    try:
        if isinstance(value, list):
            if len(value) != 2 or not all(isinstance(v, int) and not isinstance(v, bool) for v in value):
                raise ValueError("expected an integer pair [numerator, denominator]")
            return Fraction(value[0], value[1])
        return as_rational(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise DomainParseError(str(exc), field) from None


def _parse_list(value, field: str) -> list:
    if not isinstance(value, list):
        raise DomainParseError("expected a list", field)
    return value


# -- domains -------------------------------------------------------------------

_FAMILY_ARITY = {
    "simplex": (1, 1),
    "ball": (1, 1),
    "xa": (1, 1),
    "ellipsoid": (2, 2),
    "polydisk": (2, 2),
    "lp": (2, 2),
    "lshape": (1, None),
}


def make_family(name: str, params: Sequence, field: str = "params"):
    if name not in _FAMILY_ARITY:
        raise DomainParseError(f"unknown family {name!r}", "type")
    lo, hi = _FAMILY_ARITY[name]
    if len(params) < lo or (hi is not None and len(params) > hi):
        raise DomainParseError(f"family {name} takes {lo}" + ("" if lo == hi else "+") + " parameters", field)
    if name == "lp":
        p = parse_rational(params[0], f"{field}[0]")
        try:
            samples = int(params[1])
        except (TypeError, ValueError):
            raise DomainParseError("sample count must be an integer", f"{field}[1]") from None
        return catalog.make_lp_ball(p, samples)
    values = [parse_rational(v, f"{field}[{i}]") for i, v in enumerate(params)]
    maker = {
        "simplex": catalog.make_simplex,
        "ball": catalog.make_ball,
        "xa": catalog.make_Xa,
        "ellipsoid": catalog.make_ellipsoid,
        "polydisk": catalog.make_polydisk,
        "lshape": catalog.make_Lshape,
    }[name]
    return maker(*values)


def domain_from_json(obj: Any):
    if not isinstance(obj, dict):
        raise DomainParseError("domain must be a JSON object", "$")
    kind = obj.get("type")
    if kind is None:
        raise DomainParseError("missing field", "type")
    try:
        if kind == "polygon":
            pts = _parse_list(obj.get("boundary_plus"), "boundary_plus")
            chain = []
            for i, p in enumerate(pts):
                p = _parse_list(p, f"boundary_plus[{i}]")
                if len(p) != 2:
                    raise DomainParseError("point needs two coordinates", f"boundary_plus[{i}]")
                chain.append(tuple(parse_rational(c, f"boundary_plus[{i}][{j}]") for j, c in enumerate(p)))
            return MomentPolygon(tuple(chain))
        if kind == "hpolytope":
            rows = _parse_list(obj.get("A"), "A")
            A = tuple(
                tuple(parse_rational(c, f"A[{i}][{j}]") for j, c in enumerate(_parse_list(row, f"A[{i}]")))
                for i, row in enumerate(rows)
            )
            b = tuple(parse_rational(c, f"b[{i}]") for i, c in enumerate(_parse_list(obj.get("b"), "b")))
            return HPolytope(A, b)
        params = _parse_list(obj.get("params", []), "params")
        if kind == "lshape" and "box" in obj:
            values = [parse_rational(v, f"params[{i}]") for i, v in enumerate(params)]
            return catalog.make_Lshape(*values, box=parse_rational(obj["box"], "box"))
        return make_family(kind, params)
    except InvalidGeometry as exc:
        culprit = {"polygon": "boundary_plus", "hpolytope": "A"}.get(kind, "params")
        raise DomainParseError(str(exc), culprit) from None


def domain_to_json(omega) -> dict:
    if isinstance(omega, MomentPolygon):
        return {"type": "polygon", "boundary_plus": [[rat(p.x), rat(p.y)] for p in omega.chain]}
    if isinstance(omega, HPolytope):
        return {"type": "hpolytope", "A": [[rat(c) for c in row] for row in omega.A], "b": [rat(c) for c in omega.b]}
    if isinstance(omega, LShape):
        return {"type": "lshape", "params": [rat(a) for a in omega.a], "box": rat(omega.box)}
    raise TypeError(f"cannot serialize {type(omega).__name__}")


def parse_domain(text: str):
    """A domain from ``name:p1,p2``, a JSON file path, or inline JSON."""
    text = text.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise DomainParseError(f"malformed JSON ({exc.msg})", f"line {exc.lineno} column {exc.colno}") from None
        return domain_from_json(obj)
    if os.path.exists(text):
        with open(text, encoding="utf-8") as fh:
            try:
                obj = json.load(fh)
            except json.JSONDecodeError as exc:
                raise DomainParseError(f"malformed JSON ({exc.msg})", f"{text}:{exc.lineno}:{exc.colno}") from None
        return domain_from_json(obj)
    name, sep, rest = text.partition(":")
    if not sep:
        raise DomainParseError(f"expected name:params, a JSON file or inline JSON, got {text!r}", "domain")
    params = [p for p in rest.split(",") if p]
    try:
        return make_family(name.lower(), params)
    except InvalidGeometry as exc:
        raise DomainParseError(str(exc), "params") from None


# -- results -------------------------------------------------------------------


def bounds_to_json(b) -> Any:
    if b.is_exact:
        return rat(b.value)
    return {"lower": rat_or_none(b.lower), "upper": rat_or_none(b.upper)}


def report_to_json(report) -> dict:
    out = {
        "c_gr": bounds_to_json(report.c_gr),
        "c_z": bounds_to_json(report.c_z),
        "c1_ch": rat_or_none(report.c1_ch),
        "c1_ech": rat_or_none(report.c1_ech),
        "volume": rat(report.volume),
        "strong_viterbo": report.strong_viterbo,
        "viterbo": report.viterbo,
    }
    ratio = report.viterbo_ratio
    out["viterbo_ratio"] = None if ratio is None else [rat(ratio[0]), rat(ratio[1])]
    out["notes"] = list(report.notes)
    return out


def orbit_to_json(o) -> dict:
    return {
        "kind": o.kind,
        "mu": [rat(o.location.x), rat(o.location.y)],
        "nu": None if o.normal is None else [o.normal.a, o.normal.b],
        "action": rat(o.action),
        "action_max": rat_or_none(o.action_max),
        "rho": rat(o.rotation_number),
        "corner": o.at_corner,
    }


def verdict_to_json(v) -> dict:
    out = {
        "status": v.status,
        "checked_up_to": v.checked_up_to,
        "obstruction_index": v.obstruction_index,
        "certificate": v.certificate,
    }
    if v.violation is not None:
        out["violation"] = {"source": rat(v.violation[0]), "target": rat(v.violation[1])}
    return out


_PAIR = re.compile(r"\[\s+(-?\d+),\s+(-?\d+)\s+\]")


def dumps(obj) -> str:
    """Indented JSON with every integer pair kept on one line."""
    text = json.dumps(obj, indent=2)
    return _PAIR.sub(r"[\1, \2]", text) + "\n"


def to_csv(header: Sequence[str], rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([_cell(c) for c in row])
    return buf.getvalue()


def _cell(c) -> str:
    if isinstance(c, Fraction):
        return str(c)
    return "" if c is None else str(c)


# -- SVG -------------------------------------------------------------------------

_PALETTE = ("#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7")
_SVG_NOTE = "<!-- non-canonical: float coordinates for display only -->"


def _svg_frame(width: int, height: int, body: list[str]) -> str:
    head = (
        '<?xml version="1.0" encoding="UTF-8"?>\n'
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">\n{_SVG_NOTE}\n'
    )
    return head + "\n".join(body) + "\n</svg>\n"


def decomposition_svg(omega: MomentPolygon, triangles, outer_r=None, size: int = 400) -> str:
    """Omega with its weight triangles, filled by recursion depth."""
    extent = float(max(omega.A, omega.B, omega.max_coordinate(0), omega.max_coordinate(1), outer_r or 0))
    pad = 20
    s = (size - 2 * pad) / extent

    def xy(p):
        return f"{pad + float(p[0]) * s:.3f},{size - pad - float(p[1]) * s:.3f}"

    body = []
    for t in triangles:
        colour = _PALETTE[t.depth % len(_PALETTE)]
        pts = " ".join(xy(p) for p in t.vertices)
        body.append(f'<polygon points="{pts}" fill="{colour}" fill-opacity="0.55" stroke="#333" stroke-width="0.6"/>')
    if outer_r is not None:
        pts = " ".join(xy(p) for p in ((0, 0), (outer_r, 0), (0, outer_r)))
        body.append(f'<polygon points="{pts}" fill="none" stroke="#999" stroke-dasharray="4 3"/>')
    pts = " ".join(xy(p) for p in omega.vertices)
    body.append(f'<polygon points="{pts}" fill="none" stroke="#000" stroke-width="1.5"/>')
    return _svg_frame(size, size, body)


def capacity_plot_svg(values: Sequence[Fraction], width: int = 480, height: int = 320) -> str:
    """Step plot of k -> c_k."""
    pad = 30
    kmax = max(1, len(values) - 1)
    top = float(max(values)) or 1.0
    sx = (width - 2 * pad) / kmax
    sy = (height - 2 * pad) / top
    pts = []
    for k, v in enumerate(values):
        y = height - pad - float(v) * sy
        x0 = pad + k * sx
        pts.append(f"{x0:.3f},{y:.3f}")
        pts.append(f"{x0 + sx:.3f},{y:.3f}")
    body = [
        f'<line x1="{pad}" y1="{height - pad}" x2="{width - pad}" y2="{height - pad}" stroke="#000"/>',
        f'<line x1="{pad}" y1="{pad}" x2="{pad}" y2="{height - pad}" stroke="#000"/>',
        f'<polyline points="{" ".join(pts)}" fill="none" stroke="#4e79a7" stroke-width="1.5"/>',
        f'<text x="{width - pad}" y="{height - 8}" font-size="11" text-anchor="end">k = 0..{len(values) - 1}</text>',
    ]
    return _svg_frame(width, height, body)


__all__ = [
    "bounds_to_json",
    "capacity_plot_svg",
    "decomposition_svg",
    "domain_from_json",
    "domain_to_json",
    "dumps",
    "make_family",
    "orbit_to_json",
    "parse_domain",
    "parse_rational",
    "rat",
    "report_to_json",
    "to_csv",
    "verdict_to_json",
]
