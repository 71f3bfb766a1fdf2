"""toricap command line.

Exit codes: 0 ok, 2 parse error, 3 obstruction found, 4 class mismatch.
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import capacities, embed, reeb, serialize
from .domain import FLAG_NAMES, HPolytope, LShape, MomentPolygon, classify, simplex_inradius
from .ech import capacity_sequence
from .errors import ClassMismatch, DomainParseError, InvalidGeometry
from .serialize import dumps, rat
from .weights import outer_decomposition, weight_sequence

EXIT_OK, EXIT_PARSE, EXIT_OBSTRUCTED, EXIT_CLASS = 0, 2, 3, 4


def _rational_arg(text: str) -> Fraction:
    try:
        return serialize.parse_rational(text, "argument")
    except DomainParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _polygon(omega, what: str) -> MomentPolygon:
    if isinstance(omega, MomentPolygon):
        return omega
    if isinstance(omega, HPolytope) and omega.n == 2:
        return omega.to_polygon()
    raise ClassMismatch(f"{what} needs a planar polygonal profile", "polygon")


def _emit(text: str, out) -> None:
    out.write(text)


def cmd_classify(args, out) -> int:
    omega = serialize.parse_domain(args.domain)
    if isinstance(omega, LShape):
        doc = {"type": "lshape", "n": omega.n, "flags": {"concave": True, "truncated_box": rat(omega.box)}}
    elif isinstance(omega, HPolytope) and omega.n > 2:
        doc = {"type": "hpolytope", "n": omega.n, "flags": {"monotone": omega.is_monotone}}
    else:
        cls = classify(_polygon(omega, "classify"))
        doc = {"type": "polygon", "n": 2, "flags": {f: f in cls for f in FLAG_NAMES}}
    _emit(dumps(doc), out)
    return EXIT_OK


def _normalized(omega) -> dict:
    if isinstance(omega, LShape):
        return {"c1_ch": rat(capacities.c1_ch_concave(omega))}
    if isinstance(omega, HPolytope) and omega.n > 2:
        if not omega.is_monotone:
            raise ClassMismatch("normalized capacities need a monotone polytope", "monotone")
        r = simplex_inradius(omega)
        # no cylindrical capacity formula above dimension four
        return {"c1_ch": rat(r), "c_gr": rat(r), "c_z": None}
    poly = _polygon(omega, "caps")
    cls = classify(poly)
    doc = {}
    if "concave" in cls:
        doc["c1_ch"] = rat(capacities.c1_ch_concave(poly))
    if "monotone" in cls or "weakly_convex" in cls:
        report = capacities.viterbo_report(poly)
        doc.update(serialize.report_to_json(report))
    return doc


def cmd_caps(args, out) -> int:
    omega = serialize.parse_domain(args.domain)
    values = None
    if isinstance(omega, MomentPolygon) or (isinstance(omega, HPolytope) and omega.n == 2):
        poly = _polygon(omega, "caps")
        cls = classify(poly)
        if "concave" in cls or "weakly_convex" in cls:
            values = capacity_sequence(poly).upto(args.k_max)
    if values is None and args.format == "csv":
        raise ClassMismatch("ECH capacities need a concave or weakly convex polygon", "concave|weakly_convex")
    if args.svg and values is not None:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(serialize.capacity_plot_svg(values))
    if args.format == "csv":
        rows = [(k, v.numerator, v.denominator) for k, v in enumerate(values)]
        _emit(serialize.to_csv(("k", "numerator", "denominator"), rows), out)
    else:
        doc = {"ech": None if values is None else [rat(v) for v in values]}
        doc.update(_normalized(omega))
        _emit(dumps(doc), out)
    return EXIT_OK


def cmd_weights(args, out) -> int:
    poly = _polygon(serialize.parse_domain(args.domain), "weights")
    cls = classify(poly)
    if "concave" in cls:
        ws = weight_sequence(poly)
        doc = {"kind": "concave", "weights": [rat(w) for w in ws.weights]}
        tris, outer_r = ws.triangles, None
    elif "weakly_convex" in cls:
        dec = outer_decomposition(poly)
        doc = {"kind": "weakly_convex", "r": rat(dec.r), "inner_weights": [rat(w) for w in dec.inner_weights.weights]}
        tris, outer_r = dec.inner_weights.triangles, dec.r
    else:
        raise ClassMismatch("weights need a concave or weakly convex profile", "concave|weakly_convex")
    doc["triangles"] = [
        {"size": rat(t.size), "depth": t.depth, "vertices": [[rat(p.x), rat(p.y)] for p in t.vertices]} for t in tris
    ]
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(serialize.decomposition_svg(poly, tris, outer_r))
    _emit(dumps(doc), out)
    return EXIT_OK


def cmd_orbits(args, out) -> int:
    poly = _polygon(serialize.parse_domain(args.domain), "orbits")
    cap = args.action_cap if args.action_cap is not None else 3 * poly.min_total()
    orbits = reeb.enumerate_orbits(poly, cap)
    verdict, witness = reeb.is_dynamically_convex(poly)
    if args.format == "csv":
        rows = []
        for o in orbits:
            nu = "" if o.normal is None else f"{o.normal.a} {o.normal.b}"
            rows.append((o.kind, f"{o.location.x} {o.location.y}", nu, o.action, o.rotation_number))
        _emit(serialize.to_csv(("kind", "mu", "nu", "action", "rho"), rows), out)
        return EXIT_OK
    doc = {
        "action_cap": rat(cap),
        "axis_rotation_convention": reeb.AXIS_SLOPE_CONVENTION,
        "a_min": rat(reeb.a_min(poly)),
        "dynamically_convex": verdict,
        "witness": None if witness is None else serialize.orbit_to_json(witness),
        "orbits": [serialize.orbit_to_json(o) for o in orbits],
    }
    _emit(dumps(doc), out)
    return EXIT_OK


def cmd_embed(args, out) -> int:
    src = _polygon(serialize.parse_domain(args.src), "embed")
    tgt = _polygon(serialize.parse_domain(args.tgt), "embed")
    v = embed.check_concave_into_weakly_convex(src, tgt, args.k_max)
    _emit(dumps(serialize.verdict_to_json(v)), out)
    return EXIT_OBSTRUCTED if v.status == embed.OBSTRUCTED else EXIT_OK


def cmd_family(args, out) -> int:
    doc = {"family": "xa", "a": rat(args.a)}
    doc.update(serialize.report_to_json(capacities.xa_report(args.a)))
    _emit(dumps(doc), out)
    return EXIT_OK


def _scan_row(a: Fraction):
    r = capacities.xa_report(a)
    return (a, r.c_gr.value, r.c_z.value, r.volume, r.strong_viterbo, r.viterbo)


def cmd_scan(args, out) -> int:
    if args.step <= 0:
        raise DomainParseError("step must be positive", "--step")
    grid = []
    a = args.start
    while a <= args.stop:
        grid.append(a)
        a += args.step
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            rows = list(pool.map(_scan_row, grid))
    else:
        rows = [_scan_row(a) for a in grid]
    header = ("a", "c_gr", "c_z", "vol", "strong_viterbo", "viterbo")
    _emit(serialize.to_csv(header, rows), out)
    return EXIT_OK


def cmd_zk_bound(args, out) -> int:
    _emit(dumps({"k": args.k, "ratio_bound": capacities.zk_ratio_bound(args.k), "exact": False}), out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toricap", description="Capacities of four-dimensional toric domains.")
    sub = p.add_subparsers(dest="command", required=True)
    domain_help = "name:params (e.g. xa:1/4, ellipsoid:1,2), a JSON file, or inline JSON"

    s = sub.add_parser("classify", help="classification flags")
    s.add_argument("domain", help=domain_help)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("caps", help="ECH capacity table and normalized capacities")
    s.add_argument("domain", help=domain_help)
    s.add_argument("--k-max", type=int, default=20)
    s.add_argument("--format", choices=("csv", "json"), default="csv")
    s.add_argument("--svg", help="write a capacity plot")
    s.set_defaults(func=cmd_caps)

    s = sub.add_parser("weights", help="weight sequence and triangle decomposition")
    s.add_argument("domain", help=domain_help)
    s.add_argument("--svg", help="write the decomposition figure")
    s.set_defaults(func=cmd_weights)

    s = sub.add_parser("orbits", help="Reeb orbit table and dynamical convexity")
    s.add_argument("domain", help=domain_help)
    s.add_argument("--action-cap", type=_rational_arg, default=None, help="default: 3 times the inscribed simplex size")
    s.add_argument("--format", choices=("csv", "json"), default="json")
    s.set_defaults(func=cmd_orbits)

    s = sub.add_parser("embed", help="capacity comparison for a concave source and weakly convex target")
    s.add_argument("src", help=domain_help)
    s.add_argument("tgt", help=domain_help)
    s.add_argument("--k-max", type=int, default=embed.DEFAULT_K)
    s.set_defaults(func=cmd_embed)

    s = sub.add_parser("family", help="capacity report for a named family")
    s.add_argument("name", choices=("xa",))
    s.add_argument("--a", type=_rational_arg, required=True)
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("scan", help="Viterbo scan over the X_a family")
    s.add_argument("name", choices=("xa",))
    s.add_argument("--from", dest="start", type=_rational_arg, required=True)
    s.add_argument("--to", dest="stop", type=_rational_arg, required=True)
    s.add_argument("--step", type=_rational_arg, required=True)
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("zk-bound", help="(k/pi) tan(pi/k), approximate")
    s.add_argument("k", type=int)
    s.set_defaults(func=cmd_zk_bound)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except DomainParseError as exc:
        print(f"toricap: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvalidGeometry as exc:
        print(f"toricap: invalid domain: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ClassMismatch as exc:
        print(f"toricap: class mismatch: {exc}", file=sys.stderr)
        return EXIT_CLASS


if __name__ == "__main__":
    sys.exit(main())
