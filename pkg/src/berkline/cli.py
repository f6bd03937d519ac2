"""Command-line front end: text grammars in, JSON or DOT out.

Exit codes: 0 success, 2 argparse-level misuse (unknown subcommand, bad
flags), 3 grammar parse failure, 4 precondition violation.  Parse
failures print a single diagnostic line naming the offending grammar
rule.  All JSON output is deterministic: keys sorted, exact values as
strings or ints, floats only in fields named "approx" which are display
only and never fed back into computations.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from .domains import (
    member,
    parse_domain,
    parse_standard_domain,
    reduce_point,
    shilov_boundary,
    to_domain,
    GENERIC,
)
from .errors import DomainError, ParseError
from .exponents import Magnitude, format_exponent, format_length
from .fields import PAdicField, parse_field
from .hyperelliptic import (
    BranchData,
    GoodReduction,
    Multiplicative,
    cover_skeleton,
    elliptic_reduction,
    fiber_count,
)
from .line import (
    classify,
    components_count,
    convex_hull,
    eval_seminorm,
    format_point,
    parse_point,
    path,
    retract_to_hull,
    seminorm_is_exact,
)
from .polynomials import parse_poly
from .zspectrum import (
    RealMag,
    format_zpoint,
    nadic_norm,
    nadic_spectral,
    parse_zpoint,
    zpoint_eval,
)


def _frac_json(q: Fraction):
    return int(q) if q.denominator == 1 else str(q)


def _mag_json(mag: Magnitude, field=None) -> dict:
    if mag.is_zero:
        return {"zero": True}
    out = {"zero": False, "exponent": format_exponent(mag.exponent)}
    if isinstance(field, PAdicField):
        out["approx"] = float(field.p) ** (-mag.exponent.to_float())
    return out


def _realmag_json(v: RealMag) -> dict:
    if v.is_zero:
        return {"zero": True}
    return {
        "base": _frac_json(v.base),
        "exp": _frac_json(v.exp),
        "approx": v.to_float(),
    }


def _emit(payload: dict) -> None:
    print(json.dumps(payload, sort_keys=True))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="berkline",
        description="Exact computations on the non-archimedean line of discs",
    )
    sub = parser.add_subparsers(dest="command")

    def with_field(p):
        p.add_argument("--field", required=True, help="padic:<p> | puiseux:<B> | trivial:<B>")
        p.add_argument("--json", action="store_true", help="accepted for symmetry; output is JSON already")
        return p

    p = with_field(sub.add_parser("classify", help="point type and invariants"))
    p.add_argument("point")

    p = with_field(sub.add_parser("eval", help="apply a point's seminorm to a polynomial"))
    p.add_argument("--poly", required=True)
    p.add_argument("point")

    p = with_field(sub.add_parser("path", help="the unique arc between two points"))
    p.add_argument("start")
    p.add_argument("end")

    p = with_field(sub.add_parser("hull", help="convex hull of finitely many points"))
    p.add_argument("--dot", action="store_true")
    p.add_argument("points", nargs="+")

    p = with_field(sub.add_parser("member", help="affinoid membership test"))
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--domain")
    group.add_argument("--standard")
    p.add_argument("point")

    p = with_field(sub.add_parser("shilov", help="Shilov boundary of a standard shape"))
    p.add_argument("--standard", required=True)

    p = with_field(sub.add_parser("reduce", help="reduction of a unit-disc point"))
    p.add_argument("point")

    p = sub.add_parser("mspecz", help="evaluate a real semivaluation on integers")
    p.add_argument("--point", required=True)
    p.add_argument("--values", required=True, help="comma-separated integers")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("nadic", help="n-adic norm and spectral seminorm of a rational")
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--x", required=True)
    p.add_argument("--json", action="store_true")

    p = with_field(sub.add_parser("elliptic", help="reduction type from the Legendre parameter"))
    p.add_argument("--lambda", dest="lam", required=True)

    p = with_field(sub.add_parser("hyper", help="skeleton and genus of a double cover"))
    p.add_argument("--roots", required=True, help="comma-separated field elements")
    p.add_argument("--lc", help="leading coefficient (default 1)")
    p.add_argument("--dot", action="store_true")
    p.add_argument("--strict-squares", action="store_true")

    p = with_field(sub.add_parser("retract", help="retraction onto a hull"))
    p.add_argument("--hull-point", action="append", required=True)
    p.add_argument("point")

    return parser


def _cmd_classify(args) -> None:
    field = parse_field(args.field)
    x = parse_point(field, args.point)
    pc = classify(x)
    _emit(
        {
            "status": "ok",
            "type": pc.type,
            "E": pc.E,
            "F": pc.F,
            "components": components_count(x).value,
        }
    )


def _cmd_eval(args) -> None:
    field = parse_field(args.field)
    x = parse_point(field, args.point)
    f = parse_poly(field, args.poly)
    _emit(
        {
            "status": "ok",
            "value": _mag_json(eval_seminorm(f, x), field),
            "exact": seminorm_is_exact(x),
        }
    )


def _cmd_path(args) -> None:
    field = parse_field(args.field)
    x = parse_point(field, args.start)
    y = parse_point(field, args.end)
    p = path(x, y)
    _emit(
        {
            "status": "ok",
            "segments": [
                {
                    "center": field.format_element(s.center),
                    "from": format_length(s.e_from),
                    "to": format_length(s.e_to),
                    "length": format_length(s.length),
                }
                for s in p.segments
            ],
            "length": format_length(p.length),
        }
    )


def _graph_json(g) -> dict:
    return {
        "vertices": [
            {
                "id": v.id,
                "point": v.label,
                "type": v.ptype,
                "genus": v.genus,
                "marked": v.id in g.marked,
            }
            for v in g.vertices
        ],
        "edges": [
            {"u": e.u, "v": e.v, "len": format_length(e.length)} for e in g.edges
        ],
    }


def _cmd_hull(args) -> None:
    field = parse_field(args.field)
    pts = [parse_point(field, t) for t in args.points]
    g = convex_hull(pts)
    if args.dot:
        print(g.to_dot("hull"))
        return
    payload = {"status": "ok"}
    payload.update(_graph_json(g))
    _emit(payload)


def _cmd_member(args) -> None:
    field = parse_field(args.field)
    x = parse_point(field, args.point)
    if args.standard is not None:
        sd = parse_standard_domain(field, args.standard)
        d = to_domain(sd)
    else:
        d = parse_domain(field, args.domain)
    _emit(
        {
            "status": "ok",
            "member": member(x, d),
            "exact": seminorm_is_exact(x),
            "class": d.classify().value,
        }
    )


def _cmd_shilov(args) -> None:
    field = parse_field(args.field)
    sd = parse_standard_domain(field, args.standard)
    _emit(
        {
            "status": "ok",
            "points": [format_point(b) for b in shilov_boundary(sd)],
        }
    )


def _cmd_reduce(args) -> None:
    field = parse_field(args.field)
    x = parse_point(field, args.point)
    r = reduce_point(x)
    if r is GENERIC:
        _emit({"status": "ok", "generic": True})
    else:
        _emit(
            {
                "status": "ok",
                "generic": False,
                "residue": field.residue_field.format(r),
            }
        )


def _cmd_mspecz(args) -> None:
    zp = parse_zpoint(args.point)
    values = []
    for chunk in args.values.split(","):
        chunk = chunk.strip()
        try:
            values.append(int(chunk))
        except ValueError:
            raise ParseError("integer", chunk) from None
    _emit(
        {
            "status": "ok",
            "point": format_zpoint(zp),
            "values": [
                dict(m=m, **_realmag_json(zpoint_eval(zp, m))) for m in values
            ],
        }
    )


def _cmd_nadic(args) -> None:
    try:
        x = Fraction(args.x)
    except (ValueError, ZeroDivisionError):
        raise ParseError("rational", args.x) from None
    _emit(
        {
            "status": "ok",
            "norm": _realmag_json(nadic_norm(x, args.n)),
            "spectral": _realmag_json(nadic_spectral(x, args.n)),
        }
    )


def _cmd_elliptic(args) -> None:
    field = parse_field(args.field)
    lam = field.parse_element(args.lam)
    red = elliptic_reduction(field, lam)
    if isinstance(red, Multiplicative):
        _emit(
            {
                "status": "ok",
                "type": "multiplicative",
                "cycle_exponent": format_exponent(red.cycle_exponent),
                "via": red.via,
            }
        )
    else:
        rf = field.residue_field
        _emit(
            {
                "status": "ok",
                "type": "good",
                "lambda_residue": rf.format(red.lambda_residue),
                "j_residue": rf.format(red.j_residue),
            }
        )


def _cmd_hyper(args) -> None:
    field = parse_field(args.field)
    roots = [field.parse_element(t) for t in args.roots.split(",")]
    lead = field.parse_element(args.lc) if args.lc is not None else None
    bd = BranchData.from_roots(field, roots, lead)
    cs = cover_skeleton(bd)
    if args.dot:
        print(cs.base.to_dot("cover"))
        return
    payload = {
        "status": "ok",
        "betti": cs.betti,
        "total_genus": cs.total_genus,
        "vertex_genera": list(cs.vertex_genus),
        "fibers": list(cs.vertex_fibers),
        "splits": list(cs.edge_split),
    }
    payload.update(_graph_json(cs.base))
    if args.strict_squares:
        strict = []
        for v in cs.base.vertices:
            if v.point is None or classify(v.point).type not in (2, 3):
                strict.append(None)
            else:
                strict.append(fiber_count(bd, v.point, strict_squares=True))
        payload["strict_fibers"] = strict
    _emit(payload)


def _cmd_retract(args) -> None:
    field = parse_field(args.field)
    hull_pts = [parse_point(field, t) for t in args.hull_point]
    x = parse_point(field, args.point)
    g = convex_hull(hull_pts)
    _emit({"status": "ok", "point": format_point(retract_to_hull(x, g))})


_COMMANDS = {
    "classify": _cmd_classify,
    "eval": _cmd_eval,
    "path": _cmd_path,
    "hull": _cmd_hull,
    "member": _cmd_member,
    "shilov": _cmd_shilov,
    "reduce": _cmd_reduce,
    "mspecz": _cmd_mspecz,
    "nadic": _cmd_nadic,
    "elliptic": _cmd_elliptic,
    "hyper": _cmd_hyper,
    "retract": _cmd_retract,
}


def run(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error [{exc.rule}]: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return 4
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
