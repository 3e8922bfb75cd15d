"""Command line front end.

    knotquandle present   --diagram k.json
    knotquandle satellite --pattern p.json --companion c.json --emit delta
    knotquandle alexander --diagram k.json --delta 1
    knotquandle color     --diagram k.json --affine 3,2
    knotquandle finiteq   --table q.json --report

``--json`` (before or after the subcommand) switches any command to a single
JSON object on stdout.  Module errors exit with status 1 and a structured
message on stderr; usage errors exit with status 2.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import alexander, coloring, finiteq, satellite
from .diagram import load_diagram
from .errors import KnotQuandleError
from .lmatrix import LMatrix
from .presentation import close_in_sphere, present


def _read(path: str) -> str:
    with open(path) as fh:
        return fh.read()


def _pair(text: str) -> tuple[int, int]:
    try:
        n, m = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n,m, got {text!r}") from None
    return n, m


# ---------------------------------------------------------------------------
# subcommands; each returns (text, json object)

def cmd_present(args):
    p = present(load_diagram(args.diagram))
    if args.close:
        p = close_in_sphere(p)
    return p.to_text(), p.to_json_obj()


def cmd_satellite(args):
    spec = satellite.SatelliteSpec(
        load_diagram(args.pattern),
        load_diagram(args.companion),
        meridian_arc=args.meridian_arc,
        longitude_arc=args.longitude_arc,
        preferred_framing=args.preferred_framing,
    )
    if args.emit == "presentation":
        p = satellite.satellite_presentation(spec)
        return p.to_text(), p.to_json_obj()
    M = satellite.satellite_alexander_matrix(spec)
    if args.emit == "matrix":
        return str(M), M.to_json_obj()
    d = alexander.delta(M, 1)
    return str(d), {"delta": 1, "polynomial": str(d), "winding_number": spec.winding_number}


def _source(args):
    if args.matrix:
        return LMatrix.from_json(_read(args.matrix))
    return alexander.linearize(present(load_diagram(args.diagram)))


def cmd_alexander(args):
    M = _source(args)
    if args.factors:
        fs = alexander.module_factors(M)
        text = "\n".join(str(f) + ("" if ok else "  (inexact)") for f, ok in fs) or "0"
        return text, {"factors": [{"polynomial": str(f), "exact": ok} for f, ok in fs]}
    if args.colorability:
        v = alexander.affine_colorability(M)
        return v, {"colorability": v}
    if args.target:
        t = alexander.coloring_target(M)
        text = f"quandle: {t.quandle}\nj: {t.j}\nmultiplier: {t.multiplier}\nideal: {t.ideal}"
        return text, t.to_json_obj()
    if args.show_matrix:
        return str(M), M.to_json_obj()
    d = alexander.delta(M, args.delta)
    return str(d), {"delta": args.delta, "polynomial": str(d)}


def cmd_color(args):
    d = load_diagram(args.diagram)
    if args.affine:
        n, m = args.affine
        obj = coloring.affine_colorings(d, n, m).to_json_obj()
    else:
        Q = finiteq.quandle_from_json(_read(args.table))
        count = 0
        sample = None
        for c in coloring.iter_colorings(d, Q):
            count += 1
            if sample is None and len(set(c.values())) > 1:
                sample = c
        obj = {
            "count": count,
            "nontrivial": sample is not None,
            "sample": None if sample is None else {str(k): v for k, v in sample.items()},
        }
    return json.dumps(obj, sort_keys=True), obj


def cmd_finiteq(args):
    if args.affine:
        Q = finiteq.affine_build(*args.affine)
    else:
        Q = finiteq.quandle_from_json(_read(args.table))
    if not args.report:
        return json.dumps(Q.to_json_obj()), Q.to_json_obj()
    r = finiteq.report(Q)
    lines = [
        f"axioms: {r['axioms']}",
        f"|Inn|: {r['inn_order']}",
        f"|Dis|: {r['dis_order']}",
        "orbits: " + " ".join("{" + ",".join(map(str, o)) + "}" for o in r["orbits"]),
        f"connected: {str(r['connected']).lower()}",
        f"abelian: {str(r['abelian']).lower()}",
    ]
    if r["gamma_quotient"] is None:
        lines.append("gamma-quotient: n/a (not connected)")
    else:
        lines.append("gamma-classes: " + " ".join(
            "{" + ",".join(map(str, c)) + "}" for c in r["gamma_classes"]))
        lines.append("gamma-quotient:")
        lines += ["  " + " ".join(map(str, row)) for row in r["gamma_quotient"]]
    return "\n".join(lines), r


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit one JSON object on stdout")

    parser = argparse.ArgumentParser(prog="knotquandle", parents=[common],
                                     description="Quandle presentations and Alexander invariants of knots.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("present", parents=[common], help="quandle presentation of a diagram")
    p.add_argument("--diagram", required=True)
    p.add_argument("--close", action="store_true", help="close a solid-torus presentation in S^3")
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("satellite", parents=[common], help="satellite of a pattern and companion")
    p.add_argument("--pattern", required=True)
    p.add_argument("--companion", required=True)
    p.add_argument("--meridian-arc", type=int, default=1)
    p.add_argument("--longitude-arc", type=int, default=None,
                   help="arc where the longitude walk starts (default: the meridian arc)")
    p.add_argument("--preferred-framing", action="store_true")
    p.add_argument("--emit", choices=("presentation", "matrix", "delta"), default="presentation")
    p.set_defaults(func=cmd_satellite)

    p = sub.add_parser("alexander", parents=[common], help="Alexander matrix invariants")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--diagram")
    src.add_argument("--matrix")
    what = p.add_mutually_exclusive_group()
    what.add_argument("--delta", type=int, default=1, metavar="N")
    what.add_argument("--factors", action="store_true")
    what.add_argument("--colorability", action="store_true")
    what.add_argument("--target", action="store_true")
    what.add_argument("--show-matrix", action="store_true")
    p.set_defaults(func=cmd_alexander)

    p = sub.add_parser("color", parents=[common], help="count quandle colorings")
    p.add_argument("--diagram", required=True)
    q = p.add_mutually_exclusive_group(required=True)
    q.add_argument("--affine", type=_pair, metavar="N,M")
    q.add_argument("--table")
    p.set_defaults(func=cmd_color)

    p = sub.add_parser("finiteq", parents=[common], help="finite quandle report")
    q = p.add_mutually_exclusive_group(required=True)
    q.add_argument("--table")
    q.add_argument("--affine", type=_pair, metavar="N,M")
    p.add_argument("--report", action="store_true")
    p.set_defaults(func=cmd_finiteq)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    as_json = getattr(args, "json", False)
    try:
        text, obj = args.func(args)
    except (KnotQuandleError, OSError, ValueError) as exc:
        err = {"error": type(exc).__name__, "message": str(exc)}
        if as_json:
            print(json.dumps(err, sort_keys=True))
        print(f"error: {err['error']}: {err['message']}", file=sys.stderr)
        return 1
    if as_json:
        print(json.dumps(obj, sort_keys=True))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
