"""Command-line interface.

Subcommands wrap the library modules one-to-one and emit either a
human-readable text report or deterministic JSON (choose with --format or
the TAUTCALC_FORMAT environment variable).  Exit codes: 0 when every check
in the report passes, 1 when some check fails, 2 for bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from importlib import resources

from . import holonomy, homology, jsonio, penner, polytope, sutured

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_INPUT_ERROR = 2


def _default_format() -> str:
    fmt = os.environ.get("TAUTCALC_FORMAT", "text")
    return fmt if fmt in ("text", "json") else "text"


def _emit(report: dict, args) -> int:
    checks = report.get("checks", [])
    ok = all(c["pass"] for c in checks)
    report["status"] = "PASS" if ok else "FAIL"
    if args.format == "json":
        text = json.dumps(report, indent=2)
    else:
        text = _render_text(report)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK if ok else EXIT_CHECK_FAILED


def _render_text(report: dict, indent: int = 0) -> str:
    lines = []
    pad = "  " * indent
    for key, value in report.items():
        if key == "checks":
            for c in value:
                mark = "PASS" if c["pass"] else "FAIL"
                lines.append(f"{pad}[{mark}] {c['name']}")
        elif isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_render_text(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.append(_render_text(item, indent + 1))
                lines.append(f"{pad}  -")
            lines.pop()
        elif isinstance(value, list) and value and isinstance(value[0], list):
            lines.append(f"{pad}{key}:")
            for row in value:
                lines.append(f"{pad}  " + " ".join(f"{e:>5}" for e in row))
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(lines)


# -- subcommands ----------------------------------------------------------------


def cmd_vmatrix(args) -> int:
    m = homology.extended_action_matrix(args.genus)
    diff = m.minus_identity()
    det_abs = abs(diff.det())
    target = args.genus + 1
    report = {
        "command": "vmatrix",
        "genus": args.genus,
        "matrix": jsonio.matrix_to_json(m),
        "matrix_minus_identity": jsonio.matrix_to_json(diff),
        "det_abs": jsonio.fmt_int(det_abs),
        "target": jsonio.fmt_int(target),
        "checks": [
            {"name": "abs-det-minus-identity-equals-genus-plus-one", "pass": det_abs == target}
        ],
    }
    return _emit(report, args)


def cmd_candidates(args) -> int:
    if args.spec:
        with open(args.spec, "r", encoding="utf-8") as fh:
            spec = jsonio.norm_spec_from_json(json.load(fh), "spec")
    else:
        spec = polytope.NormSpec.surgery_family(args.genus)
    ball, dual, classified = polytope.candidate_points(spec, args.genus)
    tip = 2 * args.genus - 2
    flagged = [p for p in classified if p.counterexample]
    vertex_ok = all(
        p.realizability is polytope.Realizability.REALIZABLE_VERTEX
        for p in classified
        if p.location is polytope.Location.BOUNDARY_VERTEX
    )
    report = {
        "command": "candidates",
        "genus": args.genus,
        "norm_spec": jsonio.norm_spec_to_json(spec),
        "ball": jsonio.polytope_to_json(ball),
        "dual_ball": jsonio.polytope_to_json(dual),
        "candidates": [jsonio.candidate_to_json(p) for p in classified],
        "checks": [
            {
                "name": f"point (0, {-tip}) flagged as the non-realizable candidate",
                "pass": any(p.coords == (0, -tip) for p in flagged),
            },
            {"name": "all dual-ball vertices classified realizable", "pass": vertex_ok},
        ],
    }
    return _emit(report, args)


def _bundled_fixture(name: str) -> str:
    return resources.files("tautcalc").joinpath("data",name).read_text(encoding="utf-8")


def cmd_penner(args) -> int:
    if args.input:
        with open(args.input, "r", encoding="utf-8") as fh:
            raw = fh.read()
    else:
        raw = _bundled_fixture("genus3_curve_system.json")
    doc = json.loads(raw)
    system = jsonio.curve_system_from_json(doc, "input")
    word = jsonio.word_from_json(doc.get("word", []), "input.word")
    report_obj = penner.validate_word(word, system)
    action = homology.word_action(word, system.generator_map())
    b2 = homology.mapping_torus_b2(action)
    trivial = homology.fixed_homology_trivial(action)
    report = {
        "command": "penner",
        "genus": system.genus,
        "report": jsonio.penner_report_to_json(report_obj),
        "action_matrix": jsonio.matrix_to_json(action),
        "mapping_torus_b2": b2,
        "fixed_homology_trivial": trivial,
        "checks": [
            {"name": "word is a valid opposite-twist word", "pass": bool(report_obj.word_valid)},
            {"name": "no nonzero fixed homology class", "pass": trivial},
        ],
    }
    return _emit(report, args)


def cmd_sutured(args) -> int:
    if args.sutured_command == "chi":
        s = sutured.CorneredSurface(args.base_chi, args.convex, args.concave)
        chi = sutured.sutured_chi(s)
        report = {
            "command": "sutured chi",
            "base_chi": args.base_chi,
            "convex": args.convex,
            "concave": args.concave,
            "chi": jsonio.fmt_frac(chi),
            "checks": [],
        }
    elif args.sutured_command == "core-disk":
        torus = sutured.SuturedSolidTorus(args.wraps, args.sutures)
        disk = sutured.core_disk(torus)
        chi = sutured.sutured_chi(disk)
        report = {
            "command": "sutured core-disk",
            "longitude_wraps": args.wraps,
            "suture_count": args.sutures,
            "convex_corners": disk.convex,
            "chi": jsonio.fmt_frac(chi),
            "checks": [],
        }
    elif args.sutured_command == "pairing":
        with open(args.input, "r", encoding="utf-8") as fh:
            doc = json.load(fh)
        tangencies = jsonio.tangencies_from_json(doc, "input")
        pairing = sutured.euler_pairing(tangencies)
        chi = sutured.poincare_hopf_chi(tangencies)
        report = {
            "command": "sutured pairing",
            "tangencies": jsonio.tangencies_to_json(tangencies),
            "euler_pairing": pairing,
            "poincare_hopf_chi": chi,
            "checks": [{"name": "pairing and chi share parity", "pass": (pairing - chi) % 2 == 0}],
        }
        saddle_only = all(t.kind is sutured.TangencyKind.SADDLE for t in tangencies)
        if saddle_only:
            report["fully_marked"] = sutured.is_fully_marked(tangencies)
    else:  # witness
        w = sutured.novikov_witness(args.k, args.m)
        report = {
            "command": "sutured witness",
            "witness": jsonio.witness_to_json(w),
            "checks": [{"name": "witness terminates at exponent zero", "pass": w.final_exponent == 0}],
        }
    return _emit(report, args)


def cmd_holonomy(args) -> int:
    if args.u or args.v:
        if not (args.u and args.v):
            raise ValueError("provide both --u and --v, or neither")
        with open(args.u, "r", encoding="utf-8") as fh:
            u = jsonio.pl_from_json(json.load(fh), "u")
        with open(args.v, "r", encoding="utf-8") as fh:
            v = jsonio.pl_from_json(json.load(fh), "v")
    else:
        u, v = holonomy.bundled_shifts()
    tiles = max(8, args.tiles)
    per_tile = max(1, -(-args.samples // (2 * tiles)))
    _, witness = holonomy.solve_conjugacy(u, v, args.case, tiles, per_tile)
    report = {
        "command": "holonomy tau",
        "case": witness.case,
        "expression": witness.expression,
        "u": jsonio.pl_to_json(u),
        "v": jsonio.pl_to_json(v),
        "tiles_per_side": witness.tiles_per_side,
        "samples": [
            {"point": jsonio.fmt_frac(c.point), "pass": c.passed} for c in witness.checks
        ],
        "checks": [
            {"name": "conjugacy identity exact at all samples", "pass": witness.all_passed},
            {
                "name": f"at least {args.samples} sample points",
                "pass": len(witness.checks) >= args.samples,
            },
        ],
    }
    return _emit(report, args)


# -- parser ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tautcalc",
        description="Exact twist-action, norm-polytope, sutured and holonomy calculators",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=_default_format())
    common.add_argument("--output", help="write the report to this path instead of stdout")

    p = sub.add_parser("vmatrix", parents=[common], help="extended twist action matrix and its determinant law")
    p.add_argument("--genus", type=int, required=True)
    p.set_defaults(func=cmd_vmatrix)

    p = sub.add_parser("candidates", parents=[common], help="dual-ball integral points and realizability")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--spec", help="JSON file with norm values and chi (default: the genus-g family)")
    p.set_defaults(func=cmd_candidates)

    p = sub.add_parser("penner", parents=[common], help="validate a twist word over a curve system")
    p.add_argument("--input", help="JSON file with the curve system and word (default: bundled genus-3 system)")
    p.set_defaults(func=cmd_penner)

    p = sub.add_parser("sutured", parents=[], help="sutured Euler characteristic and witnesses")
    ssub = p.add_subparsers(dest="sutured_command", required=True)
    q = ssub.add_parser("chi", parents=[common])
    q.add_argument("--base-chi", type=int, required=True, dest="base_chi")
    q.add_argument("--convex", type=int, default=0)
    q.add_argument("--concave", type=int, default=0)
    q = ssub.add_parser("core-disk", parents=[common])
    q.add_argument("--wraps", type=int, required=True, help="longitudinal wraps of each suture")
    q.add_argument("--sutures", type=int, default=2)
    q = ssub.add_parser("pairing", parents=[common])
    q.add_argument("--input", required=True, help="JSON file with a tangency list")
    q = ssub.add_parser("witness", parents=[common])
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_sutured)

    p = sub.add_parser("holonomy", parents=[], help="interval holonomy constructions")
    hsub = p.add_subparsers(dest="holonomy_command", required=True)
    q = hsub.add_parser("tau", parents=[common])
    q.add_argument("--case", choices=tuple("abcdef"), required=True)
    q.add_argument("--samples", type=int, default=64, help="minimum number of sample points")
    q.add_argument("--tiles", type=int, default=8, help="tiles per side to sample across")
    q.add_argument("--u", help="JSON file for the first map (default: bundled shift)")
    q.add_argument("--v", help="JSON file for the second map (default: bundled shift)")
    p.set_defaults(func=cmd_holonomy)

    return parser


def _validate(args, parser: argparse.ArgumentParser):
    if args.command == "vmatrix" and args.genus < 6:
        parser.error("vmatrix requires --genus >= 6")
    if args.command == "candidates" and args.genus < 3:
        parser.error("candidates requires --genus >= 3")
    if args.command == "sutured" and args.sutured_command == "core-disk" and args.wraps < 1:
        parser.error("core-disk requires --wraps >= 1")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _validate(args, parser)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
