"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import bqa, classifier, cluster, constructions, nakayama, polygon, verify


class UsageError(Exception):
    pass


def _emit(args, payload, text: str) -> None:
    if args.json:
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


def _table(rows: list[list], header: list[str]) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in cells)


RECORD_COLUMNS = ["n", "loewy", "d", "N", "t", "drf", "via"]


def _record_row(r: classifier.ClassRecord) -> list:
    return [r.n, r.loewy, r.d, r.N, r.t, str(r.drf).lower(), r.via]


def cmd_classify(args) -> int:
    r = classifier.is_dRF_formula(args.n, args.loewy, args.d)
    text = _table([_record_row(r)], RECORD_COLUMNS)
    if r.outside_hypothesis:
        text += "\n(Loewy length 1: semisimple, outside the range where the criterion is proved)"
    _emit(args, r.to_json(), text)
    return 0


def cmd_classify_table(args) -> int:
    records = classifier.rf_table(args.n_max, args.loewy_max, args.d_max)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(RECORD_COLUMNS)
        w.writerows(_record_row(r) for r in records)
        sys.stdout.write(buf.getvalue())
    elif args.format == "json" or args.json:
        print(json.dumps([r.to_json() for r in records], indent=2, sort_keys=True))
    else:
        print(_table([_record_row(r) for r in records], RECORD_COLUMNS))
    return 0


def cmd_brute(args) -> int:
    sets = cluster.all_dCT(args.n, args.loewy, args.d)
    witness = sets[0] if sets else None
    payload = {
        "n": args.n, "loewy": args.loewy, "d": args.d, "drf": bool(sets),
        "witness": None if witness is None else [M.to_json() for M in witness],
        "count": len(sets),
    }
    if args.list_ct:
        payload["ct_sets"] = [[M.to_json() for M in U] for U in sets]
    lines = [f"Lambda({args.n},{args.loewy}) d={args.d}: "
             f"{'d-representation-finite' if sets else 'not d-representation-finite'}"
             f" ({len(sets)} basic d-CT modules)"]
    if witness is not None:
        lines.append("witness: " + " ".join(str(M) for M in witness))
    if args.list_ct:
        lines += ["  " + " ".join(str(M) for M in U) for U in sets]
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_angulations(args) -> int:
    ctx = polygon.PolygonCtx(args.d, args.pieces)
    if args.invariant is not None:
        ok, witness = polygon.invariant_angulation_exists(ctx, args.invariant)
        payload = {"d": args.d, "pieces": args.pieces, "N": ctx.N, "rotation": args.invariant,
                   "exists": ok, "witness": None if witness is None else [list(x) for x in witness]}
        text = f"N={ctx.N}: rho^{args.invariant}-invariant angulation " + (
            f"exists: {list(witness)}" if ok else "does not exist")
        _emit(args, payload, text)
        return 0
    angs = polygon.enumerate_angulations(ctx)
    payload = {"d": args.d, "pieces": args.pieces, "N": ctx.N, "count": len(angs)}
    text = f"N={ctx.N}: {len(angs)} angulations into {args.d + 1}-gons"
    if args.list:
        payload["angulations"] = [[list(x) for x in A] for A in angs]
        text += "\n" + "\n".join(" ".join(f"[{x},{y}]" for x, y in A) or "(empty)" for A in angs)
    _emit(args, payload, text)
    return 0


def _report_text(rep: constructions.ConstructionReport) -> str:
    out = [f"{rep.kind}: " + ", ".join(f"{k}={v}" for k, v in rep.params.items())]
    for k, v in rep.extra.items():
        out.append(f"  {k} = {v}")
    if rep.summands is not None:
        out.append(f"  summands = {rep.summands}")
    if rep.nakayama is not None:
        out.append(f"  Nakayama algebra Lambda({rep.nakayama.n},{rep.nakayama.loewy})")
    if rep.verdict is not None:
        out.append(f"  {rep.verdict.d}-representation-finite: {rep.verdict.drf} ({rep.verdict.via})")
    return "\n".join(out)


def cmd_construct(args) -> int:
    kind = args.kind
    if kind == "fraccy":
        p = constructions.fraccy_params(args.a, args.b, args.d, args.ell)
        rep = constructions.ConstructionReport(
            "fraccy", {"a": args.a, "b": args.b, "d": args.d, "ell": args.ell},
            extra={"g": p.g, "n": p.n_trivext, "orbit_reps": p.orbit_reps})
        if args.p is not None:
            rep.summands = p.summand_count(args.p)
    elif kind == "trivext":
        rep = constructions.ConstructionReport(
            "trivext", {"p": args.p, "m": args.m, "d": args.d, "ell": args.ell},
            summands=constructions.trivext_count(args.p, args.m, args.d, args.ell),
            extra={"n": args.d * args.ell})
        if args.p == 1 and args.m == 1:
            n = args.d * args.ell
            rep.nakayama = nakayama.NakAlgebra(n, 2)
            rep.verdict = classifier.is_dRF_formula(n, 2, args.d)
    elif kind == "preproj":
        rep = constructions.preproj_nakayama(args.n)
    elif kind == "tubular":
        t = tuple(int(x) for x in args.type.replace("(", "").replace(")", "").split(","))
        if t not in constructions.TUBULAR_WEIGHTS:
            raise UsageError(f"unknown tubular type {args.type}")
        rep = constructions.ConstructionReport(
            "tubular", {"type": list(t), "d": args.d},
            extra={"n": constructions.tubular_n(t, args.d)})
    elif kind == "wild":
        rep = constructions.ConstructionReport(
            "wild", {"m": args.m, "d": args.d, "ell": args.ell},
            extra={"n": constructions.wild_family_n(args.m, args.d, args.ell)})
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(kind)
    _emit(args, rep.to_json(), _report_text(rep))
    return 0


def _load_json(value: str):
    if value.startswith("@"):
        value = Path(value[1:]).read_text()
    try:
        return json.loads(value)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed JSON: {exc}") from exc


def cmd_ext(args) -> int:
    alg = _load_json(args.algebra)
    x, y = _load_json(args.x), _load_json(args.y)
    if alg.get("type") == "nakayama":
        A = nakayama.NakAlgebra.from_json(alg)
        X, Y = nakayama.NakModule.from_json(x), nakayama.NakModule.from_json(y)
        value = bqa.ext_dim(nakayama.to_representation(A, X), nakayama.to_representation(A, Y),
                            args.i)
    else:
        A = bqa.algebra_from_json(alg)
        value = bqa.ext_dim(bqa.rep_from_json(A, x), bqa.rep_from_json(A, y), args.i)
    _emit(args, {"i": args.i, "ext_dim": value}, str(value))
    return 0


def cmd_verify(args) -> int:
    suites = args.suite or list(verify.SUITES)
    limits = {"n_max": args.nmax, "loewy_max": args.loewy_max, "d_max": args.dmax,
              "N_max": args.N_max, "max_i": args.max_i}
    report = verify.run(suites, jobs=args.jobs, **limits)
    lines = []
    for s in report.suites:
        status = "PASS" if s.passed else "FAIL"
        lines.append(f"{status}  {s.name:<14} {s.checks:>7} checks  {s.seconds:8.2f}s")
        if s.counterexample is not None:
            lines.append(f"      counterexample: {json.dumps(s.counterexample, sort_keys=True)}")
    _emit(args, report.to_json(), "\n".join(lines))
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON output")
    common.add_argument("--jobs", type=int, default=1, help="worker processes")
    common.add_argument("--seedless", action="store_true",
                        help="accepted for compatibility; every run is deterministic")

    parser = argparse.ArgumentParser(
        prog="higher-nakayama",
        description="d-representation-finiteness of self-injective Nakayama algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", parents=[common], help="closed-form verdict for one algebra")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--loewy", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("classify-table", parents=[common], help="verdicts over a grid")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--loewy-max", type=int, required=True)
    p.add_argument("--d-max", type=int, required=True)
    p.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p.set_defaults(func=cmd_classify_table)

    p = sub.add_parser("brute-nakayama", parents=[common], help="exhaustive d-CT search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--loewy", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--list-ct", action="store_true")
    p.set_defaults(func=cmd_brute)

    p = sub.add_parser("angulations", parents=[common], help="(d+1)-angulations of the N-gon")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--pieces", type=int, required=True)
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--count", action="store_true")
    mode.add_argument("--list", action="store_true")
    mode.add_argument("--invariant", type=int, metavar="M")
    p.set_defaults(func=cmd_angulations)

    p = sub.add_parser("construct", help="construction arithmetic")
    csub = p.add_subparsers(dest="kind", required=True)
    c = csub.add_parser("fraccy", parents=[common])
    for flag in ("--a", "--b", "--d", "--ell"):
        c.add_argument(flag, type=int, required=True)
    c.add_argument("--p", type=int)
    c = csub.add_parser("trivext", parents=[common])
    for flag in ("--p", "--m", "--d", "--ell"):
        c.add_argument(flag, type=int, required=True)
    c = csub.add_parser("preproj", parents=[common])
    c.add_argument("--n", type=int, required=True)
    c = csub.add_parser("tubular", parents=[common])
    c.add_argument("--type", required=True, help="weight type, e.g. 3,3,3")
    c.add_argument("--d", type=int, required=True)
    c = csub.add_parser("wild", parents=[common])
    for flag in ("--m", "--d", "--ell"):
        c.add_argument(flag, type=int, required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("ext", parents=[common], help="dim Ext^i(X, Y) via the generic engine")
    p.add_argument("--algebra", required=True, help="algebra JSON, or @file")
    p.add_argument("--x", required=True, help="module JSON, or @file")
    p.add_argument("--y", required=True, help="module JSON, or @file")
    p.add_argument("--i", type=int, default=1)
    p.set_defaults(func=cmd_ext)

    p = sub.add_parser("verify", parents=[common], help="run the cross-validation suites")
    p.add_argument("--suite", action="append", choices=verify.SUITES)
    p.add_argument("--nmax", type=int)
    p.add_argument("--loewy-max", type=int)
    p.add_argument("--dmax", type=int)
    p.add_argument("--N-max", dest="N_max", type=int)
    p.add_argument("--max-i", type=int)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "jobs", 1) < 1:
        parser.error("--jobs must be positive")
    try:
        return args.func(args)
    except (UsageError, ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
