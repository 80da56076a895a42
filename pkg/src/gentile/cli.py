"""Batch command-line front end.

Subcommands: audit, spectrum, coherent, su2, eval, arcsin-audit.
Exit codes: 0 success (including documented printed-relation FAILs that
the oracles agree on), 1 configuration or parse errors, 2 contract
violations (pipelines disagreeing with each other or with tolerance).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from .audit import audit_crosscheck, eval_expr, run_full_audit
from .coherent import (LambdaChoice, build_coherent, compare_closed_form,
                       eigenstate_residual, normalization_poly)
from .errors import (DegenerateNodes, GentileError, InconsistentVerdict,
                     OutOfRange, ParseError)
from .linalg import DEFAULT_TOL, max_abs_diff
from .oscillator import spectrum_crosscheck
from .rep import build_rep, number_from_arcsin
from .su2 import (DiagonalChoice, e010_residual, solve_representation,
                  verify_representation)
from .symbolic import normal_order, parse

DEFAULT_SWEEP = "1..24"

LAMBDA_BY_NAME = {
    "plus": LambdaChoice.ROOT_OF_UNITY_PLUS,
    "minus": LambdaChoice.ROOT_OF_UNITY_MINUS,
    "alternating": LambdaChoice.ALTERNATING,
}


def _f17(x: float) -> float:
    """Round-trip a float through its 17-significant-digit decimal form."""
    return float(format(float(x), ".17g"))


def _jsonable(obj):
    """Recursively convert report values to deterministic JSON types."""
    if isinstance(obj, dict):
        return {k: _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    if isinstance(obj, complex):
        return [_f17(obj.real), _f17(obj.imag)]
    if isinstance(obj, float):
        return _f17(obj)
    if isinstance(obj, (np.floating, np.integer)):
        return _jsonable(obj.item())
    return obj


def _dump_json(payload) -> str:
    return json.dumps(_jsonable(payload), indent=2, sort_keys=True) + "\n"


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def parse_n_values(spec_text: str):
    """Parse '--n 5' or '--n 2..6' into an ascending list of ints."""
    text = spec_text.strip()
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if lo < 1 or hi < lo:
        raise OutOfRange(f"invalid n range {spec_text!r} (need 1 <= A <= B)")
    return list(range(lo, hi + 1))


def _diagnostic(contract: str, detail) -> str:
    return _dump_json({"contract": contract, "detail": detail})


def cmd_audit(args) -> int:
    n_values = parse_n_values(args.n)
    free, limit, matrix = run_full_audit(
        n_values=tuple(n_values), tol=args.tol, seed=args.seed)
    try:
        audit_crosscheck(matrix)
    except InconsistentVerdict as exc:
        sys.stderr.write(_diagnostic("audit_crosscheck", str(exc)))
        return 2
    if args.format == "table":
        text = "\n".join(["# free suite", free.table(),
                          "# limit suite", limit.table(),
                          "# matrix suite", matrix.table(), ""])
    else:
        text = _dump_json({
            "free": [r.to_record(free.seed) for r in free.results],
            "limit": [r.to_record(limit.seed) for r in limit.results],
            "matrix": [r.to_record(matrix.seed) for r in matrix.results],
            "crosscheck": "PASS",
            "n_values": n_values,
        })
    _emit(text, args.out)
    return 0


def _spectrum_csv(reports) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["n", "nu", "energy", "level_index", "multiplicity"])
    for report in reports:
        levels = report.levels
        for nu, energy in enumerate(report.per_state_energies):
            idx = min(range(len(levels)),
                      key=lambda i: abs(levels[i][0] - energy))
            writer.writerow([report.n, nu, format(energy, ".17g"),
                             idx, levels[idx][1]])
    return buf.getvalue()


def cmd_spectrum(args) -> int:
    n_values = parse_n_values(args.n)
    reports, failures = [], []
    for n in n_values:
        passed, deviation, report = spectrum_crosscheck(n, tol=args.tol)
        reports.append(report)
        if not passed:
            failures.append({"n": n, "deviation": deviation})
    if failures:
        sys.stderr.write(_diagnostic("spectrum_crosscheck", failures))
        return 2
    if args.format == "csv":
        text = _spectrum_csv(reports)
    elif args.format == "table":
        lines = []
        for report in reports:
            lines.append(f"n={report.n}  case {report.case_class}  "
                         f"levels {report.levels}")
        text = "\n".join(lines) + "\n"
    else:
        text = _dump_json([r.to_dict() for r in reports])
    _emit(text, args.out)
    return 0


def cmd_coherent(args) -> int:
    n_values = parse_n_values(args.n)
    choice = LAMBDA_BY_NAME[args.lam]
    records, failures = [], []
    for n in n_values:
        state = build_coherent(n, choice)
        residual = eigenstate_residual(state)
        records.append({
            "n": n,
            "lambda_variant": args.lam,
            "delta": list(state.delta),
            "normalization_poly": list(normalization_poly(state)),
            "eigenstate_residual": residual,
            "closed_form_modulus_gap": max(
                row[4] for row in compare_closed_form(state)),
        })
        if residual > args.tol:
            failures.append({"n": n, "residual": residual})
    if failures:
        sys.stderr.write(_diagnostic("eigenstate_residual", failures))
        return 2
    _emit(_dump_json(records), args.out)
    return 0


def cmd_su2(args) -> int:
    n_values = parse_n_values(args.n)
    choice = DiagonalChoice(args.diag)
    records, failures = [], []
    for n in n_values:
        try:
            rep = solve_representation(n, choice)
        except DegenerateNodes as exc:
            records.append({
                "n": n, "choice": choice.value,
                "degenerate_nodes": {"pair": list(exc.pair),
                                     "separation": exc.separation},
            })
            continue
        residuals, ok = verify_representation(rep, tol=args.tol)
        if choice is DiagonalChoice.ADAG_B:
            residuals["e010"] = e010_residual(rep)
            ok = ok and residuals["e010"] <= args.tol
        records.append({
            "n": n, "j": rep.j, "choice": choice.value,
            "lambdas": list(rep.lambdas),
            "residuals": residuals,
        })
        if not ok:
            failures.append({"n": n, "residuals": residuals})
    if failures:
        sys.stderr.write(_diagnostic("verify_representation", failures))
        return 2
    _emit(_dump_json(records), args.out)
    return 0


def cmd_eval(args) -> int:
    expr = parse(args.expression)
    poly = normal_order(expr)  # OutOfRange -> exit 1 via main()
    n_values = parse_n_values(args.n)
    records = []
    for n in n_values:
        rep = build_rep(n)
        assignment = {"adag": rep.a_dag, "a": rep.a,
                      "b": rep.b, "bdag": rep.b_dag, "N": rep.num}
        direct = eval_expr(expr, assignment, rep.q, rep.dim)
        ordered = poly.eval_rep(rep)
        records.append({"n": n,
                        "matrix_residual": max_abs_diff(direct, ordered)})
    payload = {"expression": args.expression,
               "normal_form": repr(poly),
               "per_n": records}
    if args.format == "table":
        lines = [f"normal form: {poly!r}"]
        for row in records:
            lines.append(f"n={row['n']:3d}  "
                         f"residual {row['matrix_residual']:.3e}")
        text = "\n".join(lines) + "\n"
    else:
        text = _dump_json(payload)
    _emit(text, args.out)
    return 0


def cmd_arcsin_audit(args) -> int:
    n_values = parse_n_values(args.n)
    records = []
    for n in n_values:
        audit = number_from_arcsin(build_rep(n), tol=args.tol)
        records.append({
            "n": n,
            "table": [list(row) for row in audit.table],
            "collisions": [list(pair) for pair in audit.collisions],
            "collision_flag": audit.collision_flag,
            "max_reconstruction_error": max(
                abs(value - v) for v, value, _ in audit.table),
        })
    _emit(_dump_json(records), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gentile",
        description="Intermediate-statistics verification toolkit")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def common(p, default_tol):
        p.add_argument("--n", default=DEFAULT_SWEEP,
                       help="single n or range A..B (default %(default)s)")
        p.add_argument("--tol", type=float, default=default_tol)
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None, help="output file (UTF-8)")
        p.add_argument("--format", choices=("json", "csv", "table"),
                       default="json")

    p = sub.add_parser("audit", help="identity-audit catalog")
    common(p, 1e-9)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("spectrum", help="oscillator spectrum crosscheck")
    common(p, DEFAULT_TOL)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("coherent", help="coherent-state construction")
    common(p, 1e-12)
    p.add_argument("--lambda", dest="lam", default="plus",
                   choices=sorted(LAMBDA_BY_NAME))
    p.set_defaults(func=cmd_coherent)

    p = sub.add_parser("su2", help="su(2) representation solver")
    common(p, 1e-9)
    p.add_argument("--A", dest="diag", default="num",
                   choices=[c.value for c in DiagonalChoice])
    p.set_defaults(func=cmd_su2)

    p = sub.add_parser("eval", help="normal-order and evaluate an expression")
    p.add_argument("expression")
    common(p, DEFAULT_TOL)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("arcsin-audit",
                       help="Eq. (N2) arcsin reconstruction audit")
    common(p, 1e-12)
    p.set_defaults(func=cmd_arcsin_audit)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse uses 2 for bad usage; remap to 1
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except (ParseError, OutOfRange, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except InconsistentVerdict as exc:
        sys.stderr.write(_diagnostic("consistency", str(exc)))
        return 2
    except GentileError as exc:
        sys.stderr.write(_diagnostic(type(exc).__name__, str(exc)))
        return 2


if __name__ == "__main__":
    sys.exit(main())
