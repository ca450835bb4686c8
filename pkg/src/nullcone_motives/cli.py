"""Command-line front end.

Exit codes: 0 success, 1 malformed input, 2 mismatch or failed check,
3 brute-force budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .finite_field import DEFAULT_BUDGET, BudgetExceeded, count_nilpotent_fq
from .hesselink import hesselink_motive, strata_table, wall_crossing_check
from .motive import eval_at
from .nullcone import (
    leading_term_symmetric,
    load_cache,
    motive_recursive,
    motive_resolved,
    nullcone_motive,
    save_cache,
)
from .quiver import DimVector, Quiver, is_symmetric, rep_space_dim
from .reference import LOOP_TERMS, loop_reference
from .series import dim_vectors_upto, gfi_check

EXIT_OK, EXIT_INPUT, EXIT_MISMATCH, EXIT_BUDGET = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load_quiver(path: str) -> Quiver:
    try:
        return Quiver.from_json(Path(path).read_text())
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"cannot read quiver from {path}: {exc}") from exc


def _parse_dim(q: Quiver, text: str) -> DimVector:
    try:
        return DimVector.of(q, json.loads(text))
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise InputError(f"bad dimension vector {text!r}: {exc}") from exc


def _emit(obj, fmt: str, text: str, latex: str | None = None):
    if fmt == "json":
        print(json.dumps(obj, indent=2, sort_keys=False))
    elif fmt == "latex":
        print(latex if latex is not None else text)
    else:
        print(text)


# ---------------------------------------------------------------------
# commands


def cmd_motive(args) -> int:
    q = _load_quiver(args.quiver)
    d = _parse_dim(q, args.dim)
    load_cache(q)
    method = "recursive" if args.method == "auto" else args.method
    poly = nullcone_motive(q, d, method=method, jobs=args.jobs)
    status = EXIT_OK
    cross = None
    if args.cross_check:
        values = {
            "recursive": motive_recursive(q, d),
            "resolved": motive_resolved(q, d, jobs=args.jobs),
            "hesselink": hesselink_motive(q, d, jobs=args.jobs),
        }
        cross = {k: v == poly for k, v in values.items()}
        if not all(cross.values()):
            status = EXIT_MISMATCH
    save_cache(q)
    obj = {"d": d.to_json(q), "method": method, "motive": poly.to_json()}
    if cross is not None:
        obj["cross_check"] = cross
    _emit(obj, args.format, str(poly), poly.to_latex())
    if status:
        print(f"cross-check mismatch: {cross}", file=sys.stderr)
    return status


def cmd_strata(args) -> int:
    q = _load_quiver(args.quiver)
    d = _parse_dim(q, args.dim)
    rows = strata_table(q, d, balance=args.balance, nonzero_only=not args.all)
    if args.format == "json":
        out = []
        for r in rows:
            out.append(
                {
                    "coweight": r["coweight"],
                    "parts": r["parts"],
                    "phi": r["phi"],
                    "semistable": r["semistable_locus"].to_json(),
                    "contribution": r["contribution"].to_json(),
                }
            )
        print(json.dumps(out, indent=2))
        return EXIT_OK
    for r in rows:
        cw = "(" + ", ".join(r["coweight"] or []) + ")"
        if args.format == "latex":
            print(f"{cw} & {r['phi']} & {r['semistable_locus'].to_latex()} \\\\")
        else:
            print(f"{cw}\tphi={r['phi']}\tsst={r['semistable_locus']}\tcontribution={r['contribution']}")
    return EXIT_OK


def cmd_dt(args) -> int:
    from .dt import dt_invariants

    q = _load_quiver(args.quiver)
    if not is_symmetric(q):
        raise InputError("DT invariants need a symmetric quiver")
    res = dt_invariants(q, args.D)
    if args.format == "json":
        print(json.dumps(res.to_json(), indent=2))
    else:
        for d in sorted(res.dt, key=lambda v: (v.total, tuple(-x for x in v))):
            p = res.dt[d]
            shown = p.to_latex() if args.format == "latex" else str(p)
            print(f"{json.dumps(d.to_json(q))}\t{shown}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    q = _load_quiver(args.quiver)
    d = _parse_dim(q, args.dim)
    count = count_nilpotent_fq(q, d, args.q, budget=args.budget)
    value = eval_at(motive_recursive(q, d), args.q)
    match = count == value
    obj = {"count": count, "eval": int(value), "match": match}
    _emit(obj, args.format, f"count {count}, eval {value}, {'match' if match else 'MISMATCH'}")
    return EXIT_OK if match else EXIT_MISMATCH


def _check_gfi(q, D):
    return gfi_check(q, D), {}


def _check_wallcross(q, D):
    return wall_crossing_check(q, D), {}


def _check_dt(q, D):
    from .dt import dt_invariants, dt_positive, nullcone_dt_check

    if not is_symmetric(q):
        return None, {"reason": "quiver is not symmetric"}
    res = dt_invariants(q, D)
    ok_series = nullcone_dt_check(q, D)
    ok_positive = dt_positive(res)
    return ok_series and ok_positive, {"nullcone_series": ok_series, "positive": ok_positive}


def _check_leading(q, D):
    if not is_symmetric(q):
        return None, {"reason": "quiver is not symmetric"}
    bad = []
    for d in dim_vectors_upto(q.n, D):
        if d.is_zero():
            continue
        p = motive_recursive(q, d)
        coef, exp = p.leading_term()
        if (coef, exp) != leading_term_symmetric(q, d):
            bad.append(list(d))
    return not bad, {"failures": bad}


def _check_oracle(q, D, budget=DEFAULT_BUDGET):
    tested, bad = 0, []
    for d in dim_vectors_upto(q.n, D):
        for p in (2, 3):
            if p ** rep_space_dim(q, d) > budget:
                continue
            tested += 1
            if count_nilpotent_fq(q, d, p, budget=budget) != eval_at(motive_recursive(q, d), p):
                bad.append([list(d), p])
    return not bad, {"cases": tested, "failures": bad}


def _check_methods(q, D):
    bad = []
    for d in dim_vectors_upto(q.n, D):
        a = motive_recursive(q, d)
        if a != motive_resolved(q, d) or a != hesselink_motive(q, d):
            bad.append(list(d))
    return not bad, {"failures": bad}


CHECKS = {
    "gfi": _check_gfi,
    "wallcross": _check_wallcross,
    "dt": _check_dt,
    "leading": _check_leading,
    "oracle": _check_oracle,
    "methods": _check_methods,
}


def cmd_check(args) -> int:
    q = _load_quiver(args.quiver)
    if args.D < 0:
        raise InputError("-D must be non-negative")
    names = list(CHECKS) if args.name == "all" else [args.name]
    report = []
    for name in names:
        ok, detail = CHECKS[name](q, args.D)
        if ok is None and args.name != "all":
            raise InputError(detail["reason"])
        report.append({"check": name, "pass": ok, **detail})
    failed = any(r["pass"] is False for r in report)
    text = "\n".join(
        f"{r['check']}: {'skip' if r['pass'] is None else 'pass' if r['pass'] else 'FAIL'}" for r in report
    )
    _emit({"D": args.D, "checks": report}, args.format, text)
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_seed_fixtures(args) -> int:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    rows = []
    for m in range(args.max_m + 1):
        for d in sorted(LOOP_TERMS):
            rows.append({"m": m, "d": d, "motive": loop_reference(m, d).to_json()})
    data = {"terms": {str(d): t for d, t in LOOP_TERMS.items()}, "instances": rows}
    path = out / "loop_motives.json"
    path.write_text(json.dumps(data, indent=1) + "\n")
    print(path)
    return EXIT_OK


# ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nullcone", description="Motives of quiver nullcones.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, dim=True):
        sp.add_argument("--quiver", required=True, help="quiver JSON file")
        if dim:
            sp.add_argument("--dim", required=True, help='dimension vector, e.g. \'{"v":2}\'')
        sp.add_argument("--format", choices=["text", "json", "latex"], default="text")
        sp.add_argument("--jobs", type=int, default=1, help="worker processes")

    sp = sub.add_parser("motive", help="compute [N_d]")
    common(sp)
    sp.add_argument("--method", choices=["recursive", "resolved", "hesselink", "auto"], default="auto")
    sp.add_argument("--cross-check", action="store_true", help="compare all three methods")
    sp.set_defaults(func=cmd_motive)

    sp = sub.add_parser("strata", help="Hesselink strata table")
    common(sp)
    sp.add_argument("--balance", choices=["run", "aggregate"], default="run")
    sp.add_argument("--all", action="store_true", help="include strata with empty semistable locus")
    sp.set_defaults(func=cmd_strata)

    sp = sub.add_parser("check", help="run identity checks up to total dimension D")
    sp.add_argument("name", choices=[*CHECKS, "all"])
    common(sp, dim=False)
    sp.add_argument("-D", type=int, default=3)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("dt", help="DT invariants of a symmetric quiver")
    common(sp, dim=False)
    sp.add_argument("-D", type=int, default=3)
    sp.set_defaults(func=cmd_dt)

    sp = sub.add_parser("oracle", help="brute-force count over F_q")
    common(sp)
    sp.add_argument("-q", type=int, default=2)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.set_defaults(func=cmd_oracle)

    sp = sub.add_parser("seed-fixtures", help="write the m-loop closed forms as JSON")
    sp.add_argument("--out", default="tests/fixtures")
    sp.add_argument("--max-m", type=int, default=3)
    sp.set_defaults(func=cmd_seed_fixtures)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
