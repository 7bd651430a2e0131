"""Command line: ``pwkilling {classify,scan,verify,reproduce}``.

Exit codes: 0 success, 1 verification or reproduction failure, 2 usage
error, 3 internal consistency error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import re
import sys
import time

import numpy as np

from . import classify as cl
from .exactlin import to_q
from .explicit import FAMILIES, explicit_field
from .fieldeval import (evaluator, metric_inverse_field, residual_conformal,
                        residual_killing, shifted_conformal_field)
from .planewave import Params, _qstr
from .prolongation import ClosureError
from .solver import (GridTooLarge, SCAN_LIMIT, catalog_entry, normalize_problem, scan,
                     solution_space)
from .tractor import CONFORMAL, PROJECTIVE

__all__ = ["main", "build_parser", "parse_rational", "SCHEMA_VERSION"]

SCHEMA_VERSION = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3
AXES = ("epsilon", "a1", "a2", "gamma")


class UsageError(ValueError):
    pass


def parse_rational(s: str):
    try:
        return to_q(s)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _epsilon(s: str):
    v = parse_rational(s)
    if v not in (0, 1):
        raise argparse.ArgumentTypeError("epsilon must be 0 or 1")
    return v


def _problem(s: str) -> str:
    try:
        normalize_problem(s)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None
    return s.lower()


def _public_problem(problem: str) -> str:
    return "killing" if normalize_problem(problem) == PROJECTIVE else "conformal"


def _record(command: str, problem: str, p: Params, **extra) -> dict:
    rec = {"schema_version": SCHEMA_VERSION, "command": command,
           "problem": _public_problem(problem), "params": p.as_strings()}
    rec.update(extra)
    return rec


def _params_from(args) -> Params:
    return Params(args.epsilon, args.a1, args.a2, args.gamma)


def _add_param_flags(sp, strings: bool = False):
    t = str if strings else parse_rational
    sp.add_argument("--problem", type=_problem, default="killing",
                    help="killing or conformal")
    sp.add_argument("--epsilon", type=str if strings else _epsilon, default="0" if strings else to_q(0))
    for name in ("a1", "a2", "gamma"):
        sp.add_argument(f"--{name}", type=t, default="0" if strings else to_q(0),
                        help="exact rational p/q")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="pwkilling", description=__doc__.splitlines()[0])
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    ap.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    ap.add_argument("--seed", type=int, default=cl.DEFAULT_SEED)
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("classify", help="dimensions of the solution space")
    _add_param_flags(c)
    c.add_argument("--basis", action="store_true", help="emit the exact basis of V coordinates")

    s = sub.add_parser("scan", help="dimension scan over a rational grid")
    _add_param_flags(s, strings=True)
    s.add_argument("--limit", type=int, default=SCAN_LIMIT)

    v = sub.add_parser("verify", help="PDE residuals of solution fields")
    v.add_argument("--case", help="catalog label, e.g. KT-Thm1.3(3)")
    _add_param_flags(v)
    v.add_argument("--points", type=int, default=20)
    v.add_argument("--tol", type=float, default=1e-7)

    r = sub.add_parser("reproduce", help="check the theorem tables")
    r.add_argument("--theorem", default="all", choices=["1", "2", "3", "4", "all"])
    return ap


# --------------------------------------------------------------------------
# classify


def cmd_classify(args, out) -> int:
    p = _params_from(args)
    t0 = time.perf_counter()
    S = solution_space(args.problem, p)
    total, red, irr = cl.irreducible_count(p, args.problem, seed=args.seed)
    dt = time.perf_counter() - t0
    rec = _record("classify", args.problem, p,
                  dims={"total": total, "reducible": red, "irreducible": irr},
                  iterations=S.iterations, timings={"seconds": round(dt, 3)})
    if S.computed_at != p:
        rec["computed_at"] = S.computed_at.as_strings()
    if args.basis:
        rec["basis"] = [[_qstr(v.get(j, 0)) for j in range(S.space.ambient_dim)]
                        for v in S.space.vectors()]
    if args.json:
        json.dump(rec, out, indent=2)
        out.write("\n")
    else:
        out.write(f"{rec['problem']} {p}: total {total}, reducible {red}, "
                  f"irreducible {irr} ({S.iterations} refinement steps)\n")
        for row in rec.get("basis", []):
            out.write(" ".join(row) + "\n")
    return EXIT_OK


# --------------------------------------------------------------------------
# scan

_DERIVED = re.compile(r"^\s*(epsilon|a1|a2|gamma)\s*([+-])\s*([0-9/ ]+)\s*$")


def _scan_grid(args):
    grid, derived = {}, {}
    for name in AXES:
        raw = getattr(args, name).strip()
        m = _DERIVED.match(raw)
        if m:
            src, sign, off = m.group(1), m.group(2), to_q(m.group(3).strip())
            off = off if sign == "+" else -off
            derived[name] = lambda v, src=src, off=off: v[src] + off
        elif ":" in raw:
            parts = raw.split(":")
            if len(parts) != 3:
                raise UsageError(f"--{name}: expected lo:hi:step")
            lo, hi, step = (to_q(x) for x in parts)
            if step <= 0 or hi < lo:
                raise UsageError(f"--{name}: need lo <= hi and step > 0")
            grid[name] = (lo, hi, step)
        else:
            grid[name] = to_q(raw)
    for name, _ in derived.items():
        src = _DERIVED.match(getattr(args, name)).group(1)
        if src in derived:
            raise UsageError("derived axes must refer to a non-derived axis")
    if not any(isinstance(v, tuple) for v in grid.values()):
        raise UsageError("scan needs one parameter given as lo:hi:step")
    return grid, derived


def cmd_scan(args, out) -> int:
    try:
        grid, derived = _scan_grid(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = scan(args.problem, grid, derived, jobs=args.jobs, limit=args.limit)
    if args.json:
        recs = [_record("scan", args.problem, r.params, dims={"total": r.dim},
                        flagged=r.flagged) for r in rows]
        json.dump(recs, out, indent=2)
        out.write("\n")
    else:
        w = csv.writer(out, lineterminator="\n")
        w.writerow(list(AXES) + ["dim", "flagged"])
        for r in rows:
            w.writerow([_qstr(v) for v in r.params.astuple()] + [r.dim, int(r.flagged)])
    return EXIT_OK


# --------------------------------------------------------------------------
# verify


def _solution_field(problem: str, p: Params):
    S = solution_space(problem, p)
    B = cl._basis_matrix(S)
    if normalize_problem(problem) == CONFORMAL and p.epsilon == 1:
        return S, shifted_conformal_field(p, S.computed_at, B)
    ev = evaluator(normalize_problem(problem), p)
    return S, lambda x: ev.tensor(B, x)


def _applicable_families(problem: str, p: Params):
    for fam in FAMILIES:
        if fam.problem != normalize_problem(problem):
            continue
        ok = fam.applies(p) if fam.applies is not None else p == Params(*fam.params)
        if ok:
            yield fam


def verify_case(problem: str, p: Params, points: int, seed: int) -> list:
    """``[(name, max residual)]`` for solver fields, explicit families and, for Killing, the metric."""
    problem = normalize_problem(problem)
    res_fn = residual_conformal if problem == CONFORMAL else residual_killing
    pts = cl.sample_points(points, seed)
    S, fld = _solution_field(problem, p)
    out = []
    if S.dim:
        worst = np.zeros(S.dim)
        for x in pts:
            worst = np.maximum(worst, res_fn(p, fld, x))
        out += [(f"basis[{k}]", float(r)) for k, r in enumerate(worst)]
    for fam in _applicable_families(problem, p):
        for k in range(fam.ncoef):
            c = np.zeros(fam.ncoef)
            c[k] = 1.0
            f = explicit_field(fam, p, c)
            out.append((f"{fam.name}[c{k + 1}]", float(max(res_fn(p, f, x) for x in pts))))
    if problem == PROJECTIVE:
        g = metric_inverse_field(p)
        out.append(("metric", float(max(residual_killing(p, g, x) for x in pts))))
    return out


def cmd_verify(args, out) -> int:
    if args.case:
        try:
            e = catalog_entry(args.case)
        except KeyError as exc:
            raise UsageError(str(exc)) from None
        problem, p = e.problem, e.params
    else:
        problem, p = args.problem, _params_from(args)
    results = verify_case(problem, p, args.points, args.seed)
    worst = max((r for _, r in results), default=0.0)
    ok = all(r < args.tol for _, r in results)
    nbasis = sum(1 for n, _ in results if n.startswith("basis"))
    if args.json:
        rec = _record("verify", problem, p, dims={"total": nbasis},
                      residual_max=worst, **{"pass": ok})
        rec["fields_checked"] = len(results)
        if not ok:
            rec["offenders"] = [{"field": n, "residual": r} for n, r in
                                sorted(results, key=lambda t: -t[1]) if r >= args.tol][:10]
        json.dump(rec, out, indent=2)
        out.write("\n")
    else:
        out.write(f"{_public_problem(problem)} {p}: {len(results)} fields, "
                  f"{nbasis} solver basis fields, max residual {worst:.3e}: "
                  f"{'PASS' if ok else 'FAIL'}\n")
        if not ok:
            for n, r in sorted(results, key=lambda t: -t[1])[:10]:
                if r >= args.tol:
                    out.write(f"  {n}: {r:.3e}\n")
    return EXIT_OK if ok else EXIT_FAIL


# --------------------------------------------------------------------------
# reproduce


def cmd_reproduce(args, out) -> int:
    theorems = [1, 2, 3, 4] if args.theorem == "all" else [int(args.theorem)]
    rows = []
    for th in theorems:
        rows += cl.reproduce(th, seed=args.seed)
    ok = all(r.passed for r in rows)
    if args.json:
        recs = []
        for r in rows:
            rec = _record("reproduce", r.problem, r.params, label=r.label,
                          expected=list(r.expected), got=list(r.got), **{"pass": r.passed})
            if r.theorem != 4:
                rec["dims"] = {"total": r.got[0], "irreducible": r.got[1]}
            recs.append(rec)
        json.dump(recs, out, indent=2)
        out.write("\n")
    else:
        for r in rows:
            what = "correspondence" if r.theorem == 4 else "total, irreducible"
            out.write(f"{r.label:18s} {_public_problem(r.problem):9s} {str(r.params):22s} "
                      f"{what}: expected {r.expected} got {r.got} "
                      f"{'PASS' if r.passed else 'FAIL'}\n")
    return EXIT_OK if ok else EXIT_FAIL


COMMANDS = {"classify": cmd_classify, "scan": cmd_scan, "verify": cmd_verify,
            "reproduce": cmd_reproduce}


_VALUE_FLAGS = {"--epsilon", "--a1", "--a2", "--gamma"}


def _join_negative_values(argv: list) -> list:
    """Turn ``--a1 -8/3`` into ``--a1=-8/3`` (argparse reads ``-8/3`` as a flag)."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    argv = _join_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_USAGE
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, GridTooLarge) as exc:
        sys.stderr.write(f"pwkilling: error: {exc}\n")
        return EXIT_USAGE
    except (cl.ConsistencyError, cl.AmbiguousRank, ClosureError) as exc:
        sys.stderr.write(f"pwkilling: internal consistency error: {exc}\n")
        return EXIT_INTERNAL


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
