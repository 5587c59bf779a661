"""Command-line interface.

Sub-commands: eval | bound | certify | compare | identities.
Exit codes: 0 success; 1 certification/identity failure; 2 usage or
domain error; 3 numerical failure.  Output files are written to a
temporary path and renamed on success, so failures never leave partial
files behind.
"""

import argparse
import csv
import io
import json
import os
import sys

from gentrig import __version__
from gentrig import certify as _certify
from gentrig.bounds import bound_value, get_bound, list_bounds
from gentrig.errors import (
    ConvergenceError,
    DomainError,
    MixedTargets,
    ToleranceNotMet,
    UnknownBound,
    UnknownClaim,
)
from gentrig.invtrig import FnId, eval_fn

_FN_NAMES = {}
for _fn in FnId:
    _FN_NAMES[_fn.value] = _fn
    _FN_NAMES[_fn.value[:-2]] = _fn  # accept the spelling without the suffix


def _parse_grid(text):
    parts = text.split(":")
    if len(parts) not in (3, 4):
        raise DomainError(f"grid must be lo:hi:n or lo:hi:n:log, got {text!r}")
    try:
        lo = float(parts[0])
        hi = float(parts[1])
        n = int(parts[2])
    except ValueError as exc:
        raise DomainError(f"bad grid {text!r}: {exc}") from None
    if n < 1 or not lo < hi:
        raise DomainError(f"grid needs lo < hi and n >= 1, got {text!r}")
    if len(parts) == 4:
        if parts[3] != "log":
            raise DomainError(f"grid scale must be 'log', got {parts[3]!r}")
        if lo <= 0.0:
            raise DomainError("log grids need lo > 0")
        return _certify.logspace(lo, hi, n)
    return _certify.linspace(lo, hi, n)


def _write_out(path, text):
    if path is None:
        sys.stdout.write(text)
        return
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8", newline="") as fh:
        fh.write(text)
    os.replace(tmp, path)


def _fmt(value):
    return repr(float(value))


def cmd_eval(args):
    fn = _FN_NAMES.get(args.fn)
    if fn is None:
        raise DomainError(f"unknown function {args.fn!r}; choose from "
                          f"{sorted(set(_FN_NAMES))}")
    r = eval_fn(fn, args.p, args.x, args.method)
    if args.format == "json":
        text = json.dumps({
            "fn": fn.value, "p": args.p, "x": args.x,
            "value": r.value, "abs_err": r.abs_err,
            "method": r.method, "work": r.work,
        }) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["fn", "p", "x", "value", "abs_err", "method", "work"])
        w.writerow([fn.value, _fmt(args.p), _fmt(args.x), _fmt(r.value),
                    _fmt(r.abs_err), r.method, r.work])
        text = buf.getvalue()
    else:
        text = (f"{fn.value}(p={_fmt(args.p)}, x={_fmt(args.x)}) = "
                f"{_fmt(r.value)}  abs_err={_fmt(r.abs_err)} "
                f"method={r.method} work={r.work}\n")
    _write_out(args.out, text)
    return 0


def cmd_bound(args):
    if args.list or args.id is None:
        specs = list_bounds(args.target, args.side)
        lines = []
        for s in specs:
            hi = "inf" if s.p_max == float("inf") else _fmt(s.p_max)
            status = "certified" if s.certified else "reported"
            lines.append(
                f"{s.id:26} {s.target:10} {s.side:5} p in ({_fmt(s.p_min)}, {hi}) "
                f"[{status}]  {s.formula}"
            )
        _write_out(args.out, "\n".join(lines) + "\n")
        return 0
    if args.p is None or args.x is None:
        raise DomainError("bound evaluation needs --p and --x")
    spec = get_bound(args.id)
    v = bound_value(args.id, args.p, args.x)
    if args.format == "json":
        text = json.dumps({
            "id": spec.id, "target": spec.target, "side": spec.side,
            "p": args.p, "x": args.x, "value": v,
        }) + "\n"
    else:
        text = f"{spec.id}(p={_fmt(args.p)}, x={_fmt(args.x)}) = {_fmt(v)}\n"
    _write_out(args.out, text)
    return 0


def _render_reports(reports, fmt):
    if fmt == "json":
        payload = [r.as_dict() for r in reports]
        if len(payload) == 1:
            return json.dumps(payload[0], indent=2) + "\n"
        return json.dumps(payload, indent=2) + "\n"
    lines = []
    for r in reports:
        mm = "n/a" if r.min_margin is None else _fmt(r.min_margin)
        mb = "n/a" if r.max_error_budget is None else _fmt(r.max_error_budget)
        lines.append(
            f"{r.claim_id:16} {r.status:9} points={r.points_checked} "
            f"skipped={r.skipped} violations={len(r.violations)} "
            f"min_margin={mm} max_error_budget={mb}"
        )
    return "\n".join(lines) + "\n"


def cmd_certify(args):
    p_grid = _parse_grid(args.p_grid) if args.p_grid else None
    x_grid = _parse_grid(args.x_grid) if args.x_grid else None
    if args.claim == "all":
        reports = _certify.certify_all(
            p_override=p_grid, x_override=x_grid,
            margin_factor=args.margin_factor, seed=args.seed,
            sample_count=args.samples,
        )
    else:
        spec = _certify.get_claim(args.claim)
        p_vals = p_grid if p_grid is not None else _certify.default_p_values(spec)
        if x_grid is not None:
            x_vals = x_grid
        elif spec.kind == "pair":
            x_vals = _certify.linspace(1e-3, 0.999, _certify.DEFAULT_PAIR_COUNT)
        else:
            x_vals = _certify.default_x_values()
        grid = _certify.GridSpec(
            _certify._clamp_p(spec, p_vals),
            [x for x in x_vals if 0.0 < x <= 0.999],
            args.margin_factor,
        )
        reports = [_certify.certify_inequality(
            args.claim, grid, seed=args.seed, sample_count=args.samples)]
    _write_out(args.out, _render_reports(reports, args.format))
    return _certify.exit_status(reports)


def cmd_compare(args):
    bound_ids = [b.strip() for b in args.bounds.split(",") if b.strip()]
    p_grid = _parse_grid(args.p_grid) if args.p_grid else [1.5, 2.0, 3.0]
    x_grid = _parse_grid(args.x_grid) if args.x_grid else \
        _certify.linspace(1e-3, 0.999, 100)
    target = args.target
    if target in _FN_NAMES:
        target = _FN_NAMES[target].value
    rows, summary = _certify.compare_bounds(target, bound_ids, p_grid, x_grid)
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["target", "side", "p", "x", "best_bound_id", "gap"])
    for tgt, side, p, x, best, gap in rows:
        w.writerow([tgt, side, _fmt(p), _fmt(x), best, _fmt(gap)])
    _write_out(args.out, buf.getvalue())
    if args.out is not None:
        for p, wins in summary.items():
            frac = "  ".join(f"{b}={wins[b]:.3f}" for b in bound_ids)
            sys.stdout.write(f"p={_fmt(p)}: fraction tightest  {frac}\n")
    return 0


def cmd_identities(args):
    results = _certify.identity_suite(args.tol)
    ok_all = True
    lines = []
    for name, residual, ok in results:
        ok_all = ok_all and ok
        lines.append(f"{'ok  ' if ok else 'FAIL'} {name:32} residual={_fmt(residual)}")
    _write_out(args.out, "\n".join(lines) + "\n")
    return 0 if ok_all else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gentrig",
        description="Generalized inverse trigonometric/hyperbolic functions: "
                    "evaluation, bounds, and inequality certification.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("eval", help="evaluate one function at (p, x)")
    pe.add_argument("--fn", required=True)
    pe.add_argument("--p", type=float, required=True)
    pe.add_argument("--x", type=float, required=True)
    pe.add_argument("--method", default="auto",
                    choices=["auto", "series", "quadrature"])
    pe.add_argument("--format", default="text", choices=["text", "json", "csv"])
    pe.add_argument("--out", default=None)
    pe.set_defaults(func=cmd_eval)

    pb = sub.add_parser("bound", help="list bounds or evaluate one")
    pb.add_argument("--list", action="store_true")
    pb.add_argument("--id", default=None)
    pb.add_argument("--target", default=None)
    pb.add_argument("--side", default=None, choices=[None, "lower", "upper"])
    pb.add_argument("--p", type=float, default=None)
    pb.add_argument("--x", type=float, default=None)
    pb.add_argument("--format", default="text", choices=["text", "json"])
    pb.add_argument("--out", default=None)
    pb.set_defaults(func=cmd_bound)

    pc = sub.add_parser("certify", help="certify one claim or all claims")
    pc.add_argument("--claim", required=True)
    pc.add_argument("--p-grid", default=None, help="lo:hi:n[:log]")
    pc.add_argument("--x-grid", default=None, help="lo:hi:n[:log]")
    pc.add_argument("--margin-factor", type=float,
                    default=_certify.DEFAULT_MARGIN_FACTOR)
    pc.add_argument("--seed", type=int, default=_certify.DEFAULT_SEED)
    pc.add_argument("--samples", type=int, default=_certify.DEFAULT_SAMPLES)
    pc.add_argument("--format", default="json", choices=["json", "text"])
    pc.add_argument("--out", default=None)
    pc.set_defaults(func=cmd_certify)

    pm = sub.add_parser("compare", help="dominance table for same-side bounds")
    pm.add_argument("--target", required=True)
    pm.add_argument("--bounds", required=True,
                    help="comma-separated bound ids sharing target and side")
    pm.add_argument("--p-grid", default=None, help="lo:hi:n[:log]")
    pm.add_argument("--x-grid", default=None, help="lo:hi:n[:log]")
    pm.add_argument("--out", default=None)
    pm.set_defaults(func=cmd_compare)

    pi = sub.add_parser("identities", help="run the identity self-tests")
    pi.add_argument("--tol", type=float, default=1e-9)
    pi.add_argument("--out", default=None)
    pi.set_defaults(func=cmd_identities)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    try:
        return args.func(args)
    except (DomainError, UnknownBound, UnknownClaim, MixedTargets) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (ConvergenceError, ToleranceNotMet, ArithmeticError) as exc:
        sys.stderr.write(f"numerical failure: {exc}\n")
        return 3


if __name__ == "__main__":
    sys.exit(main())
