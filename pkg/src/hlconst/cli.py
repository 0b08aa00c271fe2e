"""Command-line front end.

    hlconst constant --p 3                  # C(3, q*) with q* the critical exponent
    hlconst table --from 2.2 --to 4 --step 0.2
    hlconst scan --p 3 --q 2 --n 1001 > curve.csv
    hlconst verify --p 3 --q 3 --trials 10000 --seed 42
    hlconst witness --p 3 --q 2

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from decimal import Decimal, InvalidOperation

from .constants import Mode, constant, critical_exponent, scan_objectives
from .lp_geometry import sup_norm
from .polynomial import coeff_norm
from .verify import check_hl_inequality

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
EXPLORATORY_NOTE = "exploratory: p>4 open (no closed form known)"


class UsageError(Exception):
    pass


def _fmt(x: float, digits: int) -> str:
    return f"{x:.{digits}g}"


def _emit_json(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


def _resolve_q(p: float, q: float | None) -> float:
    return critical_exponent(p) if q is None else q


def _mode(args) -> Mode:
    return Mode.FORCE_NUMERIC if getattr(args, "numeric", False) else Mode.AUTO


def cmd_constant(args) -> int:
    q = _resolve_q(args.p, args.q)
    res = constant(args.p, q, _mode(args))
    if args.json:
        _emit_json(res.to_dict())
        return EXIT_OK
    d = args.digits
    c = res.witness.poly
    lines = [
        f"p         {_fmt(res.p, d)}",
        f"q         {_fmt(res.q, d)}",
        f"value     {_fmt(res.value, d)}",
        f"method    {res.method.value}",
        f"argmax_a  {_fmt(res.argmax_a, d)}",
        f"branch    {res.branch.value}",
        f"witness   {_fmt(c.c20, d)} x^2 + {_fmt(c.c11, d)} xy + {_fmt(c.c02, d)} y^2",
    ]
    if res.exploratory:
        lines.append(EXPLORATORY_NOTE)
    print("\n".join(lines))
    return EXIT_OK


def _decimal(text: str, name: str) -> Decimal:
    try:
        return Decimal(text)
    except InvalidOperation:
        raise UsageError(f"{name}: not a number: {text!r}") from None


def _q_rule(rule: str):
    if rule == "critical":
        return critical_exponent
    if rule.startswith("fixed:"):
        q = float(_decimal(rule[len("fixed:"):], "--q-rule"))
        return lambda p: q
    raise UsageError(f"--q-rule must be 'critical' or 'fixed:<value>', got {rule!r}")


def cmd_table(args) -> int:
    start = _decimal(args.start, "--from")
    stop = _decimal(args.stop, "--to")
    step = _decimal(args.step, "--step")
    if step <= 0:
        raise UsageError("--step must be positive")
    if stop < start:
        raise UsageError("empty range: --to is below --from")
    q_of = _q_rule(args.q_rule)
    n = int((stop - start) / step) + 1
    writer = csv.writer(sys.stdout, lineterminator="\r\n")
    writer.writerow(["p", "q", "constant", "method", "argmax_a"])
    for i in range(n):
        p = float(start + i * step)
        res = constant(p, q_of(p), _mode(args))
        writer.writerow([repr(p), repr(res.q), repr(res.value), res.method.value, repr(res.argmax_a)])
    return EXIT_OK


def cmd_scan(args) -> int:
    q = _resolve_q(args.p, args.q)
    report = scan_objectives(args.p, q, args.n)
    if args.json:
        _emit_json(report.to_dict())
        return EXIT_OK
    writer = csv.writer(sys.stdout, lineterminator="\r\n")
    writer.writerow(["a", "diagonal", "offdiagonal"])
    for row in report.points:
        writer.writerow([repr(v) for v in row])
    branch, a, v = report.argmax
    print(f"# argmax branch={branch.value} a={a!r} value={v!r}", file=sys.stderr)
    return EXIT_OK


def _default_seed() -> int:
    raw = os.environ.get("HL_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"HL_SEED must be an integer, got {raw!r}") from None


def cmd_verify(args) -> int:
    if args.trials < 1:
        raise UsageError("--trials must be at least 1")
    seed = args.seed if args.seed is not None else _default_seed()
    q = _resolve_q(args.p, args.q)
    rep = check_hl_inequality(args.p, q, args.trials, seed, enrich=args.enrich)
    if args.json:
        _emit_json(rep.to_dict())
    else:
        d = args.digits
        w = rep.worst_case
        print("\n".join([
            f"p           {_fmt(rep.p, d)}",
            f"q           {_fmt(rep.q, d)}",
            f"trials      {rep.trials} (enriched {rep.enriched}, skipped {rep.skipped})",
            f"seed        {rep.seed}",
            f"constant    {_fmt(rep.constant_used, d)}",
            f"max_ratio   {_fmt(rep.max_ratio, d)}",
            f"worst_case  ({_fmt(w.c20, d)}, {_fmt(w.c11, d)}, {_fmt(w.c02, d)})",
            f"violations  {rep.violations}",
            f"verdict     {rep.verdict}",
        ]))
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_witness(args) -> int:
    q = _resolve_q(args.p, args.q)
    res = constant(args.p, q, _mode(args))
    P = res.witness.poly
    info = res.witness.to_dict()
    info.update(p=res.p, q=res.q, sup_norm=sup_norm(P, res.p, tol=1e-14),
                coeff_norm=coeff_norm(P, q), constant=res.value)
    if args.json:
        _emit_json(info)
        return EXIT_OK
    d = args.digits
    print("\n".join([
        f"family      {info['family']} (sign {info['sign']:+d})",
        f"param_a     {_fmt(info['param_a'], d)}",
        f"polynomial  {_fmt(P.c20, d)} x^2 + {_fmt(P.c11, d)} xy + {_fmt(P.c02, d)} y^2",
        f"sup_norm    {_fmt(info['sup_norm'], d)}",
        f"coeff_norm  {_fmt(info['coeff_norm'], d)}",
    ]))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hlconst", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp, q=True, numeric=True, json_=True):
        sp.add_argument("--p", type=float, required=True, help="domain exponent, p > 2")
        if q:
            sp.add_argument("--q", type=float, default=None,
                            help="coefficient exponent (default: critical exponent of p)")
        if numeric:
            sp.add_argument("--numeric", action="store_true", help="skip the closed form")
        if json_:
            sp.add_argument("--json", action="store_true", help="emit a JSON object")
        sp.add_argument("--digits", type=int, default=10, help="significant digits in text output")

    sp = sub.add_parser("constant", help="optimal constant C(p, q)")
    common(sp)
    sp.set_defaults(func=cmd_constant)

    sp = sub.add_parser("table", help="CSV table of constants over a range of p")
    sp.add_argument("--from", dest="start", required=True)
    sp.add_argument("--to", dest="stop", required=True)
    sp.add_argument("--step", required=True)
    sp.add_argument("--q-rule", default="critical", help="'critical' or 'fixed:<q>'")
    sp.add_argument("--numeric", action="store_true")
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("scan", help="CSV curve of both branch objectives")
    common(sp, numeric=False)
    sp.add_argument("--n", type=int, default=1001, help="grid points in [0, 1]")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("verify", help="random-polynomial check of the inequality")
    common(sp, numeric=False)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, default=None, help="RNG seed (default: $HL_SEED or 0)")
    sp.add_argument("--enrich", type=float, default=0.1,
                    help="fraction of draws that perturb the witness")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("witness", help="extreme polynomial attaining the constant")
    common(sp)
    sp.set_defaults(func=cmd_witness)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"hlconst {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
