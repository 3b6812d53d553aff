"""Command-line front end.

Subcommands:

* ``eval``   — one expectation from one engine (closed form, exact full
  distribution, exact pairwise, or Monte Carlo), as CSV or JSON.
* ``table``  — a t-grid comparing closed form, exact engine, and Monte Carlo.
* ``verify`` — run the cross-check suites; one pass/fail line per check.

Exit codes: 0 success, 1 verification failure, 2 usage error.  Rationals are
emitted without precision loss: "num/den" in CSV, {"num": ..., "den": ...}
with decimal strings in JSON.  The environment variable COXWALK_GUARD_LIMIT
(a decimal integer) overrides the group-order guard.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .closedform import closed_form, formula_for
from .elements import Family, Gens, GroupSpec, Measure
from .errors import CoxwalkError, InvalidRank, OrderLimitExceeded, UnsupportedFamily
from .exactengine import (
    evolve_distribution,
    evolve_pairtable,
    expectation,
    make_statistic,
)
from .montecarlo import simulate
from .verify import SUITES, run_suite


def _warn(msg: str) -> None:
    print(f"warning: {msg}", file=sys.stderr)


def _csv_value(value) -> str:
    if isinstance(value, Fraction):
        return f"{value.numerator}/{value.denominator}"
    return repr(float(value))


def _json_value(value):
    if isinstance(value, Fraction):
        return {"num": str(value.numerator), "den": str(value.denominator)}
    return float(value)


def _build_spec(args, parser) -> GroupSpec:
    family = Family(args.family)
    if args.n is None:
        parser.error("--n (or --m for I2) is required")
    try:
        if family == Family.G:
            return GroupSpec(family, args.n, args.r if args.r is not None else 1)
        if args.r is not None:
            parser.error("--r is only valid with --family G")
        return GroupSpec(family, args.n)
    except InvalidRank as exc:
        parser.error(str(exc))


def _element_spec(spec: GroupSpec, parser) -> GroupSpec:
    """Group carrying the element-level model (maps G(1,.)/G(2,.) to A/B)."""
    try:
        return spec.element_model()
    except UnsupportedFamily as exc:
        parser.error(str(exc))


def _add_group_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--family", required=True, choices=[f.value for f in Family])
    p.add_argument("--n", type=int, default=None, help="letters (A, G), rank (B, D), or m (I2)")
    p.add_argument("--m", type=int, default=None, dest="n", help="alias for --n under I2")
    p.add_argument("--r", type=int, default=None, help="color count, family G only")
    p.add_argument("--gens", choices=[g.value for g in Gens], default=Gens.REFLECTIONS.value)
    p.add_argument("--measure", choices=[m.value for m in Measure], default=Measure.LENGTH.value)


def _emit_record(record: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(record))
        return
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(record.keys())
    writer.writerow("" if v is None else v for v in record.values())


def _cmd_eval(args, parser) -> int:
    spec = _build_spec(args, parser)
    gens, measure = Gens(args.gens), Measure(args.measure)
    method, value, stderr = None, None, None
    engine = args.engine
    if engine == "closed" and formula_for(spec, gens, measure, args.formula) is None:
        _warn(
            f"no closed form for family={spec.family.value} gens={gens.value} "
            f"measure={measure.value} (formula={args.formula}); falling back to exact-full"
        )
        engine = "exact-full"
    if engine == "closed":
        res = closed_form(spec, gens, measure, args.t, args.formula)
        method, value = res.method, res.value
    elif engine == "exact-full":
        model = _element_spec(spec, parser)
        dist = evolve_distribution(model, gens, args.t)
        value = expectation(dist, make_statistic(model, measure))
        method = "exact-full"
    elif engine == "exact-pair":
        model = _element_spec(spec, parser)
        if gens != Gens.REFLECTIONS or measure != Measure.LENGTH or model.family not in (
            Family.A,
            Family.B,
            Family.D,
        ):
            parser.error("--engine exact-pair needs family A/B/D, reflections, length")
        value = evolve_pairtable(model.family, model.n, args.t).expected_length()
        method = "exact-pair"
    else:  # mc
        model = _element_spec(spec, parser)
        sim = simulate(model, gens, measure, args.t, trials=args.trials, seed=args.seed)
        method, value, stderr = "mc", sim.mean, sim.stderr
    record = {
        "family": spec.family.value,
        "param": spec.n,
        "r": spec.r if spec.family == Family.G else None,
        "gens": gens.value,
        "measure": measure.value,
        "t": args.t,
        "method": method,
        "value": _json_value(value) if args.format == "json" else _csv_value(value),
    }
    if stderr is not None:
        record["stderr"] = stderr
        record["trials"] = args.trials
        record["seed"] = args.seed
    _emit_record(record, args.format)
    return 0


def _cmd_table(args, parser) -> int:
    spec = _build_spec(args, parser)
    gens, measure = Gens(args.gens), Measure(args.measure)
    model = _element_spec(spec, parser)
    have_formula = formula_for(spec, gens, measure, args.formula) is not None
    if not have_formula:
        _warn("no closed form for this cell; closed_form column left empty")
    from .exactengine import iterate_distributions

    stat = None
    try:
        stat = make_statistic(model, measure)
        iter_dists = list(iterate_distributions(model, gens, args.t_max))
    except OrderLimitExceeded as exc:
        _warn(f"exact engine skipped: {exc}")
        iter_dists = None

    rows = []
    for t in range(args.t_max + 1):
        closed = (
            closed_form(spec, gens, measure, t, args.formula).value
            if have_formula
            else None
        )
        exact = expectation(iter_dists[t], stat) if iter_dists is not None else None
        sim = simulate(model, gens, measure, t, trials=args.trials, seed=args.seed)
        rows.append((t, closed, exact, sim.mean, sim.stderr))

    if args.format == "json":
        obj = {
            "family": spec.family.value,
            "param": spec.n,
            "r": spec.r if spec.family == Family.G else None,
            "gens": gens.value,
            "measure": measure.value,
            "trials": args.trials,
            "seed": args.seed,
            "rows": [
                {
                    "t": t,
                    "closed_form": None if c is None else _json_value(c),
                    "exact": None if e is None else _json_value(e),
                    "mc_mean": m,
                    "mc_stderr": s,
                }
                for (t, c, e, m, s) in rows
            ],
        }
        print(json.dumps(obj))
        return 0
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["t", "closed_form", "exact", "mc_mean", "mc_stderr"])
    for (t, c, e, m, s) in rows:
        writer.writerow(
            [
                t,
                "" if c is None else _csv_value(c),
                "" if e is None else _csv_value(e),
                repr(m),
                repr(s),
            ]
        )
    return 0


def _cmd_verify(args, parser) -> int:
    names = args.suite or list(SUITES)
    failures = 0
    for name in names:
        if name not in SUITES:
            parser.error(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
        for res in run_suite(name):
            status = "PASS" if res.ok else "FAIL"
            print(f"[{status}] {name}: {res.name} ({res.detail})")
            failures += 0 if res.ok else 1
    print(f"{'OK' if failures == 0 else 'FAILED'}: {failures} failing check(s)")
    return 0 if failures == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="coxwalk",
        description="Expected length of products of random reflections: "
        "closed forms, exact engines, Monte Carlo, and cross-checks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate one expectation")
    _add_group_flags(p_eval)
    p_eval.add_argument("--t", type=int, required=True)
    p_eval.add_argument(
        "--formula",
        choices=["auto", "eriksen", "bm", "troili", "eh", "paper"],
        default="auto",
    )
    p_eval.add_argument(
        "--engine",
        choices=["closed", "exact-full", "exact-pair", "mc"],
        default="closed",
    )
    p_eval.add_argument("--trials", type=int, default=10000)
    p_eval.add_argument("--seed", type=int, default=1)
    p_eval.add_argument("--format", choices=["csv", "json"], default="json")

    p_table = sub.add_parser("table", help="closed/exact/mc comparison over a t grid")
    _add_group_flags(p_table)
    p_table.add_argument("--t-max", type=int, required=True, dest="t_max")
    p_table.add_argument(
        "--formula",
        choices=["auto", "eriksen", "bm", "troili", "eh", "paper"],
        default="auto",
    )
    p_table.add_argument("--trials", type=int, default=10000)
    p_table.add_argument("--seed", type=int, default=1)
    p_table.add_argument("--format", choices=["csv", "json"], default="csv")

    p_verify = sub.add_parser("verify", help="run cross-check suites")
    p_verify.add_argument(
        "--suite",
        action="append",
        default=None,
        help=f"suite name ({', '.join(SUITES)}); repeatable; default all",
    )
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "eval":
            return _cmd_eval(args, parser)
        if args.command == "table":
            return _cmd_table(args, parser)
        return _cmd_verify(args, parser)
    except OrderLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CoxwalkError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
