"""Command-line front end.  Every command prints one schema-versioned report."""
from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import replace

from .acceptance import CRITERIA, run_criterion
from .charge import CohomDefect, InstantonCharge, charge_degree, is_admissible, validate_defect
from .chow import SIGN_CONVENTION
from .cohomology import InternalDefect, cohom_f
from .config import DEFAULT_SEED, AcceptanceConfig, GridConfig, MinimalConfig
from .cox import basis_f, format_monomial
from .errors import ConsistencyFailure, FanoError, NonFiniteRegion
from .exceptional import verify_exceptional_pairs, verify_right_dual_pattern, verify_strong_dual
from .kernel import CHECKS, minimal_presentation, run_checks
from .monad import build_shape, chern, kclass
from .notation import NotationError, parse_div
from .numerics import format_table1, moduli_dim, table1, table1_euler_columns
from .sweeps import SWEEPS, run_sweep

SCHEMA = "fano-instanton-report/1"


class UsageError(Exception):
    pass


def _int_list(text: str, n: int, what: str) -> list[int]:
    try:
        vals = [int(x) for x in text.replace(" ", "").split(",")]
    except ValueError:
        raise UsageError(f"{what} must be {n} comma-separated integers, got {text!r}")
    if len(vals) != n:
        raise UsageError(f"{what} must be {n} comma-separated integers, got {text!r}")
    return vals


def _bundle(text: str):
    try:
        return parse_div(text)
    except NotationError as exc:
        raise UsageError(f"cannot parse bundle {text!r}: {exc}")


# ------------------------------------------------------------------ commands


def cmd_cohom(args) -> tuple[dict, bool]:
    d = _bundle(args.bundle)
    t = cohom_f(d)
    return {"bundle": str(d), "class": list(d.as_tuple()), "h0": t.h0, "h1": t.h1, "h2": t.h2,
            "h3": t.h3, "chi": t.euler}, True


def cmd_sections(args) -> tuple[dict, bool]:
    d = _bundle(args.bundle)
    basis = basis_f(d)
    out = {"bundle": str(d), "count": len(basis), "h0": cohom_f(d).h0}
    if args.list:
        out["monomials"] = [format_monomial(m) for m in basis]
    return out, out["count"] == out["h0"]


def cmd_charge(args) -> tuple[dict, bool]:
    ch = InstantonCharge(args.alpha, args.beta, args.gamma)
    out = {"charge": list(ch.as_tuple()), "admissible": is_admissible(ch), "degree": charge_degree(ch)}
    if not out["admissible"]:
        return out, False
    defect = CohomDefect(args.delta, args.epsilon)
    out["moduli_dim"] = moduli_dim(ch)
    out["defect"] = [defect.delta, defect.epsilon]
    try:
        validate_defect(ch, defect)
    except FanoError as exc:
        out["defect_error"] = str(exc)
        return out, False
    tab = table1(ch, defect)
    out["table"] = tab.to_dict()
    cols = table1_euler_columns(ch, defect)
    out["euler_check"] = [{"p": p, "ok": ok, "column": lhs, "chi": rhs} for p, ok, lhs, rhs in cols]
    ok = all(c["ok"] for c in out["euler_check"])
    if args.format == "pretty":
        out["table_text"] = format_table1(tab)
    return out, ok


def cmd_monad(args) -> tuple[dict, bool]:
    ch = InstantonCharge(*_int_list(args.charge, 3, "--charge"))
    defect = CohomDefect(*_int_list(args.defect, 2, "--defect"))
    shape = build_shape(ch, defect)
    cd = chern(kclass(shape))
    expected = {"rank": 2, "c1": [-3, 1, -2], "c2": list(ch.curve.as_tuple()), "c3": 0}
    got = cd.to_dict()
    return {"charge": list(ch.as_tuple()), "defect": [defect.delta, defect.epsilon],
            "shape": shape.to_dict(), "ranks": list(shape.ranks), "chern": got,
            "chern_expected": expected}, got == expected


def cmd_exccoll(args) -> tuple[dict, bool]:
    reports = [verify_exceptional_pairs(), verify_strong_dual(), verify_right_dual_pattern()]
    return {r.name: r.to_dict() for r in reports}, all(r.passed for r in reports)


def cmd_minimal(args) -> tuple[dict, bool]:
    cfg = MinimalConfig(
        charge=args.charge,
        window=args.window,
        seed=args.seed,
        samples=args.samples,
        random_sections=args.random_sections,
        line_point=tuple(_int_list(args.line_point, 2, "--line-point")) if args.line_point else None,
    )
    pres = minimal_presentation(cfg.charge, cfg.random_sections, cfg.seed)
    checks = CHECKS if args.verify == "all" else ("surjective", args.verify)
    reports = run_checks(
        pres, checks, cfg.window, cfg.seed, cfg.samples, cfg.line_point, cfg.certificate_degree
    )
    ok = all(r.passed for r in reports.values())
    return {"presentation": pres.to_dict(), "config": {"window": cfg.window, "samples": cfg.samples},
            "checks": {k: r.to_dict() for k, r in reports.items()}}, ok


def cmd_sweep(args) -> tuple[dict, bool]:
    grid = GridConfig()
    overrides = {
        "bound": args.bound,
        "alpha_max": args.alpha_max,
        "gamma_max": args.gamma_max,
        "beta_abs": args.beta_abs,
        "defect_max": args.defect_max,
    }
    grid = replace(grid, **{k: v for k, v in overrides.items() if v is not None})
    if args.bound is not None:
        grid = replace(grid, oracle_bound=args.bound)
    res = run_sweep(args.kind, grid)
    return res.to_dict(), res.passed


def cmd_accept(args) -> tuple[dict, bool]:
    cfg = AcceptanceConfig(seed=args.seed, samples=args.samples)
    numbers = args.criterion or list(range(1, len(CRITERIA) + 1))
    results = [run_criterion(n, cfg) for n in numbers]
    for r in results:
        print(r.line(), file=sys.stderr)
    return {"criteria": [r.to_dict(args.timing) for r in results]}, all(r.passed for r in results)


COMMANDS = {
    "cohom": cmd_cohom,
    "sections": cmd_sections,
    "charge": cmd_charge,
    "monad": cmd_monad,
    "exccoll": cmd_exccoll,
    "minimal": cmd_minimal,
    "sweep": cmd_sweep,
    "accept": cmd_accept,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "pretty"), default="json")
    common.add_argument("--pretty", dest="format", action="store_const", const="pretty")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED)
    common.add_argument("--timing", action="store_true", help="include wall-clock timings (breaks byte-identity)")

    parser = argparse.ArgumentParser(
        prog="fano-instanton",
        description="Exact calculus for rank-2 instanton bundles on P^1 x F_1.",
        epilog=SIGN_CONVENTION,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cohom", parents=[common], help="cohomology of a line bundle")
    p.add_argument("--bundle", required=True, help='e.g. "-l - e" or "3l - e + 2xi"')

    p = sub.add_parser("sections", parents=[common], help="Cox monomial basis of H^0")
    p.add_argument("--bundle", required=True)
    p.add_argument("--list", action="store_true")

    p = sub.add_parser("charge", parents=[common], help="numerics of a charge (alpha, beta, gamma)")
    p.add_argument("--alpha", type=int, required=True)
    p.add_argument("--beta", type=int, required=True)
    p.add_argument("--gamma", type=int, required=True)
    p.add_argument("--delta", type=int, default=0)
    p.add_argument("--epsilon", type=int, default=0)

    p = sub.add_parser("monad", parents=[common], help="monad shape and Chern data")
    p.add_argument("--charge", required=True, help="A,B,G")
    p.add_argument("--defect", default="0,0", help="DELTA,EPSILON")

    p = sub.add_parser("exccoll", parents=[common], help="verify the exceptional collection")
    p.add_argument("--verify", action="store_true", default=True)

    p = sub.add_parser("minimal", parents=[common], help="verify an explicit minimal instanton")
    p.add_argument("--charge", choices=("422", "313"), required=True)
    p.add_argument("--verify", choices=("all",) + CHECKS, default="all")
    p.add_argument("--window", type=int, default=3)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--random-sections", action="store_true")
    p.add_argument("--line-point", help="point S0,S1 of the P^1 factor for the line check")

    p = sub.add_parser("sweep", parents=[common], help="grid property sweep")
    p.add_argument("kind", choices=SWEEPS)
    p.add_argument("--bound", type=int)
    p.add_argument("--alpha-max", type=int)
    p.add_argument("--gamma-max", type=int)
    p.add_argument("--beta-abs", type=int)
    p.add_argument("--defect-max", type=int)

    p = sub.add_parser("accept", parents=[common], help="run the acceptance suite")
    p.add_argument("--criterion", type=int, action="append", choices=range(1, len(CRITERIA) + 1))
    p.add_argument("--samples", type=int, default=10_000)
    return parser


def _pretty(obj, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if k == "table_text":
                lines.append(f"{pad}{k}:")
                lines.extend(pad + "  " + row for row in v.splitlines())
            elif isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_pretty(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(obj, list):
        if all(not isinstance(x, (dict, list)) for x in obj):
            lines.append(pad + ", ".join(map(str, obj)))
        else:
            for x in obj:
                lines.append(f"{pad}-")
                lines.extend(_pretty(x, indent + 1))
    else:
        lines.append(f"{pad}{obj}")
    return lines


def run(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    args = parser.parse_args(argv)  # exits with code 2 on usage errors
    start = time.perf_counter()
    report = {"schema": SCHEMA, "convention": SIGN_CONVENTION, "command": argv}
    code = 0
    try:
        result, ok = COMMANDS[args.command](args)
        report["result"] = result
        report["passed"] = ok
        code = 0 if ok else 1
    except UsageError as exc:
        parser.error(str(exc))
    except (ConsistencyFailure, InternalDefect, NonFiniteRegion) as exc:
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        report["passed"] = False
        code = 3
    except FanoError as exc:
        report["error"] = {"type": type(exc).__name__, "message": str(exc)}
        report["passed"] = False
        code = 1
    if args.timing:
        report["seconds"] = round(time.perf_counter() - start, 3)
    if args.format == "pretty":
        print("\n".join(_pretty(report)))
    else:
        print(json.dumps(report, indent=2, default=str))
    return code


def main() -> None:
    sys.exit(run())
