"""
Command-line frontend.

    python -m wbu_check colength 5 2 --brute
    python -m wbu_check wbu 2 3 --json
    python -m wbu_check verify-paper --rmax 12 --report-dir reports

Exit codes: 0 ok, 1 a checked identity or bound failed, 2 usage or domain error.
"""

import argparse
import logging
import sys

import pandas as pd

from .classifier_enum import enumerate_baskets, report_frame
from .config import DEFAULT_RMAX, TABLE_RMAX, setup_logging
from .core_arith import format_rational
from .envelope import OutputEnvelope, encode
from .errors import DomainError, VerificationError, WbuCheckError
from .monomial_ideals import (
    WeightTriple,
    colength_bruteforce,
    colength_closed_form,
    restate_conditions,
    valuation_ideal,
)
from .pipeline.run_pipeline import run_pipeline
from .reid_rr import (
    B_i,
    QuotientSingularity,
    aE3_from_basket,
    colength_via_C,
    contribution,
    dim_quotient_D,
    max_discrepancy,
    parse_basket,
)
from .wbu_toric import chi_quotient_reduced, contribution_sum, terminal_by_charts, tower_profile, wbu_profile

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_USAGE = 2


class UsageError(DomainError):
    """Arguments parse but make no sense together."""


def _cmd_colength(args):
    closed = colength_closed_form(args.l, args.m)
    result = {"l": args.l, "m": args.m, "colength": closed}
    status = "ok"
    if args.brute:
        brute = colength_bruteforce(WeightTriple(1, min(args.l, args.m), args.l), args.l)
        result["bruteforce"] = brute
        result["agree"] = brute == closed
        status = "ok" if brute == closed else "violation"
    return result, None, status


def _cmd_ideal(args):
    w = WeightTriple(args.wx, args.wy, args.wz)
    canonical, perm = w.canonicalize()
    ideal = valuation_ideal(w, args.i)
    condition_1, condition_2 = restate_conditions(w)
    result = {
        "weights": w.as_tuple(),
        "canonical_weights": canonical.as_tuple(),
        "permutation": perm,
        "threshold": args.i,
        "generators": ideal.monomial_strings(),
        "exponents": ideal.generators,
        "colength": colength_bruteforce(w, args.i),
        "condition_1": condition_1,
        "condition_2": condition_2,
    }
    table = pd.DataFrame(
        [{"generator": text, "s": g[0], "t": g[1], "u": g[2], "value": w.value(g)}
         for text, g in zip(ideal.monomial_strings(), ideal.generators)]
    )
    return result, table, "ok"


def _cmd_contrib(args):
    q = QuotientSingularity(args.r, args.b)
    result = {
        "type": q.type_string(),
        "i": args.i,
        "i_bar": args.i % q.r,
        "contribution": contribution(q, args.i),
    }
    return result, None, "ok"


def _cmd_basket(args):
    basket = parse_basket(args.basket)
    result = {"basket": basket, "given": basket.display_entries(), "index": basket.index}
    table = None

    if args.colengths is not None:
        if args.colengths < 1:
            raise UsageError(f"--colengths needs a positive bound, got {args.colengths}")
        if args.a is not None and args.colengths > args.a:
            raise UsageError(f"formula (C) holds only for i <= a = {args.a}, asked for i <= {args.colengths}")
        rows = [{"i": i, "colength": colength_via_C(basket, i)} for i in range(1, args.colengths + 1)]
        result["colengths"] = [row["colength"] for row in rows]
        table = pd.DataFrame(rows)
    elif args.aE3:
        result["aE3"] = aE3_from_basket(basket)
    elif args.maxa:
        result["max_a"] = max_discrepancy(basket)
    elif args.dimD:
        result["dimD"] = dim_quotient_D(basket)
    else:
        result["B_1"] = B_i(basket, 1)
        result["aE3"] = aE3_from_basket(basket)
        result["max_a"] = max_discrepancy(basket)
        result["dimD"] = dim_quotient_D(basket)
    return result, table, "ok"


def _cmd_wbu(args):
    profile = wbu_profile(args.a, args.b)
    result = {
        "weights": profile.weights.as_tuple(),
        "discrepancy": profile.discrepancy,
        "E3": profile.E3,
        "basket": profile.basket,
        "e": profile.e,
        "terminal": terminal_by_charts(profile.weights),
        "charts": [
            {"chart": point.chart, "type": point.singularity.type_string(), "v": point.v}
            for point in profile.charts
        ],
    }
    table = pd.DataFrame(result["charts"], columns=["chart", "type", "v"])
    if args.chi:
        rows = [
            {
                "i": i,
                "A_i": format_rational(contribution_sum(profile, i)),
                "chi_reduced": format_rational(chi_quotient_reduced(profile, i)),
            }
            for i in range(1, profile.discrepancy + 1)
        ]
        result["chi"] = rows
        table = pd.DataFrame(rows)
    return result, table, "ok"


def _cmd_tower(args):
    tower = tower_profile(args.m, args.n)
    rows = [
        {
            "step": step.index,
            "center": step.center,
            "weights": f"(1,{step.weights[1]},{step.weights[2]})",
            "discrepancy": step.discrepancy,
            "coefficient": step.coefficient,
        }
        for step in tower.steps
    ]
    result = {"m": tower.m, "n": tower.n, "discrepancy": tower.discrepancy, "steps": rows}
    return result, pd.DataFrame(rows), "ok"


def _cmd_enumerate(args):
    report = enumerate_baskets(args.s, args.rmax, workers=args.workers)
    frame = report_frame(report)
    if args.csv:
        frame.to_csv(args.csv, index=False)
        logger.info("** Report saved: %s", args.csv)
    result = {
        "s_target": report.s_target,
        "r_max": report.r_max,
        "rows": frame.to_dict(orient="records"),
        "family_notes": [str(note) for note in report.family_notes],
    }
    return result, frame, "ok"


def _cmd_verify_paper(args):
    if args.rmax < TABLE_RMAX:
        raise UsageError(f"--rmax must be at least {TABLE_RMAX}, got {args.rmax}")
    outcome = run_pipeline(rmax=args.rmax, report_dir=args.report_dir, workers=args.workers)
    result = {
        "checks": int(outcome.summary["cases"].sum()),
        "violations": int(outcome.summary["violations"].sum()),
        "stages": outcome.summary.to_dict(orient="records"),
    }
    if not outcome.ok:
        result["first_violation"] = outcome.violations.iloc[0].to_dict()
    return result, outcome.summary, "ok" if outcome.ok else "violation"


def _add_common_flags(parser, suppress=False):
    """--json and the logging flags; subparser copies use SUPPRESS so they never reset the main ones."""
    def default(value):
        return argparse.SUPPRESS if suppress else value

    parser.add_argument("--json", action="store_true", default=default(False), help="print the JSON envelope")
    parser.add_argument("--verbose", action="store_true", default=default(False), help="debug logging")
    parser.add_argument("--quiet", action="store_true", default=default(False), help="warnings only")
    parser.add_argument("--log-file", default=default(None), help="also write logs to this file")


def build_parser():
    parser = argparse.ArgumentParser(prog="wbu_check", description=__doc__.strip().splitlines()[0])
    _add_common_flags(parser)
    common = argparse.ArgumentParser(add_help=False)
    _add_common_flags(common, suppress=True)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("colength", parents=[common], help="closed-form colength l - 1/2 min_j ((1+j)m - 2l)j")
    p.add_argument("l", type=int)
    p.add_argument("m", type=int)
    p.add_argument("--brute", action="store_true", help="also count monomials of (1, min(l,m), l)")
    p.set_defaults(handler=_cmd_colength)

    p = sub.add_parser("ideal", parents=[common], help="minimal generators of a valuation ideal")
    for name in ("wx", "wy", "wz", "i"):
        p.add_argument(name, type=int)
    p.set_defaults(handler=_cmd_ideal)

    p = sub.add_parser("contrib", parents=[common], help="contribution c_Q of 1/r(1,-1,b) at i")
    for name in ("r", "b", "i"):
        p.add_argument(name, type=int)
    p.set_defaults(handler=_cmd_contrib)

    p = sub.add_parser("basket", parents=[common], help="evaluate a basket \"(r1,v1),(r2,v2),...\"")
    p.add_argument("basket")
    ops = p.add_mutually_exclusive_group()
    ops.add_argument("--aE3", action="store_true")
    ops.add_argument("--maxa", action="store_true")
    ops.add_argument("--colengths", type=int, metavar="I")
    ops.add_argument("--dimD", action="store_true")
    p.add_argument("--a", type=int, metavar="A", help="intended discrepancy; caps --colengths")
    p.set_defaults(handler=_cmd_basket)

    p = sub.add_parser("wbu", parents=[common], help="profile of the (1, a, b) weighted blow-up")
    p.add_argument("a", type=int)
    p.add_argument("b", type=int)
    p.add_argument("--chi", action="store_true", help="A_i and reduced chi(Q_i) for 1 <= i <= a + b")
    p.set_defaults(handler=_cmd_wbu)

    p = sub.add_parser("tower", parents=[common], help="blow-up tower for the (1, m, n) valuation")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.set_defaults(handler=_cmd_tower)

    p = sub.add_parser("enumerate", parents=[common], help="all baskets with sum v = s and r <= rmax")
    p.add_argument("s", type=int)
    p.add_argument("rmax", type=int)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--csv", help="also write the report to this CSV file")
    p.set_defaults(handler=_cmd_enumerate)

    p = sub.add_parser("verify-paper", parents=[common], help="run every acceptance check")
    p.add_argument("--rmax", type=int, default=DEFAULT_RMAX)
    p.add_argument("--report-dir", help="write certificates.csv and violations.csv here")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(handler=_cmd_verify_paper)

    return parser


def _log_level(args):
    if args.verbose:
        return logging.DEBUG
    if args.quiet:
        return logging.WARNING
    return logging.INFO if args.command == "verify-paper" else logging.WARNING


def _print_human(result, table):
    for key, value in encode(result).items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            continue
        print(f"{key}: {value}")
    if table is not None and not table.empty:
        print()
        print(table.to_string(index=False))


def _inputs(args):
    skip = {"handler", "json", "verbose", "quiet", "log_file", "command"}
    return {key: value for key, value in vars(args).items() if key not in skip}


def run(argv=None):
    """Parse argv, dispatch, print the result; returns the exit code."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE

    setup_logging(_log_level(args), args.log_file)
    inputs = _inputs(args)
    try:
        result, table, status = args.handler(args)
        code = EXIT_OK if status == "ok" else EXIT_VIOLATION
    except VerificationError as exc:
        logger.error("%s", exc)
        result, table, status, code = exc.to_dict(), None, "violation", EXIT_VIOLATION
    except WbuCheckError as exc:
        logger.error("%s: %s", args.command, exc)
        result, table, status, code = {"error": str(exc)}, None, "error", EXIT_USAGE
    except Exception as exc:
        logging.error("unexpected failure in %s: %s", args.command, exc, exc_info=True)
        result, table, status, code = {"error": str(exc)}, None, "error", EXIT_USAGE

    if args.json:
        print(OutputEnvelope(args.command, inputs, result, status).to_json())
    elif status == "error":
        print(f"error: {result['error']}", file=sys.stderr)
    else:
        _print_human(result, table)
    return code


def main():
    sys.exit(run())
