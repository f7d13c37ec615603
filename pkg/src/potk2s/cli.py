"""Command-line front end.

Structured output is JSON-lines on stdout, one record per line; human
diagnostics go to stderr.  Exit codes: 0 for an affirmative verdict (or a
clean sweep), 1 for a negative verdict (or mismatches), 2 for errors and
out-of-scope inputs.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from importlib import resources

from . import __version__
from .decider import Verdict, is_potentially_k24, is_potentially_k25
from .extremal import (
    run_sweep,
    sigma_extremal_value,
    sigma_formula_consistency,
    witness_check,
)
from .oracle import DEFAULT_BUDGET, is_potentially_subgraph
from .reduction import rho, rho_prime
from .seqcore import (
    InvalidInput,
    NotApplicable,
    OutOfScope,
    format_sequence,
    is_graphic,
    is_graphic_eg,
    layoff,
    normalize,
    parse_sequence,
)

BUDGET_ENV = "POTK2S_BUDGET"


def _emit(record: dict) -> None:
    sys.stdout.write(json.dumps(record) + "\n")


def _catalog_checksum(filename: str) -> str:
    data = (resources.files("potk2s") / "data" / filename).read_bytes()
    return hashlib.sha256(data).hexdigest()[:12]


def _default_budget(args) -> int:
    if args.budget is not None:
        return args.budget
    return int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))


def _verdict_record(text: str, verdict: Verdict) -> dict:
    pi = parse_sequence(text)
    residuals = []
    for entry in verdict.trace:
        if entry.get("condition") == 3:
            residuals = entry.get("decompositions", [])
    return {
        "sequence": format_sequence(pi.terms),
        "n": pi.n,
        "sigma": pi.sigma,
        "graphic": True,
        "verdict": verdict.decision,
        "reason": verdict.reason,
        "matched_exception": verdict.matched_exception,
        "condition3_residuals": residuals,
    }


def _cmd_graphic(args) -> int:
    pi = parse_sequence(args.sequence)
    by_layoff = is_graphic(pi)
    by_eg = is_graphic_eg(pi)
    assert by_layoff == by_eg
    _emit({"sequence": format_sequence(pi.terms), "n": pi.n,
           "sigma": pi.sigma, "graphic": by_layoff,
           "methods": {"layoff": by_layoff, "erdos_gallai": by_eg}})
    return 0 if by_layoff else 1


def _cmd_layoff(args) -> int:
    pi = parse_sequence(args.sequence)
    result = layoff(pi, args.k)
    _emit({"sequence": format_sequence(pi.terms), "k": args.k,
           "result": format_sequence(result.terms)})
    return 0


def _cmd_rho(args) -> int:
    pi = parse_sequence(args.sequence)
    first = rho_prime(pi, args.s)
    second = rho(pi, args.s)
    if second and min(second) < 0:
        graphic = False
    else:
        graphic = is_graphic(normalize(second))
    _emit({"sequence": format_sequence(pi.terms), "s": args.s,
           "rho_prime": format_sequence(first),
           "rho": format_sequence(second), "rho_graphic": graphic})
    return 0 if graphic else 1


def _decide(args, decider, min_n: int, s: int) -> int:
    pi = parse_sequence(args.sequence)
    if getattr(args, "oracle_fallback", False) and pi.n < min_n:
        result = is_potentially_subgraph(pi, "k2s", s,
                                         budget=_default_budget(args))
        if result.status == "budget_exceeded":
            raise InvalidInput("oracle fallback exceeded its budget")
        _emit({"sequence": format_sequence(pi.terms), "n": pi.n,
               "sigma": pi.sigma, "graphic": True, "verdict": result.found,
               "reason": f"oracle:{result.status}", "matched_exception": None,
               "condition3_residuals": []})
        return 0 if result.found else 1
    verdict = decider(pi)
    _emit(_verdict_record(args.sequence, verdict))
    return 0 if verdict.decision else 1


def _cmd_k24(args) -> int:
    return _decide(args, is_potentially_k24, 6, 4)


def _cmd_k25(args) -> int:
    return _decide(args, is_potentially_k25, 7, 5)


def _cmd_oracle(args) -> int:
    pi = parse_sequence(args.sequence)
    kind = "k1s" if args.target == "k1s" else "k2s"
    s = args.s if args.target == "k1s" else {"k25": 5, "k24": 4}[args.target]
    result = is_potentially_subgraph(pi, kind, s, budget=_default_budget(args))
    _emit({"sequence": format_sequence(pi.terms), "target": args.target,
           "s": s, "status": result.status,
           "nodes_explored": result.nodes_explored,
           "witness_edges": result.witness.edges() if result.witness else None})
    if result.status == "found_witness":
        return 0
    return 1 if result.status == "exhausted_no_witness" else 2


def _cmd_sweep(args) -> int:
    report = run_sweep(args.n, target=args.target, mode=args.mode,
                       budget=_default_budget(args), jobs=args.jobs)
    for row in report.not_potentially:
        _emit(row)
    _emit(report.summary_record())
    if args.out:
        report.write_jsonl(args.out)
    return 1 if report.mismatches or report.budget_exceeded else 0


def _cmd_sigma(args) -> int:
    value = sigma_extremal_value(args.n, target=args.target)
    formula = 5 * args.n - 3 if args.n % 2 else 5 * args.n - 2
    record = {"n": args.n, "target": args.target, "sigma_extremal": value}
    if args.target == "k25":
        record["formula_value"] = formula
        record["matches_formula"] = value == formula
        record["formula_note"] = ("closed form claimed for n >= 37 only"
                                  if args.n < 37 else "within claimed range")
    _emit(record)
    return 0


def _cmd_witness(args) -> int:
    report = witness_check(args.n)
    _emit({"n": report.n, "parity": report.parity,
           "sequence": report.sequence, "sigma": report.sigma,
           "sigma_expected": report.sigma_expected, "graphic": report.graphic,
           "potentially_k25": report.decision, "reason": report.reason,
           "implied_bound": report.implied_bound,
           "bound_expected": report.bound_expected, "ok": report.ok})
    return 0 if report.ok else 1


def _cmd_formula_check(args) -> int:
    reports = sigma_formula_consistency(args.n_from, args.n_to)
    all_ok = True
    for rep in reports:
        _emit({"n": rep.n, "formula": rep.formula,
               "max_exception_sigma": rep.max_exception_sigma,
               "max_condition3_sigma": rep.max_condition3_sigma,
               "eliminations": [{"bound": name, "value": value}
                                for name, value in rep.eliminations],
               "ok": rep.ok})
        all_ok = all_ok and rep.ok
    return 0 if all_ok else 1


def _version_string() -> str:
    return (f"potk2s {__version__} "
            f"(catalogs: k24 {_catalog_checksum('k24_exceptions.txt')}, "
            f"k25 {_catalog_checksum('k25_exceptions.txt')})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="potk2s",
        description="Degree-sequence toolkit for potentially K_{2,s}-graphic "
                    "decisions, realization search, and extremal sweeps.")
    parser.add_argument("--version", action="version",
                        version=_version_string())
    sub = parser.add_subparsers(dest="command", required=True)

    def add_sequence(p):
        p.add_argument("sequence", nargs="+",
                       help="degree sequence, e.g. '5^2,2^5' or '5 5 2 2 2 2 2'")

    p = sub.add_parser("graphic", help="test graphicality")
    add_sequence(p)
    p.set_defaults(func=_cmd_graphic)

    p = sub.add_parser("layoff", help="lay off the k-th term")
    p.add_argument("--k", type=int, required=True)
    add_sequence(p)
    p.set_defaults(func=_cmd_layoff)

    p = sub.add_parser("rho", help="two-step K_{2,s} reduction")
    p.add_argument("--s", type=int, required=True)
    add_sequence(p)
    p.set_defaults(func=_cmd_rho)

    for name, helptext in (("k24", "potentially K_{2,4} decision"),
                           ("k25", "potentially K_{2,5} decision")):
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--oracle-fallback", action="store_true",
                       help="route inputs below the decider's range to the "
                            "realization oracle")
        p.add_argument("--budget", type=int, default=None)
        add_sequence(p)
        p.set_defaults(func=_cmd_k24 if name == "k24" else _cmd_k25)

    p = sub.add_parser("oracle", help="realization search for a target subgraph")
    p.add_argument("--target", choices=("k25", "k24", "k1s"), required=True)
    p.add_argument("--s", type=int, default=5,
                   help="leaf count for --target k1s")
    p.add_argument("--budget", type=int, default=None)
    add_sequence(p)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("sweep", help="classify all graphic sequences of length n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=("decider", "oracle", "both"),
                   default="both")
    p.add_argument("--target", choices=("k25", "k24"), default="k25")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--budget", type=int, default=None)
    p.add_argument("--out", default=None, help="also write report JSON-lines here")
    p.set_defaults(func=_cmd_sweep)

    p = sub.add_parser("sigma", help="extremal sum sigma(H, n) by decider scan")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--target", choices=("k25", "k24"), default="k25")
    p.set_defaults(func=_cmd_sigma)

    p = sub.add_parser("witness", help="check the extremal witness sequence")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_witness)

    p = sub.add_parser("formula-check",
                       help="support checks for the sigma(K_{2,5}, n) closed form")
    p.add_argument("--from", dest="n_from", type=int, default=37)
    p.add_argument("--to", dest="n_to", type=int, default=60)
    p.set_defaults(func=_cmd_formula_check)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if hasattr(args, "sequence") and isinstance(args.sequence, list):
        args.sequence = " ".join(args.sequence)
    try:
        return args.func(args)
    except (InvalidInput, NotApplicable, OutOfScope) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
