"""Batch verification front end.

Four subcommands: verify runs the axiom suite on a parsed system spec,
check runs one claim from the catalog, enumerate produces automorphism
sets, and claims lists the claim catalog.  All output is JSON (human
tables behind --pretty); exit codes are
0 pass, 1 claim or axiom failure, 2 usage error, 3 budget exceeded.
"""

import argparse
import json
import os
import sys

from . import claims as claimcat
from .catalog import parse_system
from .errors import (BadDims, BadInput, BudgetExceeded, NonEnumerableRing,
                     NonFieldRing, ParseError, ShapeMismatch, ToolkitError,
                     UnknownClaim)
from .jordan import check_axioms
from .oracle import element_jsonable, enumerate_automorphisms

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

_USAGE_ERRORS = (ParseError, UnknownClaim, BadDims, BadInput,
                 NonEnumerableRing, NonFieldRing, ShapeMismatch)


def _pretty_lines(obj, indent=0):
    pad = "  " * indent
    if isinstance(obj, dict):
        for key, value in obj.items():
            if isinstance(value, (dict, list)) and value:
                yield f"{pad}{key}:"
                yield from _pretty_lines(value, indent + 1)
            else:
                yield f"{pad}{key}: {json.dumps(value, default=str)}"
    elif isinstance(obj, list):
        for value in obj:
            if isinstance(value, (dict, list)):
                yield f"{pad}-"
                yield from _pretty_lines(value, indent + 1)
            else:
                yield f"{pad}- {json.dumps(value, default=str)}"
    else:
        yield f"{pad}{json.dumps(obj, default=str)}"


def _emit(report: dict, args) -> None:
    text = json.dumps(report, indent=2, sort_keys=True, default=str) + "\n"
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
        return
    if getattr(args, "pretty", False):
        print("\n".join(_pretty_lines(report)))
    else:
        sys.stdout.write(text)


def _cmd_verify(args) -> int:
    system = parse_system(args.system)
    ax = check_axioms(system.structure)
    report = {
        "system": system.name,
        "ring": system.ring.name,
        "ok": ax.ok,
        "kind": ax.kind,
        "identities_checked": ax.checked,
        "failures": list(ax.failures[:4]),
    }
    _emit(report, args)
    return EXIT_PASS if ax.ok else EXIT_FAIL


def _cmd_check(args) -> int:
    report = claimcat.run_claim(args.claim, ring=args.ring, n=args.n,
                                m=args.m, budget=args.budget,
                                jobs=args.jobs)
    _emit(report, args)
    return EXIT_PASS if report["pass"] else EXIT_FAIL


def _cmd_enumerate(args) -> int:
    system = parse_system(args.system)
    if args.mode == "exhaustive":
        aset = enumerate_automorphisms(system, budget=args.budget,
                                       jobs=args.jobs)
        provenance = (f"exhaustive scan of {aset.candidates} candidates "
                      f"(engine {aset.engine})")
    else:
        aset, provenance = claimcat.standard_generated(system,
                                                       budget=args.budget)
    report = {
        "system": aset.system,
        "ring": aset.ring_name,
        "mode": aset.mode,
        "order": aset.order,
        "generator_provenance": provenance,
    }
    if args.dump_elements:
        report["elements"] = [element_jsonable(el) for el in aset.elements]
    _emit(report, args)
    return EXIT_PASS


def _cmd_claims(args) -> int:
    _emit({"claims": claimcat.list_claims()}, args)
    return EXIT_PASS


def _add_output_flags(sub) -> None:
    sub.add_argument("--out", help="write the JSON report to this file")
    sub.add_argument("--pretty", action="store_true",
                     help="human-readable table instead of JSON on stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="jpaut",
        description="Exact-arithmetic checks of Jordan pair, triple and "
                    "algebra automorphism groups at desk scale.")
    subs = parser.add_subparsers(dest="command", required=True)

    p_verify = subs.add_parser(
        "verify", help="run the axiom suite on a system spec like "
                       "'VIV(n=2,ring=F5)' or 'VhI(1,2,F3)'")
    p_verify.add_argument("system")
    _add_output_flags(p_verify)
    p_verify.set_defaults(func=_cmd_verify)

    p_check = subs.add_parser(
        "check", help="run one claim from the catalog")
    p_check.add_argument("claim")
    p_check.add_argument("--ring", help="ring name, e.g. F3, F5, F3xF3")
    p_check.add_argument("--n", type=int)
    p_check.add_argument("--m", type=int)
    p_check.add_argument("--budget", type=int,
                         help="candidate/closure budget override")
    p_check.add_argument("--jobs", type=int,
                         default=os.cpu_count() or 1,
                         help="worker count (results never depend on it)")
    _add_output_flags(p_check)
    p_check.set_defaults(func=_cmd_check)

    p_enum = subs.add_parser(
        "enumerate", help="enumerate the automorphism set of a system")
    p_enum.add_argument("system")
    p_enum.add_argument("--mode", choices=("exhaustive", "generated"),
                        default="exhaustive")
    p_enum.add_argument("--budget", type=int)
    p_enum.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    p_enum.add_argument("--dump-elements", action="store_true",
                        help="include the element list in the JSON")
    _add_output_flags(p_enum)
    p_enum.set_defaults(func=_cmd_enumerate)

    p_claims = subs.add_parser("claims", help="list the claim catalog")
    _add_output_flags(p_claims)
    p_claims.set_defaults(func=_cmd_claims)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, args)
        return EXIT_BUDGET
    except _USAGE_ERRORS as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)}, args)
        return EXIT_USAGE
    except ToolkitError as exc:
        # remaining domain errors mean a claim-level failure
        _emit({"error": type(exc).__name__, "message": str(exc)}, args)
        return EXIT_FAIL


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    sys.exit(main())
