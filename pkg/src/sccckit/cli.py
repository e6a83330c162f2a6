"""Command line front end.

Two families of commands:

    sccckit verify {sccc|wproj|prep-state|ortho|born|equivalence} [flags]
    sccckit protocol teleport [flags]

Reports print as text on stdout; ``--json PATH`` additionally writes the
canonical JSON form (PATH ``-`` prints JSON instead of text).  The exit code
is 0 exactly when no check failed; expected failures do not fail a run.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

import numpy as np

from .errors import SccckitError
from .models import resolve_model
from .morphisms import Morphism
from .objects import Oplus, UNIT
from .protocols import run_teleportation
from .report import VerificationReport
from .semirings import COMPLEX
from .suites import SUITE_NAMES, run_suite

NU_CHOICES = {"1": Fraction(1), "1/2": Fraction(1, 2), "2": Fraction(2)}


def _default_seed() -> int:
    raw = os.environ.get("SCCCKIT_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        return 0


def _common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--model", default="fdhilb",
                   help="fdhilb, rel, weights, or wproj:<base> (default fdhilb)")
    p.add_argument("--trials", type=int, default=100,
                   help="random trials per check (default 100)")
    p.add_argument("--seed", type=int, default=_default_seed(),
                   help="base seed; defaults to $SCCCKIT_SEED or 0")
    p.add_argument("--tolerance", type=float, default=None,
                   help="relative tolerance for approximate equality")
    p.add_argument("--max-dim", type=int, default=4, dest="max_dim",
                   help="largest generator dimension swept (default 4)")
    p.add_argument("--json", nargs="?", const="-", default=None, dest="json_path",
                   metavar="PATH", help="write the JSON report to PATH (- for stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sccckit",
        description="Verify compact closed structure, phase quotients, "
                    "ortho-structure and Born-rule axioms on matrix models.")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a law suite against a model")
    verify.add_argument("suite", choices=list(SUITE_NAMES))
    _common_flags(verify)
    verify.add_argument("--nu", choices=sorted(NU_CHOICES), default="1",
                        help="valuation exponent for the born suite")

    protocol = sub.add_parser("protocol", help="run an end-to-end protocol")
    psub = protocol.add_subparsers(dest="protocol", required=True)
    teleport = psub.add_parser("teleport", help="teleport a qubit state")
    _common_flags(teleport)
    teleport.add_argument("--state", default=None, metavar="PAIRS",
                          help='input state as row-major [re, im] pairs, '
                               'e.g. "[[1,0],[0,0]]"')
    return parser


def _parse_state(text: str) -> Morphism:
    try:
        pairs = json.loads(text)
        column = np.array([[complex(re, im)] for re, im in pairs])
    except (ValueError, TypeError) as exc:
        raise ValueError(f"bad --state literal: {exc}")
    if column.shape != (2, 1):
        raise ValueError("teleportation takes a two-level state, "
                         f"got {column.shape[0]} amplitude pairs")
    return Morphism(UNIT, Oplus(UNIT, UNIT), column, COMPLEX)


def _emit(report: VerificationReport, json_path: str | None) -> int:
    if json_path == "-":
        sys.stdout.write(report.to_json())
    else:
        print(report.to_text())
        if json_path is not None:
            with open(json_path, "w") as fh:
                fh.write(report.to_json())
    return 0 if report.ok else 1


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        model = resolve_model(args.model)
    except ValueError as exc:
        print(f"sccckit: {exc}", file=sys.stderr)
        return 2

    try:
        if args.command == "verify":
            report = run_suite(args.suite, model, trials=args.trials,
                               seed=args.seed, tolerance=args.tolerance,
                               max_dim=args.max_dim, nu=NU_CHOICES[args.nu])
        else:
            psi = _parse_state(args.state) if args.state is not None else None
            report = run_teleportation(psi, model, seed=args.seed)
    except ValueError as exc:
        print(f"sccckit: {exc}", file=sys.stderr)
        return 2
    except SccckitError as exc:
        print(f"sccckit: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2

    return _emit(report, args.json_path)


if __name__ == "__main__":
    raise SystemExit(main())
