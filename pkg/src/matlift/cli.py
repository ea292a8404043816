"""Command-line front end.

Exit codes:
    0  success
    1  hypothesis or engine failure (diagnostic names the error)
    2  usage, file or parse error
    3  verification failed
    4  enumeration budget exceeded
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace

from .demos import DEMOS, run_demo
from .errors import BudgetExceeded, MatliftError, ParseError, UnknownDemo, VerificationFailed
from .lift import lift_to_length
from .problem_io import load_problem, read_json, verify_solution
from .search import SearchBudget, residue_solutions

EXIT_OK, EXIT_ENGINE, EXIT_USAGE, EXIT_VERIFY, EXIT_BUDGET = 0, 1, 2, 3, 4


def _emit(args, payload: dict, table: str):
    text = table + "\n" if args.format == "table" else json.dumps(payload, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _diagnose(exc: MatliftError) -> dict:
    diag = {"error": exc.code, "message": str(exc)}
    loc = getattr(exc, "location", None)
    if loc is not None:
        diag["location"] = list(loc)
    return diag


def _load(args):
    prob = load_problem(args.problem)
    if getattr(args, "target_length", None) is not None:
        if not 1 <= args.target_length <= prob.ring.ell:
            raise ParseError(f"--target-length must lie in 1..{prob.ring.ell}")
        prob = replace(prob, target_length=args.target_length)
    if getattr(args, "strict_monic", False):
        prob = replace(prob, strict_monic=True)
    if getattr(args, "budget", None) is not None:
        prob = replace(prob, budget=args.budget)
    return prob


def cmd_lift(args) -> int:
    prob = _load(args)
    transcript = lift_to_length(prob.lift_problem())
    lines = [f"lift over {transcript.spec}: r = {transcript.profile.r}, case {transcript.profile.case}"]
    for rec in transcript.levels:
        mats = "  ".join(str(B.tolist()) for B in rec.matrices)
        lines.append(f"  level {rec.level}: {mats}  residual_zero={rec.residual_zero}")
    _emit(args, transcript.to_json(), "\n".join(lines))
    return EXIT_OK


def cmd_solve_residue(args) -> int:
    prob = _load(args)
    A, F = prob.at_target()
    sols = residue_solutions(A.reduce(1), F.reduce(1), budget=SearchBudget(prob.budget))
    payload = {"ring": prob.ring.at_length(1).to_json(), "count": len(sols),
               "solutions": [s.to_json() for s in sols]}
    lines = [f"{len(sols)} residue solutions"]
    for s in sols:
        lines.append(f"  {[B.tolist() for B in s.matrices]}  partials={s.classes}  "
                     f"r={s.r}  liftable={s.liftable}")
    _emit(args, payload, "\n".join(lines))
    return EXIT_OK


def cmd_verify(args) -> int:
    prob = _load(args)
    report = verify_solution(prob, read_json(args.solution))
    _emit(args, report, f"verified levels {report['levels']}")
    return EXIT_OK


def cmd_demo(args) -> int:
    ok, summary, table = run_demo(args.name)
    _emit(args, summary, table)
    return EXIT_OK if ok else EXIT_ENGINE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="matlift", description="Hensel lifting of matrix polynomial equations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("lift", help="lift the seed of a problem file to the target length")
    p.add_argument("problem")
    p.add_argument("--target-length", type=int)
    p.add_argument("--strict-monic", action="store_true")
    common(p)
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("solve-residue", help="enumerate residue-field solutions with their derivative profiles")
    p.add_argument("problem")
    p.add_argument("--budget", type=int)
    common(p)
    p.set_defaults(func=cmd_solve_residue)

    p = sub.add_parser("verify", help="check a solution file or transcript against a problem")
    p.add_argument("problem")
    p.add_argument("solution")
    p.add_argument("--target-length", type=int)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("demo", help="run a bundled reproduction")
    p.add_argument("name", help=", ".join(DEMOS))
    common(p)
    p.set_defaults(func=cmd_demo)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except MatliftError as exc:
        if isinstance(exc, (ParseError, UnknownDemo)):
            code = EXIT_USAGE
        elif isinstance(exc, VerificationFailed):
            code = EXIT_VERIFY
        elif isinstance(exc, BudgetExceeded):
            code = EXIT_BUDGET
        else:
            code = EXIT_ENGINE
        sys.stderr.write(json.dumps(_diagnose(exc)) + "\n")
        return code


if __name__ == "__main__":
    sys.exit(main())
