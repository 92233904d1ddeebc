"""Command-line front end: ``prover [-l SECONDS] [-m STEPS] [-b COUNT] ... FILE``.

Exit codes: 0 proved, 1 unprovable within the bound, 2 timeout, 3 input error.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from typing import Mapping, Sequence, TextIO

from .chase import Verdict
from .cnf import SolverOutputError
from .engine import Outcome, ProverOptions, prove
from .errors import ParseError, ProblemError
from .logic import normalize
from .render import render_structured, render_text
from .tptp import load_problem

EXIT_PROVED, EXIT_UNPROVABLE, EXIT_TIMEOUT, EXIT_INPUT = 0, 1, 2, 3
ENV_SOLVER = "PROVER_EXTERNAL_SOLVER"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="prover", description="Coherent-logic prover with abduction and goal filling.")
    p.add_argument("problem", help="problem file in TPTP fof syntax")
    p.add_argument("-l", dest="time_limit", type=float, default=100.0, metavar="SECONDS",
                   help="wall-clock limit (default 100)")
    p.add_argument("-m", dest="max_len", type=int, default=8, metavar="STEPS",
                   help="maximal proof length, abduct slots not counted (default 8)")
    p.add_argument("-b", dest="num_abducts", type=int, default=0, metavar="COUNT",
                   help="number of abduct slots (default 0)")
    p.add_argument("--deduct-all", action="store_true", help="list every goal that fills the wildcard")
    p.add_argument("--all-abducts", action="store_true",
                   help="keep enumerating abducts after the first consistent one")
    p.add_argument("--abduct-cap", type=int, default=200, help="maximal number of abducts or deducts")
    p.add_argument("--external-solver", metavar="PATH",
                   help=f"DIMACS solver executable (default: ${ENV_SOLVER} or the built-in solver)")
    p.add_argument("--format", choices=("text", "structured"), default="text")
    p.add_argument("--dump-cnf", metavar="PATH", help="write the DIMACS instance of the last length tried")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--no-hints", action="store_true", help="ignore hint formulas in the problem file")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def run_cli(argv: Sequence[str], env: Mapping[str, str] | None = None,
            stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    env = os.environ if env is None else env
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    try:
        args = build_parser().parse_args(list(argv))
    except _UsageError as exc:
        print(f"prover: {exc}", file=err)
        return EXIT_INPUT
    if args.verbose:
        logging.basicConfig(level=logging.INFO, stream=err)
    try:
        pf = load_problem(args.problem)
        problem = normalize(pf)
        opts = ProverOptions(
            time_limit=args.time_limit, max_len=args.max_len, num_abducts=args.num_abducts,
            abduct_enumeration_cap=args.abduct_cap,
            external_solver=args.external_solver or env.get(ENV_SOLVER) or None,
            seed=args.seed, deduct_all=args.deduct_all, all_abducts=args.all_abducts,
            dump_cnf=args.dump_cnf,
        )
        for w in pf.warnings:
            print(f"prover: warning: {w}", file=err)
        result = prove(problem, [] if args.no_hints else pf.hints, opts)
    except ParseError as exc:
        print(f"prover: {args.problem}:{exc}", file=err)
        return EXIT_INPUT
    except (ProblemError, ValueError, OSError, SolverOutputError) as exc:
        print(f"prover: {exc}", file=err)
        return EXIT_INPUT

    stats = result.statistics
    print(f"prover: {result.outcome.value}; {stats.summary()}", file=err)
    for f in result.abducts:
        if f.verdict != Verdict.CONSISTENT:
            names = ", ".join(_atom_text(a, f.proof) for a in f.abducts)
            print(f"prover: abduct {names}: {f.verdict.value}", file=err)

    if result.proved:
        emit = _emit_structured if args.format == "structured" else _emit_text
        proofs = [result.proof]
        if args.all_abducts:
            proofs = [f.proof for f in result.consistent_abducts]
        for i, proof in enumerate(proofs):
            if i:
                out.write("\n" + "-" * 40 + "\n\n")
            emit(proof, problem, out)
        if result.filled_goal is not None and args.format == "text":
            out.write("\nGoal filled: " + " ∧ ".join(_atom_text(a, result.proof) for a in result.filled_goal) + "\n")
        if args.deduct_all and args.format == "text":
            out.write("\nDeducts found:\n")
            for d in result.deducts:
                out.write("- " + " ∧ ".join(_atom_text(a, d.proof) for a in d.goal) + "\n")
        out.flush()
        return EXIT_PROVED
    if result.outcome == Outcome.TIMEOUT:
        return EXIT_TIMEOUT
    return EXIT_UNPROVABLE


def _atom_text(atom, proof) -> str:
    from .render import Names

    return Names(proof.symbols, proof.goal.exist_vars).atom(atom)


def _emit_text(proof, problem, out):
    out.write(render_text(proof, theory=problem.axioms))


def _emit_structured(proof, problem, out):
    out.write(render_structured(proof).decode("utf-8"))


def main(argv: Sequence[str] | None = None) -> int:
    return run_cli(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
