#!/usr/bin/env python3
"""Encode one problem at fixed lengths and report SAT/UNSAT per length.

Used to check whether a proof of exactly L steps exists at all:

    python3 scripts/length_probe.py corpus/varignon.p 8 10 12 --budget 600
"""

from __future__ import annotations

import argparse
import sys
import time

from clcomplete.cnf import lower
from clcomplete.encoder import Encoding
from clcomplete.logic import normalize
from clcomplete.solver import IncrementalSolver
from clcomplete.tptp import load_problem


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("problem")
    ap.add_argument("lengths", type=int, nargs="+")
    ap.add_argument("-b", dest="num_abducts", type=int, default=0)
    ap.add_argument("--budget", type=float, default=300.0)
    ap.add_argument("--external-solver")
    ap.add_argument("--no-hints", action="store_true")
    args = ap.parse_args(argv)
    pf = load_problem(args.problem)
    pr = normalize(pf)
    for m in args.lengths:
        t0 = time.monotonic()
        enc = Encoding(pr, m + args.num_abducts, args.num_abducts, () if args.no_hints else pf.hints)
        cnf = lower(enc.cp)
        res = IncrementalSolver(cnf, external=args.external_solver).solve(args.budget)
        print(f"m={m}: {res.status} vars={cnf.num_vars} clauses={len(cnf.clauses)} "
              f"{time.monotonic() - t0:.1f}s", flush=True)
    return 0


if __name__ == "__main__":
    sys.exit(main())
