#!/usr/bin/env python3
"""DIMACS solver wrapper around python-sat's CaDiCaL, for --external-solver.

Not a package dependency; install with ``pip install python-sat`` first.

    prover --external-solver scripts/pysat_solver.py -m12 corpus/varignon.p
"""

import sys

from pysat.formula import CNF
from pysat.solvers import Solver


def main(path: str) -> int:
    cnf = CNF(from_file=path)
    with Solver(name="cadical153", bootstrap_with=cnf.clauses) as s:
        if s.solve():
            print("s SATISFIABLE")
            print("v " + " ".join(map(str, s.get_model())) + " 0")
        else:
            print("s UNSATISFIABLE")
    return 0


if __name__ == "__main__":
    sys.exit(main(sys.argv[1]))
