"""Solving lowered instances with the built-in CDCL solver or an external one.

`IncrementalSolver` wraps one CNF instance and supports repeated solving
with blocking clauses added in between. An external solver is any
executable that accepts a DIMACS file as its only argument and prints the
usual ``s SATISFIABLE`` / ``v ...`` lines (or minisat-style ``SAT`` plus a
literal line) on standard output.
"""

from __future__ import annotations

import os
import subprocess
import tempfile
import time
from dataclasses import dataclass, field

from .cdcl import SAT, UNKNOWN, UNSAT, CDCLSolver
from .cnf import CNFInstance, SolverOutputError, export_dimacs, import_model

TIMEOUT = "TIMEOUT"


@dataclass
class SolveResult:
    status: str  # SAT, UNSAT or TIMEOUT
    model: dict[str, int] | None = None
    seconds: float = 0.0
    conflicts: int = 0

    @property
    def sat(self) -> bool:
        return self.status == SAT


class IncrementalSolver:
    def __init__(self, instance: CNFInstance, seed: int = 0, external: str | None = None):
        self.instance = instance
        self.external = external
        self.extra: list[list[int]] = []
        self.seed = seed
        self._cdcl: CDCLSolver | None = None
        if external is None:
            self._cdcl = CDCLSolver(instance.num_vars, seed=seed)
            for cl in instance.clauses:
                if not self._cdcl.add_clause(cl):
                    break

    def add_clause(self, lits: list[int]) -> None:
        self.extra.append(list(lits))
        if self._cdcl is not None:
            self._cdcl.add_clause(lits)

    def solve(self, budget: float) -> SolveResult:
        if budget <= 0:
            return SolveResult(TIMEOUT)
        t0 = time.monotonic()
        if self._cdcl is not None:
            before = self._cdcl.stats.conflicts
            status = self._cdcl.solve(budget=budget)
            elapsed = time.monotonic() - t0
            conflicts = self._cdcl.stats.conflicts - before
            if status == SAT:
                model = self.instance.decode(self._cdcl.true_literals())
                return SolveResult(SAT, model, elapsed, conflicts)
            return SolveResult(UNSAT if status == UNSAT else TIMEOUT, None, elapsed, conflicts)
        return self._solve_external(budget, t0)

    def _solve_external(self, budget: float, t0: float) -> SolveResult:
        inst = CNFInstance(self.instance.num_vars, self.instance.clauses + self.extra,
                           self.instance.var_map, self.instance.domains)
        fd, path = tempfile.mkstemp(suffix=".cnf")
        try:
            with os.fdopen(fd, "wb") as fh:
                fh.write(export_dimacs(inst))
            try:
                proc = subprocess.run([self.external, path], capture_output=True, timeout=budget)
            except subprocess.TimeoutExpired:
                return SolveResult(TIMEOUT, None, time.monotonic() - t0)
            except OSError as exc:
                raise SolverOutputError(f"cannot run external solver {self.external}: {exc}") from None
        finally:
            os.unlink(path)
        model = import_model(inst, proc.stdout)
        elapsed = time.monotonic() - t0
        if model is None:
            return SolveResult(UNSAT, None, elapsed)
        return SolveResult(SAT, model, elapsed)


def solve(instance: CNFInstance, budget: float, seed: int = 0, external: str | None = None) -> SolveResult:
    """One-shot solve of ``instance`` within ``budget`` seconds."""
    if budget <= 0:
        raise ValueError("budget must be positive")
    for name, (lo, hi) in instance.domains.items():
        if hi <= lo:
            raise ValueError(f"empty one-hot group for {name}")
    return IncrementalSolver(instance, seed, external).solve(budget)


__all__ = ["SAT", "UNSAT", "UNKNOWN", "TIMEOUT", "SolveResult", "IncrementalSolver", "solve"]
