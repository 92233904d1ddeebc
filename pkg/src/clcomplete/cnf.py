"""Lowering of finite-domain constraint problems to CNF, and DIMACS I/O.

Every variable gets a one-hot (direct) encoding: one propositional variable
per domain value with exactly-one clauses. Domains of size two share a single
propositional variable. Boolean structure is converted with a
Plaisted-Greenbaum style Tseitin transformation after pushing negations to
the atoms.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Iterable

from .constraints import (
    NEGATED_OP, OPS, And, Const, ConstraintProblem, Expr, Iff, Implies, IntVar, Lin, Not, Or,
)

PAIRWISE_LIMIT = 6  # larger domains use a sequential-counter at-most-one


class LoweringError(ValueError):
    pass


@dataclass
class CNFInstance:
    num_vars: int = 0
    clauses: list[list[int]] = field(default_factory=list)
    var_map: dict[tuple[str, int], int] = field(default_factory=dict)  # (variable, value) -> literal
    domains: dict[str, tuple[int, int]] = field(default_factory=dict)

    def new_var(self) -> int:
        self.num_vars += 1
        return self.num_vars

    def add_clause(self, lits: Iterable[int]) -> None:
        self.clauses.append(list(lits))

    def literal(self, var: str, value: int) -> int:
        return self.var_map[(var, value)]

    def decode(self, assignment) -> dict[str, int]:
        """Invert the one-hot groups. ``assignment`` maps var -> bool (or is a set of true literals)."""
        true = _true_set(assignment)
        model = {}
        for name, (lo, hi) in self.domains.items():
            vals = [a for a in range(lo, hi) if self.var_map[(name, a)] in true]
            if len(vals) != 1:
                raise LoweringError(f"assignment breaks the one-hot group of {name}")
            model[name] = vals[0]
        return model

    def blocking_clause(self, values: dict[str, int]) -> list[int]:
        """Clause excluding the joint assignment ``values``."""
        return [-self.var_map[(name, v)] for name, v in values.items()]


def _true_set(assignment) -> set[int]:
    if isinstance(assignment, dict):
        return {v if val else -v for v, val in assignment.items()}
    return set(assignment)


class _Lowerer:
    def __init__(self, cnf: CNFInstance):
        self.cnf = cnf

    # -- variables ---------------------------------------------------------

    def declare(self, v: IntVar) -> None:
        cnf = self.cnf
        cnf.domains[v.name] = (v.lo, v.hi)
        if v.size == 1:
            p = cnf.new_var()
            cnf.var_map[(v.name, v.lo)] = p
            cnf.add_clause([p])
            return
        if v.size == 2:
            p = cnf.new_var()
            cnf.var_map[(v.name, v.lo)] = -p
            cnf.var_map[(v.name, v.lo + 1)] = p
            return
        lits = []
        for a in v.domain:
            p = cnf.new_var()
            cnf.var_map[(v.name, a)] = p
            lits.append(p)
        cnf.add_clause(lits)  # at least one
        if len(lits) <= PAIRWISE_LIMIT:
            for i in range(len(lits)):
                for j in range(i + 1, len(lits)):
                    cnf.add_clause([-lits[i], -lits[j]])
        else:  # sequential counter
            s = [cnf.new_var() for _ in range(len(lits) - 1)]
            cnf.add_clause([-lits[0], s[0]])
            for i in range(1, len(lits) - 1):
                cnf.add_clause([-lits[i], s[i]])
                cnf.add_clause([-s[i - 1], s[i]])
                cnf.add_clause([-lits[i], -s[i - 1]])
            cnf.add_clause([-lits[-1], -s[-1]])

    # -- atoms ---------------------------------------------------------------

    def _in(self, v: IntVar, allowed: list[int]) -> list[list[int]]:
        """CNF of ``v in allowed``."""
        if len(allowed) == v.size:
            return []
        if not allowed:
            return [[]]
        vm = self.cnf.var_map
        if v.size - len(allowed) == 1:
            (missing,) = set(v.domain) - set(allowed)
            return [[-vm[(v.name, missing)]]]
        return [[vm[(v.name, a)] for a in allowed]]

    def atom(self, lin: Lin) -> list[list[int]]:
        op = OPS[lin.op]
        if len(lin.terms) == 1:
            (c, v), = lin.terms
            return self._in(v, [a for a in v.domain if op(c * a, lin.k)])
        if len(lin.terms) != 2:
            raise LoweringError(f"unsupported linear atom {lin!r}")
        (c1, x), (c2, y) = lin.terms
        if x is y:
            return self._in(x, [a for a in x.domain if op((c1 + c2) * a, lin.k)])
        vm = self.cnf.var_map
        out = []
        for a in x.domain:
            allowed = [b for b in y.domain if op(c1 * a + c2 * b, lin.k)]
            for cl in self._in(y, allowed):
                out.append([-vm[(x.name, a)]] + cl)
        for b in y.domain:
            allowed = [a for a in x.domain if op(c1 * a + c2 * b, lin.k)]
            for cl in self._in(x, allowed):
                out.append([-vm[(y.name, b)]] + cl)
        return out

    # -- boolean structure -------------------------------------------------

    def cnf_of(self, e: Expr, positive: bool = True) -> list[list[int]]:
        """Clauses implied by (and, together with fresh variables, equisatisfiable with) ``e``."""
        if isinstance(e, Lin):
            return self.atom(e if positive else Lin(e.terms, NEGATED_OP[e.op], e.k))
        if isinstance(e, Const):
            return [] if e.value == positive else [[]]
        if isinstance(e, Not):
            return self.cnf_of(e.item, not positive)
        if isinstance(e, Implies):
            return self._or([(e.lhs, not positive), (e.rhs, positive)]) if positive else (
                self.cnf_of(e.lhs, True) + self.cnf_of(e.rhs, False)
            )
        if isinstance(e, Iff):
            if positive:
                return self._or([(e.lhs, False), (e.rhs, True)]) + self._or([(e.lhs, True), (e.rhs, False)])
            return self._or([(e.lhs, True), (e.rhs, True)]) + self._or([(e.lhs, False), (e.rhs, False)])
        if isinstance(e, (And, Or)):
            is_and = isinstance(e, And) == positive
            if is_and:
                out = []
                for item in e.items:
                    sub = self.cnf_of(item, positive)
                    if sub == [[]]:
                        return [[]]
                    out.extend(sub)
                return out
            return self._or([(item, positive) for item in e.items])
        raise LoweringError(f"unknown expression {e!r}")

    def _or(self, parts) -> list[list[int]]:
        children = []
        for item, pol in parts:
            sub = self.cnf_of(item, pol)
            if not sub:
                return []  # a true disjunct
            if sub == [[]] or any(len(c) == 0 for c in sub):
                continue  # a false disjunct
            children.append(sub)
        if not children:
            return [[]]
        multi = [c for c in children if len(c) > 1]
        base: list[int] = []
        keep = None
        if multi:
            keep = max(multi, key=len)
        for ch in children:
            if ch is keep:
                continue
            if len(ch) == 1:
                base.extend(ch[0])
            else:
                t = self.cnf.new_var()
                for cl in ch:
                    self.cnf.add_clause([-t] + cl)
                base.append(t)
        if keep is None:
            return [_dedupe(base)]
        return [_dedupe(cl + base) for cl in keep]


def _dedupe(lits: list[int]) -> list[int]:
    return list(dict.fromkeys(lits))


def lower(problem: ConstraintProblem) -> CNFInstance:
    cnf = CNFInstance()
    low = _Lowerer(cnf)
    for v in problem.variables:
        low.declare(v)
    for c in problem.constraints:
        for cl in low.cnf_of(c):
            if any(-l in cl for l in cl):
                continue  # tautology
            cnf.add_clause(cl)
    return cnf


# ---------------------------------------------------------------------------
# DIMACS


def export_dimacs(instance: CNFInstance) -> bytes:
    lines = [f"p cnf {instance.num_vars} {len(instance.clauses)}"]
    lines += [" ".join(map(str, cl)) + " 0" if cl else "0" for cl in instance.clauses]
    return ("\n".join(lines) + "\n").encode("ascii")


def parse_dimacs(data: bytes | str) -> tuple[int, list[list[int]]]:
    text = data.decode("ascii") if isinstance(data, bytes) else data
    num_vars, clauses, cur = 0, [], []
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad DIMACS header {line!r}")
            num_vars = int(parts[2])
            continue
        for tok in line.split():
            lit = int(tok)
            if lit == 0:
                clauses.append(cur)
                cur = []
            else:
                cur.append(lit)
    if cur:
        clauses.append(cur)
    return num_vars, clauses


class SolverOutputError(ValueError):
    pass


_SAT = re.compile(r"^(s\s+)?SAT(ISFIABLE)?\s*$", re.M)
_UNSAT = re.compile(r"^(s\s+)?UNSAT(ISFIABLE)?\s*$", re.M)


def import_model(instance: CNFInstance | None, output: bytes | str):
    """Parse external solver output.

    Returns None for UNSAT, else the set of true literals (decoded through
    ``instance.var_map`` into a variable->value dict when an instance is
    given). Accepts competition style (``s``/``v`` lines) and minisat result
    files (``SAT`` followed by a literal line).
    """
    text = output.decode("utf-8", "replace") if isinstance(output, bytes) else output
    if _UNSAT.search(text):
        return None
    if not _SAT.search(text):
        raise SolverOutputError("solver output has neither a SAT assignment nor an UNSAT marker")
    lits: list[int] = []
    for line in text.splitlines():
        s = line.strip()
        if s.startswith("v "):
            s = s[2:]
        elif not s or not re.fullmatch(r"-?\d+(\s+-?\d+)*", s):
            continue
        lits.extend(int(t) for t in s.split() if t != "0")
    true = {l for l in lits}
    if instance is None:
        return true
    # variables missing from the listing default to false
    for v in range(1, instance.num_vars + 1):
        if v not in true and -v not in true:
            true.add(-v)
    return instance.decode(true)
