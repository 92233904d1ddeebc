"""A small finite-domain constraint language.

Variables range over half-open integer intervals ``[lo, hi)``. Constraints
are boolean combinations of linear atoms ``sum c_i * v_i  op  k`` with at
most two variables per atom (all the encoder needs). The smart constructors
`conj`, `disj`, `neg` and `implies` fold constants away, so the encoder can
write conditions that become trivially true or false at encoding time.
"""

from __future__ import annotations

import operator
from dataclasses import dataclass
from typing import Iterable, Mapping, Union

OPS = {
    "=": operator.eq,
    "!=": operator.ne,
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
}
NEGATED_OP = {"=": "!=", "!=": "=", "<": ">=", ">=": "<", ">": "<=", "<=": ">"}


@dataclass(frozen=True, eq=False)
class IntVar:
    name: str
    lo: int
    hi: int  # exclusive
    index: int = -1

    @property
    def size(self) -> int:
        return self.hi - self.lo

    @property
    def domain(self) -> range:
        return range(self.lo, self.hi)

    def __repr__(self) -> str:
        return self.name


@dataclass(frozen=True, eq=False)
class Lin:
    """``sum(c * v for c, v in terms) op k``."""

    terms: tuple[tuple[int, IntVar], ...]
    op: str
    k: int

    def __repr__(self) -> str:
        parts = []
        for c, v in self.terms:
            parts.append(v.name if c == 1 else f"-{v.name}" if c == -1 else f"{c}*{v.name}")
        return f"{' + '.join(parts)} {self.op} {self.k}"


@dataclass(frozen=True, eq=False)
class And:
    items: tuple["Expr", ...]


@dataclass(frozen=True, eq=False)
class Or:
    items: tuple["Expr", ...]


@dataclass(frozen=True, eq=False)
class Not:
    item: "Expr"


@dataclass(frozen=True, eq=False)
class Implies:
    lhs: "Expr"
    rhs: "Expr"


@dataclass(frozen=True, eq=False)
class Iff:
    lhs: "Expr"
    rhs: "Expr"


@dataclass(frozen=True, eq=False)
class Const:
    value: bool


TRUE = Const(True)
FALSE = Const(False)

Expr = Union[Lin, And, Or, Not, Implies, Iff, Const]
Operand = Union[IntVar, int]


# -- atom builders -----------------------------------------------------------


def _rel(x: Operand, op: str, y: Operand) -> Expr:
    if isinstance(x, int) and isinstance(y, int):
        return TRUE if OPS[op](x, y) else FALSE
    if isinstance(x, int):
        x, y, op = y, x, {"<": ">", ">": "<", "<=": ">=", ">=": "<="}.get(op, op)
    if isinstance(y, int):
        # fold against the domain when the answer is already fixed
        hits = sum(1 for a in x.domain if OPS[op](a, y))
        if hits == 0:
            return FALSE
        if hits == x.size:
            return TRUE
        return Lin(((1, x),), op, y)
    if x is y:
        return TRUE if OPS[op](0, 0) else FALSE
    return Lin(((1, x), (-1, y)), op, 0)


def eq(x: Operand, y: Operand) -> Expr:
    return _rel(x, "=", y)


def ne(x: Operand, y: Operand) -> Expr:
    return _rel(x, "!=", y)


def lt(x: Operand, y: Operand) -> Expr:
    return _rel(x, "<", y)


def le(x: Operand, y: Operand) -> Expr:
    return _rel(x, "<=", y)


def gt(x: Operand, y: Operand) -> Expr:
    return _rel(x, ">", y)


def ge(x: Operand, y: Operand) -> Expr:
    return _rel(x, ">=", y)


def linear(terms: Iterable[tuple[int, IntVar]], op: str, k: int) -> Lin:
    terms = tuple(terms)
    if not 1 <= len(terms) <= 2 or op not in OPS:
        raise ValueError("linear atoms have one or two variables")
    return Lin(terms, op, k)


# -- smart connectives ---------------------------------------------------------


def conj(*items: Expr) -> Expr:
    out = []
    for it in items:
        if it is TRUE:
            continue
        if it is FALSE:
            return FALSE
        if isinstance(it, And):
            out.extend(it.items)
        else:
            out.append(it)
    if not out:
        return TRUE
    return out[0] if len(out) == 1 else And(tuple(out))


def disj(*items: Expr) -> Expr:
    out = []
    for it in items:
        if it is FALSE:
            continue
        if it is TRUE:
            return TRUE
        if isinstance(it, Or):
            out.extend(it.items)
        else:
            out.append(it)
    if not out:
        return FALSE
    return out[0] if len(out) == 1 else Or(tuple(out))


def neg(item: Expr) -> Expr:
    if item is TRUE:
        return FALSE
    if item is FALSE:
        return TRUE
    if isinstance(item, Not):
        return item.item
    if isinstance(item, Lin):
        return Lin(item.terms, NEGATED_OP[item.op], item.k)
    return Not(item)


def implies(lhs: Expr, rhs: Expr) -> Expr:
    if lhs is FALSE or rhs is TRUE:
        return TRUE
    if lhs is TRUE:
        return rhs
    if rhs is FALSE:
        return neg(lhs)
    return Implies(lhs, rhs)


def iff(lhs: Expr, rhs: Expr) -> Expr:
    if lhs is TRUE:
        return rhs
    if rhs is TRUE:
        return lhs
    if lhs is FALSE:
        return neg(rhs)
    if rhs is FALSE:
        return neg(lhs)
    return Iff(lhs, rhs)


def conj_all(items: Iterable[Expr]) -> Expr:
    return conj(*items)


def disj_all(items: Iterable[Expr]) -> Expr:
    return disj(*items)


# -- evaluation and problems ------------------------------------------------


def evaluate(expr: Expr, assignment: Mapping[IntVar, int]) -> bool:
    """Truth value of ``expr`` under a total assignment (reference semantics)."""
    if isinstance(expr, Lin):
        total = sum(c * assignment[v] for c, v in expr.terms)
        return OPS[expr.op](total, expr.k)
    if isinstance(expr, Const):
        return expr.value
    if isinstance(expr, And):
        return all(evaluate(i, assignment) for i in expr.items)
    if isinstance(expr, Or):
        return any(evaluate(i, assignment) for i in expr.items)
    if isinstance(expr, Not):
        return not evaluate(expr.item, assignment)
    if isinstance(expr, Implies):
        return (not evaluate(expr.lhs, assignment)) or evaluate(expr.rhs, assignment)
    if isinstance(expr, Iff):
        return evaluate(expr.lhs, assignment) == evaluate(expr.rhs, assignment)
    raise TypeError(expr)


def render_expr(expr: Expr) -> str:
    if isinstance(expr, Lin):
        return repr(expr)
    if isinstance(expr, Const):
        return "true" if expr.value else "false"
    if isinstance(expr, And):
        return "(" + " & ".join(render_expr(i) for i in expr.items) + ")"
    if isinstance(expr, Or):
        return "(" + " | ".join(render_expr(i) for i in expr.items) + ")"
    if isinstance(expr, Not):
        return "~" + render_expr(expr.item)
    if isinstance(expr, Implies):
        return f"({render_expr(expr.lhs)} => {render_expr(expr.rhs)})"
    if isinstance(expr, Iff):
        return f"({render_expr(expr.lhs)} <=> {render_expr(expr.rhs)})"
    raise TypeError(expr)


class ConstraintProblem:
    """Declared variables plus a list of constraints (implicitly conjoined)."""

    def __init__(self):
        self.variables: list[IntVar] = []
        self.constraints: list[Expr] = []
        self._by_name: dict[str, IntVar] = {}

    def int_var(self, name: str, lo: int, hi: int) -> IntVar:
        if hi <= lo:
            raise ValueError(f"empty domain for {name}: [{lo}, {hi})")
        if name in self._by_name:
            raise ValueError(f"duplicate variable {name}")
        v = IntVar(name, lo, hi, len(self.variables))
        self.variables.append(v)
        self._by_name[name] = v
        return v

    def bool_var(self, name: str) -> IntVar:
        return self.int_var(name, 0, 2)

    def var(self, name: str) -> IntVar:
        return self._by_name[name]

    def add(self, expr: Expr) -> None:
        if expr is TRUE:
            return
        self.constraints.append(expr)

    def satisfied_by(self, assignment: Mapping[IntVar, int]) -> bool:
        return all(evaluate(c, assignment) for c in self.constraints)

    def dump(self) -> str:
        """Text form: one declaration or constraint per line."""
        lines = [f"var {v.name} in [{v.lo}, {v.hi})" for v in self.variables]
        lines += [render_expr(c) for c in self.constraints]
        return "\n".join(lines) + "\n"
