"""Coherent-logic formulas and the translation from first-order input.

A coherent formula has the shape

    forall x. A_0(x) & ... & A_{n-1}(x) => exists y. B_0(x, y) | ... | B_{m-1}(x, y)

with atomic A_i and each B_j a conjunction of atoms. Negation is removed by
introducing a "bar" predicate nR for every negated predicate R together with
the two linking axioms  R & nR => false  and  R | nR.

Terms are variables (indices into a formula's variable table) or constants
(indices into the constant pool). Predicates are integer codes into a
`Signature` whose first three entries are fixed: true, false and ``neq``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence, Union

from . import fol
from .errors import ProblemError

TOP, BOTTOM, NEQ = 0, 1, 2
RESERVED = (("$true", 0), ("$false", 0), ("neq", 2))


class Signature:
    """Ordered predicate table. Codes are list positions and never change."""

    def __init__(self, predicates: Iterable[tuple[str, int]] = ()):
        self._preds: list[tuple[str, int]] = list(RESERVED)
        self._index = {name: i for i, (name, _) in enumerate(self._preds)}
        self.bars: dict[int, int] = {}  # bar predicate code -> positive code
        for name, arity in predicates:
            self.add(name, arity)

    def add(self, name: str, arity: int) -> int:
        code = self._index.get(name)
        if code is not None:
            if self._preds[code][1] != arity:
                raise ProblemError(
                    f"predicate {name!r} used with arity {arity} and {self._preds[code][1]}"
                )
            return code
        self._preds.append((name, arity))
        self._index[name] = len(self._preds) - 1
        return len(self._preds) - 1

    def add_bar(self, code: int) -> int:
        """Return the bar predicate of ``code``, creating it on first use."""
        for bar, pos in self.bars.items():
            if pos == code:
                return bar
        name, arity = self._preds[code]
        bar_name = "n" + name
        while bar_name in self._index:
            bar_name = "n" + bar_name
        bar = self.add(bar_name, arity)
        self.bars[bar] = code
        return bar

    def code(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ProblemError(f"unknown predicate {name!r}") from None

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def name(self, code: int) -> str:
        return self._preds[code][0]

    def arity(self, code: int) -> int:
        return self._preds[code][1]

    @property
    def predicates(self) -> tuple[tuple[str, int], ...]:
        return tuple(self._preds)

    @property
    def max_arity(self) -> int:
        return max(a for _, a in self._preds)

    def copy(self) -> "Signature":
        other = Signature()
        other._preds = list(self._preds)
        other._index = dict(self._index)
        other.bars = dict(self.bars)
        return other

    def __len__(self) -> int:
        return len(self._preds)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Signature)
            and self._preds == other._preds
            and self.bars == other.bars
        )

    def __repr__(self) -> str:
        return f"Signature({self._preds[3:]!r})"


@dataclass(frozen=True, slots=True)
class Var:
    index: int


@dataclass(frozen=True, slots=True)
class Const:
    index: int


Term = Union[Var, Const]


@dataclass(frozen=True, slots=True)
class Atom:
    pred: int
    args: tuple[Term, ...] = ()

    def is_ground(self) -> bool:
        return all(isinstance(t, Const) for t in self.args)

    def substitute(self, values: Sequence[int]) -> "Atom":
        """Replace ``Var(i)`` by ``Const(values[i])``."""
        return Atom(
            self.pred,
            tuple(Const(values[t.index]) if isinstance(t, Var) else t for t in self.args),
        )

    def key(self) -> tuple[int, ...]:
        """Flat integer tuple of a ground atom (predicate first)."""
        return (self.pred, *(t.index for t in self.args))


def ground(pred: int, *consts: int) -> Atom:
    return Atom(pred, tuple(Const(c) for c in consts))


Conjunct = tuple[Atom, ...]
FALSUM = Atom(BOTTOM)
VERUM = Atom(TOP)


@dataclass(frozen=True)
class CLFormula:
    """forall univ. premises => exists exist. disjuncts[0] | disjuncts[1] | ...

    ``Var(i)`` refers to ``univ_vars[i]`` for i < len(univ_vars) and to
    ``exist_vars[i - len(univ_vars)]`` beyond that.
    """

    name: str
    univ_vars: tuple[str, ...]
    premises: tuple[Atom, ...]
    exist_vars: tuple[str, ...]
    disjuncts: tuple[Conjunct, ...]
    source: str = ""

    @property
    def num_vars(self) -> int:
        return len(self.univ_vars) + len(self.exist_vars)

    @property
    def var_names(self) -> tuple[str, ...]:
        return self.univ_vars + self.exist_vars

    @property
    def origin(self) -> str:
        return self.source or self.name


def is_coherent(f: CLFormula) -> bool:
    """Syntactic coherence check of an already translated formula."""
    nu, nv = len(f.univ_vars), f.num_vars
    for atom in f.premises:
        if atom.pred == BOTTOM:
            return False
        if any(isinstance(t, Var) and t.index >= nu for t in atom.args):
            return False
    for conj in f.disjuncts:
        if not conj:
            return False
        for atom in conj:
            if any(isinstance(t, Var) and t.index >= nv for t in atom.args):
                return False
    return all(isinstance(t, (Var, Const)) for a in f.premises for t in a.args)


def instantiate(
    f: CLFormula, sub: Mapping[str, int], witness: Mapping[str, int] | None = None
) -> tuple[tuple[Atom, ...], tuple[Conjunct, ...]]:
    """Ground the premises and disjuncts of ``f``.

    ``sub`` maps every universal variable name to a constant index and
    ``witness`` every existential one.
    """
    witness = witness or {}
    missing = [v for v in f.univ_vars if v not in sub] + [
        v for v in f.exist_vars if v not in witness
    ]
    if missing:
        raise ValueError(f"partial substitution for {f.name}: missing {missing}")
    values = [sub[v] for v in f.univ_vars] + [witness[v] for v in f.exist_vars]
    return instantiate_values(f, values)


def instantiate_values(f: CLFormula, values: Sequence[int]):
    prem = tuple(a.substitute(values) for a in f.premises)
    disj = tuple(tuple(a.substitute(values) for a in conj) for conj in f.disjuncts)
    return prem, disj


# ---------------------------------------------------------------------------
# Conjectures


@dataclass(frozen=True)
class GoalAtom:
    """An atom of the conjecture's goal.

    ``pred`` is None for a wildcard predicate; an argument is a ``Const``, a
    ``Var`` (existentially quantified goal variable) or None (wildcard).
    """

    pred: int | None
    args: tuple[Term | None, ...]

    @property
    def is_ground(self) -> bool:
        return self.pred is not None and all(isinstance(a, Const) for a in self.args)


@dataclass(frozen=True)
class Goal:
    atoms: tuple[GoalAtom, ...]
    exist_vars: tuple[str, ...] = ()

    @property
    def is_underspecified(self) -> bool:
        return any(a.pred is None or any(t is None for t in a.args) for a in self.atoms)

    @classmethod
    def of(cls, *atoms: Atom) -> "Goal":
        return cls(tuple(GoalAtom(a.pred, a.args) for a in atoms))

    def instance(self, witnesses: Sequence[int] = ()) -> tuple[Atom, ...]:
        """Ground atoms of a fully specified goal under existential ``witnesses``."""
        out = []
        for g in self.atoms:
            if g.pred is None or any(t is None for t in g.args):
                raise ValueError("goal is under-specified")
            args = tuple(Const(witnesses[t.index]) if isinstance(t, Var) else t for t in g.args)
            out.append(Atom(g.pred, args))
        return tuple(out)

    def matches(self, atoms: Iterable[Atom]) -> tuple[Atom, ...] | None:
        """Find an instance of the goal whose atoms all occur in ``atoms``."""
        facts = set(atoms)
        consts = sorted({t.index for a in facts for t in a.args})
        if not self.exist_vars:
            inst = self.instance()
            return inst if all(a in facts for a in inst) else None
        for combo in itertools.product(consts, repeat=len(self.exist_vars)):
            inst = self.instance(combo)
            if all(a in facts for a in inst):
                return inst
        return None


@dataclass(frozen=True)
class Conjecture:
    name: str
    univ_vars: tuple[str, ...]  # skolemised into the first input constants
    premises: tuple[Atom, ...]
    goal: Goal


# ---------------------------------------------------------------------------
# Constant pool


@dataclass(frozen=True)
class ConstantPool:
    """Input constants followed by one block of fresh witnesses per proof step."""

    names: tuple[str, ...]
    block_size: int = 0
    num_blocks: int = 0

    @property
    def num_input(self) -> int:
        return len(self.names)

    def __len__(self) -> int:
        return len(self.names) + self.block_size * self.num_blocks

    def fresh(self, step: int, k: int) -> int:
        assert 0 <= k < self.block_size and 0 <= step < self.num_blocks
        return len(self.names) + step * self.block_size + k

    def owner(self, const: int) -> int | None:
        """Step that owns a fresh constant, or None for an input constant."""
        if const < len(self.names):
            return None
        return (const - len(self.names)) // self.block_size

    def name(self, const: int) -> str:
        if const < len(self.names):
            return self.names[const]
        step, k = divmod(const - len(self.names), self.block_size)
        return f"w{step}_{k}"

    @property
    def all_names(self) -> tuple[str, ...]:
        return tuple(self.name(i) for i in range(len(self)))


# ---------------------------------------------------------------------------
# FOL -> CL


class Translator:
    """Stateful FOL -> CL translation over one shared signature.

    Bar predicates are created lazily in the signature; `linking_axioms`
    returns the two linking axioms for every bar predicate created so far,
    each exactly once.
    """

    def __init__(self, signature: Signature, constants: Mapping[str, int]):
        self.signature = signature
        self.constants = dict(constants)
        self._skolem: dict[str, int] = {}  # conjecture variables read as constants
        self._linked: set[int] = set()

    # -- literals -------------------------------------------------------

    def _term(self, t: fol.FTerm, scope: Mapping[str, int]) -> Term:
        if isinstance(t, fol.FVar):
            if t.name in scope:
                return Var(scope[t.name])
            if t.name in self._skolem:
                return Const(self._skolem[t.name])
            raise ProblemError(f"unbound variable {t.name}")
        if isinstance(t, fol.FConst):
            if t.name not in self.constants:
                raise ProblemError(f"unknown constant {t.name}")
            return Const(self.constants[t.name])
        raise ProblemError("wildcard `_` is only allowed in a conjecture goal")

    def _literal(self, lit, scope) -> Atom:
        negated = isinstance(lit, fol.FNot)
        atom = lit.body if negated else lit
        if isinstance(atom, fol.FTrue):
            return FALSUM if negated else VERUM
        if isinstance(atom, fol.FFalse):
            return VERUM if negated else FALSUM
        if atom.pred is None:
            raise ProblemError("predicate wildcard is only allowed in a conjecture goal")
        code = self.signature.add(atom.pred, len(atom.args))
        if negated:
            code = self.signature.add_bar(code)
        return Atom(code, tuple(self._term(t, scope) for t in atom.args))

    # -- public --------------------------------------------------------------

    def axiom(self, name: str, formula: fol.Formula) -> list[CLFormula]:
        """Translate one closed axiom into one or more coherent formulas."""
        parts = []
        for univ, body in _split_top(formula):
            if isinstance(body, fol.FImplies):
                lhs, rhs = body.lhs, body.rhs
            else:
                lhs, rhs = fol.FTrue(), body
            for premise_conj in _dnf(_nnf(lhs)):
                parts.extend(self._clause(name, univ, premise_conj, rhs))
        if not parts:
            return []
        if len(parts) == 1:
            return [_renamed(parts[0], name, name)]
        return [_renamed(p, f"{name}_{i + 1}", name) for i, p in enumerate(parts)]

    def _clause(self, name, univ, premise_lits, rhs) -> list[CLFormula]:
        scope = {v: i for i, v in enumerate(univ)}
        premises = []
        for lit in premise_lits:
            if isinstance(lit, (fol.FExists, fol.FForall)):
                raise ProblemError(f"{name}: quantifier in a premise position")
            atom = self._literal(lit, scope)
            if atom.pred == TOP:
                continue
            if atom.pred == BOTTOM:
                return []  # vacuous: premise is false
            premises.append(atom)
        exist, matrix = _strip_exists(_nnf(rhs), set(univ))
        scope.update({v: len(univ) + i for i, v in enumerate(exist)})
        disjuncts = []
        for conj in _dnf(matrix):
            atoms = []
            for lit in conj:
                if isinstance(lit, (fol.FExists, fol.FForall)):
                    raise ProblemError(f"{name}: nested quantifier outside the coherent fragment")
                a = self._literal(lit, scope)
                if a.pred == TOP:
                    continue
                atoms.append(a)
            if any(a.pred == BOTTOM for a in atoms):
                continue  # this disjunct is false
            if not atoms:
                return []  # a true disjunct makes the whole formula trivial
            disjuncts.append(tuple(dict.fromkeys(atoms)))
        disjuncts = list(dict.fromkeys(disjuncts))
        if len(disjuncts) > 2:
            raise ProblemError(
                f"{name}: {len(disjuncts)} disjuncts after normalisation (at most 2 supported)"
            )
        if len(disjuncts) == 2 and any(len(d) != 1 for d in disjuncts):
            raise ProblemError(f"{name}: case-split branches must be single atoms")
        used = {t.index for d in disjuncts for a in d for t in a.args if isinstance(t, Var)}
        exist_kept = tuple(v for i, v in enumerate(exist) if len(univ) + i in used)
        f = CLFormula(name, tuple(univ), tuple(premises), tuple(exist), tuple(disjuncts))
        if len(exist_kept) != len(exist):
            f = _drop_unused_exist(f)
        return [f]

    def linking_axioms(self) -> list[CLFormula]:
        out = []
        for bar, pos in self.signature.bars.items():
            if bar in self._linked:
                continue
            self._linked.add(bar)
            arity = self.signature.arity(pos)
            names = tuple(f"X{i + 1}" for i in range(arity))
            args = tuple(Var(i) for i in range(arity))
            bname = self.signature.name(bar)
            out.append(
                CLFormula(f"{bname}_exclusive", names, (Atom(pos, args), Atom(bar, args)), (), (),
                          source=f"{bname}_exclusive")
            )
            out.append(
                CLFormula(f"{bname}_exhaustive", names, (), (), ((Atom(pos, args),), (Atom(bar, args),)),
                          source=f"{bname}_exhaustive")
            )
        return out

    def conjecture(self, name: str, formula: fol.Formula, skolem: Sequence[int]) -> Conjecture:
        """Translate the conjecture; its leading universal variables become ``skolem``."""
        univ: list[str] = []
        body = formula
        while isinstance(body, fol.FForall):
            univ.extend(v for v in body.vars if v not in univ)
            body = body.body
        if len(univ) != len(skolem):
            raise ValueError("skolem constant count mismatch")
        self._skolem = dict(zip(univ, skolem))
        try:
            if isinstance(body, fol.FImplies):
                lhs, rhs = body.lhs, body.rhs
            else:
                lhs, rhs = fol.FTrue(), body
            conjs = _dnf(_nnf(lhs))
            if len(conjs) != 1:
                raise ProblemError(f"{name}: conjecture premises must be a conjunction")
            premises = []
            for lit in conjs[0]:
                if isinstance(lit, (fol.FExists, fol.FForall)):
                    raise ProblemError(f"{name}: quantifier in a conjecture premise")
                atom = self._literal(lit, {})
                if atom.pred != TOP:
                    premises.append(atom)
            goal = self._goal(name, rhs)
        finally:
            self._skolem = {}
        return Conjecture(name, tuple(univ), tuple(dict.fromkeys(premises)), goal)

    def _goal(self, name, rhs) -> Goal:
        exist, matrix = _strip_exists(_nnf(rhs), set())
        free = sorted(_free_vars(matrix) - set(exist) - set(self._skolem))
        exist = list(exist) + free  # unbound goal variables read as existential
        conjs = _dnf(matrix)
        if len(conjs) != 1:
            raise ProblemError(f"{name}: disjunctive goals are not supported")
        scope = {v: i for i, v in enumerate(exist)}
        atoms = []
        for lit in conjs[0]:
            negated = isinstance(lit, fol.FNot)
            a = lit.body if negated else lit
            if isinstance(a, (fol.FTrue, fol.FFalse)):
                atom = self._literal(lit, {})
                atoms.append(GoalAtom(atom.pred, ()))
                continue
            if a.pred is None:
                if negated:
                    raise ProblemError(f"{name}: negated predicate wildcard")
                pred = None
            else:
                pred = self.signature.add(a.pred, len(a.args))
                if negated:
                    pred = self.signature.add_bar(pred)
            args = []
            for t in a.args:
                if isinstance(t, fol.Wild):
                    args.append(None)
                elif isinstance(t, fol.FVar) and t.name in scope:
                    args.append(Var(scope[t.name]))
                else:
                    args.append(self._term(t, {}))
            atoms.append(GoalAtom(pred, tuple(args)))
        atoms = [a for a in atoms if a.pred != TOP] or [GoalAtom(TOP, ())]
        used = {t.index for a in atoms for t in a.args if isinstance(t, Var)}
        if len(used) != len(exist):
            keep = [v for i, v in enumerate(exist) if i in used]
            remap = {old: new for new, old in enumerate(sorted(used))}
            atoms = [
                GoalAtom(a.pred, tuple(Var(remap[t.index]) if isinstance(t, Var) else t for t in a.args))
                for a in atoms
            ]
            exist = keep
        return Goal(tuple(atoms), tuple(exist))


def fol_to_cl(
    formula: fol.Formula,
    signature: Signature,
    constants: Mapping[str, int] | None = None,
    name: str = "ax",
) -> list[CLFormula]:
    """Translate a single axiom, appending linking axioms for new bar predicates."""
    before = set(signature.bars)
    tr = Translator(signature, constants or {})
    tr._linked = before  # bars created by earlier calls already have their linking axioms
    return tr.axiom(name, formula) + tr.linking_axioms()


def _renamed(f: CLFormula, name: str, source: str) -> CLFormula:
    return CLFormula(name, f.univ_vars, f.premises, f.exist_vars, f.disjuncts, source)


def _drop_unused_exist(f: CLFormula) -> CLFormula:
    nu = len(f.univ_vars)
    used = sorted({t.index for d in f.disjuncts for a in d for t in a.args
                   if isinstance(t, Var) and t.index >= nu})
    remap = {old: nu + i for i, old in enumerate(used)}

    def fix(a: Atom) -> Atom:
        return Atom(a.pred, tuple(Var(remap[t.index]) if isinstance(t, Var) and t.index >= nu else t
                                  for t in a.args))

    return CLFormula(
        f.name, f.univ_vars, f.premises,
        tuple(f.exist_vars[i - nu] for i in used),
        tuple(tuple(fix(a) for a in d) for d in f.disjuncts),
        f.source,
    )


def _free_vars(f) -> set[str]:
    if isinstance(f, fol.FAtom):
        return {t.name for t in f.args if isinstance(t, fol.FVar)}
    if isinstance(f, fol.FNot):
        return _free_vars(f.body)
    if isinstance(f, (fol.FAnd, fol.FOr)):
        return set().union(*(_free_vars(i) for i in f.items)) if f.items else set()
    if isinstance(f, (fol.FImplies, fol.FIff)):
        return _free_vars(f.lhs) | _free_vars(f.rhs)
    if isinstance(f, (fol.FForall, fol.FExists)):
        return _free_vars(f.body) - set(f.vars)
    return set()


def _split_top(formula) -> list[tuple[list[str], fol.Formula]]:
    """Strip universal prefixes, split top-level conjunctions and equivalences."""
    out = []

    def walk(univ, f):
        if isinstance(f, fol.FForall):
            walk(univ + [v for v in f.vars if v not in univ], f.body)
        elif isinstance(f, fol.FIff):
            walk(univ, fol.FImplies(f.lhs, f.rhs))
            walk(univ, fol.FImplies(f.rhs, f.lhs))
        elif isinstance(f, fol.FImplies) and isinstance(f.rhs, fol.FForall):
            walk(univ, fol.FForall(f.rhs.vars, fol.FImplies(f.lhs, f.rhs.body)))
        else:
            out.append((univ, f))

    walk([], formula)
    # free variables are read as universally quantified
    fixed = []
    for univ, body in out:
        extra = sorted(_free_vars(body) - set(univ))
        fixed.append((univ + extra, body))
    return fixed


def _nnf(f, negate: bool = False):
    """Negation normal form; quantifiers stay in place."""
    if isinstance(f, fol.FAtom):
        return fol.FNot(f) if negate else f
    if isinstance(f, fol.FTrue):
        return fol.FFalse() if negate else f
    if isinstance(f, fol.FFalse):
        return fol.FTrue() if negate else f
    if isinstance(f, fol.FNot):
        return _nnf(f.body, not negate)
    if isinstance(f, fol.FAnd):
        items = tuple(_nnf(i, negate) for i in f.items)
        return fol.FOr(items) if negate else fol.FAnd(items)
    if isinstance(f, fol.FOr):
        items = tuple(_nnf(i, negate) for i in f.items)
        return fol.FAnd(items) if negate else fol.FOr(items)
    if isinstance(f, fol.FImplies):
        return _nnf(fol.FOr((fol.FNot(f.lhs), f.rhs)), negate)
    if isinstance(f, fol.FIff):
        both = fol.FAnd((fol.FImplies(f.lhs, f.rhs), fol.FImplies(f.rhs, f.lhs)))
        return _nnf(both, negate)
    if isinstance(f, fol.FForall):
        body = _nnf(f.body, negate)
        return fol.FExists(f.vars, body) if negate else fol.FForall(f.vars, body)
    if isinstance(f, fol.FExists):
        body = _nnf(f.body, negate)
        return fol.FForall(f.vars, body) if negate else fol.FExists(f.vars, body)
    raise TypeError(f)


def _strip_exists(f, taken: set[str]):
    """Pull existential quantifiers out of an NNF conclusion (renaming apart)."""
    names: list[str] = []

    def walk(g, ren):
        if isinstance(g, fol.FExists):
            ren = dict(ren)
            for v in g.vars:
                new = v
                while new in taken or new in names:
                    new = new + "'"
                names.append(new)
                ren[v] = new
            return walk(g.body, ren)
        if isinstance(g, fol.FAnd):
            return fol.FAnd(tuple(walk(i, ren) for i in g.items))
        if isinstance(g, fol.FOr):
            return fol.FOr(tuple(walk(i, ren) for i in g.items))
        if isinstance(g, fol.FNot):
            return fol.FNot(walk(g.body, ren))
        if isinstance(g, fol.FAtom):
            return fol.FAtom(g.pred, tuple(
                fol.FVar(ren.get(t.name, t.name)) if isinstance(t, fol.FVar) else t for t in g.args
            ))
        if isinstance(g, fol.FForall):
            raise ProblemError("universal quantifier inside a conclusion")
        return g

    body = walk(f, {})
    return names, body


def _dnf(f) -> list[list]:
    """Disjunctive normal form of an NNF formula as lists of literals."""
    if isinstance(f, fol.FOr):
        out = []
        for item in f.items:
            out.extend(_dnf(item))
        return out
    if isinstance(f, fol.FAnd):
        out = [[]]
        for item in f.items:
            out = [left + right for left in out for right in _dnf(item)]
        return out
    return [[f]]


# ---------------------------------------------------------------------------
# Normalised problems


@dataclass
class Problem:
    """A fully translated problem, ready for encoding."""

    name: str
    signature: Signature
    constants: tuple[str, ...]  # input constants: skolemised conjecture variables first
    axioms: tuple[CLFormula, ...]
    conjecture: Conjecture
    hints: tuple = ()

    def axiom(self, name: str) -> CLFormula:
        for f in self.axioms:
            if f.name == name:
                return f
        raise KeyError(name)

    @property
    def num_input(self) -> int:
        return len(self.constants)

    def pool(self, num_blocks: int) -> ConstantPool:
        width = max((len(f.exist_vars) for f in self.axioms), default=0)
        return ConstantPool(self.constants, width, num_blocks if width else 0)


def build_problem(
    name: str,
    signature: Signature,
    constants: Sequence[str],
    axioms: Sequence[CLFormula],
    premises: Sequence[Atom],
    goal: Goal,
    hints: Sequence = (),
) -> Problem:
    """Assemble a problem directly from CL objects (used by tests and generators)."""
    conj = Conjecture(name, (), tuple(premises), goal)
    names = [f.name for f in axioms]
    if len(set(names)) != len(names):
        raise ProblemError("duplicate axiom names")
    return Problem(name, signature, tuple(constants), tuple(axioms), conj, tuple(hints))


def normalize(pf, name: str | None = None) -> Problem:
    """Translate a parsed problem file into coherent logic.

    Bar predicates are numbered after all user predicates; their linking
    axioms follow the translated file axioms.
    """
    sig = pf.signature.copy()
    index = {c: i for i, c in enumerate(pf.constants)}
    tr = Translator(sig, index)
    axioms: list[CLFormula] = []
    for ax_name, formula in pf.axioms:
        axioms.extend(tr.axiom(ax_name, formula))
    conj_name, conj_formula = pf.conjecture
    skolem = [index[pf.skolem[v]] for v in pf.skolem]
    conjecture = tr.conjecture(conj_name, conj_formula, skolem)
    axioms.extend(tr.linking_axioms())
    names = [f.name for f in axioms]
    if len(set(names)) != len(names):
        raise ProblemError("axiom names clash after splitting")
    return Problem(name or conj_name, sig, tuple(pf.constants), tuple(axioms), conjecture,
                   tuple(pf.hints))
