"""Ground forward chaining with case splitting.

Facts are tuples ``(pred, *constants)``. Rules with a single consequent are
applied to a fixpoint (semi-naive); binary disjunctions split the branch.
Existential consequents use the restricted chase: a rule instance fires only
when no existing witnesses already satisfy it, and fresh constants are
numbered after the current ones.

Two searches share the machinery:

* `forward_chain` explores the full case-split tree and, when given a goal,
  stops each branch as soon as the goal or falsum holds. Its tree can be
  linearised into a checked `Proof` (`oracle_proof`), which is the independent
  provability oracle used by the test-suite.
* `check_consistency_bounded` looks for one saturated branch without falsum.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .logic import BOTTOM, TOP, Atom, CLFormula, Const, Goal, Problem, instantiate_values
from .proof import Proof, ProofStep, Ref, StepKind, Symbols

Fact = tuple[int, ...]

DEFAULT_FACT_CAP = 20000
DEFAULT_NODE_CAP = 5000


class Verdict(enum.Enum):
    CONSISTENT = "consistent"
    INCONSISTENT = "inconsistent"
    UNKNOWN = "unknown"


def atom_fact(a: Atom) -> Fact:
    if not a.is_ground:
        raise ValueError(f"non-ground fact {a!r}")
    return (a.pred,) + tuple(t.index for t in a.args)


def fact_atom(f: Fact) -> Atom:
    return Atom(f[0], tuple(Const(c) for c in f[1:]))


def _code(t) -> int:
    return t.index if isinstance(t, Const) else -(t.index + 1)


@dataclass(frozen=True)
class _Rule:
    index: int
    formula: CLFormula
    premises: tuple[tuple[int, tuple[int, ...]], ...]
    disjuncts: tuple[tuple[tuple[int, tuple[int, ...]], ...], ...]
    nu: int
    ne: int

    @classmethod
    def of(cls, index: int, f: CLFormula) -> "_Rule":
        prem = tuple((a.pred, tuple(map(_code, a.args))) for a in f.premises if a.pred != TOP)
        disj = tuple(tuple((a.pred, tuple(map(_code, a.args))) for a in d) for d in f.disjuncts)
        return cls(index, f, prem, disj, len(f.univ_vars), len(f.exist_vars))


@dataclass(frozen=True)
class Derivation:
    rule: int  # axiom index
    values: tuple[int, ...]  # all variable values, witnesses included
    premises: tuple[Fact, ...]


@dataclass
class ChaseNode:
    """One branch of the case-split tree."""

    branch_atom: Fact | None = None  # the disjunct this branch assumes
    derived: list[tuple[Fact, Derivation]] = field(default_factory=list)
    status: str = "open"  # goal, bottom, open, capped, split
    split: Derivation | None = None
    split_atoms: tuple[Fact, Fact] | None = None
    children: list["ChaseNode"] = field(default_factory=list)
    last: Fact | None = None  # goal or falsum fact closing the branch
    witnesses: tuple[int, ...] = ()
    facts: frozenset = frozenset()  # all facts visible at the end of the branch

    def leaves(self) -> Iterable["ChaseNode"]:
        if not self.children:
            yield self
        for ch in self.children:
            yield from ch.leaves()


@dataclass(frozen=True)
class Branch:
    facts: frozenset
    bottom: bool
    goal: bool
    capped: bool


@dataclass
class ChaseResult:
    root: ChaseNode
    nodes: int

    @property
    def branches(self) -> list[Branch]:
        return [Branch(l.facts, l.status == "bottom", l.status == "goal", l.status == "capped")
                for l in self.root.leaves()]

    @property
    def derives_goal(self) -> bool:
        """Every branch closes by the goal or by falsum."""
        return all(l.status in ("goal", "bottom") for l in self.root.leaves())

    @property
    def capped(self) -> bool:
        return any(l.status == "capped" for l in self.root.leaves())


class _Chase:
    def __init__(self, axioms: Sequence[CLFormula], num_constants: int, goal: Goal | None,
                 fact_cap: int):
        self.rules = [_Rule.of(i, f) for i, f in enumerate(axioms)]
        self.horn = [r for r in self.rules if len(r.disjuncts) <= 1]
        self.splits = [r for r in self.rules if len(r.disjuncts) == 2]
        self.facts: set[Fact] = set()
        self.index: dict[int, list[Fact]] = {}
        self.trail: list[Fact] = []
        self.deriv: dict[Fact, Derivation | None] = {}
        self.num_consts = num_constants
        self._static: dict[int, tuple[int, list]] = {}
        self.goal = goal
        self.fact_cap = fact_cap
        if goal is not None and goal.is_underspecified:
            raise ValueError("forward chaining needs a fully specified goal")
        self.goal_preds = {g.pred for g in goal.atoms} if goal else set()

    # -- fact store with undo --------------------------------------------

    def add(self, f: Fact, d: Derivation | None) -> bool:
        if f in self.facts:
            return False
        self.facts.add(f)
        self.index.setdefault(f[0], []).append(f)
        self.trail.append(f)
        self.deriv[f] = d
        return True

    def mark(self) -> tuple[int, int]:
        return len(self.trail), self.num_consts

    def undo(self, mark: tuple[int, int]) -> None:
        n, consts = mark
        while len(self.trail) > n:
            f = self.trail.pop()
            self.facts.discard(f)
            self.index[f[0]].pop()
            del self.deriv[f]
        self.num_consts = consts

    # -- matching --------------------------------------------------------

    def _join(self, premises, order, sources, binding, out):
        if not order:
            out.append(tuple(binding))
            return
        i, rest = order[0], order[1:]
        pred, args = premises[i]
        for fact in sources(i, pred):
            b = list(binding)
            ok = True
            for a, v in zip(args, fact[1:]):
                if a >= 0:
                    if a != v:
                        ok = False
                        break
                else:
                    j = -a - 1
                    if b[j] is None:
                        b[j] = v
                    elif b[j] != v:
                        ok = False
                        break
            if ok:
                self._join(premises, rest, sources, b, out)

    def instances(self, rule: _Rule, delta: dict[int, list[Fact]] | None) -> list[tuple[int, ...]]:
        """Universal-variable assignments satisfying the premises (new ones only with ``delta``)."""
        prem = rule.premises
        raw: list[tuple] = []
        empty: list[Fact] = []
        if delta is None:
            self._join(prem, list(range(len(prem))), lambda i, p: self.index.get(p, empty),
                       [None] * rule.nu, raw)
        else:
            for pivot in range(len(prem)):
                if prem[pivot][0] not in delta:
                    continue
                order = [pivot] + [i for i in range(len(prem)) if i != pivot]
                src = (lambda i, p, pivot=pivot: delta.get(p, empty) if i == pivot
                       else self.index.get(p, empty))
                self._join(prem, order, src, [None] * rule.nu, raw)
        out = []
        seen = set()
        for b in raw:
            free = [j for j in range(rule.nu) if b[j] is None]
            if not free:
                combos = [b]
            else:
                combos = []
                for vals in itertools.product(range(self.num_consts), repeat=len(free)):
                    c = list(b)
                    for j, v in zip(free, vals):
                        c[j] = v
                    combos.append(tuple(c))
            for c in combos:
                if c not in seen:
                    seen.add(c)
                    out.append(c)
        return out

    def _ground(self, atoms, values) -> list[Fact]:
        return [(p,) + tuple(a if a >= 0 else values[-a - 1] for a in args) for p, args in atoms]

    def _satisfied(self, rule: _Rule, d: int, univ: tuple[int, ...]) -> bool:
        """Disjunct ``d`` holds for some choice of witnesses."""
        atoms = rule.disjuncts[d]
        if not rule.ne:
            return all(f in self.facts for f in self._ground(atoms, univ))
        out: list[tuple] = []
        binding = list(univ) + [None] * rule.ne
        self._join(atoms, list(range(len(atoms))), lambda i, p: self.index.get(p, []), binding, out)
        return bool(out)

    def _with_witnesses(self, rule: _Rule, univ: tuple[int, ...]) -> tuple[int, ...]:
        w = tuple(range(self.num_consts, self.num_consts + rule.ne))
        self.num_consts += rule.ne
        return univ + w

    def goal_holds(self) -> tuple[int, ...] | None:
        g = self.goal
        if g is None:
            return None
        atoms = tuple((a.pred, tuple(_code(t) for t in a.args)) for a in g.atoms)
        out: list[tuple] = []
        self._join(atoms, list(range(len(atoms))), lambda i, p: self.index.get(p, []),
                   [None] * len(g.exist_vars), out)
        if not out:
            return None
        return tuple(0 if v is None else v for v in out[0])

    # -- saturation --------------------------------------------------------

    def saturate(self, delta: dict[int, list[Fact]] | None) -> tuple[str, Fact | None, tuple]:
        """Apply single-consequent rules to a fixpoint.

        Returns (status, closing fact, goal witnesses) with status one of
        goal, bottom, open or capped.
        """
        w = self.goal_holds()
        if w is not None:
            return "goal", None, w
        while True:
            new: dict[int, list[Fact]] = {}
            full_next = False
            for rule in self.horn:
                for univ in self.instances(rule, delta):
                    prem = tuple(self._ground(rule.premises, univ))
                    if not rule.disjuncts:
                        f = (BOTTOM,)
                        self.add(f, Derivation(rule.index, univ, prem))
                        return "bottom", f, ()
                    if self._satisfied(rule, 0, univ):
                        continue
                    values = self._with_witnesses(rule, univ) if rule.ne else univ
                    full_next |= bool(rule.ne)
                    d = Derivation(rule.index, values, prem)
                    hit_goal = False
                    for f in self._ground(rule.disjuncts[0], values):
                        if self.add(f, d):
                            if f[0] == BOTTOM:
                                return "bottom", f, ()
                            new.setdefault(f[0], []).append(f)
                            hit_goal |= f[0] in self.goal_preds
                    if hit_goal:
                        w = self.goal_holds()
                        if w is not None:
                            return "goal", self.trail[-1], w
                    if len(self.facts) > self.fact_cap:
                        return "capped", None, ()
            if not new and not full_next:
                return "open", None, ()
            delta = None if full_next else new

    def find_split(self, cursor: dict | None = None):
        """First split instance with neither disjunct holding, or None.

        ``cursor`` maps premise-free rules to the number of leading instances
        already known to hold on the current branch (facts only grow along a
        branch). Returns (derivation, branch atoms, updated cursor).
        """
        cursor = dict(cursor or {})
        for rule in self.splits:
            if rule.premises or rule.ne:
                candidates, start = self.instances(rule, None), 0
            else:
                cached = self._static.get(rule.index)
                if cached is None or cached[0] != self.num_consts:
                    cached = (self.num_consts, self.instances(rule, None))
                    self._static[rule.index] = cached
                candidates = cached[1]
                n, pos = cursor.get(rule.index, (self.num_consts, 0))
                start = pos if n == self.num_consts else 0
            for i in range(start, len(candidates)):
                univ = candidates[i]
                if self._satisfied(rule, 0, univ) or self._satisfied(rule, 1, univ):
                    continue
                if not (rule.premises or rule.ne):
                    cursor[rule.index] = (self.num_consts, i)
                values = self._with_witnesses(rule, univ) if rule.ne else univ
                prem = tuple(self._ground(rule.premises, univ))
                b0 = self._ground(rule.disjuncts[0], values)[0]
                b1 = self._ground(rule.disjuncts[1], values)[0]
                return Derivation(rule.index, values, prem), (b0, b1), cursor
            if not (rule.premises or rule.ne):
                cursor[rule.index] = (self.num_consts, len(candidates))
        return None

    def assume(self, f: Fact) -> tuple[str, Fact | None, tuple]:
        if not self.add(f, None):
            return self.saturate({})
        if f[0] == BOTTOM:
            return "bottom", f, ()
        return self.saturate({f[0]: [f]})


def _initial(problem_or_axioms, facts: Iterable, num_constants: int | None):
    if isinstance(problem_or_axioms, Problem):
        axioms = problem_or_axioms.axioms
        n = problem_or_axioms.num_input
    else:
        axioms = list(problem_or_axioms)
        n = 0
    facts = [atom_fact(a) if isinstance(a, Atom) else tuple(a) for a in facts]
    n = max([n] + [c + 1 for f in facts for c in f[1:]])
    if num_constants is not None:
        n = max(n, num_constants)
    return axioms, facts, n


def forward_chain(problem_or_axioms, facts: Iterable, goal: Goal | None = None,
                  cap: int = DEFAULT_FACT_CAP, node_cap: int = DEFAULT_NODE_CAP,
                  num_constants: int | None = None) -> ChaseResult:
    """Saturate ``facts`` and split on binary disjunctions, depth first.

    Each branch stops at the goal (when given), at falsum, at saturation or
    when it holds more than ``cap`` facts. With a goal, exploration stops at
    the first branch that saturates without closing.
    """
    axioms, facts, n = _initial(problem_or_axioms, facts, num_constants)
    ch = _Chase(axioms, n, goal, cap)
    for f in facts:
        ch.add(f, None)
    counter = [0]
    root = ChaseNode()
    if (BOTTOM,) in ch.facts:
        status = ("bottom", (BOTTOM,), ())
    else:
        status = ch.saturate(None)

    def expand(node: ChaseNode, start: int, status, cursor=None) -> bool:
        """Fill ``node``; returns False when exploration should stop."""
        counter[0] += 1
        st, last, wit = status
        while True:
            if st != "open":
                node.status, node.last, node.witnesses = st, last, wit
                break
            if counter[0] > node_cap:
                node.status = "capped"
                break
            sp = ch.find_split(cursor)
            if sp is None:
                node.status = "open"
                break
            node.status = "split"
            node.split, node.split_atoms, cursor = sp
            break
        node.derived = [(f, ch.deriv[f]) for f in ch.trail[start:] if ch.deriv[f] is not None]
        node.facts = frozenset(ch.facts)
        if node.status != "split":
            return not (goal is not None and node.status in ("open", "capped"))
        for atom in node.split_atoms:
            mark = ch.mark()
            child = ChaseNode(branch_atom=atom)
            node.children.append(child)
            go_on = expand(child, len(ch.trail), ch.assume(atom), cursor)
            ch.undo(mark)
            if not go_on:
                return False
        return True

    expand(root, 0, status)
    return ChaseResult(root, counter[0])


def _premise_order(axioms: Sequence[CLFormula]) -> dict[int, int]:
    counts: dict[int, int] = {}
    for f in axioms:
        for a in f.premises:
            counts[a.pred] = counts.get(a.pred, 0) + 1
    return counts


def check_consistency_bounded(problem_or_axioms, abducts: Iterable, assumptions: Iterable = (),
                              bound: int = DEFAULT_FACT_CAP, node_cap: int = DEFAULT_NODE_CAP,
                              num_constants: int | None = None) -> Verdict:
    """Search for a saturated branch without falsum.

    Consistent when one is found, Inconsistent when every branch derives
    falsum, Unknown when a fact or node cap cuts the search first. Branches
    are tried with the disjunct whose predicate feeds the fewest rule premises
    first, since it is the least likely to trigger further consequences.
    """
    if bound <= 0:
        raise ValueError("bound must be positive")
    axioms, facts, n = _initial(problem_or_axioms, list(assumptions) + list(abducts), num_constants)
    ch = _Chase(axioms, n, None, bound)
    for f in facts:
        ch.add(f, None)
    if (BOTTOM,) in ch.facts:
        return Verdict.INCONSISTENT
    weight = _premise_order(axioms)
    st = ch.saturate(None)[0]
    stack: list[list] = []  # [mark, atoms in preferred order, next branch, split cursor]
    capped = False
    nodes = 0

    def next_branch(frame):
        nonlocal nodes
        nodes += 1
        ch.undo(frame[0])
        atom = frame[1][frame[2]]
        frame[2] += 1
        return ch.assume(atom)[0]

    while True:
        if st == "open":
            sp = ch.find_split(stack[-1][3] if stack else None)
            if sp is None:
                return Verdict.CONSISTENT
            if nodes >= node_cap:
                return Verdict.UNKNOWN
            atoms = sorted(sp[1], key=lambda f: weight.get(f[0], 0))
            frame = [ch.mark(), atoms, 0, sp[2]]
            stack.append(frame)
            st = next_branch(frame)
            continue
        if st == "capped":
            capped = True
        while stack and stack[-1][2] >= 2:
            ch.undo(stack.pop()[0])
        if not stack:
            return Verdict.UNKNOWN if capped else Verdict.INCONSISTENT
        if nodes >= node_cap:
            return Verdict.UNKNOWN
        st = next_branch(stack[-1])


# ---------------------------------------------------------------------------
# linearising a closed chase tree into a proof


def oracle_proof(problem: Problem, result: ChaseResult, abducts: Sequence[Atom] = ()) -> Proof:
    """Turn a goal-closed chase tree into a linear proof.

    Only the derivations that the closing facts depend on are kept; each is
    emitted in the branch where the chase first derived it. Requires a goal
    of a single atom or one produced by a single rule application, and
    theories without existential quantifiers.
    """
    if not result.derives_goal:
        raise ValueError("the chase did not close every branch")
    if any(f.exist_vars for f in problem.axioms):
        raise ValueError("oracle proofs need theories without existentials")
    conj = problem.conjecture
    hyps = [atom_fact(a) for a in conj.premises] + [atom_fact(a) for a in abducts]
    hyp_index = {}
    for i, f in enumerate(hyps):
        hyp_index.setdefault(f, i)
    local: dict[int, dict[Fact, Derivation]] = {}

    def collect(node):
        local[id(node)] = dict(node.derived)
        for ch in node.children:
            collect(ch)

    collect(result.root)
    needed: dict[int, set] = {}  # node id -> derivations to emit

    def need(f: Fact, path: list[ChaseNode]):
        """Mark the derivation of ``f`` visible at the end of ``path`` (root first)."""
        if f in hyp_index:
            return
        for depth in range(len(path) - 1, -1, -1):
            d = local[id(path[depth])].get(f)
            if d is None:
                continue
            bucket = needed.setdefault(id(path[depth]), set())
            if d not in bucket:
                bucket.add(d)
                for p in d.premises:
                    need(p, path[:depth + 1])
            return
        # otherwise a branch atom on the path, introduced by a case step

    def mark(node: ChaseNode, path):
        path = path + [node]
        if node.status == "split":
            for p in node.split.premises:
                need(p, path)
            for ch in node.children:
                mark(ch, path)
        elif node.last is not None:
            need(node.last, path)

    mark(result.root, [])
    steps: list[ProofStep] = []
    axioms = problem.axioms
    goal = conj.goal

    def ref(f: Fact, where: dict[Fact, int]) -> Ref:
        if f in where:
            return Ref.step(where[f])
        return Ref.hyp(hyp_index[f])

    def mp(d: Derivation, nest: int, where: dict[Fact, int], contents) -> int:
        ax = axioms[d.rule]
        steps.append(ProofStep(
            StepKind.MP, nest, contents, ax.name,
            tuple(ref(p, where) for p in d.premises),
            tuple(zip(ax.var_names, d.values)),
        ))
        return len(steps) - 1

    def goal_contents(wit):
        return (goal.instance(wit),) if wit is not None else (tuple(Atom(g.pred, g.args) for g in goal.atoms),)

    def emit(node: ChaseNode, nest: int, where: dict[Fact, int]):
        where = dict(where)
        bucket = needed.get(id(node), set())
        emitted = set()
        for f, d in node.derived:
            if d in bucket and d not in emitted:
                emitted.add(d)
                _, disj_ = instantiate_values(axioms[d.rule], d.values)
                contents = disj_ if disj_ else ((Atom(BOTTOM),),)
                s = mp(d, nest, where, contents)
                for x in contents[0]:
                    where[atom_fact(x)] = s
        if node.status == "split":
            d = node.split
            b0, b1 = node.split_atoms
            s = mp(d, nest, where, ((fact_atom(b0),), (fact_atom(b1),)))
            steps.append(ProofStep(StepKind.FIRSTCASE, nest + 1, ((fact_atom(b0),),), case_of=s))
            emit(node.children[0], nest + 1, {**where, b0: len(steps) - 1})
            steps.append(ProofStep(StepKind.SECONDCASE, nest + 1, ((fact_atom(b1),),), case_of=s))
            emit(node.children[1], nest + 1, {**where, b1: len(steps) - 1})
            steps.append(ProofStep(StepKind.QEDBYCASES, nest, goal_contents(None), case_of=s))
            return
        if node.status == "bottom":
            steps.append(ProofStep(StepKind.QEDBYEFQ, nest, goal_contents(None)))
            return
        target = goal.instance(node.witnesses)
        prev = steps[-1] if steps else None
        if prev is None or prev.nesting != nest or not set(target) <= set(prev.atoms):
            # the goal is a hypothesis: restate it first
            if len(target) != 1 or atom_fact(target[0]) not in hyp_index:
                raise ValueError("goal not produced by a single step")
            steps.append(ProofStep(StepKind.ASSUMPTION, nest, (target,)))
        steps.append(ProofStep(StepKind.QEDBYASSUMPTION, nest, (target,), witnesses=node.witnesses))

    emit(result.root, 1, {})
    return Proof(tuple(conj.premises), tuple(abducts), goal, tuple(steps),
                 Symbols.of(problem.signature, problem.constants))


def oracle(problem: Problem, abducts: Sequence[Atom] = (), cap: int = DEFAULT_FACT_CAP,
           node_cap: int = DEFAULT_NODE_CAP) -> ChaseResult:
    """Chase the conjecture's premises (plus ``abducts``) towards its goal."""
    facts = [atom_fact(a) for a in problem.conjecture.premises] + [atom_fact(a) for a in abducts]
    return forward_chain(problem, facts, problem.conjecture.goal, cap, node_cap)
