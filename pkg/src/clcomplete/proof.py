"""Linear proof objects and an independent checker.

A proof is a list of steps over a fixed set of hypotheses (conjecture
premises plus abducts). Case splits open two branches with FIRSTCASE and
SECONDCASE and are closed by QEDBYCASES; every branch ends in a QED step that
establishes the goal. A step t is visible from a later step s when no step
strictly after t and up to s leaves t's branch:

    Vis(t, t+1)  and
    Vis(t, s)  iff  Vis(t, s-1) and Nest(s) >= Nest(t)
                    and not (Kind(s) = SECONDCASE and Nest(s) = Nest(t))
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import IntEnum
from typing import Iterable, Sequence

from .errors import ProblemError
from .logic import BOTTOM, Atom, CLFormula, Const, Goal, Signature, Var, instantiate_values


class StepKind(IntEnum):
    ASSUMPTION = 0
    MP = 1
    FIRSTCASE = 2
    SECONDCASE = 3
    QEDBYCASES = 4
    QEDBYASSUMPTION = 5
    QEDBYEFQ = 6


QED_KINDS = frozenset({StepKind.QEDBYCASES, StepKind.QEDBYASSUMPTION, StepKind.QEDBYEFQ})


class ProofError(ProblemError):
    """A proof object violates its structural schema."""


@dataclass(frozen=True)
class Ref:
    """Justification of an MP premise: a hypothesis or an earlier step."""

    source: str  # "hyp" or "step"
    index: int

    def __post_init__(self):
        if self.source not in ("hyp", "step") or self.index < 0:
            raise ProofError(f"bad reference {self.source}:{self.index}")

    @classmethod
    def hyp(cls, i: int) -> "Ref":
        return cls("hyp", i)

    @classmethod
    def step(cls, i: int) -> "Ref":
        return cls("step", i)


@dataclass(frozen=True)
class Symbols:
    """Name tables needed to print or serialise a proof."""

    predicates: tuple[tuple[str, int], ...]
    bars: tuple[tuple[int, int], ...] = ()  # (bar code, positive code)
    constants: tuple[str, ...] = ()

    @classmethod
    def of(cls, signature: Signature, constants: Sequence[str]) -> "Symbols":
        return cls(signature.predicates, tuple(sorted(signature.bars.items())), tuple(constants))

    def pred_name(self, code: int) -> str:
        return self.predicates[code][0]


@dataclass(frozen=True)
class ProofStep:
    kind: StepKind
    nesting: int
    contents: tuple[tuple[Atom, ...], ...]  # one conjunct, or two single-atom branches
    axiom: str | None = None
    premises: tuple[Ref, ...] = ()
    instantiation: tuple[tuple[str, int], ...] = ()  # variable name -> constant, in variable order
    case_of: int | None = None  # SECONDCASE / QEDBYCASES: the case-split step
    witnesses: tuple[int, ...] = ()  # QEDBYASSUMPTION: values of the goal's existential variables

    @property
    def cases(self) -> bool:
        return len(self.contents) == 2

    @property
    def is_goal(self) -> bool:
        return self.kind in QED_KINDS

    @property
    def atoms(self) -> tuple[Atom, ...]:
        """Facts established by the step (empty for case splits and QED steps)."""
        if self.cases or self.is_goal:
            return ()
        return self.contents[0] if self.contents else ()

    def __post_init__(self):
        object.__setattr__(self, "kind", StepKind(self.kind))
        if self.nesting < 1:
            raise ProofError("nesting must be at least 1")
        if self.kind != StepKind.MP and (self.axiom or self.premises or self.instantiation):
            raise ProofError(f"{self.kind.name} step carries MP data")
        if self.kind == StepKind.MP and self.axiom is None:
            raise ProofError("MP step without an axiom")
        if self.cases and (self.kind != StepKind.MP or any(len(c) != 1 for c in self.contents)):
            raise ProofError("case split contents must be two single atoms of an MP step")
        if len(self.contents) > 2 or (len(self.contents) == 0 and not self.is_goal):
            raise ProofError("bad contents shape")


@dataclass(frozen=True)
class Proof:
    assumptions: tuple[Atom, ...]
    abducts: tuple[Atom, ...]
    goal: Goal
    steps: tuple[ProofStep, ...]
    symbols: Symbols | None = None

    def __post_init__(self):
        if not self.steps:
            raise ProofError("a proof has at least one step")
        last = self.steps[-1]
        if last.kind not in QED_KINDS:
            raise ProofError("the last step must be a QED step")
        if last.nesting != 1:
            raise ProofError("the last step must have nesting 1")
        if self.goal.is_underspecified:
            raise ProofError("the goal of a proof must be fully specified")

    @property
    def hypotheses(self) -> tuple[Atom, ...]:
        return self.assumptions + self.abducts

    def derived_facts(self) -> list[Atom]:
        """Atoms established by MP steps, in order (multiset)."""
        out = []
        for st in self.steps:
            if st.kind == StepKind.MP:
                for conj in st.contents:
                    out.extend(conj)
        return out

    @property
    def final_goal(self) -> tuple[Atom, ...]:
        return self.steps[-1].contents[0] if self.steps[-1].contents else ()


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Ok:
    notes: tuple[str, ...] = ()

    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class Violation:
    step: int
    reason: str
    detail: str = ""

    def __bool__(self) -> bool:
        return False


def goal_atoms(goal: Goal, witnesses: Sequence[int] | None) -> tuple[Atom, ...]:
    """Goal atoms with existential variables replaced by ``witnesses`` (or kept as Var)."""
    if witnesses is not None and len(witnesses) == len(goal.exist_vars):
        return goal.instance(witnesses)
    return tuple(Atom(g.pred, g.args) for g in goal.atoms)


def visible_steps(proof: Proof, s: int) -> list[int]:
    """Indices t < s whose contents are in scope at step s."""
    steps = proof.steps
    if not 0 <= s < len(steps):
        raise IndexError(f"step {s} out of range")
    out = []
    for t in range(s):
        nest_t = steps[t].nesting
        ok = True
        for u in range(t + 2, s + 1):
            su = steps[u]
            if su.nesting < nest_t or (su.kind == StepKind.SECONDCASE and su.nesting == nest_t):
                ok = False
                break
        if ok:
            out.append(t)
    return out


def visible_facts(proof: Proof, s: int) -> set[Atom]:
    facts = set(proof.hypotheses)
    for t in visible_steps(proof, s):
        facts.update(proof.steps[t].atoms)
    return facts


def _occurring_constants(atoms: Iterable[Atom]) -> set[int]:
    return {t.index for a in atoms for t in a.args if isinstance(t, Const)}


def check_proof(theory: Sequence[CLFormula], proof: Proof, strict: bool = True):
    """Replay ``proof`` against ``theory``; return Ok or the first Violation.

    With ``strict`` (the default) QEDBYASSUMPTION must find the goal in the
    previous step's contents; otherwise any visible fact may be used.
    """
    axioms = {f.name: f for f in theory}
    steps = proof.steps
    hyps = proof.hypotheses
    seen = _occurring_constants(hyps) | {
        t.index for g in proof.goal.atoms for t in g.args if isinstance(t, Const)
    }
    stack: list[list[int]] = []  # open case splits: [cases step, phase]
    pending_split = False  # previous step was a case split awaiting FIRSTCASE
    closed = False  # previous step was a QED step
    notes = []

    for s, st in enumerate(steps):
        depth = 1 + len(stack)
        prev = steps[s - 1] if s else None
        if pending_split and st.kind != StepKind.FIRSTCASE:
            return Violation(s, "unopened-case-split")
        if closed and st.kind not in (StepKind.SECONDCASE, StepKind.QEDBYCASES):
            return Violation(s, "steps-after-qed")
        kind = st.kind

        if kind == StepKind.ASSUMPTION:
            if st.nesting != depth:
                return Violation(s, "bad-nesting")
            if len(st.contents[0]) != 1 or st.contents[0][0] not in hyps:
                return Violation(s, "not-a-hypothesis")

        elif kind == StepKind.MP:
            if st.nesting != depth:
                return Violation(s, "bad-nesting")
            ax = axioms.get(st.axiom)
            if ax is None:
                return Violation(s, "unknown-axiom", st.axiom or "")
            inst = dict(st.instantiation)
            if set(inst) != set(ax.var_names) or len(st.instantiation) != ax.num_vars:
                return Violation(s, "bad-instantiation")
            values = [inst[v] for v in ax.var_names]
            prem, disj = instantiate_values(ax, values)
            if len(st.premises) != len(prem):
                return Violation(s, "premise-count")
            vis = None
            for k, ref in enumerate(st.premises):
                if ref.source == "hyp":
                    if ref.index >= len(hyps):
                        return Violation(s, "bad-reference", f"premise {k}")
                    if hyps[ref.index] != prem[k]:
                        return Violation(s, "premise-mismatch", f"premise {k}")
                else:
                    if ref.index >= s:
                        return Violation(s, "bad-reference", f"premise {k}")
                    if vis is None:
                        vis = set(visible_steps(proof, s))
                    if ref.index not in vis:
                        return Violation(s, "premise-not-visible", f"premise {k}")
                    if prem[k] not in steps[ref.index].atoms:
                        return Violation(s, "premise-mismatch", f"premise {k}")
            witnesses = values[len(ax.univ_vars):]
            if len(set(witnesses)) != len(witnesses) or any(w in seen for w in witnesses):
                return Violation(s, "witness-not-fresh")
            expected = disj if disj else ((Atom(BOTTOM),),)
            if tuple(st.contents) != tuple(expected):
                return Violation(s, "contents-mismatch")
            seen |= set(values)
            pending_split = st.cases

        elif kind == StepKind.FIRSTCASE:
            if not (prev is not None and prev.kind == StepKind.MP and prev.cases):
                return Violation(s, "no-case-split")
            if st.nesting != depth + 1:
                return Violation(s, "bad-nesting")
            if st.contents != (prev.contents[0],):
                return Violation(s, "contents-mismatch")
            if st.case_of not in (None, s - 1):
                return Violation(s, "bad-case-reference")
            stack.append([s - 1, 1])
            pending_split = False

        elif kind == StepKind.SECONDCASE:
            if not closed or not stack or stack[-1][1] != 1:
                return Violation(s, "first-case-open")
            t = stack[-1][0]
            if st.case_of != t:
                return Violation(s, "bad-case-reference")
            if st.nesting != depth:
                return Violation(s, "bad-nesting")
            if st.contents != (steps[t].contents[1],):
                return Violation(s, "contents-mismatch")
            stack[-1][1] = 2

        elif kind in QED_KINDS:
            if kind == StepKind.QEDBYCASES:
                if not closed or not stack or stack[-1][1] != 2:
                    return Violation(s, "cases-not-closed")
                t = stack.pop()[0]
                if st.case_of != t:
                    return Violation(s, "bad-case-reference")
                depth -= 1
            if st.nesting != depth:
                return Violation(s, "bad-nesting")
            if kind == StepKind.QEDBYEFQ:
                if prev is None or prev.nesting != st.nesting or BOTTOM not in {
                    a.pred for a in prev.atoms
                }:
                    return Violation(s, "no-prior-falsum")
            if kind == StepKind.QEDBYASSUMPTION:
                if len(st.witnesses) != len(proof.goal.exist_vars):
                    return Violation(s, "bad-goal")
                target = proof.goal.instance(st.witnesses)
                if prev is not None and prev.nesting == st.nesting and set(target) <= set(prev.atoms):
                    pass
                elif not strict and set(target) <= visible_facts(proof, s):
                    notes.append(f"step {s}: goal matched a non-adjacent visible fact")
                else:
                    return Violation(s, "goal-not-derived")
                if st.contents != (target,):
                    return Violation(s, "contents-mismatch")
            else:
                expected = goal_atoms(proof.goal, st.witnesses or None)
                if st.contents and st.contents != (expected,):
                    return Violation(s, "contents-mismatch")
            if not stack and s != len(steps) - 1:
                return Violation(s + 1, "steps-after-qed")
            closed = True
            continue
        else:  # pragma: no cover
            return Violation(s, "unknown-kind")
        closed = False

    if pending_split:
        return Violation(len(steps) - 1, "unopened-case-split")
    if stack:
        return Violation(len(steps) - 1, "unclosed-case")
    return Ok(tuple(notes))
