"""Encoding of bounded-length proofs as finite-domain constraint problems.

A proof of length L is a sequence of steps 0..L-1. Steps 0..b-1 are abduct
slots; the remaining steps follow the proof rules. Per step s the encoding
has the variables

    Kind(s)               step kind code (see `StepKind`)
    Nest(s)               nesting depth, 1 for the main branch
    Cases(s)              the step is a case split (binary disjunction)
    Goal(s)               the step is a QED step (its contents is the goal)
    Ax(s)                 axiom applied by an MP step
    From(s,k), Slot(s,k)  source of premise k: a conjecture premise (value < nH)
                          or atom slot Slot(s,k) of step From(s,k) - nH.
                          SECONDCASE and QEDBYCASES steps use From(s,0) to
                          point at their case-split step
    Inst(s,v)             instantiation of axiom variable v
    PP(s,k), PA(s,k,j)    instantiated premise k (PP = |Sig| when unused)
    CP(s,d,a), CA(s,d,a,j) contents: predicate and arguments of atom a in
                          disjunct d (CP = |Sig| marks an inactive slot)
    W(s,y)                witness of existential goal variable y (QEDBYASSUMPTION)
    Vis(t,s)              step t is in scope at step s

and globally GoalPred(i) / GoalArg(i,j) for the parts of the goal that the
conjecture leaves open. Step s owns the s-th block of fresh constants.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from . import constraints as C
from .constraints import ConstraintProblem, IntVar, conj, disj, eq, ge, implies, iff, lt, ne, neg
from .errors import ProblemError
from .logic import BOTTOM, NEQ, TOP, Atom, CLFormula, Const, Problem, Var
from .proof import StepKind

K_ASM, K_MP, K_FC, K_SC, K_CS, K_AS, K_EFQ = (int(k) for k in StepKind)
QED_CODES = (K_CS, K_AS, K_EFQ)


@dataclass(frozen=True)
class EncodingParams:
    max_len: int  # total number of steps, abduct slots included
    num_abducts: int = 0
    max_conjunct_size: int = 1
    max_arity: int = 0
    pool_size: int = 0

    def __post_init__(self):
        if self.max_len < 1:
            raise ValueError("max_len must be at least 1")
        if self.num_abducts < 0 or self.num_abducts >= self.max_len:
            raise ValueError("num_abducts must be smaller than max_len")

    @classmethod
    def for_problem(cls, problem: Problem, length: int, num_abducts: int = 0) -> "EncodingParams":
        sizes = [len(d) for f in problem.axioms for d in f.disjuncts]
        conj_size = max([1, len(problem.conjecture.goal.atoms)] + sizes)
        return cls(length, num_abducts, conj_size, problem.signature.max_arity,
                   len(problem.pool(length)))


@dataclass(frozen=True)
class ResolvedHint:
    name: str
    step: int | None  # 0-based among the non-abduct steps
    pred: int | None = None
    args: tuple[int | None, ...] = ()
    axioms: tuple[int, ...] | None = None  # candidate axiom codes
    pins: tuple[tuple[str, int], ...] = ()  # variable name -> constant


def resolve_hints(problem: Problem, hints: Sequence) -> list[ResolvedHint]:
    """Check hints against the theory and map names to codes."""
    names = problem.constants
    univ = problem.conjecture.univ_vars

    def const(arg, hint):
        if arg is None:
            return None
        if isinstance(arg, int):
            if not 0 <= arg < len(univ):
                raise ProblemError(f"hint {hint.name}: constant index {arg} out of range")
            return arg  # skolem constants come first in the pool
        if arg in univ:
            return univ.index(arg)
        if arg in names:
            return names.index(arg)
        raise ProblemError(f"hint {hint.name}: unknown constant {arg!r}")

    out = []
    for h in hints:
        pred, args = None, ()
        if h.atom_pattern is not None:
            if h.atom_pattern.pred not in problem.signature:
                raise ProblemError(f"hint {h.name}: unknown predicate {h.atom_pattern.pred!r}")
            pred = problem.signature.code(h.atom_pattern.pred)
            if len(h.atom_pattern.args) != problem.signature.arity(pred):
                raise ProblemError(f"hint {h.name}: wrong arity for {h.atom_pattern.pred}")
            args = tuple(const(a, h) for a in h.atom_pattern.args)
        axioms, pins = None, ()
        if h.axiom_pattern is not None:
            codes = [i for i, f in enumerate(problem.axioms)
                     if f.origin == h.axiom_pattern.name or f.name == h.axiom_pattern.name]
            if not codes:
                raise ProblemError(f"hint {h.name}: unknown axiom {h.axiom_pattern.name!r}")
            axioms = tuple(codes)
            if h.axiom_pattern.args is not None:
                uv = problem.axioms[codes[0]].univ_vars
                if len(h.axiom_pattern.args) > len(uv):
                    raise ProblemError(f"hint {h.name}: too many arguments for {h.axiom_pattern.name}")
                pins = tuple((uv[j], const(a, h)) for j, a in enumerate(h.axiom_pattern.args)
                             if a is not None)
        step = None if h.step_index is None else h.step_index - 1
        out.append(ResolvedHint(h.name, step, pred, args, axioms, pins))
    return out


class Encoding:
    """Variables and constraints for proofs of exactly ``length`` steps."""

    def __init__(self, problem: Problem, length: int, num_abducts: int = 0, hints: Sequence = (),
                 resolved: Sequence[ResolvedHint] | None = None):
        self.problem = problem
        self.L = length
        self.b = num_abducts
        self.params = EncodingParams.for_problem(problem, length, num_abducts)
        self.pool = problem.pool(length)
        self.hints = list(resolved) if resolved is not None else resolve_hints(problem, hints)
        self.cp = ConstraintProblem()
        sig = problem.signature
        self.S = len(sig)  # inactive-slot sentinel
        self.nI = problem.num_input
        self.premises = problem.conjecture.premises
        self.nH = len(self.premises)
        self.goal = problem.conjecture.goal
        self.axioms = problem.axioms
        self.A = self.params.max_conjunct_size
        self.R = self.params.max_arity
        self.K = max([1] + [len(f.premises) for f in self.axioms])
        self.V = max([0] + [f.num_vars for f in self.axioms])
        self.use_cases = any(len(f.disjuncts) == 2 for f in self.axioms)
        for f in self.axioms:
            for d in f.disjuncts:
                if len(d) > self.A:
                    raise ProblemError(f"axiom {f.name} exceeds the conjunct size")
        if any(len(g.args) > self.R for g in self.goal.atoms):
            raise ProblemError("goal arity exceeds the signature's maximal arity")
        self._declare()
        self._encode()

    # -- variables -------------------------------------------------------------

    def _declare(self):
        cp, L, S, P = self.cp, self.L, self.S, max(1, len(self.pool))  # domains are never empty
        self.kind = [cp.int_var(f"Kind[{s}]", 0, 7) for s in range(L)]
        self.nest = [cp.int_var(f"Nest[{s}]", 1, L + 1) for s in range(L)]
        self.cases = [cp.bool_var(f"Cases[{s}]") for s in range(L)]
        self.isgoal = [cp.bool_var(f"Goal[{s}]") for s in range(L)]
        self.ax = [cp.int_var(f"Ax[{s}]", 0, max(1, len(self.axioms))) for s in range(L)]
        self.frm = [[cp.int_var(f"From[{s},{k}]", 0, self.nH + L) for k in range(self.K)] for s in range(L)]
        self.slot = [[cp.int_var(f"Slot[{s},{k}]", 0, self.A) for k in range(self.K)] for s in range(L)]
        self.inst = [[cp.int_var(f"Inst[{s},{v}]", 0, P) for v in range(self.V)] for s in range(L)]
        self.pp = [[cp.int_var(f"PP[{s},{k}]", 0, S + 1) for k in range(self.K)] for s in range(L)]
        self.pa = [[[cp.int_var(f"PA[{s},{k},{j}]", 0, P) for j in range(self.R)]
                    for k in range(self.K)] for s in range(L)]
        # contents slots: (0, a) for a < A and (1, 0) when the theory has case splits
        self.slots = [(0, a) for a in range(self.A)] + ([(1, 0)] if self.use_cases else [])
        self.cpv: dict[tuple[int, int, int], IntVar] = {}
        self.cav: dict[tuple[int, int, int, int], IntVar] = {}
        for s in range(L):
            for d, a in self.slots:
                self.cpv[s, d, a] = cp.int_var(f"CP[{s},{d},{a}]", 0, S + 1)
                for j in range(self.R):
                    self.cav[s, d, a, j] = cp.int_var(f"CA[{s},{d},{a},{j}]", 0, P)
        ex = self.goal.exist_vars
        self.w = [[cp.int_var(f"W[{s},{y}]", 0, P) for y in range(len(ex))] for s in range(L)]
        self.vis: dict[tuple[int, int], object] = {}
        for t in range(L):
            for s in range(t + 1, L):
                self.vis[t, s] = C.TRUE if s == t + 1 else cp.bool_var(f"Vis[{t},{s}]")
        # goal: fixed parts are integers, open parts are variables
        self.goal_pred: list = []
        self.goal_args: list[list] = []
        for i, g in enumerate(self.goal.atoms):
            if g.pred is None:
                arity = len(g.args)
                allowed = [p for p in range(len(self.problem.signature))
                           if p not in (TOP, BOTTOM) and self.problem.signature.arity(p) == arity]
                if not allowed:
                    raise ProblemError(f"no predicate of arity {arity} can fill the goal")
                gp = cp.int_var(f"GoalPred[{i}]", min(allowed), max(allowed) + 1)
                cp.add(disj(*[eq(gp, p) for p in allowed]))
                self.goal_pred.append(gp)
            else:
                self.goal_pred.append(g.pred)
            args = []
            for j, t in enumerate(g.args):
                if t is None:
                    args.append(cp.int_var(f"GoalArg[{i},{j}]", 0, max(1, self.nI)))
                elif isinstance(t, Const):
                    args.append(t.index)
                else:
                    args.append(t)  # Var: existential, resolved per step
            self.goal_args.append(args)

    # -- helpers -----------------------------------------------------------

    def K_is(self, s: int, k: int):
        return eq(self.kind[s], k)

    def goal_operands(self, s: int, i: int, drop_existential: bool = False):
        out = []
        for a in self.goal_args[i]:
            if isinstance(a, Var):
                out.append(None if drop_existential else self.w[s][a.index])
            else:
                out.append(a)
        return out

    def slot_is(self, s, d, a, pred, args):
        """Atom slot (s,d,a) holds pred(args); None arguments are unconstrained."""
        parts = [eq(self.cpv[s, d, a], pred)]
        for j, x in enumerate(args):
            if x is not None:
                parts.append(eq(self.cav[s, d, a, j], x))
        return conj(*parts)

    def slot_set(self, s, d, a, pred, args):
        """Like `slot_is` but unused argument positions are pinned to 0."""
        parts = [self.slot_is(s, d, a, pred, args)]
        for j in range(len(args), self.R):
            parts.append(eq(self.cav[s, d, a, j], 0))
        return conj(*parts)

    def inactive(self, s, d, a):
        return self.slot_set(s, d, a, self.S, ())

    def slot_copy(self, s, d, a, t, e, b):
        return conj(eq(self.cpv[s, d, a], self.cpv[t, e, b]),
                    *[eq(self.cav[s, d, a, j], self.cav[t, e, b, j]) for j in range(self.R)])

    def others_inactive(self, s, used):
        return conj(*[self.inactive(s, d, a) for d, a in self.slots if (d, a) not in used])

    def term_operand(self, s, term):
        if isinstance(term, Const):
            return term.index
        return self.inst[s][term.index]

    def no_mp_data(self, s, keep_from0: bool = False):
        parts = [eq(self.ax[s], 0)]
        parts += [eq(v, 0) for v in self.inst[s]]
        for k in range(self.K):
            parts.append(eq(self.pp[s][k], self.S))
            parts += [eq(x, 0) for x in self.pa[s][k]]
            parts.append(eq(self.slot[s][k], 0))
            if k or not keep_from0:
                parts.append(eq(self.frm[s][k], 0))
        return conj(*parts)

    # -- constraints ---------------------------------------------------------

    def _encode(self):
        cp, L, n, b = self.cp, self.L, self.L - 1, self.b
        sig = self.problem.signature
        # canonical zero arguments beyond each predicate's arity
        for s in range(L):
            for d, a in self.slots:
                cpv = self.cpv[s, d, a]
                for j in range(self.R):
                    short = [p for p in range(self.S) if sig.arity(p) <= j] + [self.S]
                    cp.add(implies(disj(*[eq(cpv, p) for p in short]), eq(self.cav[s, d, a, j], 0)))
            for k in range(self.K):
                for j in range(self.R):
                    short = [p for p in range(self.S) if sig.arity(p) <= j] + [self.S]
                    cp.add(implies(disj(*[eq(self.pp[s][k], p) for p in short]),
                                   eq(self.pa[s][k][j], 0)))

        cp.add(eq(self.nest[0], 1))
        for s in range(L):
            kind = self.kind[s]
            cp.add(iff(eq(self.isgoal[s], 1), disj(*[eq(kind, q) for q in QED_CODES])))
            cp.add(implies(eq(self.cases[s], 1), eq(kind, K_MP)))
            if s < n:
                cp.add(implies(eq(self.isgoal[s], 1),
                               conj(ge(self.nest[s], 2),
                                    disj(eq(self.kind[s + 1], K_SC), eq(self.kind[s + 1], K_CS)))))
                cp.add(implies(eq(self.cases[s], 1), eq(self.kind[s + 1], K_FC)))
            else:
                cp.add(eq(self.isgoal[s], 1))
                cp.add(eq(self.nest[s], 1))
            if not self.goal.exist_vars:
                pass
            else:
                cp.add(implies(ne(kind, K_AS), conj(*[eq(w, 0) for w in self.w[s]])))
            if s < b:
                self._abduct_slot(s)
            else:
                self._assumption(s)
            self._mp(s)
            self._first_case(s)
            self._second_case(s)
            self._qed_cases(s)
            self._qed_assumption(s)
            self._qed_efq(s)
            self._goal_contents(s)
        self._visibility()
        if b >= 1:
            cp.add(ne(self.kind[n], K_EFQ))
            for s in range(b - 1):
                cp.add(self._lex_less(s, s + 1))
        for h in self.hints:
            cp.add(self._hint(h))

    def _visibility(self):
        for t in range(self.L):
            for s in range(t + 2, self.L):
                body = conj(
                    self.vis_at(t, s - 1),
                    ge(self.nest[s], self.nest[t]),
                    neg(conj(self.K_is(s, K_SC), eq(self.nest[s], self.nest[t]))),
                )
                self.cp.add(iff(eq(self.vis[t, s], 1), body))

    def vis_at(self, t, s):
        v = self.vis[t, s]
        return v if v is C.TRUE else eq(v, 1)

    def _abduct_slot(self, s):
        cp = self.cp
        allowed = [p for p in range(self.S) if p not in (TOP, BOTTOM)]
        parts = [
            self.K_is(s, K_ASM), eq(self.nest[s], 1), eq(self.cases[s], 0),
            disj(*[eq(self.cpv[s, 0, 0], p) for p in allowed]),
            ne(self.cpv[s, 0, 0], BOTTOM),
            self.others_inactive(s, {(0, 0)}),
            self.no_mp_data(s),
        ]
        parts += [lt(self.cav[s, 0, 0, j], max(1, self.nI)) for j in range(self.R)]
        for i in range(len(self.goal.atoms)):
            parts.append(neg(self.slot_is(s, 0, 0, self.goal_pred[i], self.goal_operands(s, i, True))))
        cp.add(conj(*parts))

    def _lex_less(self, s, t):
        xs = [self.cpv[s, 0, 0]] + [self.cav[s, 0, 0, j] for j in range(self.R)]
        ys = [self.cpv[t, 0, 0]] + [self.cav[t, 0, 0, j] for j in range(self.R)]
        options = []
        for k in range(len(xs)):
            options.append(conj(*[eq(xs[i], ys[i]) for i in range(k)], lt(xs[k], ys[k])))
        return disj(*options)

    def _assumption(self, s):
        if self.premises:
            choices = [self.slot_set(s, 0, 0, h.pred, [t.index for t in h.args]) for h in self.premises]
        else:
            choices = [self.slot_set(s, 0, 0, TOP, ())]
        body = [
            eq(self.nest[s], 1), eq(self.cases[s], 0), disj(*choices),
            self.others_inactive(s, {(0, 0)}), self.no_mp_data(s),
        ]
        if s > self.b:
            body.append(self.K_is(s - 1, K_ASM))
        self.cp.add(implies(self.K_is(s, K_ASM), conj(*body)))

    def _mp(self, s):
        cp, S = self.cp, self.S
        if not self.axioms:
            cp.add(ne(self.kind[s], K_MP))
            return
        is_mp = self.K_is(s, K_MP)
        cp.add(implies(is_mp, eq(self.nest[s], self.nest[s - 1]) if s else C.TRUE))
        W = self.pool.block_size
        for code, f in enumerate(self.axioms):
            nu = len(f.univ_vars)
            parts = [eq(self.cases[s], 1 if len(f.disjuncts) == 2 else 0)]
            for k in range(self.K):
                if k < len(f.premises):
                    atom = f.premises[k]
                    parts.append(eq(self.pp[s][k], atom.pred))
                    for j, t in enumerate(atom.args):
                        parts.append(eq(self.pa[s][k][j], self.term_operand(s, t)))
                else:
                    parts.append(eq(self.pp[s][k], S))
                    parts.append(eq(self.frm[s][k], 0))
                    parts.append(eq(self.slot[s][k], 0))
            for v in range(self.V):
                if v >= f.num_vars:
                    parts.append(eq(self.inst[s][v], 0))
                elif v >= nu:
                    parts.append(eq(self.inst[s][v], self.pool.fresh(s, v - nu)))
                elif W:
                    parts.append(lt(self.inst[s][v], self.nI + s * W))
            used = set()
            if not f.disjuncts:
                parts.append(self.slot_set(s, 0, 0, BOTTOM, ()))
                used.add((0, 0))
            elif len(f.disjuncts) == 1:
                for a, atom in enumerate(f.disjuncts[0]):
                    parts.append(self.slot_set(s, 0, a, atom.pred,
                                               [self.term_operand(s, t) for t in atom.args]))
                    used.add((0, a))
            else:
                for d, branch in enumerate(f.disjuncts):
                    atom = branch[0]
                    parts.append(self.slot_set(s, d, 0, atom.pred,
                                               [self.term_operand(s, t) for t in atom.args]))
                    used.add((d, 0))
            parts.append(self.others_inactive(s, used))
            cp.add(implies(conj(is_mp, eq(self.ax[s], code)), conj(*parts)))
        # premise sources
        for k in range(self.K):
            active = conj(is_mp, ne(self.pp[s][k], S))
            frm, slot = self.frm[s][k], self.slot[s][k]
            for h, atom in enumerate(self.premises):
                fixed = [eq(self.pp[s][k], atom.pred)]
                fixed += [eq(self.pa[s][k][j], t.index) for j, t in enumerate(atom.args)]
                cp.add(implies(conj(active, eq(frm, h)), conj(eq(slot, 0), *fixed)))
            for t in range(self.L):
                val = self.nH + t
                if t >= s:
                    cp.add(implies(active, ne(frm, val)))
                    continue
                cp.add(implies(conj(active, eq(frm, val)),
                               conj(self.vis_at(t, s), eq(self.cases[t], 0), eq(self.isgoal[t], 0))))
                for a in range(self.A):
                    match = conj(eq(self.cpv[t, 0, a], self.pp[s][k]),
                                 *[eq(self.cav[t, 0, a, j], self.pa[s][k][j]) for j in range(self.R)])
                    cp.add(implies(conj(active, eq(frm, val), eq(slot, a)), match))

    def _first_case(self, s):
        cp = self.cp
        if s == 0 or not self.use_cases:
            cp.add(ne(self.kind[s], K_FC))
            return
        body = conj(
            self.K_is(s - 1, K_MP), eq(self.cases[s - 1], 1), eq(self.cases[s], 0),
            C.linear([(1, self.nest[s]), (-1, self.nest[s - 1])], "=", 1),
            self.slot_copy(s, 0, 0, s - 1, 0, 0),
            self.others_inactive(s, {(0, 0)}), self.no_mp_data(s),
        )
        cp.add(implies(self.K_is(s, K_FC), body))

    def _second_case(self, s):
        cp = self.cp
        if s < 3 or not self.use_cases:
            cp.add(ne(self.kind[s], K_SC))
            return
        frm = self.frm[s][0]
        options = []
        for t in range(0, s - 2):
            options.append(conj(
                eq(frm, self.nH + t), self.K_is(t, K_MP), eq(self.cases[t], 1),
                self.vis_at(t + 1, s - 1),
                C.linear([(1, self.nest[s]), (-1, self.nest[t])], "=", 1),
                self.slot_copy(s, 0, 0, t, 1, 0),
            ))
        body = conj(
            eq(self.isgoal[s - 1], 1), eq(self.nest[s], self.nest[s - 1]), eq(self.cases[s], 0),
            disj(*options), self.others_inactive(s, {(0, 0)}), self.no_mp_data(s, keep_from0=True),
        )
        cp.add(implies(self.K_is(s, K_SC), body))

    def _qed_cases(self, s):
        cp = self.cp
        if s < 5 or not self.use_cases:
            cp.add(ne(self.kind[s], K_CS))
            return
        frm = self.frm[s][0]
        options = []
        for t in range(0, s - 4):
            seconds = [conj(self.K_is(u, K_SC), eq(self.frm[u][0], self.nH + t), self.vis_at(u, s - 1))
                       for u in range(t + 3, s - 1)]
            options.append(conj(
                eq(frm, self.nH + t), self.K_is(t, K_MP), eq(self.cases[t], 1),
                eq(self.nest[s], self.nest[t]), disj(*seconds),
            ))
        body = conj(
            eq(self.isgoal[s - 1], 1),
            C.linear([(1, self.nest[s - 1]), (-1, self.nest[s])], "=", 1),
            disj(*options), self.no_mp_data(s, keep_from0=True),
        )
        cp.add(implies(self.K_is(s, K_CS), body))

    def _qed_assumption(self, s):
        cp = self.cp
        if s == 0:
            cp.add(ne(self.kind[s], K_AS))
            return
        parts = [eq(self.nest[s], self.nest[s - 1]), eq(self.cases[s - 1], 0), eq(self.isgoal[s - 1], 0)]
        for i in range(len(self.goal.atoms)):
            parts.append(disj(*[
                self.slot_is(s - 1, 0, a, self.goal_pred[i], self.goal_operands(s, i))
                for a in range(self.A)
            ]))
        cp.add(implies(self.K_is(s, K_AS), conj(*parts, self.no_mp_data(s))))

    def _qed_efq(self, s):
        cp = self.cp
        if s == 0:
            cp.add(ne(self.kind[s], K_EFQ))
            return
        body = conj(eq(self.nest[s], self.nest[s - 1]), eq(self.cpv[s - 1, 0, 0], BOTTOM),
                    self.no_mp_data(s))
        cp.add(implies(self.K_is(s, K_EFQ), body))

    def _goal_contents(self, s):
        used = set()
        parts = [eq(self.cases[s], 0)]
        for i in range(len(self.goal.atoms)):
            parts.append(self.slot_set(s, 0, i, self.goal_pred[i], self.goal_operands(s, i)))
            used.add((0, i))
        parts.append(self.others_inactive(s, used))
        self.cp.add(implies(eq(self.isgoal[s], 1), conj(*parts)))

    def _hint(self, h: ResolvedHint):
        steps = range(self.b, self.L) if h.step is None else [self.b + h.step]
        options = []
        for s in steps:
            if s >= self.L:
                continue
            parts = []
            if h.pred is not None:
                parts.append(disj(*[self.slot_is(s, d, a, h.pred, h.args) for d, a in self.slots]))
            if h.axioms is not None:
                parts.append(self.K_is(s, K_MP))
                parts.append(disj(*[eq(self.ax[s], c) for c in h.axioms]))
                for name, value in h.pins:
                    alts = []
                    for c in h.axioms:
                        f = self.axioms[c]
                        if name in f.var_names:
                            alts.append(conj(eq(self.ax[s], c), eq(self.inst[s][f.var_names.index(name)], value)))
                    parts.append(disj(*alts))
            options.append(conj(*parts))
        return disj(*options)

    # -- projections for enumeration ------------------------------------

    def abduct_vars(self) -> list[IntVar]:
        out = []
        for s in range(self.b):
            out.append(self.cpv[s, 0, 0])
            out += [self.cav[s, 0, 0, j] for j in range(self.R)]
        return out

    def goal_fill_vars(self) -> list[IntVar]:
        out = [p for p in self.goal_pred if isinstance(p, IntVar)]
        for args in self.goal_args:
            out += [a for a in args if isinstance(a, IntVar)]
        return out


def encode_problem(problem: Problem, length: int, num_abducts: int = 0, hints: Sequence = ()) -> Encoding:
    return Encoding(problem, length, num_abducts, hints)
