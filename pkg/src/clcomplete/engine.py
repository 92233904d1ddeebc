"""Proof search: iterative deepening over proof length, decoding, completion tasks."""

from __future__ import annotations

import enum
import logging
import time
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .chase import DEFAULT_FACT_CAP, DEFAULT_NODE_CAP, Verdict, check_consistency_bounded
from .cnf import CNFInstance, export_dimacs, lower
from .encoder import K_AS, K_ASM, K_CS, K_EFQ, K_FC, K_MP, K_SC, Encoding, resolve_hints
from .errors import InternalError
from .logic import BOTTOM, Atom, Const, Goal, GoalAtom, Problem, Var
from .proof import Proof, ProofStep, Ref, StepKind, Symbols, check_proof
from .solver import SAT, TIMEOUT, UNSAT, IncrementalSolver

log = logging.getLogger(__name__)


class Outcome(str, enum.Enum):
    PROVED = "proved"
    PROVED_WITH_ABDUCTS = "proved-with-abducts"
    UNPROVABLE = "unprovable-at-bound"
    TIMEOUT = "timeout"


@dataclass
class ProverOptions:
    time_limit: float = 100.0
    max_len: int = 8  # proof steps, abduct slots not counted
    num_abducts: int = 0
    abduct_enumeration_cap: int = 200
    consistency_bound: int = DEFAULT_FACT_CAP
    consistency_nodes: int = DEFAULT_NODE_CAP
    external_solver: str | None = None
    seed: int = 0
    deduct_all: bool = False
    all_abducts: bool = False  # keep enumerating after the first consistent abduct
    dump_cnf: str | None = None
    strict_qed: bool = True

    def __post_init__(self):
        if self.time_limit <= 0:
            raise ValueError("time_limit must be positive")
        if self.max_len < 1:
            raise ValueError("max_len must be at least 1")
        if self.num_abducts < 0:
            raise ValueError("num_abducts must be non-negative")


@dataclass
class LengthStat:
    length: int
    variables: int
    clauses: int
    encode_seconds: float
    solve_seconds: float = 0.0
    conflicts: int = 0
    models: int = 0
    status: str = ""


@dataclass
class Statistics:
    lengths: list[LengthStat] = field(default_factory=list)
    consistency_seconds: float = 0.0
    total_seconds: float = 0.0

    @property
    def solve_seconds(self) -> float:
        return sum(s.solve_seconds for s in self.lengths)

    @property
    def lengths_tried(self) -> list[int]:
        return [s.length for s in self.lengths]

    def summary(self) -> str:
        parts = [f"L={s.length}: {s.status} {s.solve_seconds:.2f}s {s.clauses} clauses"
                 for s in self.lengths]
        return "; ".join(parts) + f"; consistency {self.consistency_seconds:.2f}s; total {self.total_seconds:.2f}s"


@dataclass
class AbductFinding:
    abducts: tuple[Atom, ...]
    proof: Proof
    verdict: Verdict


@dataclass
class Deduct:
    goal: tuple[Atom, ...]
    proof: Proof


@dataclass
class ProverResult:
    outcome: Outcome
    proof: Proof | None = None
    abducts: list[AbductFinding] = field(default_factory=list)
    filled_goal: tuple[Atom, ...] | None = None
    deducts: list[Deduct] = field(default_factory=list)
    statistics: Statistics = field(default_factory=Statistics)

    @property
    def proved(self) -> bool:
        return self.outcome in (Outcome.PROVED, Outcome.PROVED_WITH_ABDUCTS)

    @property
    def consistent_abducts(self) -> list[AbductFinding]:
        return [f for f in self.abducts if f.verdict == Verdict.CONSISTENT]


class _Timeout(Exception):
    pass


# ---------------------------------------------------------------------------
# decoding


def _atom(model, enc: Encoding, s: int, d: int, a: int) -> Atom | None:
    p = model[enc.cpv[s, d, a].name]
    if p == enc.S:
        return None
    r = enc.problem.signature.arity(p)
    return Atom(p, tuple(Const(model[enc.cav[s, d, a, j].name]) for j in range(r)))


def _filled_goal(model, enc: Encoding) -> Goal:
    atoms = []
    for i, g in enumerate(enc.goal.atoms):
        gp = enc.goal_pred[i]
        pred = gp if isinstance(gp, int) else model[gp.name]
        args = []
        for x in enc.goal_args[i]:
            if isinstance(x, Var):
                args.append(x)
            elif isinstance(x, int):
                args.append(Const(x))
            else:
                args.append(Const(model[x.name]))
        atoms.append(GoalAtom(pred, tuple(args)))
    return Goal(tuple(atoms), enc.goal.exist_vars)


def reconstruct_proof(model: dict[str, int], enc: Encoding) -> Proof:
    """Read a proof off a model of ``enc``.

    Abduct slots become ``Proof.abducts``. Leading padding assumptions are
    dropped unless a QEDBYASSUMPTION follows directly; references to dropped
    steps point at the hypothesis they restate.
    """
    problem = enc.problem
    L, b, nH = enc.L, enc.b, enc.nH
    kinds = [model[v.name] for v in enc.kind]
    abducts = []
    for s in range(b):
        a = _atom(model, enc, s, 0, 0)
        if a is None or kinds[s] != K_ASM:
            raise InternalError(f"abduct slot {s} is inactive")
        abducts.append(a)
    hyps = list(problem.conjecture.premises) + abducts
    goal = _filled_goal(model, enc)
    keep: dict[int, int] = {}
    dropped: dict[int, Atom] = {}
    s = b
    while s < L and kinds[s] == K_ASM:
        if s + 1 < L and kinds[s + 1] == K_AS:
            break
        dropped[s] = _atom(model, enc, s, 0, 0)
        s += 1
    for t in range(b, L):
        if t not in dropped:
            keep[t] = len(keep)

    def ref(value: int) -> Ref:
        if value < nH:
            return Ref.hyp(value)
        t = value - nH
        if t < b:
            return Ref.hyp(nH + t)
        if t in dropped:
            return Ref.hyp(hyps.index(dropped[t]))
        if t not in keep:
            raise InternalError(f"reference to unknown step {t}")
        return Ref.step(keep[t])

    steps = []
    for t in range(b, L):
        if t in dropped:
            continue
        k = kinds[t]
        nest = model[enc.nest[t].name]
        if k == K_MP:
            ax = enc.axioms[model[enc.ax[t].name]]
            values = [model[enc.inst[t][v].name] for v in range(ax.num_vars)]
            prem = tuple(ref(model[enc.frm[t][i].name]) for i in range(len(ax.premises)))
            if model[enc.cases[t].name]:
                a0, a1 = _atom(model, enc, t, 0, 0), _atom(model, enc, t, 1, 0)
                if a0 is None or a1 is None:
                    raise InternalError(f"case split at step {t} lacks a branch")
                contents = ((a0,), (a1,))
            else:
                atoms = [_atom(model, enc, t, 0, a) for a in range(enc.A)]
                contents = (tuple(x for x in atoms if x is not None),)
            steps.append(ProofStep(StepKind.MP, nest, contents, ax.name, prem,
                                   tuple(zip(ax.var_names, values))))
        elif k == K_ASM:
            steps.append(ProofStep(StepKind.ASSUMPTION, nest, ((_atom(model, enc, t, 0, 0),),)))
        elif k == K_FC:
            steps.append(ProofStep(StepKind.FIRSTCASE, nest, ((_atom(model, enc, t, 0, 0),),),
                                   case_of=keep[t - 1]))
        elif k == K_SC:
            src = model[enc.frm[t][0].name] - nH
            steps.append(ProofStep(StepKind.SECONDCASE, nest, ((_atom(model, enc, t, 0, 0),),),
                                   case_of=keep[src]))
        else:
            gatoms = tuple(Atom(g.pred, g.args) for g in goal.atoms)
            if k == K_CS:
                src = model[enc.frm[t][0].name] - nH
                steps.append(ProofStep(StepKind.QEDBYCASES, nest, (gatoms,), case_of=keep[src]))
            elif k == K_AS:
                wit = tuple(model[w.name] for w in enc.w[t])
                steps.append(ProofStep(StepKind.QEDBYASSUMPTION, nest, (goal.instance(wit),),
                                       witnesses=wit))
            elif k == K_EFQ:
                steps.append(ProofStep(StepKind.QEDBYEFQ, nest, (gatoms,)))
            else:
                raise InternalError(f"unknown step kind {k}")
    proof = Proof(tuple(problem.conjecture.premises), tuple(abducts), goal, tuple(steps),
                  Symbols.of(problem.signature, enc.pool.all_names))
    verdict = check_proof(problem.axioms, proof, strict=True)
    if not verdict:
        raise InternalError(f"decoded proof fails the checker: {verdict}")
    return proof


# ---------------------------------------------------------------------------
# search


def _search(problem: Problem, hints, opts: ProverOptions, stats: Statistics, deadline: float,
            project: str | None) -> Iterator[tuple[Encoding, dict, Proof]]:
    """Yield decoded models by increasing length.

    With ``project`` ("abducts" or "goal") every model is followed by a
    blocking clause over those variables, at this and all later lengths.
    """
    resolved = resolve_hints(problem, hints)
    b = opts.num_abducts
    max_total = b + opts.max_len
    for h in resolved:
        if h.step is not None and h.step >= opts.max_len:
            raise ValueError(f"hint {h.name}: step index beyond the maximal proof length")
    blocks: list[dict[str, int]] = []
    for L in range(b + 1, max_total + 1):
        t0 = time.monotonic()
        enc = Encoding(problem, L, b, resolved=resolved)
        cnf = lower(enc.cp)
        st = LengthStat(L - b, cnf.num_vars, len(cnf.clauses), time.monotonic() - t0)
        stats.lengths.append(st)
        if opts.dump_cnf:
            with open(opts.dump_cnf, "wb") as fh:
                fh.write(export_dimacs(cnf))
        solver = IncrementalSolver(cnf, opts.seed, opts.external_solver)
        for values in blocks:
            solver.add_clause(cnf.blocking_clause(values))
        while True:
            remaining = deadline - time.monotonic()
            if remaining <= 0:
                st.status = TIMEOUT
                raise _Timeout
            res = solver.solve(remaining)
            st.solve_seconds += res.seconds
            st.conflicts += res.conflicts
            if res.status == TIMEOUT:
                st.status = TIMEOUT
                raise _Timeout
            if res.status == UNSAT:
                st.status = st.status or UNSAT
                break
            st.models += 1
            st.status = SAT
            proof = reconstruct_proof(res.model, enc)
            yield enc, res.model, proof
            if project is None:
                return
            names = [v.name for v in (enc.abduct_vars() if project == "abducts" else enc.goal_fill_vars())]
            if not names:
                return
            values = {n: res.model[n] for n in names}
            blocks.append(values)
            solver.add_clause(cnf.blocking_clause(values))


def _goal_atoms(proof: Proof) -> tuple[Atom, ...]:
    return proof.final_goal if proof.final_goal else tuple(Atom(g.pred, g.args) for g in proof.goal.atoms)


def prove(problem: Problem, hints: Sequence = (), options: ProverOptions | None = None) -> ProverResult:
    """Search for a proof of the problem's conjecture.

    With ``num_abducts`` > 0 abducts are enumerated until a consistent one is
    found (or all of them with ``all_abducts``); with ``deduct_all`` every
    fillable goal is listed.
    """
    opts = options or ProverOptions()
    if opts.num_abducts:
        return enumerate_abducts(problem, hints, opts)
    stats = Statistics()
    start = time.monotonic()
    deadline = start + opts.time_limit
    result = ProverResult(Outcome.UNPROVABLE, statistics=stats)
    project = "goal" if opts.deduct_all else None
    try:
        for enc, model, proof in _search(problem, hints, opts, stats, deadline, project):
            if result.proof is None:
                result.proof = proof
                result.outcome = Outcome.PROVED
                if problem.conjecture.goal.is_underspecified:
                    result.filled_goal = _goal_atoms(proof)
            if opts.deduct_all:
                result.deducts.append(Deduct(_goal_atoms(proof), proof))
                if len(result.deducts) >= opts.abduct_enumeration_cap:
                    break
    except _Timeout:
        if result.proof is None:
            result.outcome = Outcome.TIMEOUT
    stats.total_seconds = time.monotonic() - start
    return result


def enumerate_abducts(problem: Problem, hints: Sequence = (), options: ProverOptions | None = None) -> ProverResult:
    """Enumerate abduct tuples by blocking clauses and classify each by consistency."""
    opts = options or ProverOptions(num_abducts=1)
    if opts.num_abducts < 1:
        raise ValueError("enumerate_abducts needs num_abducts >= 1")
    stats = Statistics()
    start = time.monotonic()
    search_deadline = start + 0.8 * opts.time_limit
    deadline = start + opts.time_limit
    result = ProverResult(Outcome.UNPROVABLE, statistics=stats)
    premises = problem.conjecture.premises
    found_consistent = False
    try:
        for enc, model, proof in _search(problem, hints, opts, stats, search_deadline, "abducts"):
            t0 = time.monotonic()
            verdict = check_consistency_bounded(problem, proof.abducts, premises, opts.consistency_bound,
                                                opts.consistency_nodes)
            stats.consistency_seconds += time.monotonic() - t0
            result.abducts.append(AbductFinding(proof.abducts, proof, verdict))
            log.info("abduct %s: %s", proof.abducts, verdict.value)
            if verdict == Verdict.CONSISTENT and not found_consistent:
                found_consistent = True
                result.proof = proof
                result.outcome = Outcome.PROVED_WITH_ABDUCTS
                if problem.conjecture.goal.is_underspecified:
                    result.filled_goal = _goal_atoms(proof)
                if not opts.all_abducts:
                    break
            if len(result.abducts) >= opts.abduct_enumeration_cap or time.monotonic() > deadline:
                break
    except _Timeout:
        if not found_consistent:
            result.outcome = Outcome.TIMEOUT
    stats.total_seconds = time.monotonic() - start
    return result
