import pytest

from clcomplete.cnf import lower
from clcomplete.encoder import Encoding, EncodingParams, encode_problem, resolve_hints
from clcomplete.engine import ProverOptions, prove, reconstruct_proof
from clcomplete.errors import ProblemError
from clcomplete.proof import Ok, StepKind, check_proof
from clcomplete.solver import solve
from clcomplete.tptp import parse_hint

from conftest import corpus_problem, problem_from_text

P_IMPLIES_Q = """
fof(pq, axiom, (p => q)).
fof(c, conjecture, (p => q)).
"""


def solve_at(problem, length, num_abducts=0, hints=()):
    enc = encode_problem(problem, length, num_abducts, hints)
    res = solve(lower(enc.cp), 30)
    if not res.sat:
        return enc, None, res.status
    return enc, res.model, reconstruct_proof(res.model, enc)


def test_identity_conjecture():
    pr = problem_from_text("fof(c, conjecture, (p => p)).")
    enc, model, proof = solve_at(pr, 2)
    assert [st.kind for st in proof.steps] == [StepKind.ASSUMPTION, StepKind.QEDBYASSUMPTION]


def test_modus_ponens_is_two_steps():
    pr = problem_from_text(P_IMPLIES_Q)
    assert solve_at(pr, 1)[2] == "UNSAT"
    enc, model, proof = solve_at(pr, 2)
    assert [st.kind for st in proof.steps] == [StepKind.MP, StepKind.QEDBYASSUMPTION]
    assert proof.steps[0].axiom == "pq"
    # the decoded model satisfies the finite-domain problem it came from
    assignment = {v: model[v.name] for v in enc.cp.variables}
    assert enc.cp.satisfied_by(assignment)


def test_iterative_deepening_stops_at_the_first_length():
    pr = problem_from_text(P_IMPLIES_Q)
    res = prove(pr, (), ProverOptions(time_limit=30, max_len=6))
    assert res.proved and res.statistics.lengths_tried == [1, 2]
    assert [s.status for s in res.statistics.lengths] == ["UNSAT", "SAT"]


def test_step_hint_forces_atom():
    pr = problem_from_text("""
        fof(pq, axiom, (p => q)).
        fof(pr, axiom, (p => r)).
        fof(c, conjecture, (p => q)).
    """)
    hint = parse_hint("fof(h, hint, r, 1, _).")
    assert solve_at(pr, 2, hints=[hint])[2] == "UNSAT"
    enc, model, proof = solve_at(pr, 3, hints=[hint])
    assert model["CP[0,0,0]"] == pr.signature.code("r")
    assert proof.steps[0].axiom == "pr"


def test_axiom_hint_pins_instantiation():
    pr = corpus_problem("varignon_hint")
    (h,) = resolve_hints(pr, pr.hints)
    e, f, g, hh = (pr.constants.index(c) for c in "efgh")
    assert h.name == "hint1" and h.step is None
    assert dict(h.pins) == {"A": e, "B": f, "C": g, "D": hh}
    assert [pr.axioms[i].name for i in h.axioms] == ["defrectangle4b"]


def test_unknown_axiom_hint():
    pr = problem_from_text(P_IMPLIES_Q)
    with pytest.raises(ProblemError, match="unknown axiom"):
        Encoding(pr, 3, hints=[parse_hint("fof(h, hint, _, _, nosuchaxiom).")])


def test_wildcard_goal_fills_with_the_derivable_fact():
    pr = problem_from_text("""
        fof(fact, axiom, q(c)).
        fof(other, axiom, (p(c) => r(c))).
        fof(g, conjecture, _(c)).
    """)
    res = prove(pr, (), ProverOptions(time_limit=30, max_len=3, deduct_all=True))
    q = pr.signature.code("q")
    assert res.proved
    assert {d.goal[0].pred for d in res.deducts} == {q}


def test_abduct_slots_must_leave_room():
    pr = problem_from_text(P_IMPLIES_Q)
    with pytest.raises(ValueError):
        EncodingParams(2, 2)
    with pytest.raises(ValueError):
        Encoding(pr, 1, 1)


def test_variable_names_are_stable():
    enc = encode_problem(problem_from_text(P_IMPLIES_Q), 3, 1)
    names = {v.name for v in enc.cp.variables}
    assert {"Kind[0]", "Ax[1]", "CP[2,0,0]", "Nest[2]"} <= names
    assert [v.name for v in enc.abduct_vars()][:1] == ["CP[0,0,0]"]


def test_abduct_proof_checks():
    pr = problem_from_text("""
        fof(pq, axiom, ((p & r) => q)).
        fof(c, conjecture, (p => q)).
    """)
    enc, model, proof = solve_at(pr, 4, num_abducts=1)
    assert proof.abducts == (proof.abducts[0],)
    assert proof.abducts[0].pred == pr.signature.code("r")
    assert isinstance(check_proof(pr.axioms, proof), Ok)
