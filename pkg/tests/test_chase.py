import itertools
import random

from hypothesis import given, settings, strategies as st

from clcomplete.chase import (
    Verdict, atom_fact, check_consistency_bounded, fact_atom, forward_chain, oracle, oracle_proof,
)
from clcomplete.logic import BOTTOM, TOP, Atom, Const, Goal, Var, ground, instantiate_values
from clcomplete.proof import Ok, check_proof
from clcomplete.randgen import RandomTheoryConfig, random_problem

from conftest import atom, corpus_problem, problem_from_text


def facts_of(result):
    (branch,) = result.branches
    return branch.facts


def test_single_rule():
    pr = problem_from_text("fof(pq, axiom, (p => q)).\nfof(c, conjecture, (p => r)).")
    p, q = pr.signature.code("p"), pr.signature.code("q")
    res = forward_chain(pr.axioms, [ground(p)])
    assert facts_of(res) == {(p,), (q,)}


def test_first_problem_reaches_the_goal():
    pr = corpus_problem("varignon")
    res = oracle(pr)
    assert res.derives_goal and not res.capped
    goal = atom_fact(atom(pr, "pG", "e", "f", "g", "h"))
    assert all(goal in b.facts or (BOTTOM,) in b.facts for b in res.branches)


def test_both_branches_close_by_falsum():
    pr = problem_from_text("""
        fof(split, axiom, (p => (q | r))).
        fof(q_bad, axiom, (q => $false)).
        fof(r_bad, axiom, (r => $false)).
        fof(c, conjecture, (p => s)).
    """)
    p = pr.signature.code("p")
    res = forward_chain(pr.axioms, [ground(p)])
    assert len(res.branches) == 2
    assert all(b.bottom for b in res.branches)
    assert check_consistency_bounded(pr.axioms, [ground(p)]) == Verdict.INCONSISTENT


def test_consistency_verdicts_for_the_inverse_problem():
    pr = corpus_problem("varignon_inverse1")
    prem = pr.conjecture.premises
    assert check_consistency_bounded(pr, [atom(pr, "col", "a", "c", "d")], prem) == Verdict.INCONSISTENT
    assert check_consistency_bounded(pr, [atom(pr, "midpoint", "d", "h", "a")], prem) == Verdict.CONSISTENT


def test_empty_abducts_over_consistent_theory():
    pr = problem_from_text("fof(pq, axiom, (p => q)).\nfof(c, conjecture, (p => q)).")
    assert check_consistency_bounded(pr, []) == Verdict.CONSISTENT


def test_caps_give_unknown():
    pr = corpus_problem("varignon_inverse1")
    prem = pr.conjecture.premises
    assert check_consistency_bounded(pr, [], prem, bound=5) == Verdict.UNKNOWN
    assert check_consistency_bounded(pr, [], prem, node_cap=1) == Verdict.UNKNOWN


def test_fact_round_trip():
    a = ground(5, 1, 0, 2)
    assert fact_atom(atom_fact(a)) == a


# -- Horn closure against a naive fixpoint ---------------------------------


def naive_closure(axioms, facts, n):
    facts = set(facts)
    while True:
        new = set()
        for f in axioms:
            for values in itertools.product(range(n), repeat=f.num_vars):
                prem, disj = instantiate_values(f, values)
                if all(atom_fact(a) in facts or a.pred == TOP for a in prem):
                    conj = disj[0] if disj else (ground(BOTTOM),)
                    new |= {atom_fact(a) for a in conj}
        if new <= facts:
            return facts
        facts |= new


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_horn_closure_matches_naive_fixpoint(seed):
    rng = random.Random(seed)
    cfg = RandomTheoryConfig(max_constants=3, split_prob=0.0, falsum_prob=0.0, max_axioms=5)
    pr = random_problem(rng, cfg)
    facts = [atom_fact(a) for a in pr.conjecture.premises]
    res = forward_chain(pr.axioms, facts, num_constants=pr.num_input)
    assert facts_of(res) == naive_closure(pr.axioms, facts, pr.num_input)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_oracle_proofs_check(seed):
    pr = random_problem(random.Random(seed))
    res = oracle(pr)
    if res.derives_goal:
        assert isinstance(check_proof(pr.axioms, oracle_proof(pr, res)), Ok)
