import random

from hypothesis import given, settings, strategies as st

from clcomplete.engine import ProverOptions, enumerate_abducts
from clcomplete.proof import Ok, check_proof
from clcomplete.randgen import RandomTheoryConfig, random_problem

from harness import abduct_hygiene, check_theory

seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=40, deadline=None)
@given(seeds)
def test_prover_agrees_with_chase(seed):
    pr = random_problem(random.Random(seed))
    result = check_theory(pr)
    assert result.proof_ok
    assert result.agrees, (result, pr)


@settings(max_examples=25, deadline=None)
@given(seeds)
def test_enumerated_abduct_proofs_check(seed):
    cfg = RandomTheoryConfig(max_axioms=5)
    pr = random_problem(random.Random(seed), cfg)
    res = enumerate_abducts(pr, (), ProverOptions(time_limit=30, max_len=3, num_abducts=1,
                                                  all_abducts=True, abduct_enumeration_cap=10))
    proofs = [f.proof for f in res.abducts]
    for p in proofs:
        assert isinstance(check_proof(pr.axioms, p), Ok)
    assert abduct_hygiene(pr, proofs) == []
