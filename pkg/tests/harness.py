"""Shared checks for the random-theory property suite."""

import random
from dataclasses import dataclass

from clcomplete.chase import oracle, oracle_proof
from clcomplete.engine import Outcome, ProverOptions, prove
from clcomplete.proof import Ok, StepKind, check_proof
from clcomplete.randgen import RandomTheoryConfig, random_problem

UNDERIVABLE_BOUND = 6


@dataclass
class Agreement:
    derivable: bool
    outcome: Outcome
    oracle_len: int | None
    proof_ok: bool  # every decoded proof passed check_proof

    @property
    def agrees(self) -> bool:
        return self.derivable == (self.outcome == Outcome.PROVED)


def check_theory(problem, time_limit=60.0) -> Agreement:
    """Prover against the chase at matched bounds.

    A derivable goal is searched up to the oracle proof's length, an
    underivable one up to ``UNDERIVABLE_BOUND`` steps.
    """
    res = oracle(problem)
    derivable = res.derives_goal and not res.capped
    n = len(oracle_proof(problem, res).steps) if derivable else None
    out = prove(problem, (), ProverOptions(time_limit=time_limit, max_len=n or UNDERIVABLE_BOUND))
    ok = out.proof is None or isinstance(check_proof(problem.axioms, out.proof), Ok)
    return Agreement(derivable, out.outcome, n, ok)


def random_family(seed=0, count=200, cfg=RandomTheoryConfig()):
    rng = random.Random(seed)
    return [random_problem(rng, cfg, f"rand{i}") for i in range(count)]


def abduct_hygiene(problem, proofs):
    """Violations of the abduct rules among ``proofs``."""
    from clcomplete.logic import BOTTOM

    bad = []
    goal = set(problem.conjecture.goal.instance()) if not problem.conjecture.goal.is_underspecified else set()
    for p in proofs:
        for a in p.abducts:
            if a in goal or a.pred == BOTTOM:
                bad.append(f"abduct {a} equals the goal or falsum")
        if p.abducts and p.steps[-1].kind == StepKind.QEDBYEFQ:
            bad.append("abducted proof ends by EFQ")
    return bad
