"""Random small coherent theories for property tests and sweeps."""

from __future__ import annotations

import random
from dataclasses import dataclass

from .logic import Atom, CLFormula, Const, Goal, Problem, Signature, Var, build_problem


@dataclass(frozen=True)
class RandomTheoryConfig:
    max_constants: int = 4
    num_predicates: int = 3
    max_arity: int = 2
    max_axioms: int = 8
    max_premises: int = 2
    max_facts: int = 4
    split_prob: float = 0.25
    falsum_prob: float = 0.08
    const_prob: float = 0.1  # chance that an axiom argument is a constant
    num_vars: int = 3

    def __post_init__(self):
        if not 1 <= self.max_constants <= 26:
            raise ValueError("max_constants out of range")


def random_problem(rng: random.Random, cfg: RandomTheoryConfig = RandomTheoryConfig(),
                   name: str = "rand") -> Problem:
    """A ground-goal problem without existentials, m <= 2, single-atom branches."""
    sig = Signature()
    preds = [sig.add(f"p{i}", rng.randint(0, cfg.max_arity)) for i in range(cfg.num_predicates)]
    nc = rng.randint(1, cfg.max_constants)
    consts = tuple("abcdefghijklmnopqrstuvwxyz"[:nc])

    def atom(pred, terms):
        return Atom(pred, tuple(terms))

    def rand_term(vars_avail):
        if not vars_avail or rng.random() < cfg.const_prob:
            return Const(rng.randrange(nc))
        return Var(rng.choice(vars_avail))

    axioms = []
    for i in range(rng.randint(1, cfg.max_axioms)):
        nv = cfg.num_vars
        prem = []
        for _ in range(rng.randint(0, cfg.max_premises)):
            p = rng.choice(preds)
            prem.append(atom(p, [rand_term(list(range(nv))) for _ in range(sig.arity(p))]))
        used = sorted({t.index for a in prem for t in a.args if isinstance(t, Var)})
        pool = used if used and rng.random() < 0.85 else list(range(nv))
        r = rng.random()
        if r < cfg.falsum_prob:
            disj = ()
        elif r < cfg.falsum_prob + cfg.split_prob:
            disj = tuple(
                (atom(p, [rand_term(pool) for _ in range(sig.arity(p))]),)
                for p in (rng.choice(preds), rng.choice(preds))
            )
        else:
            disj = (tuple(
                atom(p, [rand_term(pool) for _ in range(sig.arity(p))])
                for p in (rng.choice(preds) for _ in range(rng.randint(1, 2)))
            ),)
        # compact the variables actually used
        occ = sorted({t.index for a in prem + [x for d in disj for x in d] for t in a.args
                      if isinstance(t, Var)})
        ren = {v: j for j, v in enumerate(occ)}

        def fix(a):
            return Atom(a.pred, tuple(Var(ren[t.index]) if isinstance(t, Var) else t for t in a.args))

        axioms.append(CLFormula(
            f"ax{i}", tuple(f"X{j}" for j in range(len(occ))), tuple(fix(a) for a in prem),
            (), tuple(tuple(fix(a) for a in d) for d in disj),
        ))
    facts = []
    for _ in range(rng.randint(0, cfg.max_facts)):
        p = rng.choice(preds)
        facts.append(atom(p, [Const(rng.randrange(nc)) for _ in range(sig.arity(p))]))
    gp = rng.choice(preds)
    goal = Goal.of(atom(gp, [Const(rng.randrange(nc)) for _ in range(sig.arity(gp))]))
    return build_problem(name, sig, consts, axioms, list(dict.fromkeys(facts)), goal)
