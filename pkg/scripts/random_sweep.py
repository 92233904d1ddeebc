#!/usr/bin/env python3
"""Prover against chase agreement over random small theories.

    python3 scripts/random_sweep.py --seeds 0 1 2 --count 200
"""

from __future__ import annotations

import argparse
import collections
import random
import sys
import time
from dataclasses import dataclass

from clcomplete.chase import oracle, oracle_proof
from clcomplete.engine import Outcome, ProverOptions, prove
from clcomplete.proof import Ok, check_proof
from clcomplete.randgen import RandomTheoryConfig, random_problem


@dataclass
class SweepConfig:
    count: int = 200
    time_limit: float = 60.0
    underivable_bound: int = 6
    theory: RandomTheoryConfig = RandomTheoryConfig()


def sweep(seed: int, cfg: SweepConfig):
    rng = random.Random(seed)
    lengths = collections.Counter()
    bad = []
    t0 = time.monotonic()
    for i in range(cfg.count):
        pr = random_problem(rng, cfg.theory, f"r{i}")
        chase = oracle(pr)
        derivable = chase.derives_goal and not chase.capped
        bound = cfg.underivable_bound
        if derivable:
            bound = len(oracle_proof(pr, chase).steps)
        res = prove(pr, (), ProverOptions(time_limit=cfg.time_limit, max_len=bound))
        if res.proved:
            lengths[len(res.proof.steps)] += 1
            if not isinstance(check_proof(pr.axioms, res.proof), Ok):
                bad.append((i, "unchecked proof"))
        if derivable != (res.outcome == Outcome.PROVED):
            bad.append((i, f"chase {derivable}, prover {res.outcome.value}"))
    return bad, lengths, time.monotonic() - t0


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seeds", type=int, nargs="+", default=[0])
    ap.add_argument("--count", type=int, default=200)
    args = ap.parse_args(argv)
    cfg = SweepConfig(count=args.count)
    failed = False
    for seed in args.seeds:
        bad, lengths, secs = sweep(seed, cfg)
        failed |= bool(bad)
        print(f"seed {seed}: {len(bad)} disagreements, proof lengths {sorted(lengths.items())}, {secs:.1f}s")
        for i, why in bad[:10]:
            print(f"  theory {i}: {why}")
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
