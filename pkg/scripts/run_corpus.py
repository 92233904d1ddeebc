#!/usr/bin/env python3
"""Run the prover on the bundled corpus with the reference invocations.

Prints one line per run and optionally writes a JSON summary.

    python3 scripts/run_corpus.py --time-limit 300 --out corpus_runs.json
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path

from clcomplete.engine import ProverOptions, prove
from clcomplete.logic import normalize
from clcomplete.proof import Ok, check_proof
from clcomplete.render import Names
from clcomplete.tptp import load_problem

CORPUS = Path(__file__).resolve().parent.parent / "src" / "clcomplete" / "corpus"


@dataclass
class Run:
    problem: str
    max_len: int = 8
    num_abducts: int = 0
    hints: bool = True
    all_abducts: bool = False


@dataclass
class RunRecord:
    run: Run
    outcome: str
    checked: bool
    steps: int | None
    abducts: list[str] = field(default_factory=list)
    filled_goal: str | None = None
    seconds: float = 0.0
    lengths: list[str] = field(default_factory=list)


DEFAULT_RUNS = [
    Run("varignon"),
    Run("varignon_inverse1", num_abducts=1),
    Run("varignon_inverse2", num_abducts=1),
    Run("varignon_deduct"),
    Run("varignon_hint"),
    Run("varignon_hint", hints=False),
]


def execute(run: Run, time_limit: float, external: str | None) -> RunRecord:
    pf = load_problem(CORPUS / f"{run.problem}.p")
    pr = normalize(pf)
    opts = ProverOptions(time_limit=time_limit, max_len=run.max_len, num_abducts=run.num_abducts,
                         all_abducts=run.all_abducts, external_solver=external)
    res = prove(pr, pf.hints if run.hints else (), opts)
    proof = res.proof
    names = Names(proof.symbols) if proof else None
    return RunRecord(
        run,
        res.outcome.value,
        proof is not None and isinstance(check_proof(pr.axioms, proof), Ok),
        len(proof.steps) if proof else None,
        [", ".join(names.atom(a) for a in f.abducts) + f" [{f.verdict.value}]" for f in res.abducts]
        if names else [],
        " ∧ ".join(names.atom(a) for a in res.filled_goal) if res.filled_goal else None,
        round(res.statistics.total_seconds, 2),
        [f"{s.length}:{s.status}:{s.solve_seconds:.1f}s" for s in res.statistics.lengths],
    )


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--time-limit", type=float, default=100.0)
    ap.add_argument("--only", nargs="*", help="problem names to run (default: all)")
    ap.add_argument("--external-solver")
    ap.add_argument("--out", type=Path)
    args = ap.parse_args(argv)
    records = []
    for run in DEFAULT_RUNS:
        if args.only and run.problem not in args.only:
            continue
        rec = execute(run, args.time_limit, args.external_solver)
        records.append(rec)
        tag = f"{run.problem}{'' if run.hints else ' (no hints)'} -m{run.max_len} -b{run.num_abducts}"
        extra = rec.filled_goal or (rec.abducts[0] if rec.abducts else "")
        print(f"{tag:45s} {rec.outcome:22s} steps={rec.steps} checked={rec.checked} "
              f"{rec.seconds:7.1f}s {extra}", flush=True)
    if args.out:
        args.out.write_text(json.dumps([asdict(r) for r in records], indent=1, ensure_ascii=False))
    return 0


if __name__ == "__main__":
    sys.exit(main())
