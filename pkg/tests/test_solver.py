import itertools
import random
import stat
import sys

import pytest
from hypothesis import given, settings, strategies as st

from clcomplete.cdcl import SAT, UNSAT, CDCLSolver
from clcomplete.cnf import CNFInstance, SolverOutputError, export_dimacs, import_model, lower, parse_dimacs
from clcomplete.constraints import ConstraintProblem, eq
from clcomplete.solver import TIMEOUT, IncrementalSolver, solve


def brute_sat(n, clauses):
    for bits in itertools.product([False, True], repeat=n):
        if all(any(bits[abs(l) - 1] == (l > 0) for l in cl) for cl in clauses):
            return True
    return False


def random_cnf(rng, n, m, k=3):
    return [[rng.choice([1, -1]) * rng.randint(1, n) for _ in range(rng.randint(1, k))] for _ in range(m)]


def run(n, clauses, seed=0):
    s = CDCLSolver(n, seed=seed)
    for cl in clauses:
        s.add_clause(cl)
    return s, s.solve()


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(1, 9), st.integers(1, 40))
def test_cdcl_agrees_with_truth_table(seed, n, m):
    clauses = random_cnf(random.Random(seed), n, m)
    s, res = run(n, clauses, seed)
    assert res == (SAT if brute_sat(n, clauses) else UNSAT)
    if res == SAT:
        true = s.true_literals()
        assert all(any(l in true for l in cl) for cl in clauses)


def test_pigeonhole_unsat():
    holes, pigeons = 5, 6
    var = lambda p, h: p * holes + h + 1
    clauses = [[var(p, h) for h in range(holes)] for p in range(pigeons)]
    for h in range(holes):
        for p, q in itertools.combinations(range(pigeons), 2):
            clauses.append([-var(p, h), -var(q, h)])
    assert run(pigeons * holes, clauses)[1] == UNSAT


def test_incremental_blocking_counts_models():
    # x1 xor x2 has exactly two models
    s, res = run(2, [[1, 2], [-1, -2]])
    models = 0
    while res == SAT:
        models += 1
        s.add_clause([-l for l in s.true_literals() if abs(l) <= 2])
        res = s.solve()
    assert models == 2


def test_literal_zero_rejected():
    with pytest.raises(ValueError):
        CDCLSolver(1).add_clause([1, 0])


def single_var(constraints):
    cp = ConstraintProblem()
    v = cp.int_var("v", 0, 3)
    for c in constraints:
        cp.add(c(v))
    return lower(cp)


def test_contradiction_unsat():
    assert solve(single_var([lambda v: eq(v, 0), lambda v: eq(v, 1)]), 5).status == UNSAT


def test_unconstrained_sat():
    res = solve(single_var([]), 5)
    assert res.sat and res.model["v"] in range(3)


def test_bad_budget_and_empty_group():
    with pytest.raises(ValueError):
        solve(single_var([]), 0)
    inst = CNFInstance(0, [], {}, {"v": (0, 0)})
    with pytest.raises(ValueError, match="empty one-hot"):
        solve(inst, 1)


def test_zero_budget_times_out():
    assert IncrementalSolver(single_var([])).solve(0).status == TIMEOUT


def test_dimacs_byte_exact():
    assert export_dimacs(CNFInstance(1, [[1]])) == b"p cnf 1 1\n1 0\n"


def test_import_unsat_marker():
    assert import_model(None, b"s UNSATISFIABLE\n") is None


def test_import_garbage():
    with pytest.raises(SolverOutputError):
        import_model(None, b"hello\n")


def test_import_minisat_style():
    assert import_model(None, "SAT\n1 -2 3 0\n") == {1, -2, 3}


@pytest.mark.parametrize("seed", range(50))
def test_export_solve_import_round_trip(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 8)
    clauses = random_cnf(rng, n, rng.randint(1, 20))
    inst = CNFInstance(n, clauses)
    s, res = run(n, clauses)
    num, parsed = parse_dimacs(export_dimacs(inst))
    assert num == n and parsed == clauses
    s2, res2 = run(num, parsed)
    assert res2 == res
    if res == SAT:
        out = "s SATISFIABLE\nv " + " ".join(str(l) for l in sorted(s2.true_literals(), key=abs)) + " 0\n"
        assert import_model(None, out) == s.true_literals()


FAKE_SOLVER = """\
import sys
from clcomplete.cdcl import CDCLSolver, SAT
from clcomplete.cnf import parse_dimacs
n, clauses = parse_dimacs(open(sys.argv[1]).read())
s = CDCLSolver(n)
for c in clauses:
    s.add_clause(c)
if s.solve() == SAT:
    print("s SATISFIABLE")
    print("v " + " ".join(map(str, sorted(s.true_literals(), key=abs))) + " 0")
else:
    print("s UNSATISFIABLE")
"""


@pytest.fixture
def fake_solver(tmp_path):
    script = tmp_path / "fake_solver"
    script.write_text(f"#!{sys.executable}\n" + FAKE_SOLVER)
    script.chmod(script.stat().st_mode | stat.S_IEXEC)
    return str(script)


def test_external_solver_matches_builtin(fake_solver):
    inst = single_var([lambda v: eq(v, 2)])
    ext = solve(inst, 30, external=fake_solver)
    assert ext.sat and ext.model == solve(inst, 30).model
    inst = single_var([lambda v: eq(v, 0), lambda v: eq(v, 1)])
    assert solve(inst, 30, external=fake_solver).status == UNSAT


def test_missing_external_solver():
    with pytest.raises(SolverOutputError):
        solve(single_var([]), 5, external="/nonexistent/solver")
