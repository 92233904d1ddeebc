import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from clcomplete.cdcl import SAT, UNSAT, CDCLSolver
from clcomplete.cnf import CNFInstance, LoweringError, export_dimacs, lower
from clcomplete.constraints import (
    FALSE, TRUE, ConstraintProblem, Lin, conj, disj, eq, evaluate, iff, implies, le, linear, lt, ne,
    neg,
)


def test_unit_equality():
    cp = ConstraintProblem()
    v = cp.int_var("v", 0, 3)
    cp.add(eq(v, 2))
    cnf = lower(cp)
    assert [cnf.literal("v", 2)] in cnf.clauses


def test_pointwise_equality():
    cp = ConstraintProblem()
    v, w = cp.int_var("v", 0, 3), cp.int_var("w", 0, 3)
    cp.add(eq(v, w))
    cnf = lower(cp)
    # 6 one-hot clauses per variable, then one implication per value and direction
    eq_clauses = [cl for cl in cnf.clauses if len(cl) == 2 and any(l > 0 for l in cl)]
    assert len(eq_clauses) == 6
    for a in range(3):
        assert [-cnf.literal("v", a), cnf.literal("w", a)] in cnf.clauses
        assert [-cnf.literal("w", a), cnf.literal("v", a)] in cnf.clauses


def test_folding():
    cp = ConstraintProblem()
    v = cp.int_var("v", 0, 3)
    assert eq(v, 7) is FALSE and le(v, 5) is TRUE and eq(v, v) is TRUE
    assert conj(TRUE, FALSE) is FALSE and disj(FALSE, TRUE) is TRUE
    assert neg(TRUE) is FALSE


def test_bad_declarations():
    cp = ConstraintProblem()
    cp.int_var("v", 0, 3)
    with pytest.raises(ValueError):
        cp.int_var("v", 0, 3)
    with pytest.raises(ValueError):
        cp.int_var("w", 2, 2)
    with pytest.raises(ValueError):
        linear([], "=", 0)


def test_three_variable_atom_is_rejected():
    cp = ConstraintProblem()
    xs = [cp.int_var(f"x{i}", 0, 2) for i in range(3)]
    cp.add(Lin(tuple((1, x) for x in xs), "=", 1))
    with pytest.raises(LoweringError):
        lower(cp)


# -- lowering equivalence against exhaustive enumeration -------------------


def random_expr(rng, vs, depth):
    if depth == 0 or rng.random() < 0.3:
        x = rng.choice(vs)
        kind = rng.randrange(4)
        if kind == 0:
            return eq(x, rng.randrange(x.lo, x.hi + 1))
        if kind == 1:
            y = rng.choice(vs)
            return rng.choice([eq, ne, lt, le])(x, y)
        if kind == 2:
            y = rng.choice(vs)
            if x is y:
                return ne(x, x.lo)
            return linear([(rng.choice([1, 2, -1]), x), (rng.choice([1, -1]), y)],
                          rng.choice(["=", "!=", "<", "<=", ">", ">="]), rng.randrange(-3, 6))
        return lt(x, rng.randrange(x.lo, x.hi + 1))
    parts = [random_expr(rng, vs, depth - 1) for _ in range(rng.randint(1, 3))]
    op = rng.randrange(5)
    if op == 0:
        return conj(*parts)
    if op == 1:
        return disj(*parts)
    if op == 2:
        return neg(parts[0])
    if op == 3:
        return implies(parts[0], parts[-1])
    return iff(parts[0], parts[-1])


def random_problem(rng):
    cp = ConstraintProblem()
    vs = []
    for i in range(rng.randint(1, 6)):
        lo = rng.randrange(0, 3)
        vs.append(cp.int_var(f"v{i}", lo, lo + rng.randint(1, 5)))
    for _ in range(rng.randint(1, 4)):
        cp.add(random_expr(rng, vs, 2))
    return cp


def brute_models(cp):
    out = set()
    for vals in itertools.product(*(v.domain for v in cp.variables)):
        if cp.satisfied_by(dict(zip(cp.variables, vals))):
            out.add(vals)
    return out


def cnf_models(cp):
    cnf = lower(cp)
    solver = CDCLSolver(cnf.num_vars)
    for cl in cnf.clauses:
        solver.add_clause(cl)
    out = set()
    while solver.solve() == SAT:
        model = cnf.decode(solver.true_literals())
        vals = tuple(model[v.name] for v in cp.variables)
        assert vals not in out
        out.add(vals)
        if not solver.add_clause(cnf.blocking_clause(model)):
            break
    return out


def test_lowering_equivalence_hundred_problems():
    rng = random.Random(8)
    for _ in range(100):
        cp = random_problem(rng)
        assert cnf_models(cp) == brute_models(cp), cp.dump()


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_lowering_equivalence_property(seed):
    cp = random_problem(random.Random(seed))
    assert cnf_models(cp) == brute_models(cp)


def test_larger_domain_uses_counter():
    cp = ConstraintProblem()
    v = cp.int_var("v", 0, 12)
    cp.add(ne(v, 3))
    assert cnf_models(cp) == {(a,) for a in range(12) if a != 3}


def test_evaluate_and_dump():
    cp = ConstraintProblem()
    v, w = cp.int_var("v", 0, 3), cp.bool_var("w")
    e = implies(eq(w, 1), lt(v, 1))
    cp.add(e)
    assert evaluate(e, {v: 2, w: 0}) and not evaluate(e, {v: 2, w: 1})
    text = cp.dump()
    assert text.startswith("var v in [0, 3)\nvar w in [0, 2)\n")


def test_dimacs_unit_instance():
    assert export_dimacs(CNFInstance(1, [[1]])) == b"p cnf 1 1\n1 0\n"
