import itertools
import random

import pytest
from hypothesis import assume, given, settings, strategies as st

from clcomplete.errors import ProblemError
from clcomplete.logic import (
    BOTTOM, NEQ, TOP, Atom, CLFormula, Const, Signature, Var, fol_to_cl, ground, instantiate,
    is_coherent,
)
from clcomplete.tptp import parse_problem

from conftest import corpus_problem

CONJ = "fof(c, conjecture, (! [A] : (zz(A) => zz(A)))).\n"


def translate(text):
    pf = parse_problem(f"fof(a, axiom, {text}).\n" + CONJ)
    sig = pf.signature.copy()
    return fol_to_cl(pf.axioms[0][1], sig, {}, "a"), sig


def test_reserved_codes():
    sig = Signature()
    assert (TOP, BOTTOM, NEQ) == (0, 1, 2)
    assert sig.add("col", 3) == 3
    bar = sig.add_bar(3)
    assert sig.name(bar) == "ncol" and sig.arity(bar) == 3


def test_strict_triangle_axiom():
    out, sig = translate(
        "(! [A,B,C,P,Q] : (((~col(A,B,C)) & midpoint(B,P,C) & midpoint(A,Q,C)) => par(A,B,Q,P)))"
    )
    main = out[0]
    ncol, mid, par = sig.code("ncol"), sig.code("midpoint"), sig.code("par")
    A, B, C, P, Q = (Var(i) for i in range(5))
    assert main.premises == (Atom(ncol, (A, B, C)), Atom(mid, (B, P, C)), Atom(mid, (A, Q, C)))
    assert main.disjuncts == ((Atom(par, (A, B, Q, P)),),)
    assert {f.name for f in out[1:]} == {"ncol_exclusive", "ncol_exhaustive"}


def test_identity():
    (f,), sig = translate("(p => p)")
    p = sig.code("p")
    assert f.premises == (Atom(p),) and f.disjuncts == ((Atom(p),),)


@pytest.mark.parametrize("text, msg", [
    ("(p | q | r)", "disjuncts"),
    ("((? [X] : q(X)) => p)", "premise"),
])
def test_unsupported(text, msg):
    with pytest.raises(ProblemError, match=msg):
        translate(text)


# -- truth-table oracle on the propositional fragment ----------------------

LETTERS = ["p", "q", "r"]


def prop_formulas():
    leaf = st.sampled_from(LETTERS)

    def grow(sub):
        return st.one_of(
            st.builds(lambda a: ("~", a), sub),
            st.builds(lambda a, b: ("&", a, b), sub, sub),
            st.builds(lambda a, b: ("|", a, b), sub, sub),
            st.builds(lambda a, b: ("=>", a, b), sub, sub),
        )

    return st.recursive(leaf, grow, max_leaves=4)


def show(f):
    if isinstance(f, str):
        return f
    if f[0] == "~":
        return f"(~ {show(f[1])})"
    return f"({show(f[1])} {f[0]} {show(f[2])})"


def truth(f, val):
    if isinstance(f, str):
        return val[f]
    op = f[0]
    if op == "~":
        return not truth(f[1], val)
    a, b = truth(f[1], val), truth(f[2], val)
    return {"&": a and b, "|": a or b, "=>": (not a) or b}[op]


def holds(cl, true_codes):
    if not all(a.pred in true_codes for a in cl.premises):
        return True
    return any(all(a.pred in true_codes for a in conj) for conj in cl.disjuncts)


@settings(max_examples=150, deadline=None)
@given(prop_formulas())
def test_translation_matches_truth_table(f):
    text = show(f)
    try:
        out, sig = translate(text)
    except ProblemError as exc:
        assume("disjuncts" not in str(exc) and "case-split" not in str(exc))
        raise
    used = [x for x in LETTERS if x in text]
    for bits in itertools.product([False, True], repeat=len(used)):
        val = dict(zip(used, bits))
        true_codes = {TOP}
        for x in used:
            if val[x]:
                true_codes.add(sig.code(x))
            elif "n" + x in [n for n, _ in sig.predicates]:
                true_codes.add(sig.code("n" + x))  # bars follow their linking axioms
        assert all(holds(cl, true_codes) for cl in out) == truth(f, val), (text, val)


# -- instantiation ---------------------------------------------------------


def naive_instance(f, values):
    def sub(a):
        return Atom(a.pred, tuple(Const(values[t.index]) if isinstance(t, Var) else t for t in a.args))

    return [sub(a) for a in f.premises], [[sub(a) for a in c] for c in f.disjuncts]


def test_strict_triangle_instantiation():
    pr = corpus_problem("varignon")
    f = pr.axiom("triangle_mid_par_strict")
    c = {n: i for i, n in enumerate(pr.constants)}
    prem, disj = instantiate(f, {"A": c["a"], "B": c["c"], "C": c["d"], "P": c["g"], "Q": c["h"]})
    par = pr.signature.code("par")
    assert disj == ((ground(par, c["a"], c["c"], c["h"], c["g"]),),)
    assert len(prem) == 3


def test_closed_axiom():
    f = CLFormula("f", (), (), (), ((ground(3),),))
    assert instantiate(f, {}) == ((), ((ground(3),),))


def test_partial_substitution():
    f = corpus_problem("varignon").axiom("triangle_mid_par_strict")
    with pytest.raises(ValueError, match="partial"):
        instantiate(f, {"A": 0})


@given(st.integers(0, 2**32 - 1), st.integers(0, 7))
def test_instantiate_matches_naive(seed, k):
    pr = corpus_problem("varignon")
    f = random.Random(seed).choice(pr.axioms)
    values = [k] * f.num_vars
    prem, disj = instantiate(f, dict(zip(f.univ_vars, values)), dict(zip(f.exist_vars, values)))
    np_, nd = naive_instance(f, values)
    assert list(prem) == np_ and [list(c) for c in disj] == nd


@pytest.mark.parametrize("name", ["varignon", "varignon_inverse1", "varignon_inverse2",
                                  "varignon_deduct", "varignon_hint"])
def test_corpus_is_coherent(name):
    pr = corpus_problem(name)
    assert all(is_coherent(f) for f in pr.axioms)
    assert all(len(f.disjuncts) <= 2 for f in pr.axioms)
