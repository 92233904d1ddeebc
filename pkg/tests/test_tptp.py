import pytest
from hypothesis import given, strategies as st

from clcomplete import fol
from clcomplete.errors import ParseError, ProblemError
from clcomplete.tptp import (
    AtomPattern, AxiomPattern, Hint, parse_hint, parse_problem, render_hint, render_problem,
)

from conftest import CORPUS, corpus_file

CONJ = "fof(c, conjecture, (! [A] : (p(A) => p(A)))).\n"


def test_single_axiom_collects_predicate():
    pf = parse_problem(
        "fof(midpoint_sym, axiom, (! [A, B, I] : (midpoint(A,I,B) => midpoint(B,I,A)))).\n" + CONJ
    )
    assert [n for n, _ in pf.axioms] == ["midpoint_sym"]
    assert ("midpoint", 3) in pf.signature.predicates


def test_reserved_codes_come_first():
    pf = parse_problem(CONJ)
    names = [n for n, _ in pf.signature.predicates]
    assert names[:3] == ["$true", "$false", "neq"] or len(names) >= 4
    assert pf.signature.code("p") == 3


def test_wildcard_goal_predicate():
    pf = corpus_file("varignon_deduct")
    goal = pf.conjecture[1]
    wild = [a for a in fol.atoms(goal) if a.pred is None]
    assert len(wild) == 1 and len(wild[0].args) == 4


def test_empty_input():
    with pytest.raises(ProblemError, match="no conjecture"):
        parse_problem("")


@pytest.mark.parametrize("text, msg", [
    ("fof(a, axiom, p(f(X))).\n" + CONJ, "function"),
    ("fof(a, axiom, (p(a) & p(a,b))).\n" + CONJ, "arity"),
    (CONJ + CONJ.replace("(c,", "(d,"), "multiple conjectures"),
    ("fof(a, banana, p(a)).\n" + CONJ, "role"),
    ("fof(a, axiom, (p(a) &)).\n" + CONJ, "expected"),
])
def test_parse_errors(text, msg):
    with pytest.raises(ProblemError, match=msg):
        parse_problem(text)


def test_syntax_error_reports_position():
    with pytest.raises(ParseError) as info:
        parse_problem("fof(a, axiom,\n   (p(a) & & q)).\n" + CONJ)
    assert info.value.line == 2


def test_hint_atom_and_step():
    h = parse_hint("fof(hintname1, hint, r(_,_), 5 , _).")
    assert h.atom_pattern == AtomPattern("r", (None, None))
    assert h.step_index == 5 and h.axiom_pattern is None


def test_hint_axiom_pattern():
    h = parse_hint("fof(hint1,hint,_,_,defrectangle4b(4,5,6,7)).")
    assert h.atom_pattern is None and h.step_index is None
    assert h.axiom_pattern == AxiomPattern("defrectangle4b", (4, 5, 6, 7))


def test_vacuous_hint():
    with pytest.raises(ProblemError, match="vacuous hint"):
        parse_hint("fof(h,hint,_,_,_).")


def test_hint_needs_three_fields():
    with pytest.raises(ProblemError):
        parse_hint("fof(h,hint,r(_),5).")


@pytest.mark.parametrize("path", sorted(CORPUS.glob("*.p")), ids=lambda p: p.stem)
def test_corpus_round_trip(path):
    pf = parse_problem(path.read_text())
    again = parse_problem(render_problem(pf))
    assert again.structure() == pf.structure()


names = st.sampled_from(["a", "b", "c"])
hint_args = st.lists(st.one_of(st.none(), st.integers(0, 9), names), min_size=1, max_size=3)


@given(
    atom=st.one_of(st.none(), st.tuples(st.sampled_from(["r", "col"]), hint_args)),
    step=st.one_of(st.none(), st.integers(1, 20)),
    ax=st.one_of(st.none(), st.tuples(st.sampled_from(["ax1", "defrect"]), st.one_of(st.none(), hint_args))),
)
def test_hint_render_parse_round_trip(atom, step, ax):
    if atom is None and ax is None:
        return
    h = Hint(
        "h",
        None if atom is None else AtomPattern(atom[0], tuple(atom[1])),
        step,
        None if ax is None else AxiomPattern(ax[0], None if ax[1] is None else tuple(ax[1])),
    )
    assert parse_hint(render_hint(h)) == h
